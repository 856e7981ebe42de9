#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "finalg/closure.hpp"
#include "finalg/congruence.hpp"
#include "finalg/termcond.hpp"

namespace finalg {

// Reflexive relation as a bit matrix.
class BinaryRelation {
public:
    explicit BinaryRelation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}
    int size() const { return n_; }
    bool get(int a, int b) const { return bits_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    void set(int a, int b) { bits_[static_cast<std::size_t>(a) * n_ + b] = 1; }

    BinaryRelation transitive_closure() const;
    BinaryRelation converse() const;
    BinaryRelation intersect(const BinaryRelation& other) const;
    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    // Classes of the symmetric part, assuming it is an equivalence relation.
    Partition symmetric_part() const;
    BinaryRelation quotient(const Partition& p) const;
    // Closed under the operations of alg applied componentwise.
    bool is_compatible(const FiniteAlgebra& alg) const;
    std::vector<std::pair<int, int>> pairs() const;
    bool operator==(const BinaryRelation&) const = default;

private:
    int n_;
    std::vector<unsigned char> bits_;
};

// The subalgebra of A x A supported by the graph of theta. Pairs are ordered
// lexicographically; `diagonal` lists the indices of the (a,a).
struct GraphAlgebra {
    FiniteAlgebra algebra;
    std::vector<std::pair<Element, Element>> pairs;
    std::vector<int> diagonal;
    int index_of(Element a, Element b) const;  // -1 when (a,b) is not in theta
};

GraphAlgebra graph_algebra(const FiniteAlgebra& a, const Partition& theta,
                           const Limits& lim = Limits::defaults());

// S = A(theta)/Delta with Delta the congruence collapsing the diagonal, and
// 0 = D/Delta. When the base is abelian and theta nontrivial, D is a full
// Delta-class and |S| > 1; both facts are recorded, not assumed.
struct SConstruction {
    GraphAlgebra graph;
    Partition delta;
    FiniteAlgebra s;
    Homomorphism projection;  // graph -> s
    Element zero = 0;
    bool d_is_delta_class = false;
};

SConstruction s_construction(const FiniteAlgebra& a, const Partition& theta,
                             const Limits& lim = Limits::defaults());

// Property P failure: a polynomial p with p(sbar) = 0 but p(0bar) != 0. The
// term's slots are the generators of R below; assign_zero/assign_s are full
// slot assignments for the two evaluations.
struct PropertyPWitness {
    std::vector<TermNode> arena;
    int root = 0;
    std::vector<Element> assign_zero, assign_s;
    Element value_zero = 0, value_s = 0;
};

struct PropertyPResult {
    bool holds = false;
    std::optional<PropertyPWitness> witness;
    int relation_size = 0;  // |R|
};

// Builds R = Sg_{S^2}(diagonal ∪ {0} x S) — all pairs (p(0bar), p(sbar)) — and
// checks that no (x, 0) with x != 0 occurs. {zero} must be a subuniverse.
PropertyPResult property_p_holds(const FiniteAlgebra& s, Element zero,
                                 const Limits& lim = Limits::defaults());

// Item (5): R* the transitive closure, sigma = R* ∩ (R*)^∪, the order R*/sigma
// on S/sigma, plus re-checks of items (1)-(3) on the quotient.
struct OrderQuotient {
    BinaryRelation r;
    BinaryRelation r_star;
    Partition sigma;
    bool property_p_input_held = false;  // degeneracy flag for the caller
    bool sigma_is_congruence = false;
    FiniteAlgebra s_mod_sigma;
    Homomorphism projection;
    Element zero_class = 0;
    BinaryRelation order;
    bool order_reflexive = false, order_transitive = false, order_antisymmetric = false;
    bool order_compatible = false, zero_least = false;
    bool q_item1 = false, q_item2 = false;
    PropertyPResult q_item3;
};

OrderQuotient order_quotient(const FiniteAlgebra& s, Element zero,
                             const Limits& lim = Limits::defaults());

// Item (4) violation: a term t, a position i, two {x,y}-patterns differing at
// position i on which t agrees in F_V(2), yet t's table on S depends on i.
struct IndependenceWitness {
    std::vector<TermNode> arena;
    int root = 0;
    int arity = 0;
    int position = 0;
    std::vector<int> pattern_w, pattern_z;  // 0 = x, 1 = y per position
    Element f2_value_w = 0, f2_value_z = 0;
    std::vector<Element> s_args_a, s_args_b;  // differ exactly at `position`
    Element s_value_a = 0, s_value_b = 0;
};

struct IndependenceResult {
    bool holds = false;
    int arity_bound = 0;
    std::optional<IndependenceWitness> witness;
};

// Checks item (4) for all terms of arity <= arity_bound, with both pattern
// tuples ranging over {x,y}^k (they may differ anywhere, but must differ at
// the distinguished position). Requires S in the variety of v_generator.
IndependenceResult independence_condition_check(const FiniteAlgebra& v_generator,
                                                const FiniteAlgebra& s, int arity_bound,
                                                const Limits& lim = Limits::defaults());

struct ObstructionReport {
    bool theta_nontrivial = false;
    bool theta_strongly_abelian = false;
    std::optional<StrongTermConditionWitness> strong_witness;
    bool a_abelian = false;
    std::optional<TermConditionWitness> abelian_witness;
    SConstruction construction;
    bool item1 = false;
    bool item2 = false;
    PropertyPResult item3;
    IndependenceResult item4;
    std::optional<OrderQuotient> item5;  // absent when {zero} is not a subuniverse
    bool hypotheses_hold = false;
    bool all_items_pass = false;
};

// Runs the whole Lemma suite for (A, theta): hypotheses, construction, items
// (1)-(5). theta must at least be a congruence; failed hypotheses are
// reported, not thrown.
ObstructionReport verify_affine_obstruction(const FiniteAlgebra& v_generator,
                                            const FiniteAlgebra& a, const Partition& theta,
                                            int arity_bound,
                                            const Limits& lim = Limits::defaults());

struct ScaffoldReport {
    bool degenerate_trivial_f = false;
    int f_size = 0;
    int a_prime_size = 0;
    bool eta1_is_principal = false;  // eta1 == Cg((0,0),(0,x))
    Partition eta1, mu;
    int coatom_count = 0;
    bool has_3_coatoms = false;
    bool sd_failure_at_eta1_over_mu = false;
    std::optional<SdMeetFailure> sd_failure;
    bool f_abelian = false;
    bool pass = false;
};

// The Lemma-abelian proof scaffold over F = F_V(1):
// A' = Sg_{F x F}{(0,x),(x,0)}, eta1 = Cg((0,0),(0,x)), mu maximal below eta1,
// Con(A'/mu) has >= 3 coatoms and a meet-semidistributivity failure at
// [0, eta1/mu], and F is abelian. Requires a nullary symbol.
ScaffoldReport verify_lemma_abelian_scaffold(const FiniteAlgebra& generator,
                                             const Limits& lim = Limits::defaults());

}  // namespace finalg
