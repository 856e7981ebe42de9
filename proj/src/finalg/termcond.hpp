#pragma once

#include <optional>
#include <vector>

#include "finalg/closure.hpp"
#include "finalg/congruence.hpp"

namespace finalg {

// A failed term-condition instance: the term t together with the four leaf
// assignments a/u, a/v, b/u, b/v and the respective values. Abelianness fails
// when value_au == value_av while value_bu != value_bv.
struct TermConditionWitness {
    std::vector<TermNode> arena;
    int root = 0;
    std::vector<Element> assign_au, assign_av, assign_bu, assign_bv;
    Element value_au = 0, value_av = 0, value_bu = 0, value_bv = 0;
};

struct AbelianResult {
    bool abelian = false;
    std::optional<TermConditionWitness> witness;
};

// Decides abelianness by the diagonal-class criterion: the diagonal of A x A
// is a full class of the congruence generated by collapsing it. A failure
// witness, when the size permits, comes from the matrix-method trace.
AbelianResult is_abelian(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());

// Independent route: close the term-condition matrices in A^4 (generators
// (a,a,b,b) and (u,v,u,v); an element reads (t(a,u), t(a,v), t(b,u), t(b,v)))
// and look for a row-equal/row-unequal element.
AbelianResult is_abelian_matrix_method(const FiniteAlgebra& a,
                                       const Limits& lim = Limits::defaults());

// Failed strong term condition: t(a,u) = t(b,v) but t(c,u) != t(c,v).
struct StrongTermConditionWitness {
    std::vector<TermNode> arena;
    int root = 0;
    std::vector<Element> assign_au, assign_bu, assign_cu, assign_av, assign_bv, assign_cv;
    Element value_au = 0, value_bu = 0, value_cu = 0, value_av = 0, value_bv = 0, value_cv = 0;
};

struct StrongAbelianResult {
    bool holds = false;
    std::optional<StrongTermConditionWitness> witness;
};

// Strong term condition for a congruence theta, decided by closure in A^6.
// Generators are (a,b,c,a,b,c) for pairwise theta-related a,b,c and
// (u,u,u,v,v,v) for theta-related (u,v); an element of the closure reads
//   (t(a,u), t(b,u), t(c,u), t(a,v), t(b,v), t(c,v))
// over all terms t and all theta-admissible tuple substitutions, because each
// generator slot realizes one variable placement and closure under the basic
// operations builds every term. The condition holds iff every element with
// coordinate 0 = coordinate 4 also has coordinate 2 = coordinate 5.
StrongAbelianResult is_strongly_abelian_congruence(const FiniteAlgebra& a, const Partition& theta,
                                                   const Limits& lim = Limits::defaults());

// All congruences strongly abelian.
bool is_strongly_abelian_algebra(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());

// A unary polynomial that is neither constant nor injective: its generating
// term (slot 0 = the variable, slot 1+c = the constant c), the full table, a
// collapsed pair and a separated pair.
struct UnaryPolyWitness {
    std::vector<TermNode> arena;
    int root = 0;
    std::vector<Element> table;
    Element equal_a = 0, equal_b = 0;    // distinct points, same value
    Element differ_c = 0, differ_d = 0;  // points with different values
};

struct InjectiveResult {
    bool holds = false;
    std::optional<UnaryPolyWitness> witness;
};

// Every unary polynomial is constant or injective.
InjectiveResult nonconstant_unaries_injective(const FiniteAlgebra& a,
                                              const Limits& lim = Limits::defaults());

}  // namespace finalg
