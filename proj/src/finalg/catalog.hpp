#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/closure.hpp"
#include "finalg/congruence.hpp"

namespace finalg {

// Description of a buildable algebra. Nested specs (matrix powers and
// semiprojection expansions) carry their base as `inner`.
struct CatalogSpec {
    enum class Kind {
        set,            // param = k
        pointed_set,    // param = k, nullary 0
        vector_space,   // param = p (prime field)
        affine_space,   // param = p (prime field), single ternary x-y+z
        semilattice,    // param = k, chain meet
        matrix_power,   // power = d, inner = base spec
        semiprojection  // power = m, variant, inner = base spec
    };
    Kind kind = Kind::set;
    int param = 0;
    int power = 1;
    std::string variant;  // "projection" or "shifted"
    std::shared_ptr<CatalogSpec> inner;
};

// Parses a whitespace-tokenized spec, e.g. "pointed_set 2",
// "matrix_power 2 set 2", "semiprojection 2 shifted set 3".
CatalogSpec parse_catalog_spec(const std::vector<std::string>& tokens);

FiniteAlgebra build(const CatalogSpec& spec, const Limits& lim = Limits::defaults());

// Adds an (m+1)-ary symbol s to the base. variant "projection" interprets s
// as first projection; "shifted" as s(a) = a0 when two arguments coincide and
// a1 otherwise (requires |base| >= m+1 so that s differs from the projection
// behavior somewhere).
FiniteAlgebra build_semiprojection_expansion(const FiniteAlgebra& base, int m,
                                             const std::string& variant,
                                             const Limits& lim = Limits::defaults());

enum class CloneCase { i, ii, iii };

struct CloneFormulaParams {
    int universe = 0;  // |A|, case iii only
    int ideal = 0;     // |L|, case iii only
};

// (nd)^d in case i, (nd+1)^d in case ii, |A|^{d(n-1)} |L| in case iii.
long long clone_count_formula(CloneCase c, int d, int n, CloneFormulaParams params = {});

// Reconstructed module structure backing a vector/affine verdict.
struct ScalarStructure {
    Element zero = 0;
    std::vector<Element> add_table;                 // binary, row-major
    std::vector<std::vector<Element>> scalar_maps;  // unary tables, a field under (+, compose)
};

struct ClassifyResult {
    enum class Verdict { sets, pointed_sets, vector_space, affine_space, unclassified };
    Verdict verdict = Verdict::unclassified;
    int field_size = 0;
    // how the pointed-set constant (or module zero) is realized, when one is:
    // "nullary" or "unary_term"
    std::string constant_realization;
    int verified_to_arity = 0;
    std::optional<ScalarStructure> scalars;
};

std::string to_string(ClassifyResult::Verdict v);

// Decision procedure: (a) only projections in Clo_3 -> sets; (b) projections
// plus one constant -> pointed sets; (c) a Maltsev term on an abelian algebra
// reconstructs a module: x+y := m(x,0,y), scalars are the unary polynomials
// fixing 0, and the clone must equal the linear (resp. affine) combination
// clone up to the arity bound; (d) otherwise unclassified.
ClassifyResult classify(const FiniteAlgebra& a, int arity_bound = 3,
                        const Limits& lim = Limits::defaults());

// Maltsev term existence via the binary-specialization subpower: generate
// pairs (t(x,x,y), t(y,x,x)) over all ternary terms t and look for (y, y).
// Equivalent to searching Clo_3, without materializing it.
bool has_maltsev_term(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());

// Search a materialized Clo_3 for a Maltsev table (cross-check route).
std::optional<int> find_maltsev_in_clone3(const CloneTables& clo3, int universe_size);

struct SmallfreeReport {
    int n = 0;
    // (a) on every universe of size <= m, the semiprojection identities admit
    // exactly one table, the first projection
    bool forced_projection = false;
    std::vector<std::pair<int, long long>> forced_counts;  // (k, candidate tables checked)
    // (b) no surjective homomorphism from the projection-interpreted algebra
    // onto the shifted one
    bool no_surjection = false;
    long long maps_searched = 0;
    int b_min_generating = 0;
    bool pass = false;
};

// Theorem driver: with m = n, the (n+1)-element projection-interpreted
// algebra B is (n+1)-generated and definitionally a set, yet not free: the
// shifted semiprojection algebra is no homomorphic image of it.
SmallfreeReport verify_smallfree(int n, const Limits& lim = Limits::defaults());

}  // namespace finalg
