#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finalg/error.hpp"
#include "finalg/limits.hpp"
#include "finalg/partition.hpp"

namespace finalg {

using Element = int;

struct OpSymbol {
    std::string name;
    int arity = 0;
    bool operator==(const OpSymbol&) const = default;
};

// Ordered list of operation symbols. The order is identity-relevant: two
// algebras are comparable only when their signatures agree symbol by symbol.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<OpSymbol> symbols);

    int op_count() const { return static_cast<int>(symbols_.size()); }
    const OpSymbol& symbol(int op) const { return symbols_[op]; }
    const std::string& name(int op) const { return symbols_[op].name; }
    int arity(int op) const { return symbols_[op].arity; }
    std::optional<int> index_of(std::string_view name) const;
    bool has_nullary() const;
    const std::vector<OpSymbol>& symbols() const { return symbols_; }
    bool operator==(const Signature&) const = default;

private:
    std::vector<OpSymbol> symbols_;
};

// Number of entries in a dense table over a universe of the given size;
// throws ResourceError past the dense-entry guard.
long long table_size(int universe_size, int arity, const Limits& lim);

// Dense finitary operation on {0..size-1}. The table is row-major with the
// FIRST argument most significant; arity 0 is a single-entry table.
class Operation {
public:
    Operation(int universe_size, int arity, std::vector<Element> table);

    int arity() const { return arity_; }
    int universe_size() const { return size_; }
    const std::vector<Element>& table() const { return table_; }

    Element apply(std::span<const Element> args) const;
    Element apply_unchecked(std::span<const Element> args) const {
        long long idx = 0;
        for (Element a : args) idx = idx * size_ + a;
        return table_[idx];
    }

private:
    int size_;
    int arity_;
    std::vector<Element> table_;
};

class FiniteAlgebra {
public:
    FiniteAlgebra(std::string name, int size, Signature sig, std::vector<Operation> ops);

    const std::string& name() const { return name_; }
    int size() const { return size_; }
    const Signature& signature() const { return sig_; }
    const Operation& op(int i) const { return ops_[i]; }
    int op_count() const { return sig_.op_count(); }

    Element eval(int op, std::span<const Element> args) const;
    // All basic operations satisfy f(x,...,x) = x (so no nullary symbols
    // unless the algebra is trivial).
    bool is_idempotent() const;
    FiniteAlgebra renamed(std::string new_name) const;

private:
    std::string name_;
    int size_;
    Signature sig_;
    std::vector<Operation> ops_;
};

struct Homomorphism {
    std::vector<Element> map;

    bool is_surjective(int target_size) const;
    bool is_bijective(int target_size) const;
    Partition kernel() const { return Partition::from_labels(map); }
};

bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     const std::vector<Element>& map, std::string* violation = nullptr);

// Exhaustively verifies the homomorphism property; throws ArgumentError
// describing a violating (op, tuple) otherwise.
Homomorphism make_checked_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                                       std::vector<Element> map);

// Direct product with pairing index i*|B|+j (left factor most significant).
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      const Limits& lim = Limits::defaults());

struct CongruenceViolation {
    int op;
    std::vector<Element> args_a;
    std::vector<Element> args_b;  // componentwise theta-related to args_a
    Element value_a, value_b;     // not theta-related
};

std::optional<CongruenceViolation> find_congruence_violation(const FiniteAlgebra& a,
                                                             const Partition& p);
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

struct QuotientResult {
    FiniteAlgebra algebra;
    Homomorphism projection;  // the natural surjection
};

// Universe of the quotient is the blocks of theta in canonical label order.
QuotientResult quotient_by(const FiniteAlgebra& a, const Partition& theta,
                           const Limits& lim = Limits::defaults());

// d-th matrix power: universe A^d (lexicographic index, first coordinate most
// significant); operations are the basic operations acting coordinatewise,
// plus a unary cyclic shift and the d-ary diagonal operation.
FiniteAlgebra matrix_power(const FiniteAlgebra& a, int d, const Limits& lim = Limits::defaults());

// Backtracking isomorphism search with element-invariant pruning; exhaustive,
// intended for universes up to max_iso_universe.
std::optional<Homomorphism> is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                          const Limits& lim = Limits::defaults());

// A surjective homomorphism b -> a if one exists: backtracking over images of
// a generating set of b.
std::optional<Homomorphism> find_surjective_hom(const FiniteAlgebra& b, const FiniteAlgebra& a,
                                                const Limits& lim = Limits::defaults());

// Closure of gens under all basic operations (constants included), as a
// sorted element list.
std::vector<Element> subuniverse_of(const FiniteAlgebra& a, const std::vector<Element>& gens);

// Small generating set picked greedily (deterministic, not necessarily minimum).
std::vector<Element> greedy_generating_set(const FiniteAlgebra& a);

// Least k such that some k-subset generates; 0 when the constants generate.
int min_generating_size(const FiniteAlgebra& a, const Limits& lim = Limits::defaults());

}  // namespace finalg
