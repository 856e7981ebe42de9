#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Least congruence containing the given pairs: disjoint-set fixpoint that
// propagates every merge through all one-variable polynomial translations
// (each basic operation, each coordinate, all constant fillings).
Partition cg_pairs(const FiniteAlgebra& a,
                   const std::vector<std::pair<Element, Element>>& pairs);

// The full congruence lattice: all principal congruences closed under join,
// sorted by (block count, canonical labels). Guarded by max_con_universe.
std::vector<Partition> all_congruences(const FiniteAlgebra& a,
                                       const Limits& lim = Limits::defaults());

// Congruences covered only by the full partition (resp. covering only the
// identity). Input must be a full congruence lattice.
std::vector<Partition> coatoms(const std::vector<Partition>& lattice);
std::vector<Partition> atoms(const std::vector<Partition>& lattice);

// |A| >= 2 and every Cg(a,b) with a != b is full.
bool is_simple(const FiniteAlgebra& a);

struct SdMeetFailure {
    Partition alpha, beta, gamma;
};

// A triple with alpha^gamma = beta^gamma = identity and (alpha v beta)^gamma =
// gamma > identity, if the lattice has one; first in the lattice's sort order.
std::optional<SdMeetFailure> sd_meet_failure(const std::vector<Partition>& lattice);

// Some mu < theta with nothing strictly between, sort-least among candidates.
Partition maximal_below(const std::vector<Partition>& lattice, const Partition& theta);

}  // namespace finalg
