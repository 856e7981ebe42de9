#pragma once

#include <optional>
#include <vector>

#include "finalg/closure.hpp"
#include "finalg/congruence.hpp"

namespace finalg {

// F_V(rank) for V the variety generated by `generator`, realized inside
// A^(A^rank) on the tables generated by the rank projections. rank 0 without a
// nullary symbol yields the explicit empty result (F_V(empty set) is empty).
struct FreeAlgebra {
    int rank = 0;
    bool empty = false;
    long long width = 0;                  // |A|^rank
    std::optional<FiniteAlgebra> algebra; // absent iff empty
    GeneratedSet tables;
    std::vector<int> generators;          // element indices of the projections
};

FreeAlgebra free_algebra(const FiniteAlgebra& a, int rank, const Limits& lim = Limits::defaults());

// An identity of V(generator) that fails in the member candidate: lhs = rhs
// holds identically over the generator but the two sides differ at
// `assignment` (elements of the candidate; variable x_i denotes candidate
// element i).
struct IdentityWitness {
    std::vector<TermNode> arena;
    int lhs = 0, rhs = 0;
    int variable_count = 0;
    std::vector<Element> assignment;
    Element value_lhs = 0, value_rhs = 0;
};

struct MembershipResult {
    bool member = false;
    std::optional<IdentityWitness> witness;
};

// B in V(A)? Joint generation in A^(A^|B|) x B from (projection_i, b_i) for
// all b_i in B; membership holds iff the generated relation is the graph of a
// function (equal table parts force equal B parts).
MembershipResult variety_membership(const FiniteAlgebra& b, const FiniteAlgebra& a,
                                    const Limits& lim = Limits::defaults());

struct FreenessResult {
    std::optional<int> rank;
    std::optional<Homomorphism> iso;  // b -> F_V(rank)
};

// Least k <= |B| with B isomorphic to F_V(k), if any. Throws
// PreconditionError (with an identity witness in the message) when B is not
// in V(A).
FreenessResult is_free_in(const FiniteAlgebra& b, const FiniteAlgebra& a,
                          const Limits& lim = Limits::defaults());

struct SpectrumType {
    FiniteAlgebra algebra;
    int size = 0;
    int congruence_count = 0;          // congruences of F(n) yielding this type
    std::optional<int> free_rank;
    int min_generating = 0;
};

struct SpectrumReport {
    int n = 0;
    int g = 0;  // number of isomorphism types of <= n-generated members
    std::vector<SpectrumType> types;
};

// G-spectrum at n: enumerate the congruences of F_V(n), deduplicate the
// quotients by isomorphism, report freeness and minimal generating size per
// type.
SpectrumReport g_spectrum(const FiniteAlgebra& a, int n, const Limits& lim = Limits::defaults());

struct CollapseKernels {
    bool pointed_case = false;  // signature has a nullary symbol
    bool applicable = false;    // enough maps to compare (m >= 2)
    FiniteAlgebra domain;       // F(m)
    FiniteAlgebra codomain;     // F(1) in the pointed case, F(2) otherwise
    std::vector<Homomorphism> maps;
    std::vector<Partition> kernels;
    bool pairwise_distinct = false;
};

// The variable-collapse homomorphisms out of F(m): in the pointed case the
// three maps x1->0,rest->x / x1->x,rest->0 / all->x into F(1); otherwise the
// maps eps_i: x_i->y, rest->z into F(2).
CollapseKernels kernels_of_variable_collapse(const FiniteAlgebra& a, int m,
                                             const Limits& lim = Limits::defaults());

struct FreelyReport {
    bool f1_simple = false;
    int checked = 0;  // nonzero elements of b
    bool pass = false;
    std::vector<std::pair<Element, bool>> per_element;  // (b, Sg{b} iso F(1))
};

// Every nonzero element of b freely generates a copy of F_V(1). Requires a
// nullary symbol, b in V(a), and F_V(1) simple.
FreelyReport verify_lemma_freely(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                 const Limits& lim = Limits::defaults());

}  // namespace finalg
