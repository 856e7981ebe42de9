#pragma once

#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// One node of a term DAG. A leaf names a generator slot; an application names
// an operation with children given as arena ids smaller than the node's own id.
struct TermNode {
    int op = -1;   // -1 for a generator leaf
    int var = -1;  // generator slot when op < 0
    std::vector<int> children;
};

// Prefix form: "x3" or "(opname child child ...)"; nullary prints as "(opname)".
std::string term_to_string(const std::vector<TermNode>& arena, int root, const Signature& sig);

// Evaluate a node over an algebra, substituting leaf_values[slot] for leaves.
Element eval_term(const std::vector<TermNode>& arena, int root, const FiniteAlgebra& alg,
                  std::span<const Element> leaf_values);

// Standalone term tree, used when replaying printed witnesses.
struct ParsedTerm {
    int op = -1;
    int var = -1;
    std::vector<ParsedTerm> children;
};

ParsedTerm parse_term(const std::string& text, const Signature& sig);
Element eval_parsed(const ParsedTerm& t, const FiniteAlgebra& alg,
                    std::span<const Element> leaf_values);
int max_var(const ParsedTerm& t);

}  // namespace finalg
