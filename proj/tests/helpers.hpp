#pragma once

// Shared fixtures for the test suites.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "finalg/catalog.hpp"

namespace finalg::testing {

inline FiniteAlgebra make(const std::string& spec) {
    std::istringstream in(spec);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return build(parse_catalog_spec(tokens));
}

inline FiniteAlgebra klein4() { return product(make("vector_space 2"), make("vector_space 2")); }

// (Z4, +, 0): congruence lattice is a 3-chain.
inline FiniteAlgebra z4_group() {
    std::vector<Element> add(16);
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) add[x * 4 + y] = (x + y) % 4;
    return FiniteAlgebra("z4", 4, Signature({{"+", 2}, {"0", 0}}),
                         {Operation(4, 2, add), Operation(4, 0, {0})});
}

// A random algebra with the given operation arities; tables drawn uniformly.
inline FiniteAlgebra random_algebra(unsigned seed, int size, const std::vector<int>& arities,
                                    bool idempotent = false) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Element> pick(0, size - 1);
    std::vector<OpSymbol> symbols;
    std::vector<Operation> ops;
    for (std::size_t i = 0; i < arities.size(); ++i) {
        int r = arities[i];
        symbols.push_back({"f" + std::to_string(i), r});
        long long entries = 1;
        for (int k = 0; k < r; ++k) entries *= size;
        std::vector<Element> table(entries);
        for (auto& v : table) v = pick(rng);
        if (idempotent && r >= 1) {
            for (Element x = 0; x < size; ++x) {
                long long idx = 0;
                for (int k = 0; k < r; ++k) idx = idx * size + x;
                table[idx] = x;
            }
        }
        ops.emplace_back(size, r, std::move(table));
    }
    return FiniteAlgebra("rnd" + std::to_string(seed), size, Signature(symbols), std::move(ops));
}

}  // namespace finalg::testing
