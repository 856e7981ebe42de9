#pragma once

namespace finalg {

// Size guards for the search/closure routines. Every guard failure names the
// field that tripped, so callers can report it and tests can assert on it.
// All values are overridable per call; defaults() additionally honors the
// FINALG_MAX_GENERATED environment variable (closure element cap).
struct Limits {
    long long max_power_width = 1LL << 20;    // tuple length |A|^n in clone/free constructions
    long long max_unary_base = 1LL << 10;     // |A| for unary-polynomial generation
    int max_con_universe = 12;                // |A| for full congruence lattices
    int max_iso_universe = 16;                // |A| for isomorphism search
    int max_abelian_universe = 16;            // |A| for the term-condition deciders
    int max_classify_universe = 9;            // |A| for classify
    long long max_dense_entries = 1LL << 24;  // entries per materialized operation table
    long long max_generated = 1LL << 16;      // elements per generation run

    static const Limits& defaults();
};

}  // namespace finalg
