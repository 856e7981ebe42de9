#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "finalg/catalog.hpp"
#include "finalg/freevar.hpp"
#include "helpers.hpp"

using namespace finalg;
using finalg::testing::make;

TEST_CASE("builders") {
    SUBCASE("pointed set") {
        FiniteAlgebra a = make("pointed_set 2");
        CHECK(a.size() == 2);
        CHECK(a.signature().op_count() == 1);
        CHECK(a.op(0).table() == std::vector<Element>{0});
    }
    SUBCASE("affine GF(2): x - y + z is ternary xor") {
        FiniteAlgebra a = make("affine_space 2");
        int mal = *a.signature().index_of("mal");
        for (Element x = 0; x < 2; ++x)
            for (Element y = 0; y < 2; ++y)
                for (Element z = 0; z < 2; ++z)
                    CHECK(a.eval(mal, std::vector<Element>{x, y, z}) == ((x + y + z) % 2));
    }
    SUBCASE("vector space over GF(3) carries scalar 2") {
        FiniteAlgebra a = make("vector_space 3");
        CHECK(a.signature().index_of("s2").has_value());
        int s2 = *a.signature().index_of("s2");
        CHECK(a.eval(s2, std::vector<Element>{2}) == 1);
    }
    SUBCASE("non-prime moduli are rejected") {
        CHECK_THROWS_AS(make("vector_space 4"), ArgumentError);
        CHECK_THROWS_AS(make("affine_space 6"), ArgumentError);
    }
    SUBCASE("nested specs parse") {
        CHECK(make("matrix_power 2 set 2").size() == 4);
        CHECK(make("semiprojection 2 shifted set 3").signature().index_of("s").has_value());
        CHECK_THROWS_AS(make("matrix_power 2"), ArgumentError);
        CHECK_THROWS_AS(make("set 2 junk"), ArgumentError);
    }
}

TEST_CASE("semiprojection expansions") {
    SUBCASE("projection variant is the first projection") {
        FiniteAlgebra a = build_semiprojection_expansion(make("set 2"), 2, "projection");
        int s = *a.signature().index_of("s");
        for (Element x = 0; x < 2; ++x)
            for (Element y = 0; y < 2; ++y)
                for (Element z = 0; z < 2; ++z)
                    CHECK(a.eval(s, std::vector<Element>{x, y, z}) == x);
    }
    SUBCASE("shifted variant: second argument on injective tuples") {
        FiniteAlgebra a = build_semiprojection_expansion(make("set 3"), 2, "shifted");
        int s = *a.signature().index_of("s");
        CHECK(a.eval(s, std::vector<Element>{0, 1, 2}) == 1);
        CHECK(a.eval(s, std::vector<Element>{0, 0, 2}) == 0);
        CHECK(a.eval(s, std::vector<Element>{2, 1, 2}) == 2);
    }
    SUBCASE("the semiprojection identities hold by construction") {
        FiniteAlgebra a = build_semiprojection_expansion(make("set 4"), 2, "shifted");
        int s = *a.signature().index_of("s");
        for (Element x = 0; x < 4; ++x)
            for (Element y = 0; y < 4; ++y)
                for (Element z = 0; z < 4; ++z) {
                    bool repeat = x == y || y == z || x == z;
                    if (repeat) CHECK(a.eval(s, std::vector<Element>{x, y, z}) == x);
                }
    }
    SUBCASE("shifted on a too-small base is an error") {
        CHECK_THROWS_AS(build_semiprojection_expansion(make("set 2"), 2, "shifted"),
                        ArgumentError);
    }
}

TEST_CASE("clone-count formulas") {
    CHECK(clone_count_formula(CloneCase::i, 2, 3) == 36);
    CHECK(clone_count_formula(CloneCase::ii, 1, 4) == 5);
    CHECK(clone_count_formula(CloneCase::iii, 1, 3, {2, 1}) == 4);
    CHECK_THROWS_AS(clone_count_formula(CloneCase::i, 0, 1), ArgumentError);
}

TEST_CASE("formulas versus brute-force closure") {
    SUBCASE("case i: matrix powers of the 2-element set") {
        for (int d = 1; d <= 2; ++d) {
            FiniteAlgebra a = matrix_power(make("set 2"), d);
            for (int n = 1; n <= 3; ++n) {
                CAPTURE(d);
                CAPTURE(n);
                CHECK(clone_table(a, n).set.size() == clone_count_formula(CloneCase::i, d, n));
            }
        }
    }
    SUBCASE("case ii: matrix powers of the pointed 2-set") {
        for (int d = 1; d <= 2; ++d) {
            FiniteAlgebra a = matrix_power(make("pointed_set 2"), d);
            for (int n = 1; n <= 3; ++n)
                CHECK(clone_table(a, n).set.size() == clone_count_formula(CloneCase::ii, d, n));
        }
    }
    SUBCASE("case iii: vector and affine spaces, d = 1") {
        for (int q : {2, 3}) {
            FiniteAlgebra vs = make("vector_space " + std::to_string(q));
            FiniteAlgebra af = make("affine_space " + std::to_string(q));
            for (int n = 1; n <= 3; ++n) {
                CHECK(clone_table(vs, n).set.size() ==
                      clone_count_formula(CloneCase::iii, 1, n, {q, q}));
                CHECK(clone_table(af, n).set.size() ==
                      clone_count_formula(CloneCase::iii, 1, n, {q, 1}));
            }
        }
    }
}

TEST_CASE("Maltsev term detection: subpower route vs Clo_3 search") {
    for (const char* spec : {"set 2", "pointed_set 2", "vector_space 2", "vector_space 3",
                             "affine_space 2", "affine_space 3", "semilattice 2",
                             "semilattice 3"}) {
        FiniteAlgebra a = make(spec);
        CAPTURE(spec);
        auto clo3 = clone_table(a, 3);
        CHECK(has_maltsev_term(a) == find_maltsev_in_clone3(clo3, a.size()).has_value());
    }
    CHECK(has_maltsev_term(make("vector_space 2")));
    CHECK(has_maltsev_term(make("affine_space 3")));
    CHECK_FALSE(has_maltsev_term(make("semilattice 2")));
    CHECK_FALSE(has_maltsev_term(make("set 3")));
}

TEST_CASE("classification round-trips") {
    CHECK(classify(make("set 2")).verdict == ClassifyResult::Verdict::sets);
    CHECK(classify(make("pointed_set 2")).verdict == ClassifyResult::Verdict::pointed_sets);
    ClassifyResult v2 = classify(make("vector_space 2"));
    CHECK(v2.verdict == ClassifyResult::Verdict::vector_space);
    CHECK(v2.field_size == 2);
    ClassifyResult v3 = classify(make("vector_space 3"));
    CHECK(v3.verdict == ClassifyResult::Verdict::vector_space);
    CHECK(v3.field_size == 3);
    ClassifyResult a2 = classify(make("affine_space 2"));
    CHECK(a2.verdict == ClassifyResult::Verdict::affine_space);
    CHECK(a2.field_size == 2);
    ClassifyResult a3 = classify(make("affine_space 3"));
    CHECK(a3.verdict == ClassifyResult::Verdict::affine_space);
    CHECK(a3.field_size == 3);
    CHECK(classify(make("semilattice 2")).verdict == ClassifyResult::Verdict::unclassified);
    CHECK(classify(make("semiprojection 2 shifted set 3")).verdict ==
          ClassifyResult::Verdict::unclassified);
}

TEST_CASE("classification details") {
    SUBCASE("affine GF(2) reconstructs xor as addition") {
        ClassifyResult r = classify(make("affine_space 2"));
        REQUIRE(r.scalars.has_value());
        CHECK(r.scalars->add_table == std::vector<Element>{0, 1, 1, 0});
        CHECK(r.constant_realization.empty());
    }
    SUBCASE("pointed constants: nullary realization is recorded") {
        CHECK(classify(make("pointed_set 3")).constant_realization == "nullary");
    }
    SUBCASE("a constant unary term also realizes the pointed constant") {
        // one unary operation, constantly 0
        FiniteAlgebra a("upointed", 2, Signature({{"c", 1}}),
                        {Operation(2, 1, {0, 0})});
        ClassifyResult r = classify(a);
        CHECK(r.verdict == ClassifyResult::Verdict::pointed_sets);
        CHECK(r.constant_realization == "unary_term");
    }
    SUBCASE("size guard") {
        CHECK_THROWS_WITH_AS(classify(make("set 10")), doctest::Contains("max_classify_universe"),
                             ResourceError);
    }
}

TEST_CASE("classification is invariant under relabeling") {
    std::mt19937 rng(2024);
    for (const char* spec : {"set 3", "pointed_set 3", "vector_space 3", "affine_space 3",
                             "semilattice 3"}) {
        FiniteAlgebra a = make(spec);
        ClassifyResult expected = classify(a);
        std::vector<Element> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 3; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Element> inv(a.size());
            for (Element x = 0; x < a.size(); ++x) inv[perm[x]] = x;
            std::vector<Operation> ops;
            for (int op = 0; op < a.op_count(); ++op) {
                int r = a.signature().arity(op);
                long long entries = static_cast<long long>(a.op(op).table().size());
                std::vector<Element> table(entries);
                std::vector<Element> args(r, 0), pre(r);
                long long idx = 0;
                do {
                    for (int i = 0; i < r; ++i) pre[i] = inv[args[i]];
                    table[idx++] = perm[a.op(op).apply_unchecked(pre)];
                    int i = r - 1;
                    for (; i >= 0; --i) {
                        if (++args[i] < a.size()) break;
                        args[i] = 0;
                    }
                    if (i < 0) break;
                } while (true);
                ops.emplace_back(a.size(), r, std::move(table));
            }
            FiniteAlgebra shuffled("shuffled", a.size(), a.signature(), std::move(ops));
            CAPTURE(spec);
            CHECK(classify(shuffled).verdict == expected.verdict);
            CHECK(classify(shuffled).field_size == expected.field_size);
        }
    }
}

TEST_CASE("classify(build(spec)) recovers every good kind") {
    using V = ClassifyResult::Verdict;
    std::vector<std::pair<std::string, V>> cases{
        {"set 2", V::sets},           {"pointed_set 2", V::pointed_sets},
        {"vector_space 2", V::vector_space}, {"vector_space 3", V::vector_space},
        {"affine_space 2", V::affine_space}, {"affine_space 3", V::affine_space},
    };
    for (const auto& [spec, verdict] : cases) CHECK(classify(make(spec)).verdict == verdict);
}

TEST_CASE("GF(2) spectrum realizes exactly the powers of two") {
    FiniteAlgebra gf2 = make("vector_space 2");
    for (int n = 1; n <= 3; ++n)
        CHECK(free_algebra(gf2, n).algebra->size() == (1 << n));
    SpectrumReport r = g_spectrum(gf2, 3);
    for (const auto& t : r.types) CHECK((t.size & (t.size - 1)) == 0);
}

TEST_CASE("verify_smallfree") {
    for (int n : {1, 2}) {
        SmallfreeReport r = verify_smallfree(n);
        CAPTURE(n);
        CHECK(r.forced_projection);
        CHECK(r.no_surjection);
        CHECK(r.b_min_generating == n + 1);
        CHECK(r.pass);
    }
    SUBCASE("the n = 2 literal filter looks at all 2^8 binary tables") {
        SmallfreeReport r = verify_smallfree(2);
        REQUIRE(r.forced_counts.size() == 2);
        CHECK(r.forced_counts[1] == std::pair<int, long long>{2, 256});
    }
    CHECK_THROWS_AS(verify_smallfree(0), ArgumentError);
    CHECK_THROWS_AS(verify_smallfree(4), ArgumentError);
}
