#include "doctest.h"

#include "finalg/algebra.hpp"
#include "finalg/congruence.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace finalg;
using finalg::testing::klein4;
using finalg::testing::make;

TEST_CASE("eval_op basics") {
    FiniteAlgebra gf2 = make("vector_space 2");
    int plus = *gf2.signature().index_of("+");
    int zero = *gf2.signature().index_of("0");
    CHECK(gf2.eval(plus, std::vector<Element>{1, 1}) == 0);
    CHECK(gf2.eval(zero, {}) == 0);

    FiniteAlgebra sl = make("semilattice 2");
    int meet = *sl.signature().index_of("meet");
    CHECK(sl.eval(meet, std::vector<Element>{1, 0}) == 0);

    CHECK_THROWS_AS(gf2.eval(plus, std::vector<Element>{1}), ArgumentError);
    CHECK_THROWS_AS(gf2.eval(plus, std::vector<Element>{1, 2}), ArgumentError);
}

TEST_CASE("table encoding is row-major, first argument most significant") {
    // f(x,y) = x ^ y on {0,1} has table index 2x + y
    std::vector<Element> table{0, 1, 1, 0};
    FiniteAlgebra a("xor", 2, Signature({{"f", 2}}), {Operation(2, 2, table)});
    CHECK(a.eval(0, std::vector<Element>{1, 0}) == a.op(0).table()[2]);
    CHECK(a.eval(0, std::vector<Element>{0, 1}) == a.op(0).table()[1]);
}

TEST_CASE("product sizes and coordinatewise action") {
    FiniteAlgebra p = product(make("set 2"), make("set 3"));
    CHECK(p.size() == 6);

    FiniteAlgebra k4 = klein4();
    CHECK(k4.size() == 4);
    int plus = *k4.signature().index_of("+");
    for (Element x = 0; x < 4; ++x)  // x + x = 0 everywhere
        CHECK(k4.eval(plus, std::vector<Element>{x, x}) == 0);

    FiniteAlgebra p2 = product(make("pointed_set 2"), make("pointed_set 2"));
    int zero = *p2.signature().index_of("0");
    CHECK(p2.eval(zero, {}) == 0);

    CHECK_THROWS_AS(product(make("set 2"), make("pointed_set 2")), ArgumentError);
}

TEST_CASE("quotients") {
    FiniteAlgebra k4 = klein4();
    SUBCASE("by the identity partition: isomorphic copy") {
        auto q = quotient_by(k4, Partition::identity(4));
        CHECK(q.algebra.size() == 4);
        CHECK(is_isomorphic(q.algebra, k4).has_value());
    }
    SUBCASE("by the full partition: trivial algebra") {
        auto q = quotient_by(k4, Partition::full(4));
        CHECK(q.algebra.size() == 1);
    }
    SUBCASE("GF(2)^2 mod Cg((0,0),(1,0)) is GF(2)") {
        // element (1,0) has index 2
        Partition theta = cg_pairs(k4, {{0, 2}});
        CHECK(theta == oracles::congruence_closure(k4, {{0, 2}}));
        auto q = quotient_by(k4, theta);
        CHECK(q.algebra.size() == 2);
        CHECK(is_isomorphic(q.algebra, make("vector_space 2")).has_value());
        // the projection is the natural surjection
        CHECK(q.projection.is_surjective(2));
    }
    SUBCASE("incompatible partition is rejected with a witness message") {
        // {0,1}|{2}|{3} is not compatible with + on Z4... use klein4: collapse
        // {0,1} only: (0,1) ~ but (0+2, 1+2) = (2,3) not related
        Partition bad = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
        CHECK_THROWS_WITH_AS(quotient_by(k4, bad),
                             doctest::Contains("not a congruence"), ArgumentError);
    }
}

TEST_CASE("matrix powers") {
    SUBCASE("d = 1 is term-equivalent to the base") {
        FiniteAlgebra m = matrix_power(make("set 2"), 1);
        CHECK(m.size() == 2);
        // shift is the identity, diag the unary identity
        int shift = *m.signature().index_of("shift");
        int diag = *m.signature().index_of("diag");
        for (Element x = 0; x < 2; ++x) {
            CHECK(m.eval(shift, std::vector<Element>{x}) == x);
            CHECK(m.eval(diag, std::vector<Element>{x}) == x);
        }
    }
    SUBCASE("square of the 2-element set") {
        FiniteAlgebra m = matrix_power(make("set 2"), 2);
        CHECK(m.size() == 4);
        int shift = *m.signature().index_of("shift");
        int diag = *m.signature().index_of("diag");
        // element 2b0+b1 <-> (b0,b1); shift swaps, diag picks (x0, y1)
        CHECK(m.eval(shift, std::vector<Element>{2}) == 1);
        CHECK(m.eval(diag, std::vector<Element>{2, 1}) == 3);
    }
    CHECK_THROWS_AS(matrix_power(make("set 2"), 0), ArgumentError);
}

TEST_CASE("isomorphism search") {
    SUBCASE("identity witness on equal algebras") {
        FiniteAlgebra a = make("vector_space 3");
        auto iso = is_isomorphic(a, a);
        REQUIRE(iso.has_value());
        CHECK(is_homomorphism(a, a, iso->map));
        CHECK(iso->is_bijective(3));
    }
    SUBCASE("meet vs join semilattice on two elements") {
        FiniteAlgebra meet = make("semilattice 2");
        std::vector<Element> join_table{0, 1, 1, 1};
        FiniteAlgebra join("join2", 2, meet.signature(), {Operation(2, 2, join_table)});
        auto iso = is_isomorphic(meet, join);
        REQUIRE(iso.has_value());
        CHECK(iso->map == std::vector<Element>{1, 0});
    }
    SUBCASE("different algebras with equal size") {
        FiniteAlgebra sl = make("semilattice 2");
        std::vector<Element> proj{0, 0, 1, 1};
        FiniteAlgebra pr("proj2", 2, sl.signature(), {Operation(2, 2, proj)});
        CHECK_FALSE(is_isomorphic(sl, pr).has_value());
    }
    SUBCASE("size guard") {
        Limits tight;
        tight.max_iso_universe = 2;
        CHECK_THROWS_WITH_AS(is_isomorphic(make("set 3"), make("set 3"), tight),
                             doctest::Contains("max_iso_universe"), ResourceError);
    }
}

TEST_CASE("surjective homomorphism search") {
    SUBCASE("quotient map is always found") {
        FiniteAlgebra k4 = klein4();
        Partition theta = cg_pairs(k4, {{0, 2}});
        FiniteAlgebra q = quotient_by(k4, theta).algebra;
        auto hom = find_surjective_hom(k4, q);
        REQUIRE(hom.has_value());
        CHECK(hom->is_surjective(q.size()));
        CHECK(is_homomorphism(k4, q, hom->map));
    }
    SUBCASE("projection-interpreted algebra maps onto no shifted semiprojection") {
        FiniteAlgebra b = build_semiprojection_expansion(make("set 3"), 2, "projection");
        FiniteAlgebra a = build_semiprojection_expansion(make("set 3"), 2, "shifted");
        CHECK_FALSE(find_surjective_hom(b, a).has_value());
        // oracle: all 27 maps, checked directly
        int found = 0;
        std::vector<Element> map(3);
        for (map[0] = 0; map[0] < 3; ++map[0])
            for (map[1] = 0; map[1] < 3; ++map[1])
                for (map[2] = 0; map[2] < 3; ++map[2])
                    if (is_homomorphism(b, a, map) && Homomorphism{map}.is_surjective(3)) ++found;
        CHECK(found == 0);
    }
    SUBCASE("collapsing a free generator") {
        FiniteAlgebra p2 = make("pointed_set 2");
        // F(2) and F(1) of the pointed variety, sizes 3 and 2
        FiniteAlgebra f2("f2", 3, p2.signature(), {Operation(3, 0, {0})});
        FiniteAlgebra f1("f1", 2, p2.signature(), {Operation(2, 0, {0})});
        auto hom = find_surjective_hom(f2, f1);
        REQUIRE(hom.has_value());
        CHECK(hom->is_surjective(2));
    }
}

TEST_CASE("homomorphism invariant is checked on construction") {
    FiniteAlgebra gf2 = make("vector_space 2");
    // swapping 0 and 1 does not respect the constant
    CHECK_THROWS_WITH_AS(make_checked_homomorphism(gf2, gf2, {1, 0}),
                         doctest::Contains("not a homomorphism"), ArgumentError);
    CHECK_NOTHROW(make_checked_homomorphism(gf2, gf2, {0, 1}));
    CHECK_NOTHROW(make_checked_homomorphism(gf2, gf2, {0, 0}));  // the zero endomorphism
}

TEST_CASE("minimum generating size") {
    FiniteAlgebra one = make("pointed_set 1");
    CHECK(min_generating_size(one) == 0);
    FiniteAlgebra p3 = make("pointed_set 3");
    CHECK(min_generating_size(p3) == 2);
    CHECK(min_generating_size(klein4()) == 2);
}

TEST_CASE("product is associative up to isomorphism") {
    FiniteAlgebra a = make("pointed_set 2"), b = make("pointed_set 3"), c = make("pointed_set 2");
    FiniteAlgebra left = product(product(a, b), c);
    FiniteAlgebra right = product(a, product(b, c));
    CHECK(is_isomorphic(left, right).has_value());
}

TEST_CASE("greedy generating sets generate") {
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
        FiniteAlgebra a = finalg::testing::random_algebra(seed, 4, {1, 2});
        auto gens = greedy_generating_set(a);
        CHECK(static_cast<int>(subuniverse_of(a, gens).size()) == a.size());
        auto oracle = oracles::subuniverse(a, gens);
        CHECK(static_cast<int>(oracle.size()) == a.size());
    }
}
