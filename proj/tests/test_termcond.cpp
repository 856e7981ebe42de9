#include "doctest.h"

#include "finalg/termcond.hpp"
#include "finalg/witness.hpp"
#include "helpers.hpp"

using namespace finalg;
using finalg::testing::klein4;
using finalg::testing::make;

namespace {

// Re-evaluate a term-condition witness directly over the algebra.
void check_tc_witness(const FiniteAlgebra& a, const TermConditionWitness& w) {
    auto value = [&](const std::vector<Element>& assign) {
        return eval_term(w.arena, w.root, a, assign);
    };
    CHECK(value(w.assign_au) == w.value_au);
    CHECK(value(w.assign_av) == w.value_av);
    CHECK(value(w.assign_bu) == w.value_bu);
    CHECK(value(w.assign_bv) == w.value_bv);
    CHECK(w.value_au == w.value_av);
    CHECK(w.value_bu != w.value_bv);
}

}  // namespace

TEST_CASE("abelianness of the catalog") {
    CHECK(is_abelian(make("set 2")).abelian);
    CHECK(is_abelian(make("pointed_set 3")).abelian);
    CHECK(is_abelian(make("vector_space 2")).abelian);
    CHECK(is_abelian(make("vector_space 3")).abelian);
    CHECK(is_abelian(make("affine_space 2")).abelian);
    CHECK(is_abelian(klein4()).abelian);

    AbelianResult sl = is_abelian(make("semilattice 2"));
    CHECK_FALSE(sl.abelian);
    REQUIRE(sl.witness.has_value());
    check_tc_witness(make("semilattice 2"), *sl.witness);
}

TEST_CASE("the two abelianness deciders agree on the catalog") {
    for (const char* spec :
         {"set 2", "set 3", "pointed_set 2", "pointed_set 3", "vector_space 2", "vector_space 3",
          "affine_space 2", "affine_space 3", "semilattice 2", "semilattice 3",
          "matrix_power 2 set 2", "matrix_power 2 pointed_set 2"}) {
        FiniteAlgebra a = make(spec);
        CAPTURE(spec);
        CHECK(is_abelian(a).abelian == is_abelian_matrix_method(a).abelian);
    }
    CHECK(is_abelian(klein4()).abelian == is_abelian_matrix_method(klein4()).abelian);
    for (unsigned seed = 100; seed < 106; ++seed) {
        FiniteAlgebra a = finalg::testing::random_algebra(seed, 3, {2});
        CAPTURE(seed);
        CHECK(is_abelian(a).abelian == is_abelian_matrix_method(a).abelian);
    }
}

TEST_CASE("strong term condition for congruences") {
    SUBCASE("identity congruence is always strongly abelian") {
        for (const char* spec : {"vector_space 2", "semilattice 3"}) {
            FiniteAlgebra a = make(spec);
            CHECK(is_strongly_abelian_congruence(a, Partition::identity(a.size())).holds);
        }
    }
    SUBCASE("full congruence on the 2-element set") {
        FiniteAlgebra a = make("set 2");
        CHECK(is_strongly_abelian_congruence(a, Partition::full(2)).holds);
    }
    SUBCASE("full congruence on GF(2) fails with a replayable witness") {
        FiniteAlgebra gf2 = make("vector_space 2");
        StrongAbelianResult r = is_strongly_abelian_congruence(gf2, Partition::full(2));
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness.has_value());
        const auto& w = *r.witness;
        auto value = [&](const std::vector<Element>& assign) {
            return eval_term(w.arena, w.root, gf2, assign);
        };
        CHECK(value(w.assign_au) == w.value_au);
        CHECK(value(w.assign_bv) == w.value_bv);
        CHECK(value(w.assign_cu) == w.value_cu);
        CHECK(value(w.assign_cv) == w.value_cv);
        CHECK(w.value_au == w.value_bv);
        CHECK(w.value_cu != w.value_cv);
    }
    SUBCASE("non-congruence input is rejected") {
        FiniteAlgebra k4 = klein4();
        Partition bad = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
        CHECK_THROWS_AS(is_strongly_abelian_congruence(k4, bad), ArgumentError);
    }
}

TEST_CASE("strongly abelian algebras") {
    CHECK(is_strongly_abelian_algebra(make("set 2")));
    CHECK(is_strongly_abelian_algebra(make("pointed_set 2")));
    CHECK_FALSE(is_strongly_abelian_algebra(make("vector_space 2")));
}

TEST_CASE("every strongly abelian catalog algebra is abelian") {
    for (const char* spec : {"set 2", "set 3", "pointed_set 2", "pointed_set 3", "semilattice 2",
                             "vector_space 2", "affine_space 3"}) {
        FiniteAlgebra a = make(spec);
        if (is_strongly_abelian_algebra(a)) CHECK(is_abelian(a).abelian);
    }
}

TEST_CASE("abelianness is inherited by subalgebras and quotients") {
    for (const char* spec : {"pointed_set 3", "vector_space 3", "affine_space 2"}) {
        FiniteAlgebra a = make(spec);
        REQUIRE(is_abelian(a).abelian);
        for (const auto& theta : all_congruences(a))
            CHECK(is_abelian(quotient_by(a, theta).algebra).abelian);
        ProductContext ctx = ProductContext::power_of(a, 1);
        for (Element e = 0; e < a.size(); ++e) {
            GeneratedSet sub = generate(ctx, {{e}});
            FiniteAlgebra sg = materialize_subproduct(ctx, sub.elements(), "sub");
            CHECK(is_abelian(sg).abelian);
        }
    }
}

TEST_CASE("injectivity of nonconstant unary polynomials") {
    CHECK(nonconstant_unaries_injective(make("pointed_set 2")).holds);
    CHECK(nonconstant_unaries_injective(make("vector_space 2")).holds);
    CHECK(nonconstant_unaries_injective(make("vector_space 3")).holds);

    InjectiveResult r = nonconstant_unaries_injective(make("semilattice 3"));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->table == std::vector<Element>{0, 1, 1});  // x meet 1
}

TEST_CASE("twin polynomials have equal kernels on abelian algebras with zero") {
    for (const char* spec : {"pointed_set 2", "pointed_set 3", "vector_space 2",
                             "vector_space 3"}) {
        FiniteAlgebra a = make(spec);
        REQUIRE(is_abelian(a).abelian);
        Element zero = -1;
        for (int op = 0; op < a.op_count(); ++op)
            if (a.signature().arity(op) == 0) zero = a.op(op).table()[0];
        REQUIRE(zero >= 0);
        GeneratedSet pol1 = unary_polynomials(a);
        for (int i = 0; i < pol1.size(); ++i) {
            // twin: re-evaluate the witness with every constant slot at zero
            std::vector<Element> twin(a.size()), original(a.size());
            for (Element x = 0; x < a.size(); ++x) {
                std::vector<Element> leaves_orig, leaves_twin;
                leaves_orig.push_back(x);
                leaves_twin.push_back(x);
                for (Element c = 0; c < a.size(); ++c) {
                    leaves_orig.push_back(c);
                    leaves_twin.push_back(zero);
                }
                original[x] = eval_term(pol1.witnesses(), i, a, leaves_orig);
                twin[x] = eval_term(pol1.witnesses(), i, a, leaves_twin);
            }
            CHECK(original == pol1.element(i));
            CHECK(Partition::from_labels(original) == Partition::from_labels(twin));
        }
    }
}
