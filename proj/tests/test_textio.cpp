#include "doctest.h"

#include "finalg/textio.hpp"
#include "helpers.hpp"

using namespace finalg;
using finalg::testing::make;

namespace {

bool algebras_equal(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.name() != b.name() || a.size() != b.size() || !(a.signature() == b.signature()))
        return false;
    for (int op = 0; op < a.op_count(); ++op)
        if (a.op(op).table() != b.op(op).table()) return false;
    return true;
}

}  // namespace

TEST_CASE("round-trip across the catalog") {
    for (const char* spec :
         {"set 2", "pointed_set 3", "vector_space 3", "affine_space 2", "semilattice 3",
          "matrix_power 2 pointed_set 2", "semiprojection 2 shifted set 3"}) {
        FiniteAlgebra a = make(spec);
        CAPTURE(spec);
        CHECK(algebras_equal(parse_algebra(print_algebra(a)), a));
    }
}

TEST_CASE("round-trip on random algebras (print then parse is the identity)") {
    for (unsigned seed = 200; seed < 210; ++seed) {
        FiniteAlgebra a = finalg::testing::random_algebra(seed, 4, {0, 1, 2});
        CHECK(algebras_equal(parse_algebra(print_algebra(a)), a));
    }
}

TEST_CASE("whitespace and comments are immaterial") {
    FiniteAlgebra a = parse_algebra(
        "# header comment\n"
        "algebra demo # trailing\n"
        "  size 2\n"
        "op f 1   1 0\n"
        "op c 0\n0\n");
    CHECK(a.size() == 2);
    CHECK(a.op(0).table() == std::vector<Element>{1, 0});
    CHECK(a.op(1).table() == std::vector<Element>{0});

    FiniteAlgebra b = parse_algebra(print_algebra(a));
    CHECK(algebras_equal(a, b));
}

TEST_CASE("parse errors cite line and column") {
    CHECK_THROWS_WITH_AS(parse_algebra("bogus"), doctest::Contains("1:1"), ArgumentError);
    CHECK_THROWS_WITH_AS(parse_algebra("algebra a\nsize x"), doctest::Contains("2:6"),
                         ArgumentError);
    CHECK_THROWS_WITH_AS(parse_algebra("algebra a\nsize 2\nop f 1\n0\n# short table"),
                         doctest::Contains("expected 2 entries"), ArgumentError);
    CHECK_THROWS_WITH_AS(parse_algebra("algebra a\nsize 2\nop f 1\n0 7\n"),
                         doctest::Contains("outside universe"), ArgumentError);
    CHECK_THROWS_WITH_AS(parse_algebra("algebra a\nsize 2\nop f 1\n0 1\nop f 0\n0\n"),
                         doctest::Contains("duplicate operation"), ArgumentError);
}

TEST_CASE("partition block syntax") {
    CHECK(parse_partition("0,1|2", 3) == Partition::from_blocks(3, {{0, 1}, {2}}));
    CHECK(parse_partition("2|0,1", 3) == Partition::from_blocks(3, {{0, 1}, {2}}));
    CHECK(parse_partition("0", 1) == Partition::full(1));
    CHECK_THROWS_AS(parse_partition("0,1", 3), ArgumentError);   // misses 2
    CHECK_THROWS_AS(parse_partition("0,0|1", 2), ArgumentError); // duplicate
    CHECK_THROWS_AS(parse_partition("0;1", 2), ArgumentError);   // bad separator
    CHECK_THROWS_AS(parse_partition("0,5", 2), ArgumentError);   // out of range
}
