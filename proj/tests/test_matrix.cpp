#include "doctest.h"

#include "grecon/matrix.hpp"
#include "grecon/synthetic.hpp"

#include "fixtures.hpp"

using namespace grecon;

TEST_CASE("up on the tiny matrix") {
    BooleanMatrix I = fixtures::tiny3x4();

    CHECK(up(I, Bitset::of(3, {0, 2})) == Bitset::of(4, {2, 3}));     // {c,d}
    CHECK(up(I, Bitset::of(3, {0, 1, 2})) == Bitset::of(4, {2}));     // {c}
    CHECK(up(I, Bitset(3)) == Bitset(4, true));                       // empty -> all attributes
    CHECK_THROWS_AS(up(I, Bitset(5)), std::invalid_argument);
}

TEST_CASE("down on the tiny matrix") {
    BooleanMatrix I = fixtures::tiny3x4();

    CHECK(down(I, Bitset::of(4, {2, 3})) == Bitset::of(3, {0, 2}));
    CHECK(down(I, Bitset(4)) == Bitset(3, true));
    CHECK(down(I, Bitset::of(4, {0, 1, 2, 3})) == Bitset(3));  // nothing has all four
    CHECK_THROWS_AS(down(I, Bitset(3)), std::invalid_argument);
}

TEST_CASE("boolean product reproduces the block example") {
    BooleanMatrix A = fixtures::blocks_A();
    BooleanMatrix B = fixtures::blocks_B();
    BooleanMatrix I = fixtures::blocks5x6();

    CHECK(bool_product(A, B) == I);
    CHECK(residual_error(I, bool_product(A, B)) == 0);
    CHECK(I.ones_count() == 18);
}

TEST_CASE("boolean product with identity pattern") {
    BooleanMatrix B = fixtures::blocks_B();  // 3x6
    BooleanMatrix eye(3, 3);
    for (std::size_t i = 0; i < 3; ++i) eye.set(i, i);
    CHECK(bool_product(eye, B) == B);

    BooleanMatrix bad(4, 4);
    CHECK_THROWS_AS(bool_product(bad, B), std::invalid_argument);
}

TEST_CASE("boolean product equals OR of rank-1 rectangles") {
    BooleanMatrix A = random_matrix(7, 6, 4, 0.4);
    BooleanMatrix B = random_matrix(8, 4, 5, 0.4);

    BooleanMatrix expected(6, 5);
    for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t i = 0; i < 6; ++i)
            if (A.test(i, l))
                for (std::size_t j = 0; j < 5; ++j)
                    if (B.test(l, j)) expected.set(i, j);

    CHECK(bool_product(A, B) == expected);
}

TEST_CASE("residual error counts uncovered ones only") {
    BooleanMatrix I = fixtures::tiny3x4();
    CHECK(residual_error(I, I) == 0);
    CHECK(residual_error(I, BooleanMatrix(3, 4)) == 7);  // nothing covered

    // After removing the largest concept's rectangle from the wide matrix,
    // ten ones remain (22 total minus the 3x4 block).
    BooleanMatrix W = fixtures::wide5x7();
    BooleanMatrix rect(5, 7);
    for (std::size_t i : {0u, 1u, 2u})
        for (std::size_t j : {0u, 1u, 2u, 3u}) rect.set(i, j);
    CHECK(W.ones_count() == 22);
    CHECK(residual_error(W, rect) == 10);

    // Overcoverage is a contract violation, not a distance.
    BooleanMatrix over = I;
    over.set(1, 0);
    CHECK_THROWS_AS(residual_error(I, over), std::invalid_argument);
    CHECK_THROWS_AS(residual_error(I, BooleanMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("leq") {
    BooleanMatrix I = fixtures::tiny3x4();
    CHECK(leq(I, I));
    CHECK(leq(BooleanMatrix(3, 4), I));
    BooleanMatrix more = I;
    more.set(2, 0);
    CHECK(!leq(more, I));
    CHECK(leq(I, more));
}

TEST_CASE("galois properties on random matrices") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        BooleanMatrix I = random_matrix(seed, 9, 7, 0.35);
        BooleanMatrix mask = random_matrix(seed + 1000, 9, 7, 0.3);

        Bitset C1(9), C2(9);
        for (std::size_t i = 0; i < 9; ++i) {
            if (mask.test(i, 0)) C1.set(i);
            if (mask.test(i, 0) || mask.test(i, 1)) C2.set(i);  // C1 subset of C2
        }

        Bitset upC1 = up(I, C1), upC2 = up(I, C2);
        CHECK(upC2.is_subset_of(upC1));                    // antitone
        CHECK(C1.is_subset_of(down(I, upC1)));             // extensive
        CHECK(up(I, down(I, upC1)) == upC1);               // idempotent closure
    }
}

TEST_CASE("bitset sequence order") {
    CHECK(Bitset::of(4, {0, 2}).sequence_less(Bitset::of(4, {1, 2})));
    CHECK(Bitset::of(4, {1}).sequence_less(Bitset::of(4, {1, 2})));        // prefix first
    CHECK(!Bitset::of(4, {1, 2}).sequence_less(Bitset::of(4, {1})));
    CHECK(!Bitset::of(4, {1, 2}).sequence_less(Bitset::of(4, {1, 2})));    // irreflexive
    CHECK(Bitset::of(4, {0, 2, 3}).sequence_less(Bitset::of(4, {1, 2})));  // {a,c,d} < {b,c}
}
