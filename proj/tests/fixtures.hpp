#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "grecon/concepts.hpp"
#include "grecon/io.hpp"

namespace fixtures {

inline grecon::BooleanMatrix matrix_of(const std::string& dense) {
    std::istringstream in(dense);
    return grecon::read_dense(in);
}

// 3x4 matrix used throughout the small worked examples; attributes a..d are
// columns 0..3.
//
//      a b c d
//   0  1 0 1 1
//   1  0 1 1 0
//   2  0 0 1 1
inline grecon::BooleanMatrix tiny3x4() {
    return matrix_of("1011\n0110\n0011\n");
}

// The five concepts of tiny3x4, in the indexing the worked cell/covers
// tables use.
inline std::vector<grecon::FormalConcept> tiny3x4_concepts() {
    using grecon::Bitset;
    auto c = [](std::initializer_list<std::size_t> ext, std::initializer_list<std::size_t> intent) {
        return grecon::FormalConcept{Bitset::of(3, ext), Bitset::of(4, intent)};
    };
    return {
        c({0, 1, 2}, {2}),     // 0: <{0,1,2},{c}>
        c({0}, {0, 2, 3}),     // 1: <{0},{a,c,d}>
        c({}, {0, 1, 2, 3}),   // 2: <{},{a,b,c,d}>
        c({1}, {1, 2}),        // 3: <{1},{b,c}>
        c({0, 2}, {2, 3}),     // 4: <{0,2},{c,d}>
    };
}

// 5x7 matrix with the four named concepts used by the incremental-coverage
// walkthroughs; attributes a..g are columns 0..6.
//
//      a b c d e f g
//   0  1 1 1 1 0 0 0
//   1  1 1 1 1 0 0 0
//   2  1 1 1 1 1 1 1
//   3  0 0 1 1 1 1 1
//   4  0 0 1 1 0 0 0
inline grecon::BooleanMatrix wide5x7() {
    return matrix_of(
        "1111000\n"
        "1111000\n"
        "1111111\n"
        "0011111\n"
        "0011000\n");
}

inline grecon::FormalConcept wide_c1() {
    return {grecon::Bitset::of(5, {0, 1, 2}), grecon::Bitset::of(7, {0, 1, 2, 3})};
}
inline grecon::FormalConcept wide_c2() {
    return {grecon::Bitset::of(5, {2, 3}), grecon::Bitset::of(7, {2, 3, 4, 5, 6})};
}
inline grecon::FormalConcept wide_c3() {
    return {grecon::Bitset::of(5, {0, 1, 2, 3, 4}), grecon::Bitset::of(7, {2, 3})};
}
inline grecon::FormalConcept wide_c4() {
    return {grecon::Bitset::of(5, {2}), grecon::Bitset::of(7, {0, 1, 2, 3, 4, 5, 6})};
}

// 5x6 matrix that splits into three block factors, with the two factor
// matrices of its exact rank-3 decomposition.
inline grecon::BooleanMatrix blocks5x6() {
    return matrix_of(
        "111000\n"
        "111000\n"
        "011110\n"
        "011111\n"
        "001101\n");
}

inline grecon::BooleanMatrix blocks_A() {
    return matrix_of(
        "100\n"
        "100\n"
        "010\n"
        "011\n"
        "001\n");
}

inline grecon::BooleanMatrix blocks_B() {
    return matrix_of(
        "111000\n"
        "011110\n"
        "001101\n");
}

}  // namespace fixtures
