#pragma once

#include <array>
#include <cstdint>

#include "nur4/errors.hpp"

namespace nur4 {

// The four elements of the ring E = <2a=2b=0, a^2=a, b^2=b, ab=a, ba=b>,
// with c = a+b. E has characteristic 2, no unity, and is non-commutative.
//
// The tag values are chosen so that addition is bitwise XOR of tags
// (0=00, a=01, b=10, c=11; the additive group is F2 x F2 with c = a+b).
// That equivalence is a shortcut: the Cayley tables below are the source
// of truth, and the XOR route is checked against them exhaustively in the
// tests, as is every other packed trick in word.hpp.
enum class Elem : uint8_t { Zero = 0, A = 1, B = 2, C = 3 };

inline constexpr std::array<Elem, 4> kElems = {Elem::Zero, Elem::A, Elem::B,
                                               Elem::C};

// Cayley tables, row = left operand, column = right operand, order 0,a,b,c.
inline constexpr Elem kAddTable[4][4] = {
    {Elem::Zero, Elem::A, Elem::B, Elem::C},
    {Elem::A, Elem::Zero, Elem::C, Elem::B},
    {Elem::B, Elem::C, Elem::Zero, Elem::A},
    {Elem::C, Elem::B, Elem::A, Elem::Zero},
};

inline constexpr Elem kMulTable[4][4] = {
    {Elem::Zero, Elem::Zero, Elem::Zero, Elem::Zero},
    {Elem::Zero, Elem::A, Elem::A, Elem::Zero},
    {Elem::Zero, Elem::B, Elem::B, Elem::Zero},
    {Elem::Zero, Elem::C, Elem::C, Elem::Zero},
};

constexpr Elem add(Elem x, Elem y) {
    return kAddTable[static_cast<int>(x)][static_cast<int>(y)];
}

constexpr Elem mul(Elem x, Elem y) {
    return kMulTable[static_cast<int>(x)][static_cast<int>(y)];
}

// Reduction map modulo the maximal ideal J = {0,c}: E/J ~ F2.
// tau(0) = tau(c) = 0, tau(a) = tau(b) = 1.
constexpr int tau(Elem x) { return (x == Elem::A || x == Elem::B) ? 1 : 0; }

// Hamming weight of a single element: 0 for the zero element, 1 otherwise.
constexpr int elem_weight(Elem x) { return x == Elem::Zero ? 0 : 1; }

// The maximal ideal J = {0, c}.
inline constexpr std::array<Elem, 2> kIdealJ = {Elem::Zero, Elem::C};

constexpr char to_char(Elem x) {
    constexpr char kSymbols[4] = {'0', 'a', 'b', 'c'};
    return kSymbols[static_cast<int>(x)];
}

inline Elem elem_from_char(char ch) {
    switch (ch) {
        case '0': return Elem::Zero;
        case 'a': return Elem::A;
        case 'b': return Elem::B;
        case 'c': return Elem::C;
        default: break;
    }
    throw ParseError(std::string("not a ring symbol: '") + ch + "'");
}

// 2x2 binary matrix, entry (r,c) at bit 2r+c. Image space of the faithful
// matrix model of E inside the 2x2 matrices over F2.
struct Mat2 {
    uint8_t bits = 0;

    constexpr int at(int r, int c) const { return (bits >> (2 * r + c)) & 1; }

    friend constexpr Mat2 operator^(Mat2 lhs, Mat2 rhs) {
        return Mat2{static_cast<uint8_t>(lhs.bits ^ rhs.bits)};
    }
    friend constexpr bool operator==(Mat2 lhs, Mat2 rhs) = default;
};

// Binary matrix product over F2.
constexpr Mat2 mat2_mul(Mat2 x, Mat2 y) {
    uint8_t out = 0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            int v = (x.at(r, 0) & y.at(0, c)) ^ (x.at(r, 1) & y.at(1, c));
            out = static_cast<uint8_t>(out | (v << (2 * r + c)));
        }
    return Mat2{out};
}

// Injective ring homomorphism E -> M2(F2):
//   0 -> zero, a -> [[0,0],[0,1]], b -> [[0,1],[0,1]], c -> a XOR b.
constexpr Mat2 matrix_model(Elem x) {
    constexpr uint8_t kImages[4] = {
        0b0000,  // 0
        0b1000,  // a: e11
        0b1010,  // b: e01, e11
        0b0010,  // c: e01
    };
    return Mat2{kImages[static_cast<int>(x)]};
}

}  // namespace nur4
