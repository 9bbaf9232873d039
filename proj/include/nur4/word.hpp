#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nur4/ring.hpp"

namespace nur4 {

// Words are dense and at most kMaxLen long; every coordinate is one 2-bit
// lane of a uint32_t (lane i at bits 2i..2i+1, tag values as in ring.hpp).
inline constexpr int kMaxLen = 16;

// Lane-parallel helpers on packed words. Everything here is a shortcut for
// a per-coordinate table operation and is validated against the Cayley
// tables exhaustively in the tests.
namespace wordbits {

inline constexpr uint32_t kEven = 0x55555555u;

// Per-lane tau bits, one bit per lane at the even position.
// tau = parity of the two tag bits (0,c -> 0; a,b -> 1).
constexpr uint32_t tau_bits(uint32_t w) { return (w ^ (w >> 1)) & kEven; }

// Per-lane gamma bits (the {0,a} vs {c,b} distinction): high tag bit.
constexpr uint32_t gamma_bits(uint32_t w) { return (w >> 1) & kEven; }

// Number of nonzero lanes.
constexpr int weight(uint32_t w) { return std::popcount((w | (w >> 1)) & kEven); }

// n-bit mask -> one bit per lane at the even positions (Morton spread).
constexpr uint32_t spread(uint32_t mask) {
    uint32_t x = mask & 0xFFFFu;
    x = (x | (x << 8)) & 0x00FF00FFu;
    x = (x | (x << 4)) & 0x0F0F0F0Fu;
    x = (x | (x << 2)) & 0x33333333u;
    x = (x | (x << 1)) & 0x55555555u;
    return x;
}

// Inverse of spread: gather the even-position bits into an n-bit mask.
constexpr uint32_t compress(uint32_t even) {
    uint32_t x = even & 0x55555555u;
    x = (x | (x >> 1)) & 0x33333333u;
    x = (x | (x >> 2)) & 0x0F0F0F0Fu;
    x = (x | (x >> 4)) & 0x00FF00FFu;
    x = (x | (x >> 8)) & 0x0000FFFFu;
    return x;
}

// Word with tag t at every lane of `mask`, zero elsewhere.
constexpr uint32_t paint(uint32_t mask, Elem t) {
    return spread(mask) * static_cast<uint32_t>(t);
}

// XOR-fold of all lanes: the ring sum of the coordinates.
constexpr Elem fold_add(uint32_t w) {
    w ^= w >> 16;
    w ^= w >> 8;
    w ^= w >> 4;
    w ^= w >> 2;
    return static_cast<Elem>(w & 3u);
}

// Left scalar action s * u: lane i gets s where tau(u_i) = 1, else 0.
constexpr uint32_t mul_left(Elem s, uint32_t u) {
    return tau_bits(u) * static_cast<uint32_t>(s);
}

// Right scalar action u * s: the identity map when tau(s) = 1, zero otherwise.
constexpr uint32_t mul_right(uint32_t u, Elem s) { return tau(s) ? u : 0u; }

// Inner product <u, v> = sum_i u_i * v_i: fold u over the tau-support of v.
constexpr Elem inner(uint32_t u, uint32_t v) {
    uint32_t m = tau_bits(v);
    return fold_add(u & (m | (m << 1)));
}

}  // namespace wordbits

enum class Side { Left, Right };

class BitWord;

// Fixed-length vector over E. Value type, immutable after construction.
class EWord {
  public:
    EWord() = default;

    static EWord zero(int n) { return EWord(0u, check_len(n)); }

    static EWord from_packed(uint32_t bits, int n) {
        return EWord(bits, check_len(n));
    }

    // Parses the concatenated symbol form, e.g. "abc0".
    static EWord from_string(std::string_view s) {
        int n = check_len(static_cast<int>(s.size()));
        uint32_t bits = 0;
        for (int i = 0; i < n; ++i)
            bits |= static_cast<uint32_t>(elem_from_char(s[i])) << (2 * i);
        return EWord(bits, n);
    }

    static EWord from_elems(std::span<const Elem> es) {
        int n = check_len(static_cast<int>(es.size()));
        uint32_t bits = 0;
        for (int i = 0; i < n; ++i)
            bits |= static_cast<uint32_t>(es[i]) << (2 * i);
        return EWord(bits, n);
    }

    int length() const { return n_; }
    uint32_t packed() const { return bits_; }

    Elem at(int i) const { return static_cast<Elem>((bits_ >> (2 * i)) & 3u); }

    std::string str() const {
        std::string s(static_cast<size_t>(n_), '0');
        for (int i = 0; i < n_; ++i) s[static_cast<size_t>(i)] = to_char(at(i));
        return s;
    }

    friend EWord operator+(EWord u, EWord v) {
        require_same_length(u, v);
        return EWord(u.bits_ ^ v.bits_, u.n_);
    }

    friend auto operator<=>(const EWord&, const EWord&) = default;

    static void require_same_length(const EWord& u, const EWord& v) {
        if (u.n_ != v.n_) throw LengthMismatch("word lengths differ");
    }

  private:
    EWord(uint32_t bits, int n) : bits_(bits), n_(static_cast<uint8_t>(n)) {}

    static int check_len(int n) {
        if (n < 1 || n > kMaxLen)
            throw LengthTooLarge("word length must be in 1.." +
                                 std::to_string(kMaxLen));
        return n;
    }

    uint32_t bits_ = 0;
    uint8_t n_ = 0;
};

// Fixed-length binary vector, bit i = coordinate i.
class BitWord {
  public:
    BitWord() = default;
    BitWord(uint32_t bits, int n) : bits_(bits), n_(static_cast<uint8_t>(n)) {}

    int length() const { return n_; }
    uint32_t bits() const { return bits_; }
    int bit(int i) const { return (bits_ >> i) & 1; }
    int weight() const { return std::popcount(bits_); }

    friend BitWord operator^(BitWord u, BitWord v) {
        if (u.n_ != v.n_) throw LengthMismatch("word lengths differ");
        return BitWord(u.bits_ ^ v.bits_, u.n_);
    }

    int dot2(BitWord v) const {
        if (n_ != v.n_) throw LengthMismatch("word lengths differ");
        return std::popcount(bits_ & v.bits_) & 1;
    }

    std::string str() const {
        std::string s(static_cast<size_t>(n_), '0');
        for (int i = 0; i < n_; ++i)
            s[static_cast<size_t>(i)] = static_cast<char>('0' + bit(i));
        return s;
    }

    friend auto operator<=>(const BitWord&, const BitWord&) = default;

  private:
    uint32_t bits_ = 0;
    uint8_t n_ = 0;
};

inline EWord word_add(const EWord& u, const EWord& v) { return u + v; }

inline EWord scalar_mul(Side side, Elem s, const EWord& u) {
    uint32_t bits = side == Side::Left ? wordbits::mul_left(s, u.packed())
                                       : wordbits::mul_right(u.packed(), s);
    return EWord::from_packed(bits, u.length());
}

inline int hamming_weight(const EWord& u) { return wordbits::weight(u.packed()); }

// Number of coordinates where u and v differ. Equals the weight of u + v
// (characteristic 2); the tests assert both routes agree.
inline int hamming_distance(const EWord& u, const EWord& v) {
    EWord::require_same_length(u, v);
    return wordbits::weight(u.packed() ^ v.packed());
}

inline Elem inner_product(const EWord& u, const EWord& v) {
    EWord::require_same_length(u, v);
    return wordbits::inner(u.packed(), v.packed());
}

// Coordinatewise reduction map. Additive homomorphism onto XOR.
inline BitWord tau_word(const EWord& u) {
    return BitWord(wordbits::compress(wordbits::tau_bits(u.packed())),
                   u.length());
}

}  // namespace nur4
