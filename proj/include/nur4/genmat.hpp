#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nur4/word.hpp"

namespace nur4 {

// Binary matrix whose row-major bit string is the big-endian binary
// expansion of `index`: the first row-major entry is the most significant
// bit. Enumerating index = 0,1,2,... therefore walks the matrices in
// binary-counter order over the bit string. rows = 0 or cols = 0 gives the
// unique empty matrix (index 0, empty bit string).
struct BitMatrix {
    int rows = 0;
    int cols = 0;
    uint64_t index = 0;

    int bit_count() const { return rows * cols; }

    int bit(int r, int c) const {
        int pos = bit_count() - 1 - (r * cols + c);
        return static_cast<int>((index >> pos) & 1u);
    }

    // Row r as an n-bit mask with bit j = column j.
    uint32_t row_mask(int r) const {
        uint32_t m = 0;
        for (int c = 0; c < cols; ++c)
            m |= static_cast<uint32_t>(bit(r, c)) << c;
        return m;
    }

    std::string bit_string() const {
        std::string s(static_cast<size_t>(bit_count()), '0');
        for (int p = 0; p < bit_count(); ++p)
            if ((index >> (bit_count() - 1 - p)) & 1u)
                s[static_cast<size_t>(p)] = '1';
        return s;
    }

    static BitMatrix from_bit_string(int rows, int cols, std::string_view s);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

// Number of binary matrices with the given shape, 2^(rows*cols).
uint64_t bit_matrix_count(int rows, int cols);

// Calls fn with every rows x cols binary matrix exactly once, in index order.
template <typename F>
void enumerate_bit_matrices(int rows, int cols, F&& fn) {
    uint64_t total = bit_matrix_count(rows, cols);
    for (uint64_t i = 0; i < total; ++i) fn(BitMatrix{rows, cols, i});
}

// One candidate code of type {k0,k1}: the binary blocks T (k0 x k1),
// U (k0 x (n-k0-k1)), V (k1 x (n-k0-k1)) of the generator matrix
//
//     [ a I_k0   a T      a U ]
//     [ b I_k0   b T      b U ]
//     [ 0        c I_k1   c V ]
//
// candidate_index is the big-endian reading of the concatenated T|U|V bit
// strings, so enumeration order is T-major, then U, then V.
struct GeneratorSpec {
    int n = 0;
    int k0 = 0;
    int k1 = 0;
    BitMatrix T;
    BitMatrix U;
    BitMatrix V;
    uint64_t candidate_index = 0;

    // Textual form "n=4 k0=1 k1=2 T=10 U=1 V=01"; empty matrices are omitted.
    std::string text() const;

    static GeneratorSpec parse(std::string_view text);

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Throws InvalidType unless 0 <= k0, 0 <= k1, k0 + k1 < n, n <= kMaxLen.
void validate_type(int n, int k0, int k1);

// 2^(k0*k1 + (k0+k1)*(n-k0-k1)), the number of codes of type {k0,k1}.
uint64_t code_count(int n, int k0, int k1);

// Random-access enumeration of all GeneratorSpecs of one type, ordered by
// candidate_index. Supports range-partitioned iteration for sharding.
class TypeEnumerator {
  public:
    TypeEnumerator(int n, int k0, int k1);

    uint64_t size() const { return size_; }
    GeneratorSpec at(uint64_t candidate_index) const;

    template <typename F>
    void for_each(uint64_t lo, uint64_t hi, F&& fn) const {
        for (uint64_t i = lo; i < hi; ++i) fn(at(i));
    }

    int n() const { return n_; }
    int k0() const { return k0_; }
    int k1() const { return k1_; }

  private:
    int n_, k0_, k1_;
    int bits_t_, bits_u_, bits_v_;
    uint64_t size_;
};

struct EMatrix {
    int n = 0;
    std::vector<EWord> rows;
};

// Finite set of words of a common length, closed under addition and
// containing the zero word. Kept sorted by packed value. When built from a
// GeneratorSpec the originating spec and generator rows are retained.
struct Code {
    int n = 0;
    std::vector<EWord> words;
    std::optional<GeneratorSpec> spec;
    std::vector<EWord> generators;

    uint64_t size() const { return words.size(); }
    bool contains(const EWord& w) const;

    // Rows to test bilinear conditions against; the full word set when no
    // smaller generating set is known.
    const std::vector<EWord>& generating_set() const {
        return generators.empty() ? words : generators;
    }

    // Sorts, dedups, and verifies additive closure and the zero word.
    // Throws NotLinear on violation.
    static Code from_words(int n, std::vector<EWord> words);

    // Same but trusts the caller (internal span/dual construction).
    static Code from_words_unchecked(int n, std::vector<EWord> words);

    friend bool operator==(const Code& x, const Code& y) {
        return x.n == y.n && x.words == y.words;
    }
};

// Assembles the generator matrix of `spec` per the block layout above.
EMatrix build_generator(const GeneratorSpec& spec);

// Z2-span of the rows: all sums of row subsets. The identity blocks make
// the rows independent, so the span has exactly 2^(2k0+k1) words for
// spec-built matrices; span() asserts the materialized set size agrees.
Code span(const EMatrix& g);

// build_generator + span, keeping the spec attached to the code.
Code build_code(const GeneratorSpec& spec);

}  // namespace nur4
