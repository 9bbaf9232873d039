#include "nur4/genmat.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace nur4 {

BitMatrix BitMatrix::from_bit_string(int rows, int cols, std::string_view s) {
    if (static_cast<int>(s.size()) != rows * cols)
        throw ParseError("bit string has " + std::to_string(s.size()) +
                         " chars, expected " + std::to_string(rows * cols));
    uint64_t index = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw ParseError(std::string("bad bit character '") + ch + "'");
        index = (index << 1) | static_cast<uint64_t>(ch - '0');
    }
    return BitMatrix{rows, cols, index};
}

uint64_t bit_matrix_count(int rows, int cols) {
    if (rows < 0 || cols < 0) throw InvalidType("negative matrix dimension");
    int bits = rows * cols;
    if (bits >= 63) throw LengthTooLarge("matrix family too large to count");
    return uint64_t{1} << bits;
}

void validate_type(int n, int k0, int k1) {
    if (n < 1 || n > kMaxLen)
        throw InvalidType("length n must be in 1.." + std::to_string(kMaxLen));
    if (k0 < 0 || k1 < 0) throw InvalidType("k0 and k1 must be non-negative");
    if (k0 + k1 >= n)
        throw InvalidType("type {" + std::to_string(k0) + "," +
                          std::to_string(k1) + "} needs k0+k1 < n");
}

uint64_t code_count(int n, int k0, int k1) {
    validate_type(n, k0, k1);
    int nr = n - k0 - k1;
    int exponent = k0 * k1 + (k0 + k1) * nr;
    if (exponent >= 63) throw LengthTooLarge("code family too large to count");
    return uint64_t{1} << exponent;
}

TypeEnumerator::TypeEnumerator(int n, int k0, int k1)
    : n_(n), k0_(k0), k1_(k1) {
    validate_type(n, k0, k1);
    int nr = n - k0 - k1;
    bits_t_ = k0 * k1;
    bits_u_ = k0 * nr;
    bits_v_ = k1 * nr;
    size_ = code_count(n, k0, k1);
}

GeneratorSpec TypeEnumerator::at(uint64_t candidate_index) const {
    assert(candidate_index < size_);
    int nr = n_ - k0_ - k1_;
    uint64_t v_idx = candidate_index & ((uint64_t{1} << bits_v_) - 1);
    uint64_t u_idx = (candidate_index >> bits_v_) & ((uint64_t{1} << bits_u_) - 1);
    uint64_t t_idx = candidate_index >> (bits_v_ + bits_u_);
    return GeneratorSpec{n_,
                         k0_,
                         k1_,
                         BitMatrix{k0_, k1_, t_idx},
                         BitMatrix{k0_, nr, u_idx},
                         BitMatrix{k1_, nr, v_idx},
                         candidate_index};
}

std::string GeneratorSpec::text() const {
    std::ostringstream os;
    os << "n=" << n << " k0=" << k0 << " k1=" << k1;
    if (T.bit_count() > 0) os << " T=" << T.bit_string();
    if (U.bit_count() > 0) os << " U=" << U.bit_string();
    if (V.bit_count() > 0) os << " V=" << V.bit_string();
    return os.str();
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
    int n = -1, k0 = -1, k1 = -1;
    std::string t_bits, u_bits, v_bits;
    bool have_t = false, have_u = false, have_v = false;

    std::istringstream is{std::string(text)};
    std::string token;
    while (is >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        auto parse_int = [&](const std::string& v) {
            try {
                size_t used = 0;
                int parsed = std::stoi(v, &used);
                if (used != v.size()) throw ParseError("");
                return parsed;
            } catch (...) {
                throw ParseError("bad integer '" + v + "' for " + key);
            }
        };
        if (key == "n") n = parse_int(value);
        else if (key == "k0") k0 = parse_int(value);
        else if (key == "k1") k1 = parse_int(value);
        else if (key == "T") { t_bits = value; have_t = true; }
        else if (key == "U") { u_bits = value; have_u = true; }
        else if (key == "V") { v_bits = value; have_v = true; }
        else throw ParseError("unknown key '" + key + "'");
    }
    if (n < 0 || k0 < 0 || k1 < 0)
        throw ParseError("spec needs n=, k0= and k1=");
    validate_type(n, k0, k1);

    int nr = n - k0 - k1;
    auto check_shape = [](bool have, const std::string& bits, int rows,
                          int cols, const char* name) {
        if (!have && rows * cols != 0)
            throw ParseError(std::string(name) + "= is required for this type");
        if (have && static_cast<int>(bits.size()) != rows * cols)
            throw ParseError(std::string(name) + " needs exactly " +
                             std::to_string(rows * cols) + " bits");
    };
    check_shape(have_t, t_bits, k0, k1, "T");
    check_shape(have_u, u_bits, k0, nr, "U");
    check_shape(have_v, v_bits, k1, nr, "V");

    GeneratorSpec spec{n,
                       k0,
                       k1,
                       BitMatrix::from_bit_string(k0, k1, t_bits),
                       BitMatrix::from_bit_string(k0, nr, u_bits),
                       BitMatrix::from_bit_string(k1, nr, v_bits),
                       0};
    if (spec.T.bit_count() + spec.U.bit_count() + spec.V.bit_count() >= 63)
        throw LengthTooLarge("candidate index would overflow for this type");
    spec.candidate_index =
        (spec.T.index << (spec.U.bit_count() + spec.V.bit_count())) |
        (spec.U.index << spec.V.bit_count()) | spec.V.index;
    return spec;
}

bool Code::contains(const EWord& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

Code Code::from_words_unchecked(int n, std::vector<EWord> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return Code{n, std::move(ws), std::nullopt, {}};
}

Code Code::from_words(int n, std::vector<EWord> ws) {
    Code code = from_words_unchecked(n, std::move(ws));
    if (code.words.empty() || !code.contains(EWord::zero(n)))
        throw NotLinear("code must contain the zero word");
    for (const EWord& u : code.words) {
        if (u.length() != n) throw LengthMismatch("word length differs from n");
        for (const EWord& v : code.words)
            if (!code.contains(u + v))
                throw NotLinear("word set is not additively closed");
    }
    return code;
}

EMatrix build_generator(const GeneratorSpec& spec) {
    validate_type(spec.n, spec.k0, spec.k1);
    int n = spec.n, k0 = spec.k0, k1 = spec.k1;

    // Position mask of row i of (I | T | U), bit j = column j.
    auto ab_mask = [&](int i) {
        uint32_t m = uint32_t{1} << i;
        m |= spec.T.row_mask(i) << k0;
        m |= spec.U.row_mask(i) << (k0 + k1);
        return m;
    };
    // Position mask of row i of (0 | I | V).
    auto c_mask = [&](int i) {
        uint32_t m = uint32_t{1} << (k0 + i);
        m |= spec.V.row_mask(i) << (k0 + k1);
        return m;
    };

    EMatrix g;
    g.n = n;
    g.rows.reserve(static_cast<size_t>(2 * k0 + k1));
    for (int i = 0; i < k0; ++i)
        g.rows.push_back(EWord::from_packed(wordbits::paint(ab_mask(i), Elem::A), n));
    for (int i = 0; i < k0; ++i)
        g.rows.push_back(EWord::from_packed(wordbits::paint(ab_mask(i), Elem::B), n));
    for (int i = 0; i < k1; ++i)
        g.rows.push_back(EWord::from_packed(wordbits::paint(c_mask(i), Elem::C), n));
    return g;
}

Code span(const EMatrix& g) {
    size_t r = g.rows.size();
    if (r > 24) throw LengthTooLarge("span with more than 2^24 combinations");
    std::vector<EWord> words;
    words.reserve(size_t{1} << r);

    // Gray-code walk: after step j the accumulator holds the combination
    // with coefficient vector j ^ (j >> 1).
    uint32_t acc = 0;
    words.push_back(EWord::zero(g.n));
    for (uint64_t j = 1; j < (uint64_t{1} << r); ++j) {
        acc ^= g.rows[static_cast<size_t>(std::countr_zero(j))].packed();
        words.push_back(EWord::from_packed(acc, g.n));
    }
    return Code::from_words_unchecked(g.n, std::move(words));
}

Code build_code(const GeneratorSpec& spec) {
    EMatrix g = build_generator(spec);
    Code code = span(g);
    // Identity blocks guarantee Z2-independent rows.
    assert(code.size() == (uint64_t{1} << g.rows.size()));
    code.spec = spec;
    code.generators = g.rows;
    return code;
}

}  // namespace nur4
