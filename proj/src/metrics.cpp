#include "nur4/metrics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace nur4 {

std::string WeightEnumerator::str() const {
    std::string out;
    for (int i = 0; i <= n; ++i) {
        uint64_t a = coeff[static_cast<size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += 'z';
        if (i != 1) out += '^' + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out;
}

std::string CompleteWeightEnumerator::str() const {
    static constexpr const char* kVars[4] = {"X0", "Xa", "Xb", "Xc"};
    std::string out;
    for (const CweTerm& t : terms) {
        if (!out.empty()) out += '+';
        if (t.count != 1) out += std::to_string(t.count) + '*';
        std::array<int, 4> deg = {t.n0, t.na, t.nb, t.nc};
        bool any = false;
        for (int v = 0; v < 4; ++v) {
            if (deg[static_cast<size_t>(v)] == 0) continue;
            if (any) out += '*';
            out += kVars[v];
            if (deg[static_cast<size_t>(v)] > 1)
                out += '^' + std::to_string(deg[static_cast<size_t>(v)]);
            any = true;
        }
        if (!any) out += '1';  // degree-0 monomial (n = 0 only)
    }
    if (out.empty()) out = "0";
    return out;
}

WeightEnumerator CompleteWeightEnumerator::specialize() const {
    WeightEnumerator we;
    we.n = n;
    we.coeff.assign(static_cast<size_t>(n) + 1, 0);
    for (const CweTerm& t : terms)
        we.coeff[static_cast<size_t>(t.na + t.nb + t.nc)] += t.count;
    return we;
}

bool BinaryCode::contains(uint32_t w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

int min_distance(const Code& code) {
    if (code.size() < 2)
        throw TooFewCodewords("minimum distance needs at least two codewords");
    int best = code.n;
    for (const EWord& w : code.words) {
        uint32_t bits = w.packed();
        if (bits == 0) continue;
        best = std::min(best, wordbits::weight(bits));
        if (best == 1) break;
    }
    return best;
}

WeightEnumerator weight_enumerator(const Code& code) {
    WeightEnumerator we;
    we.n = code.n;
    we.coeff.assign(static_cast<size_t>(code.n) + 1, 0);
    for (const EWord& w : code.words)
        ++we.coeff[static_cast<size_t>(wordbits::weight(w.packed()))];
    return we;
}

CompleteWeightEnumerator complete_weight_enumerator(const Code& code) {
    // Greater-than comparator gives the descending term order directly.
    std::map<std::array<uint8_t, 4>, uint64_t, std::greater<>> counts;
    for (const EWord& w : code.words) {
        std::array<uint8_t, 4> profile = {0, 0, 0, 0};
        for (int i = 0; i < code.n; ++i)
            ++profile[static_cast<size_t>(w.at(i))];
        ++counts[profile];
    }
    CompleteWeightEnumerator cwe;
    cwe.n = code.n;
    cwe.terms.reserve(counts.size());
    for (const auto& [p, count] : counts)
        cwe.terms.push_back(CweTerm{p[0], p[1], p[2], p[3], count});
    return cwe;
}

BinaryCode residue_code(const Code& code) {
    std::vector<uint32_t> out;
    out.reserve(code.words.size());
    for (const EWord& w : code.words)
        out.push_back(wordbits::compress(wordbits::tau_bits(w.packed())));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return BinaryCode{code.n, std::move(out)};
}

BinaryCode torsion_code(const Code& code) {
    // v is in tor(C) iff the word with tag c exactly on supp(v) is a
    // codeword; those are precisely the codewords with all lanes in {0,c},
    // i.e. tau-image zero, and v is then their gamma pattern.
    std::vector<uint32_t> out;
    for (const EWord& w : code.words) {
        uint32_t bits = w.packed();
        if (wordbits::tau_bits(bits) != 0) continue;
        out.push_back(wordbits::compress(wordbits::gamma_bits(bits)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return BinaryCode{code.n, std::move(out)};
}

int rank_f2(std::vector<uint32_t> rows) {
    int rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t row = rows[i];
        for (int r = 0; r < rank; ++r)
            row = std::min(row, row ^ rows[static_cast<size_t>(r)]);
        if (row != 0) {
            rows[static_cast<size_t>(rank)] = row;
            ++rank;
        }
    }
    return rank;
}

int binary_dimension(const BinaryCode& bc) {
    if (bc.words.empty()) throw NotLinear("empty word set");
    if (!std::has_single_bit(bc.words.size()))
        throw NotLinear("size is not a power of two");
    int dim = std::bit_width(bc.words.size()) - 1;

    int rank = rank_f2(bc.words);
    if (rank != dim)
        throw NotLinear("rank of the word set disagrees with log2 size");

    // Reduced basis must span the set back exactly.
    std::vector<uint32_t> basis;
    for (uint32_t w : bc.words) {
        uint32_t row = w;
        for (uint32_t b : basis) row = std::min(row, row ^ b);
        if (row != 0) basis.push_back(row);
    }
    std::vector<uint32_t> spanned;
    spanned.reserve(size_t{1} << basis.size());
    uint32_t acc = 0;
    spanned.push_back(0);
    for (uint64_t j = 1; j < (uint64_t{1} << basis.size()); ++j) {
        acc ^= basis[static_cast<size_t>(std::countr_zero(j))];
        spanned.push_back(acc);
    }
    std::sort(spanned.begin(), spanned.end());
    spanned.erase(std::unique(spanned.begin(), spanned.end()), spanned.end());
    if (spanned != bc.words) throw NotLinear("word set is not XOR-closed");
    return dim;
}

}  // namespace nur4
