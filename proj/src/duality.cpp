#include "nur4/duality.hpp"

#include <algorithm>

#include "nur4/metrics.hpp"

namespace nur4 {

const char* nice_policy_name(NicePolicy p) {
    switch (p) {
        case NicePolicy::Left: return "left";
        case NicePolicy::Right: return "right";
        case NicePolicy::Both: return "both";
        case NicePolicy::Intersection: return "intersection";
    }
    return "?";
}

NicePolicy nice_policy_from_name(const std::string& name) {
    for (NicePolicy p : kNicePolicies)
        if (name == nice_policy_name(p)) return p;
    throw ParseError("unknown nice policy '" + name +
                     "' (want left|right|both|intersection)");
}

namespace {

void check_scan_guard(int n) {
    if (n > kDualScanMaxLen)
        throw LengthTooLarge("dual computation limited to n <= " +
                             std::to_string(kDualScanMaxLen));
}

// Candidate word with tau pattern s and gamma pattern g (one bit per
// coordinate each): lane tag bits are (gamma, tau XOR gamma).
uint32_t word_from_patterns(uint32_t s, uint32_t g) {
    return (wordbits::spread(g) << 1) | wordbits::spread(s ^ g);
}

template <typename Keep>
Code scan_dual(const Code& code, Keep&& keep) {
    check_scan_guard(code.n);
    uint32_t patterns = uint32_t{1} << code.n;
    std::vector<EWord> out;
    // tau-fiber order: binary pattern outer, {0,c}/{a,b} lift inner.
    for (uint32_t s = 0; s < patterns; ++s)
        for (uint32_t g = 0; g < patterns; ++g) {
            uint32_t v = word_from_patterns(s, g);
            if (keep(v)) out.push_back(EWord::from_packed(v, code.n));
        }
    return Code::from_words_unchecked(code.n, std::move(out));
}

}  // namespace

Code left_dual(const Code& code) {
    const std::vector<EWord>& gens = code.generating_set();
    return scan_dual(code, [&](uint32_t v) {
        for (const EWord& g : gens)
            if (wordbits::inner(v, g.packed()) != Elem::Zero) return false;
        return true;
    });
}

Code right_dual(const Code& code) {
    const std::vector<EWord>& gens = code.generating_set();
    return scan_dual(code, [&](uint32_t v) {
        for (const EWord& g : gens)
            if (wordbits::inner(g.packed(), v) != Elem::Zero) return false;
        return true;
    });
}

DualPair dual_pair(const Code& code) {
    DualPair dp{left_dual(code), right_dual(code), {}};
    std::vector<EWord> inter;
    std::set_intersection(dp.left.words.begin(), dp.left.words.end(),
                          dp.right.words.begin(), dp.right.words.end(),
                          std::back_inserter(inter));
    dp.intersection = Code::from_words_unchecked(code.n, std::move(inter));
    return dp;
}

DualSizeExponents dual_size_exponents(int n, int rho, int d) {
    return DualSizeExponents{2 * (n - rho), 2 * n - d, 2 * n - d - rho};
}

std::pair<int, int> dual_ranks(int n, const std::vector<EWord>& gens) {
    (void)n;
    std::vector<uint32_t> tau_rows;
    std::vector<uint32_t> both_rows;
    tau_rows.reserve(gens.size());
    both_rows.reserve(2 * gens.size());
    for (const EWord& g : gens) {
        uint32_t w = g.packed();
        uint32_t t = wordbits::compress(wordbits::tau_bits(w));
        uint32_t gm = wordbits::compress(wordbits::gamma_bits(w));
        tau_rows.push_back(t);
        both_rows.push_back(t);
        both_rows.push_back(gm);
    }
    return {rank_f2(std::move(tau_rows)), rank_f2(std::move(both_rows))};
}

NiceReport nice_report(const Code& code) {
    check_scan_guard(code.n);
    auto [rho, d] = dual_ranks(code.n, code.generating_set());
    DualSizeExponents e = dual_size_exponents(code.n, rho, d);

    NiceReport r;
    r.code_size = code.size();
    r.left_size = uint64_t{1} << e.left;
    r.right_size = uint64_t{1} << e.right;
    r.intersection_size = uint64_t{1} << e.intersection;
    uint64_t full = uint64_t{1} << (2 * code.n);
    r.left_nice = r.code_size * r.left_size == full;
    r.right_nice = r.code_size * r.right_size == full;
    r.both_nice = r.left_nice && r.right_nice;
    r.intersection_nice = r.code_size * r.intersection_size == full;
    return r;
}

bool is_self_orthogonal(const Code& code) {
    const std::vector<EWord>& gens = code.generating_set();
    for (const EWord& u : gens)
        for (const EWord& v : gens)
            if (wordbits::inner(u.packed(), v.packed()) != Elem::Zero)
                return false;
    return true;
}

bool is_qsd(const Code& code) {
    return code.size() == (uint64_t{1} << code.n) && is_self_orthogonal(code);
}

bool is_type_iv(const Code& code) {
    if (!is_qsd(code)) return false;
    for (const EWord& w : code.words)
        if (wordbits::weight(w.packed()) & 1) return false;
    return true;
}

bool is_self_dual(const Code& code) {
    return code == left_dual(code) && code == right_dual(code);
}

}  // namespace nur4
