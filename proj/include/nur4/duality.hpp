#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nur4/genmat.hpp"

namespace nur4 {

// Largest n for which the 4^n word-space scans (dual sets, self-duality)
// are allowed to run.
inline constexpr int kDualScanMaxLen = 12;

// Which dual(s) |C| . |dual| = 4^n must hold for to call a code nice.
// "both" is the headline definition; all four are always computed.
enum class NicePolicy { Left = 0, Right = 1, Both = 2, Intersection = 3 };

inline constexpr std::array<NicePolicy, 4> kNicePolicies = {
    NicePolicy::Left, NicePolicy::Right, NicePolicy::Both,
    NicePolicy::Intersection};

const char* nice_policy_name(NicePolicy p);
NicePolicy nice_policy_from_name(const std::string& name);  // ParseError

struct DualPair {
    Code left;
    Code right;
    Code intersection;
};

struct NiceReport {
    uint64_t code_size = 0;
    uint64_t left_size = 0;
    uint64_t right_size = 0;
    uint64_t intersection_size = 0;
    bool left_nice = false;
    bool right_nice = false;
    bool both_nice = false;
    bool intersection_nice = false;

    bool nice(NicePolicy p) const {
        switch (p) {
            case NicePolicy::Left: return left_nice;
            case NicePolicy::Right: return right_nice;
            case NicePolicy::Both: return both_nice;
            case NicePolicy::Intersection: return intersection_nice;
        }
        return false;
    }
};

// Base-2 logs of the exact dual sizes, derived from the F2 structure of the
// inner product: <v,u> depends on u only through tau(u) and on v's two tag
// bits linearly. rho = dim span(tau(C)); d = dim (span of the tau parts +
// span of the gamma parts of C).
//
//   log2 |C_L|        = 2(n - rho)
//   log2 |C_R|        = 2n - d
//   log2 |C_L ^ C_R|  = 2n - d - rho
//
// The scan-built dual sets are the oracle for these in the tests.
struct DualSizeExponents {
    int left = 0;
    int right = 0;
    int intersection = 0;
};

DualSizeExponents dual_size_exponents(int n, int rho, int d);

// The two structural ranks of a generating set given as packed words.
// Returns {rho, d}.
std::pair<int, int> dual_ranks(int n, const std::vector<EWord>& gens);

// Exact member sets by scanning E^n and testing the defining condition
// against a generating set of the code (sound by biadditivity of the inner
// product). Throws LengthTooLarge when n > kDualScanMaxLen.
Code left_dual(const Code& code);
Code right_dual(const Code& code);
DualPair dual_pair(const Code& code);

// All four niceness flags from exact dual sizes (rank route, no scan).
// Same length guard as the scans, per the operation contract.
NiceReport nice_report(const Code& code);

// <u,v> = 0 for every ordered pair of codewords; checked on the generating
// set, which is equivalent by biadditivity.
bool is_self_orthogonal(const Code& code);

// Self-orthogonal with exactly 2^n codewords.
bool is_qsd(const Code& code);

// QSD with every codeword of even Hamming weight.
bool is_type_iv(const Code& code);

// C equals both its left and its right dual as sets.
bool is_self_dual(const Code& code);

}  // namespace nur4
