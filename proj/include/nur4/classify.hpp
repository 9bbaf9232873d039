#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nur4/duality.hpp"
#include "nur4/genmat.hpp"

namespace nur4 {

// Lengths the classification sweep accepts without the force flag. Matches
// the published tables; larger lengths grow out of desk scale quickly.
inline constexpr int kClassifyMaxLen = 7;
// Niceness is computed per code up to this length by default.
inline constexpr int kNiceMaxLen = 6;

struct ClassifyOptions {
    bool with_nice = false;
    int jobs = 1;
    uint64_t optimal_index_cap = 1'000'000;
    bool force = false;       // lift the n <= kClassifyMaxLen guard
    bool force_nice = false;  // lift the n <= kNiceMaxLen niceness guard
};

// Classification result for one type {k0,k1}: the largest minimum distance
// over all enumerated codes, how many attain it, and per-policy nice
// counts (over all codes and over the optimal ones).
struct TypeRecord {
    int n = 0;
    int k0 = 0;
    int k1 = 0;
    uint64_t total_codes = 0;
    int max_dmin = 0;
    uint64_t optimal_count = 0;
    bool with_nice = false;
    std::array<uint64_t, 4> nice_counts{};          // indexed by NicePolicy
    std::array<uint64_t, 4> nice_optimal_counts{};  // among optimal codes
    std::vector<uint64_t> optimal_indices;          // ascending, capped
    bool optimal_indices_truncated = false;

    // Rational dimension k0 + k1/2.
    double k() const { return k0 + 0.5 * k1; }
    uint64_t nice_count(NicePolicy p) const {
        return nice_counts[static_cast<size_t>(p)];
    }
    uint64_t nice_optimal_count(NicePolicy p) const {
        return nice_optimal_counts[static_cast<size_t>(p)];
    }
};

struct LengthReport {
    int n = 0;
    std::vector<TypeRecord> records;  // k0 descending, k1 ascending
    uint64_t total_enumerated = 0;
    bool with_nice = false;
    std::array<uint64_t, 4> nice_totals{};
    std::array<uint64_t, 4> nice_optimal_totals{};

    uint64_t nice_total(NicePolicy p) const {
        return nice_totals[static_cast<size_t>(p)];
    }
};

struct AggregateEntry {
    uint64_t total_enumerated = 0;
    std::optional<uint64_t> nice_total;
};

// All types {k0,k1} with k0+k1 < n except {0,0}, in the presentation
// order: k0 descending, k1 ascending within a k0.
std::vector<std::pair<int, int>> valid_types(int n);

// Enumerates every code of the type and classifies it. Deterministic for
// any jobs count: work is sharded by candidate_index ranges and the shard
// partials merge associatively in index order.
TypeRecord classify_type(int n, int k0, int k1,
                         const ClassifyOptions& options = {});

// classify_type over all valid types of the length, plus totals.
LengthReport classify_length(int n, const ClassifyOptions& options = {});

// total_enumerated and the requested policy's nice total per length.
// nice_total is absent when niceness was not computed for that length.
std::map<int, AggregateEntry> aggregate_totals(
    int n_min, int n_max, NicePolicy policy,
    const ClassifyOptions& options = {});

}  // namespace nur4
