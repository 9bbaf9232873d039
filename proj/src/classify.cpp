#include "nur4/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <thread>

#include "nur4/metrics.hpp"

namespace nur4 {

namespace {

// Reverses the low `width` bits of x (row bits of a BitMatrix index are
// stored most-significant-first, masks want bit j = column j).
uint32_t rev_bits(uint32_t x, int width) {
    uint32_t out = 0;
    for (int i = 0; i < width; ++i) out |= ((x >> i) & 1u) << (width - 1 - i);
    return out;
}

// Per-type candidate kernel: decodes a candidate_index straight into packed
// generator rows and walks the Z2-span without materializing the code.
struct TypeKernel {
    int n, k0, k1, nr;
    int bits_t, bits_u, bits_v;
    uint64_t total;

    explicit TypeKernel(int n_, int k0_, int k1_)
        : n(n_), k0(k0_), k1(k1_), nr(n_ - k0_ - k1_) {
        bits_t = k0 * k1;
        bits_u = k0 * nr;
        bits_v = k1 * nr;
        total = code_count(n, k0, k1);
    }

    // Position masks of the binary rows (I|T|U) and (0|I|V).
    void masks_for(uint64_t idx, uint32_t* ab_masks, uint32_t* c_masks) const {
        uint64_t v_idx = idx & ((uint64_t{1} << bits_v) - 1);
        uint64_t u_idx = (idx >> bits_v) & ((uint64_t{1} << bits_u) - 1);
        uint64_t t_idx = idx >> (bits_v + bits_u);
        for (int i = 0; i < k0; ++i) {
            uint32_t t_row = rev_bits(
                static_cast<uint32_t>(t_idx >> (bits_t - (i + 1) * k1)) &
                    ((uint32_t{1} << k1) - 1),
                k1);
            uint32_t u_row = rev_bits(
                static_cast<uint32_t>(u_idx >> (bits_u - (i + 1) * nr)) &
                    ((uint32_t{1} << nr) - 1),
                nr);
            ab_masks[i] = (uint32_t{1} << i) | (t_row << k0) |
                          (u_row << (k0 + k1));
        }
        for (int i = 0; i < k1; ++i) {
            uint32_t v_row = rev_bits(
                static_cast<uint32_t>(v_idx >> (bits_v - (i + 1) * nr)) &
                    ((uint32_t{1} << nr) - 1),
                nr);
            c_masks[i] = (uint32_t{1} << (k0 + i)) | (v_row << (k0 + k1));
        }
    }

    // Minimum nonzero weight of the span of the 2k0+k1 generator rows.
    int dmin_for(const uint32_t* ab_masks, const uint32_t* c_masks) const {
        uint32_t rows[32];
        int r = 0;
        for (int i = 0; i < k0; ++i)
            rows[r++] = wordbits::paint(ab_masks[i], Elem::A);
        for (int i = 0; i < k0; ++i)
            rows[r++] = wordbits::paint(ab_masks[i], Elem::B);
        for (int i = 0; i < k1; ++i)
            rows[r++] = wordbits::paint(c_masks[i], Elem::C);

        int dmin = n;
        uint32_t acc = 0;
        for (uint64_t j = 1; j < (uint64_t{1} << r); ++j) {
            acc ^= rows[std::countr_zero(j)];
            int w = wordbits::weight(acc);
            if (w < dmin) {
                dmin = w;
                if (w == 1) return 1;
            }
        }
        return dmin;
    }
};

struct NiceFlagSet {
    bool flag[4] = {false, false, false, false};
};

NiceFlagSet nice_flags(int n, int k0, int k1, const uint32_t* ab_masks,
                       const uint32_t* c_masks) {
    std::vector<uint32_t> tau_rows(ab_masks, ab_masks + k0);
    std::vector<uint32_t> both_rows;
    both_rows.reserve(static_cast<size_t>(k0 + k1));
    both_rows.insert(both_rows.end(), ab_masks, ab_masks + k0);
    both_rows.insert(both_rows.end(), c_masks, c_masks + k1);
    int rho = rank_f2(std::move(tau_rows));
    int d = rank_f2(std::move(both_rows));
    DualSizeExponents e = dual_size_exponents(n, rho, d);

    int log_size = 2 * k0 + k1;
    NiceFlagSet f;
    bool left = log_size + e.left == 2 * n;
    bool right = log_size + e.right == 2 * n;
    f.flag[static_cast<size_t>(NicePolicy::Left)] = left;
    f.flag[static_cast<size_t>(NicePolicy::Right)] = right;
    f.flag[static_cast<size_t>(NicePolicy::Both)] = left && right;
    f.flag[static_cast<size_t>(NicePolicy::Intersection)] =
        log_size + e.intersection == 2 * n;
    return f;
}

// Shard-local classification state. Merging keeps the larger max_dmin and
// sums counts only at equal max, which is associative and commutative, so
// the final record is independent of shard boundaries and scheduling.
struct Partial {
    int max_dmin = 0;
    uint64_t count_at_max = 0;
    std::array<uint64_t, 4> nice_counts{};
    std::array<uint64_t, 4> nice_at_max{};
    std::vector<uint64_t> indices;
    bool truncated = false;

    void observe(uint64_t idx, int dmin, const NiceFlagSet* nf, uint64_t cap) {
        if (nf)
            for (size_t p = 0; p < 4; ++p)
                nice_counts[p] += nf->flag[p] ? 1 : 0;
        if (dmin > max_dmin) {
            max_dmin = dmin;
            count_at_max = 0;
            nice_at_max = {};
            indices.clear();
            truncated = false;
        }
        if (dmin == max_dmin) {
            ++count_at_max;
            if (nf)
                for (size_t p = 0; p < 4; ++p)
                    nice_at_max[p] += nf->flag[p] ? 1 : 0;
            if (indices.size() < cap)
                indices.push_back(idx);
            else
                truncated = true;
        }
    }

    void merge(const Partial& other, uint64_t cap) {
        for (size_t p = 0; p < 4; ++p) nice_counts[p] += other.nice_counts[p];
        if (other.max_dmin > max_dmin) {
            max_dmin = other.max_dmin;
            count_at_max = other.count_at_max;
            nice_at_max = other.nice_at_max;
            indices = other.indices;
            truncated = other.truncated;
        } else if (other.max_dmin == max_dmin) {
            count_at_max += other.count_at_max;
            for (size_t p = 0; p < 4; ++p) nice_at_max[p] += other.nice_at_max[p];
            for (uint64_t idx : other.indices) {
                if (indices.size() < cap) {
                    indices.push_back(idx);
                } else {
                    truncated = true;
                    break;
                }
            }
            truncated = truncated || other.truncated;
        }
    }
};

Partial classify_range(const TypeKernel& kernel, uint64_t lo, uint64_t hi,
                       bool with_nice, uint64_t cap) {
    Partial partial;
    uint32_t ab_masks[kMaxLen];
    uint32_t c_masks[kMaxLen];
    for (uint64_t idx = lo; idx < hi; ++idx) {
        kernel.masks_for(idx, ab_masks, c_masks);
        int dmin = kernel.dmin_for(ab_masks, c_masks);
        NiceFlagSet nf;
        if (with_nice)
            nf = nice_flags(kernel.n, kernel.k0, kernel.k1, ab_masks, c_masks);
        partial.observe(idx, dmin, with_nice ? &nf : nullptr, cap);
    }
    return partial;
}

int resolve_jobs(const ClassifyOptions& options) {
    if (options.jobs < 1) throw Error("jobs must be >= 1");
    return options.jobs;
}

}  // namespace

std::vector<std::pair<int, int>> valid_types(int n) {
    std::vector<std::pair<int, int>> types;
    for (int k0 = n - 1; k0 >= 0; --k0)
        for (int k1 = 0; k1 + k0 < n; ++k1)
            if (k0 != 0 || k1 != 0) types.emplace_back(k0, k1);
    return types;
}

TypeRecord classify_type(int n, int k0, int k1,
                         const ClassifyOptions& options) {
    validate_type(n, k0, k1);
    if (k0 == 0 && k1 == 0)
        throw InvalidType("type {0,0} is the zero code and is not classified");
    if (n > kClassifyMaxLen && !options.force)
        throw LengthTooLarge("classification beyond n=" +
                             std::to_string(kClassifyMaxLen) +
                             " requires the force option");
    if (options.with_nice && n > kNiceMaxLen && !options.force_nice)
        throw LengthTooLarge("niceness beyond n=" + std::to_string(kNiceMaxLen) +
                             " requires the force_nice option");

    TypeKernel kernel(n, k0, k1);
    int jobs = resolve_jobs(options);
    uint64_t cap = options.optimal_index_cap;

    Partial merged;
    if (jobs == 1 || kernel.total < 2048) {
        merged = classify_range(kernel, 0, kernel.total, options.with_nice, cap);
    } else {
        // Chunked work queue; partials land in shard slots and merge in
        // shard order afterwards, so scheduling cannot affect the result.
        uint64_t shard_size =
            std::max<uint64_t>(1024, kernel.total / (static_cast<uint64_t>(jobs) * 8));
        uint64_t shard_count = (kernel.total + shard_size - 1) / shard_size;
        std::vector<Partial> partials(shard_count);
        std::atomic<uint64_t> next{0};
        auto worker = [&] {
            for (;;) {
                uint64_t s = next.fetch_add(1);
                if (s >= shard_count) return;
                uint64_t lo = s * shard_size;
                uint64_t hi = std::min(kernel.total, lo + shard_size);
                partials[s] =
                    classify_range(kernel, lo, hi, options.with_nice, cap);
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
        for (const Partial& p : partials) merged.merge(p, cap);
    }

    TypeRecord record;
    record.n = n;
    record.k0 = k0;
    record.k1 = k1;
    record.total_codes = kernel.total;
    record.max_dmin = merged.max_dmin;
    record.optimal_count = merged.count_at_max;
    record.with_nice = options.with_nice;
    record.nice_counts = merged.nice_counts;
    record.nice_optimal_counts = merged.nice_at_max;
    record.optimal_indices = std::move(merged.indices);
    record.optimal_indices_truncated = merged.truncated;
    assert(record.optimal_count >= 1);
    return record;
}

LengthReport classify_length(int n, const ClassifyOptions& options) {
    if (n < 1 || n > kMaxLen)
        throw InvalidType("length n must be in 1.." + std::to_string(kMaxLen));
    if (n > kClassifyMaxLen && !options.force)
        throw LengthTooLarge("classification beyond n=" +
                             std::to_string(kClassifyMaxLen) +
                             " requires the force option");

    LengthReport report;
    report.n = n;
    report.with_nice = options.with_nice;
    for (auto [k0, k1] : valid_types(n)) {
        TypeRecord record = classify_type(n, k0, k1, options);
        report.total_enumerated += record.total_codes;
        for (size_t p = 0; p < 4; ++p) {
            report.nice_totals[p] += record.nice_counts[p];
            report.nice_optimal_totals[p] += record.nice_optimal_counts[p];
        }
        report.records.push_back(std::move(record));
    }
    return report;
}

std::map<int, AggregateEntry> aggregate_totals(int n_min, int n_max,
                                               NicePolicy policy,
                                               const ClassifyOptions& options) {
    std::map<int, AggregateEntry> out;
    for (int n = n_min; n <= n_max; ++n) {
        ClassifyOptions opts = options;
        if (opts.with_nice && n > kNiceMaxLen && !opts.force_nice)
            opts.with_nice = false;  // niceness not published beyond n=6
        LengthReport report = classify_length(n, opts);
        AggregateEntry entry;
        entry.total_enumerated = report.total_enumerated;
        if (opts.with_nice) entry.nice_total = report.nice_total(policy);
        out[n] = entry;
    }
    return out;
}

}  // namespace nur4
