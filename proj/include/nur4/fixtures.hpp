#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nur4/classify.hpp"

namespace nur4 {

// One row of the bundled published-classification data files. Dash cells
// in the source tables become empty optionals.
struct FixtureRow {
    int n = 0;
    int k0 = 0;
    int k1 = 0;
    std::optional<int> max_dmin;
    std::optional<uint64_t> m_count;
    std::optional<bool> nice;      // the Yes/No "nice property" column
    std::optional<uint64_t> n_count;
};

// Loads a fixture CSV (columns n,k0,k1,max_dmin,M[,nice,N]; '-' for dash
// cells; '#' comment lines). Throws Error on I/O failure, ParseError on bad
// content.
std::vector<FixtureRow> load_fixture(const std::string& path);

// Outcome counters of a fixture comparison.
struct DiffStats {
    int rows_compared = 0;
    int dmin_mismatches = 0;
    int m_mismatches = 0;
    // Per policy: rows where the published N equals the computed nice
    // count, and rows where the Yes/No column matches under the two
    // readings (some code of the type is nice / some optimal code is nice).
    std::array<int, 4> n_matches{};
    std::array<int, 4> n_compared{};
    std::array<int, 4> nice_any_matches{};
    std::array<int, 4> nice_optimal_matches{};
    int nice_compared = 0;

    bool tables_match() const { return dmin_mismatches + m_mismatches == 0; }
};

// Compares computed reports against fixture rows. Lists every max_dmin/M
// cell mismatch, then (when the reports carry niceness) a per-policy
// reconciliation of the published Nice/N columns.
std::string diff_report(const std::vector<LengthReport>& reports,
                        const std::vector<FixtureRow>& fixture,
                        DiffStats* stats_out = nullptr);

}  // namespace nur4
