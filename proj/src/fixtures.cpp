#include "nur4/fixtures.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace nur4 {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    fields.push_back(field);
    return fields;
}

std::optional<uint64_t> parse_opt_u64(const std::string& s) {
    if (s == "-" || s.empty()) return std::nullopt;
    try {
        size_t used = 0;
        uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw ParseError("");
        return v;
    } catch (...) {
        throw ParseError("bad fixture number '" + s + "'");
    }
}

std::optional<bool> parse_opt_yesno(const std::string& s) {
    if (s == "-" || s.empty()) return std::nullopt;
    if (s == "Yes" || s == "yes") return true;
    if (s == "No" || s == "no") return false;
    throw ParseError("bad fixture flag '" + s + "'");
}

}  // namespace

std::vector<FixtureRow> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path);

    std::vector<FixtureRow> rows;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            saw_header = true;  // column names line
            continue;
        }
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 5 && f.size() != 7)
            throw ParseError("fixture row needs 5 or 7 fields: " + line);
        FixtureRow row;
        auto geti = [&](const std::string& s) {
            auto v = parse_opt_u64(s);
            if (!v) throw ParseError("fixture key field may not be '-'");
            return static_cast<int>(*v);
        };
        row.n = geti(f[0]);
        row.k0 = geti(f[1]);
        row.k1 = geti(f[2]);
        if (auto v = parse_opt_u64(f[3])) row.max_dmin = static_cast<int>(*v);
        row.m_count = parse_opt_u64(f[4]);
        if (f.size() == 7) {
            row.nice = parse_opt_yesno(f[5]);
            row.n_count = parse_opt_u64(f[6]);
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError("fixture file " + path + " has no rows");
    return rows;
}

std::string diff_report(const std::vector<LengthReport>& reports,
                        const std::vector<FixtureRow>& fixture,
                        DiffStats* stats_out) {
    std::map<std::tuple<int, int, int>, const TypeRecord*> computed;
    bool with_nice = false;
    for (const LengthReport& rep : reports) {
        with_nice = with_nice || rep.with_nice;
        for (const TypeRecord& r : rep.records)
            computed[{r.n, r.k0, r.k1}] = &r;
    }

    DiffStats stats;
    std::ostringstream os;
    std::ostringstream mismatches;
    for (const FixtureRow& row : fixture) {
        if (!row.max_dmin && !row.m_count) continue;  // dash-only row (n=1)
        auto it = computed.find({row.n, row.k0, row.k1});
        if (it == computed.end()) continue;  // outside the computed range
        const TypeRecord& rec = *it->second;
        ++stats.rows_compared;
        if (row.max_dmin && rec.max_dmin != *row.max_dmin) {
            ++stats.dmin_mismatches;
            mismatches << "  n=" << row.n << " {" << row.k0 << "," << row.k1
                       << "} max_dmin: published " << *row.max_dmin
                       << ", computed " << rec.max_dmin << '\n';
        }
        if (row.m_count && rec.optimal_count != *row.m_count) {
            ++stats.m_mismatches;
            mismatches << "  n=" << row.n << " {" << row.k0 << "," << row.k1
                       << "} M: published " << *row.m_count << ", computed "
                       << rec.optimal_count << '\n';
        }
    }
    os << "max_dmin/M cells: " << stats.rows_compared << " rows compared, "
       << stats.dmin_mismatches << " max_dmin mismatches, "
       << stats.m_mismatches << " M mismatches\n";
    if (stats.dmin_mismatches + stats.m_mismatches > 0)
        os << mismatches.str();

    if (with_nice) {
        os << "\nNice/N column reconciliation (published column vs computed "
              "per-policy counts):\n";
        for (NicePolicy p : kNicePolicies) {
            size_t pi = static_cast<size_t>(p);
            std::ostringstream detail;
            int nice_rows = 0;
            for (const FixtureRow& row : fixture) {
                if (!row.nice && !row.n_count) continue;
                auto it = computed.find({row.n, row.k0, row.k1});
                if (it == computed.end() || !it->second->with_nice) continue;
                const TypeRecord& rec = *it->second;
                ++nice_rows;
                uint64_t count = rec.nice_counts[pi];
                uint64_t opt_count = rec.nice_optimal_counts[pi];
                if (row.nice) {
                    bool any = count > 0;
                    bool opt = opt_count > 0;
                    if (any == *row.nice) ++stats.nice_any_matches[pi];
                    if (opt == *row.nice) ++stats.nice_optimal_matches[pi];
                    if (any != *row.nice || opt != *row.nice)
                        detail << "    n=" << row.n << " {" << row.k0 << ","
                               << row.k1 << "} nice: published "
                               << (*row.nice ? "Yes" : "No")
                               << ", computed any=" << (any ? "Yes" : "No")
                               << " optimal=" << (opt ? "Yes" : "No") << '\n';
                }
                if (row.n_count) {
                    ++stats.n_compared[pi];
                    if (count == *row.n_count) {
                        ++stats.n_matches[pi];
                    } else {
                        detail << "    n=" << row.n << " {" << row.k0 << ","
                               << row.k1 << "} N: published " << *row.n_count
                               << ", computed " << count << '\n';
                    }
                }
            }
            stats.nice_compared = nice_rows;
            os << "  policy " << nice_policy_name(p) << ": N matched "
               << stats.n_matches[pi] << "/" << stats.n_compared[pi]
               << ", Yes/No matched (any-code reading) "
               << stats.nice_any_matches[pi] << "/" << nice_rows
               << ", (optimal-code reading) " << stats.nice_optimal_matches[pi]
               << "/" << nice_rows << '\n';
            std::string d = detail.str();
            if (!d.empty()) os << d;
        }
    }

    if (stats_out) *stats_out = stats;
    return os.str();
}

}  // namespace nur4
