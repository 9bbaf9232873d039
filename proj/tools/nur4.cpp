// nur4 -- enumerate, classify and export linear codes over the non-unital
// ring E of order 4.
//
//   nur4 ring tables
//   nur4 inspect n=3 k0=1 k1=1 T=1 U=0 V=1
//   nur4 classify --n 6 --with-nice --emit full --format csv --out runs/n6
//   nur4 tables --max-n 6 --diff

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nur4/dataset.hpp"
#include "nur4/fixtures.hpp"

#ifndef NUR4_DATA_DIR
#define NUR4_DATA_DIR "data"
#endif

namespace {

using namespace nur4;

constexpr int kExitBadArgs = 2;
constexpr int kExitIoError = 3;

int jobs_from_env() {
    const char* env = std::getenv("NUR4_JOBS");
    if (!env || !*env) return 1;
    int jobs = std::atoi(env);
    return jobs >= 1 ? jobs : 1;
}

struct ClassifyArgs {
    int n = 0;
    int k0 = -1;
    int k1 = -1;
    bool with_nice = false;
    std::string policy = "both";
    std::string emit = "summary";
    std::string format = "json";
    std::string out_dir;
    int jobs = 0;  // 0 = take NUR4_JOBS / default
    bool force = false;
    bool force_nice = false;
    uint64_t index_cap = 1'000'000;
};

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << body;
    if (!out) throw Error("write failed for " + path.string());
}

int run_classify(const ClassifyArgs& args) {
    ClassifyOptions opts;
    opts.with_nice = args.with_nice;
    opts.jobs = args.jobs > 0 ? args.jobs : jobs_from_env();
    opts.force = args.force;
    opts.force_nice = args.force_nice;
    opts.optimal_index_cap = args.index_cap;
    NicePolicy policy = nice_policy_from_name(args.policy);

    if ((args.k0 >= 0) != (args.k1 >= 0)) {
        std::cerr << "classify: --k0 and --k1 must be given together\n";
        return kExitBadArgs;
    }
    if (args.with_nice && args.n > kNiceMaxLen && args.force_nice)
        std::cerr << "warning: computing niceness for n=" << args.n
                  << " (beyond the published range; this may take a while)\n";

    LengthReport report;
    if (args.k0 >= 0) {
        TypeRecord rec = classify_type(args.n, args.k0, args.k1, opts);
        report.n = args.n;
        report.with_nice = rec.with_nice;
        report.total_enumerated = rec.total_codes;
        report.nice_totals = rec.nice_counts;
        report.nice_optimal_totals = rec.nice_optimal_counts;
        report.records.push_back(std::move(rec));
    } else {
        report = classify_length(args.n, opts);
    }

    bool csv = args.format == "csv";
    std::string summary = csv ? summary_csv(report) : summary_json(report);

    if (args.out_dir.empty()) {
        if (args.emit == "full") {
            std::cerr << "classify: --emit full requires --out DIR\n";
            return kExitBadArgs;
        }
        std::cout << summary;
        return 0;
    }

    try {
        std::filesystem::path dir(args.out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / (csv ? "summary.csv" : "summary.json"), summary);
        if (args.emit == "full") {
            std::ofstream records(dir / (csv ? "records.csv" : "records.jsonl"),
                                  std::ios::binary);
            if (!records) throw Error("cannot open records file");
            write_records(records, report, csv ? RecordFormat::Csv
                                               : RecordFormat::Json);
            if (!records) throw Error("records write failed");
        }
    } catch (const std::exception& e) {
        std::cerr << "classify: " << e.what() << '\n';
        return kExitIoError;
    }
    std::cout << report_table_text(report, policy);
    return 0;
}

int run_tables(int max_n, bool diff, const std::string& policy_name,
               const std::string& data_dir, int jobs) {
    NicePolicy policy = nice_policy_from_name(policy_name);
    ClassifyOptions opts;
    opts.jobs = jobs > 0 ? jobs : jobs_from_env();

    std::vector<LengthReport> reports;
    for (int n = 2; n <= max_n; ++n) {
        opts.with_nice = n <= kNiceMaxLen;
        reports.push_back(classify_length(n, opts));
    }
    for (const LengthReport& rep : reports)
        std::cout << report_table_text(rep, policy) << '\n';

    if (!diff) return 0;

    std::vector<FixtureRow> fixture =
        load_fixture(data_dir + "/table1.csv");
    if (max_n >= 7) {
        std::vector<FixtureRow> t2 = load_fixture(data_dir + "/table2.csv");
        fixture.insert(fixture.end(), t2.begin(), t2.end());
    }
    DiffStats stats;
    std::cout << diff_report(reports, fixture, &stats);
    return stats.tables_match() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes over the non-unital ring E of order 4"};
    app.require_subcommand(1);

    // ring tables
    CLI::App* ring = app.add_subcommand("ring", "ring-level utilities");
    ring->require_subcommand(1);
    ring->add_subcommand("tables", "print the addition and multiplication tables");

    // inspect
    CLI::App* inspect = app.add_subcommand(
        "inspect", "full report for one generator spec, e.g. "
                   "'inspect n=3 k0=1 k1=1 T=1 U=0 V=1'");
    std::vector<std::string> spec_tokens;
    inspect->add_option("spec", spec_tokens, "key=value tokens")->required();

    // classify
    ClassifyArgs cargs;
    CLI::App* classify = app.add_subcommand("classify",
                                            "classify codes of one length or type");
    classify->add_option("--n", cargs.n, "code length")->required();
    classify->add_option("--k0", cargs.k0, "residue dimension (with --k1)");
    classify->add_option("--k1", cargs.k1, "torsion excess (with --k0)");
    classify->add_flag("--with-nice", cargs.with_nice, "compute nice counts");
    classify->add_option("--policy", cargs.policy,
                         "left|right|both|intersection (default both)");
    classify->add_option("--emit", cargs.emit, "summary|full")
        ->check(CLI::IsMember({"summary", "full"}));
    classify->add_option("--format", cargs.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    classify->add_option("--out", cargs.out_dir, "output directory");
    classify->add_option("--jobs", cargs.jobs, "worker count (default $NUR4_JOBS or 1)");
    classify->add_flag("--force", cargs.force, "allow n beyond 7");
    classify->add_flag("--force-nice", cargs.force_nice, "allow niceness beyond n=6");
    classify->add_option("--index-cap", cargs.index_cap,
                         "max optimal candidate indices kept per type");

    // tables
    int max_n = 6;
    bool diff = false;
    std::string table_policy = "both";
    std::string data_dir = NUR4_DATA_DIR;
    int table_jobs = 0;
    CLI::App* tables = app.add_subcommand("tables",
                                          "print the classification tables");
    tables->add_option("--max-n", max_n, "largest length (2..7)")->required();
    tables->add_flag("--diff", diff, "compare against the bundled published values");
    tables->add_option("--policy", table_policy, "niceness policy for the N column");
    tables->add_option("--fixtures", data_dir, "directory with table1.csv/table2.csv");
    tables->add_option("--jobs", table_jobs, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArgs;
    }

    try {
        if (ring->parsed()) {
            std::cout << ring_tables_text();
            return 0;
        }
        if (inspect->parsed()) {
            std::string text;
            for (const std::string& tok : spec_tokens) {
                if (!text.empty()) text += ' ';
                text += tok;
            }
            std::cout << inspect_text(GeneratorSpec::parse(text));
            return 0;
        }
        if (classify->parsed()) return run_classify(cargs);
        if (tables->parsed()) {
            if (max_n < 2 || max_n > kClassifyMaxLen) {
                std::cerr << "tables: --max-n must be in 2.."
                          << kClassifyMaxLen << '\n';
                return kExitBadArgs;
            }
            return run_tables(max_n, diff, table_policy, data_dir, table_jobs);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const InvalidType& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const LengthTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
