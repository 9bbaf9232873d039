#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nur4/classify.hpp"
#include "nur4/metrics.hpp"

namespace nur4 {

// Everything the dataset publishes about one enumerated code.
struct CodeRecord {
    uint64_t candidate_index = 0;
    int n = 0;
    int k0 = 0;
    int k1 = 0;
    std::string t_bits;
    std::string u_bits;
    std::string v_bits;
    std::vector<std::string> generator_rows;
    int d_min = 0;
    WeightEnumerator we;
    CompleteWeightEnumerator cwe;
    int res_dim = 0;
    int tor_dim = 0;
    uint64_t left_dual_size = 0;
    uint64_t right_dual_size = 0;
    uint64_t intersection_size = 0;
    bool left_nice = false;
    bool right_nice = false;
    bool both_nice = false;
    bool intersection_nice = false;
    bool self_orthogonal = false;
    bool qsd = false;
    bool type_iv = false;
    std::optional<bool> optimal;
};

// Builds the full record for one candidate. `type_max_dmin` marks the
// optimal flag; pass nullopt when the type maximum is not known.
CodeRecord make_code_record(const GeneratorSpec& spec,
                            std::optional<int> type_max_dmin);

// --- summary serialization -------------------------------------------------

// {"n":..., "records":[...], "total_enumerated":..., "nice_totals":{...}}
// pretty-printed with two-space indent; byte-stable across runs and jobs.
std::string summary_json(const LengthReport& report);

// One row per TypeRecord; nice cells empty when niceness was not computed.
std::string summary_csv(const LengthReport& report);

// --- per-code records serialization -----------------------------------------

// Fixed column order of the records CSV.
std::string records_csv_header();

std::string code_record_csv_row(const CodeRecord& record);

// Line-delimited JSON, one object per record line.
std::string code_record_json_line(const CodeRecord& record);

// Streams every code of every type in the report, in candidate_index order,
// as CSV or LDJSON records. Used by the full emit.
enum class RecordFormat { Json, Csv };
void write_records(std::ostream& os, const LengthReport& report,
                   RecordFormat format);

// Human-readable single-code report for the inspect command. Prints the
// codeword list always and both dual sets when n <= kInspectDualMaxLen.
inline constexpr int kInspectDualMaxLen = 8;
std::string inspect_text(const GeneratorSpec& spec);

// Plain-text rendition of the two Cayley tables, paper row/column order.
std::string ring_tables_text();

// Classification summary in the layout of the published tables.
std::string report_table_text(const LengthReport& report, NicePolicy policy);

}  // namespace nur4
