#include "nur4/dataset.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace nur4 {

namespace {

using ordered_json = nlohmann::ordered_json;

// Exact decimal for k = k0 + k1/2 ("2" or "2.5").
std::string k_string(int k0, int k1) {
    int twice = 2 * k0 + k1;
    std::string s = std::to_string(twice / 2);
    if (twice % 2) s += ".5";
    return s;
}

ordered_json we_json(const WeightEnumerator& we) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= we.n; ++i) {
        uint64_t a = we.coeff[static_cast<size_t>(i)];
        if (a > 0) arr.push_back(ordered_json::array({i, a}));
    }
    return arr;
}

ordered_json cwe_json(const CompleteWeightEnumerator& cwe) {
    ordered_json arr = ordered_json::array();
    for (const CweTerm& t : cwe.terms) {
        ordered_json term;
        term["n0"] = t.n0;
        term["na"] = t.na;
        term["nb"] = t.nb;
        term["nc"] = t.nc;
        term["count"] = t.count;
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json nice_map_json(const std::array<uint64_t, 4>& counts) {
    ordered_json m;
    for (NicePolicy p : kNicePolicies)
        m[nice_policy_name(p)] = counts[static_cast<size_t>(p)];
    return m;
}

ordered_json type_record_json(const TypeRecord& r) {
    ordered_json j;
    j["n"] = r.n;
    j["k0"] = r.k0;
    j["k1"] = r.k1;
    j["k"] = r.k();
    j["total_codes"] = r.total_codes;
    j["max_dmin"] = r.max_dmin;
    j["optimal_count"] = r.optimal_count;
    if (r.with_nice) {
        j["nice_counts"] = nice_map_json(r.nice_counts);
        j["nice_optimal_counts"] = nice_map_json(r.nice_optimal_counts);
    }
    j["optimal_indices"] = r.optimal_indices;
    j["optimal_indices_truncated"] = r.optimal_indices_truncated;
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

CodeRecord make_code_record(const GeneratorSpec& spec,
                            std::optional<int> type_max_dmin) {
    Code code = build_code(spec);

    CodeRecord rec;
    rec.candidate_index = spec.candidate_index;
    rec.n = spec.n;
    rec.k0 = spec.k0;
    rec.k1 = spec.k1;
    rec.t_bits = spec.T.bit_string();
    rec.u_bits = spec.U.bit_string();
    rec.v_bits = spec.V.bit_string();
    for (const EWord& row : code.generators)
        rec.generator_rows.push_back(row.str());

    rec.d_min = min_distance(code);
    rec.we = weight_enumerator(code);
    rec.cwe = complete_weight_enumerator(code);
    rec.res_dim = binary_dimension(residue_code(code));
    rec.tor_dim = binary_dimension(torsion_code(code));

    NiceReport nice = nice_report(code);
    rec.left_dual_size = nice.left_size;
    rec.right_dual_size = nice.right_size;
    rec.intersection_size = nice.intersection_size;
    rec.left_nice = nice.left_nice;
    rec.right_nice = nice.right_nice;
    rec.both_nice = nice.both_nice;
    rec.intersection_nice = nice.intersection_nice;

    rec.self_orthogonal = is_self_orthogonal(code);
    rec.qsd = is_qsd(code);
    rec.type_iv = is_type_iv(code);

    if (type_max_dmin) rec.optimal = rec.d_min == *type_max_dmin;
    return rec;
}

std::string summary_json(const LengthReport& report) {
    ordered_json j;
    j["n"] = report.n;
    ordered_json records = ordered_json::array();
    for (const TypeRecord& r : report.records)
        records.push_back(type_record_json(r));
    j["records"] = std::move(records);
    j["total_enumerated"] = report.total_enumerated;
    j["nice_totals"] = report.with_nice ? nice_map_json(report.nice_totals)
                                        : ordered_json::object();
    return j.dump(2) + "\n";
}

std::string summary_csv(const LengthReport& report) {
    std::ostringstream os;
    os << "n,k0,k1,k,total_codes,max_dmin,optimal_count"
          ",nice_left,nice_right,nice_both,nice_intersection"
          ",nice_optimal_left,nice_optimal_right,nice_optimal_both"
          ",nice_optimal_intersection\n";
    for (const TypeRecord& r : report.records) {
        os << r.n << ',' << r.k0 << ',' << r.k1 << ',' << k_string(r.k0, r.k1)
           << ',' << r.total_codes << ',' << r.max_dmin << ','
           << r.optimal_count;
        for (const auto& counts : {r.nice_counts, r.nice_optimal_counts})
            for (NicePolicy p : kNicePolicies) {
                os << ',';
                if (r.with_nice) os << counts[static_cast<size_t>(p)];
            }
        os << '\n';
    }
    return os.str();
}

std::string records_csv_header() {
    return "candidate_index,n,k0,k1,T,U,V,d_min,optimal,we,cwe,res_dim,tor_dim,"
           "left_dual_size,right_dual_size,left_nice,right_nice,both_nice,"
           "intersection_nice,self_orthogonal,qsd,type_iv";
}

std::string code_record_csv_row(const CodeRecord& r) {
    std::ostringstream os;
    os << r.candidate_index << ',' << r.n << ',' << r.k0 << ',' << r.k1 << ','
       << r.t_bits << ',' << r.u_bits << ',' << r.v_bits << ',' << r.d_min
       << ',';
    if (r.optimal) os << (*r.optimal ? 1 : 0);
    os << ',' << csv_quote(r.we.str()) << ',' << csv_quote(r.cwe.str()) << ','
       << r.res_dim << ',' << r.tor_dim << ',' << r.left_dual_size << ','
       << r.right_dual_size << ',' << (r.left_nice ? 1 : 0) << ','
       << (r.right_nice ? 1 : 0) << ',' << (r.both_nice ? 1 : 0) << ','
       << (r.intersection_nice ? 1 : 0) << ',' << (r.self_orthogonal ? 1 : 0)
       << ',' << (r.qsd ? 1 : 0) << ',' << (r.type_iv ? 1 : 0);
    return os.str();
}

std::string code_record_json_line(const CodeRecord& r) {
    ordered_json j;
    j["candidate_index"] = r.candidate_index;
    j["n"] = r.n;
    j["k0"] = r.k0;
    j["k1"] = r.k1;
    j["T"] = r.t_bits;
    j["U"] = r.u_bits;
    j["V"] = r.v_bits;
    j["generator_rows"] = r.generator_rows;
    j["d_min"] = r.d_min;
    j["we"] = we_json(r.we);
    j["cwe"] = cwe_json(r.cwe);
    j["res_dim"] = r.res_dim;
    j["tor_dim"] = r.tor_dim;
    ordered_json sizes;
    sizes["left"] = r.left_dual_size;
    sizes["right"] = r.right_dual_size;
    sizes["intersection"] = r.intersection_size;
    j["dual_sizes"] = std::move(sizes);
    ordered_json nice;
    nice["left"] = r.left_nice;
    nice["right"] = r.right_nice;
    nice["both"] = r.both_nice;
    nice["intersection"] = r.intersection_nice;
    j["nice"] = std::move(nice);
    j["self_orthogonal"] = r.self_orthogonal;
    j["qsd"] = r.qsd;
    j["type_iv"] = r.type_iv;
    if (r.optimal)
        j["optimal"] = *r.optimal;
    else
        j["optimal"] = nullptr;
    return j.dump();
}

void write_records(std::ostream& os, const LengthReport& report,
                   RecordFormat format) {
    if (format == RecordFormat::Csv) os << records_csv_header() << '\n';
    for (const TypeRecord& type : report.records) {
        TypeEnumerator en(type.n, type.k0, type.k1);
        for (uint64_t idx = 0; idx < en.size(); ++idx) {
            CodeRecord rec = make_code_record(en.at(idx), type.max_dmin);
            os << (format == RecordFormat::Csv ? code_record_csv_row(rec)
                                               : code_record_json_line(rec))
               << '\n';
        }
    }
}

std::string ring_tables_text() {
    auto table = [](char op, const Elem (&tbl)[4][4]) {
        std::string out;
        out += op;
        out += " | 0 a b c\n--+--------\n";
        for (Elem x : kElems) {
            out += to_char(x);
            out += " |";
            for (Elem y : kElems) {
                out += ' ';
                out += to_char(tbl[static_cast<int>(x)][static_cast<int>(y)]);
            }
            out += '\n';
        }
        return out;
    };
    return table('+', kAddTable) + "\n" + table('x', kMulTable);
}

std::string report_table_text(const LengthReport& report, NicePolicy policy) {
    std::ostringstream os;
    os << "  n  {k0,k1}  max(d_min)  M";
    if (report.with_nice)
        os << "  Nice[" << nice_policy_name(policy) << "]  Nice(opt)  N["
           << nice_policy_name(policy) << "]";
    os << '\n';
    for (const TypeRecord& r : report.records) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%3d  {%d,%d}    %-10d  %llu", r.n,
                      r.k0, r.k1, r.max_dmin,
                      static_cast<unsigned long long>(r.optimal_count));
        os << buf;
        if (report.with_nice) {
            uint64_t any = r.nice_count(policy);
            uint64_t opt = r.nice_optimal_count(policy);
            os << "  " << (any > 0 ? "Yes" : "No") << "  "
               << (opt > 0 ? "Yes" : "No") << "  " << any;
        }
        os << '\n';
    }
    os << "total enumerated: " << report.total_enumerated << '\n';
    if (report.with_nice)
        os << "nice total[" << nice_policy_name(policy)
           << "]: " << report.nice_total(policy) << '\n';
    return os.str();
}

std::string inspect_text(const GeneratorSpec& spec) {
    Code code = build_code(spec);
    std::ostringstream os;
    os << "spec: " << spec.text() << '\n';
    os << "candidate index: " << spec.candidate_index << " of "
       << code_count(spec.n, spec.k0, spec.k1) << '\n';
    os << "type {" << spec.k0 << "," << spec.k1 << "}, |C| = " << code.size()
       << ", k = " << k_string(spec.k0, spec.k1) << '\n';

    os << "generator rows (" << code.generators.size() << "):\n";
    for (const EWord& row : code.generators) os << "  " << row.str() << '\n';

    os << "codewords (" << code.size() << "):";
    for (size_t i = 0; i < code.words.size(); ++i)
        os << (i % 8 == 0 ? "\n  " : " ") << code.words[i].str();
    os << '\n';

    bool classifiable = !(spec.k0 == 0 && spec.k1 == 0);
    if (classifiable) {
        os << "d_min: " << min_distance(code) << '\n';
    } else {
        os << "d_min: - (zero code)\n";
    }
    os << "weight enumerator: " << weight_enumerator(code).str() << '\n';
    os << "complete weight enumerator: "
       << complete_weight_enumerator(code).str() << '\n';
    os << "res dim: " << binary_dimension(residue_code(code))
       << ", tor dim: " << binary_dimension(torsion_code(code)) << '\n';

    NiceReport nice = nice_report(code);
    os << "dual sizes: left " << nice.left_size << ", right "
       << nice.right_size << ", intersection " << nice.intersection_size
       << '\n';
    os << "nice: left=" << (nice.left_nice ? "yes" : "no")
       << " right=" << (nice.right_nice ? "yes" : "no")
       << " both=" << (nice.both_nice ? "yes" : "no")
       << " intersection=" << (nice.intersection_nice ? "yes" : "no") << '\n';
    os << "self_orthogonal: " << (is_self_orthogonal(code) ? "yes" : "no")
       << ", qsd: " << (is_qsd(code) ? "yes" : "no")
       << ", type_iv: " << (is_type_iv(code) ? "yes" : "no") << '\n';

    if (classifiable && spec.n <= kClassifyMaxLen) {
        TypeRecord type = classify_type(spec.n, spec.k0, spec.k1);
        os << "optimal: "
           << (min_distance(code) == type.max_dmin ? "yes" : "no")
           << " (type max d_min = " << type.max_dmin << ", M = "
           << type.optimal_count << ")\n";
    } else {
        os << "optimal: n/a\n";
    }

    if (spec.n <= kInspectDualMaxLen) {
        DualPair duals = dual_pair(code);
        auto dump = [&os](const char* name, const Code& d) {
            os << name << " (" << d.size() << "):";
            for (size_t i = 0; i < d.words.size(); ++i)
                os << (i % 8 == 0 ? "\n  " : " ") << d.words[i].str();
            os << '\n';
        };
        dump("left dual", duals.left);
        dump("right dual", duals.right);
    } else {
        os << "dual sets: skipped (n > " << kInspectDualMaxLen << ")\n";
    }
    return os.str();
}

}  // namespace nur4
