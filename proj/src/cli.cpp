#include "wfano/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wfano/classification.hpp"
#include "wfano/curve_invariants.hpp"
#include "wfano/divisor_class.hpp"
#include "wfano/errors.hpp"
#include "wfano/lattice_model.hpp"
#include "wfano/points.hpp"
#include "wfano/surfaces.hpp"

namespace wfano {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

const char* kQuarticClassCountNote =
    "the singular-quartic model carries 12 line, 66 conic and C(12,5) = 792 "
    "twisted-cubic classes; published counts of twisted cubics on such quartics "
    "state 5544, counted with multiplicity, so this tool reports per-class data";

bool color_enabled() {
    const char* v = std::getenv("WFANO_COLOR");
    return v != nullptr && std::string(v) == "1";
}

std::string heading(const std::string& text) {
    if (color_enabled()) return "\033[1m" + text + "\033[0m";
    return text;
}

json make_report(const std::string& command, json result, std::vector<std::string> notes) {
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = command;
    rep["result"] = std::move(result);
    rep["notes"] = notes;
    return rep;
}

void print_report(std::ostream& out, const json& rep) { out << rep.dump(2) << "\n"; }

json curve_json(CurveType c) { return json{{"g", c.g}, {"d", c.d}}; }

json link_json(const LinkDescriptor& link) {
    json j;
    j["target"] = link.target;
    if (link.target_curve) j["target_curve"] = curve_json(*link.target_curve);
    j["flop"] = link.has_flop;
    j["citation"] = link.source_citation;
    return j;
}

json record_json(const ClassificationRecord& rec) {
    json j;
    j["g"] = rec.curve.g;
    j["d"] = rec.curve.d;
    if (rec.label) j["aset"] = to_text(*rec.label);
    j["k3"] = rec.k3;
    j["dim_anticanonical"] = rec.dim_anti;
    j["verdict"] = to_text(rec.verdict);
    json conds = json::array();
    for (auto c : rec.conditions) conds.push_back(to_text(c));
    j["conditions"] = std::move(conds);
    if (rec.anticanonical_type) j["anticanonical_type"] = to_text(*rec.anticanonical_type);
    j["genericity"] = to_text(rec.genericity);
    if (rec.link) j["link"] = link_json(*rec.link);
    if (rec.liaison) {
        j["liaison"] = json{{"n1", rec.liaison->type.n1},
                            {"n2", rec.liaison->type.n2},
                            {"residual", curve_json(rec.liaison->residual)},
                            {"secancy", rec.liaison->secancy}};
    }
    return j;
}

void print_record_text(std::ostream& out, const ClassificationRecord& rec) {
    out << heading("curve (" + std::to_string(rec.curve.g) + "," +
                   std::to_string(rec.curve.d) + ")")
        << "\n";
    out << "  set:          " << (rec.label ? to_text(*rec.label) : "-") << "\n";
    out << "  (-K)^3:       " << rec.k3 << "\n";
    out << "  dim |-K|:     " << rec.dim_anti << "\n";
    out << "  verdict:      " << to_text(rec.verdict) << "\n";
    if (!rec.conditions.empty()) {
        out << "  conditions:   ";
        for (size_t i = 0; i < rec.conditions.size(); ++i) {
            if (i) out << ", ";
            out << to_text(rec.conditions[i]);
        }
        out << "\n";
    }
    if (rec.anticanonical_type) {
        out << "  anticanonical morphism (generic member): " << to_text(*rec.anticanonical_type)
            << "\n";
    }
    out << "  genericity:   " << to_text(rec.genericity) << "\n";
    if (rec.link) {
        out << "  link:         " << rec.link->target;
        if (rec.link->target_curve) {
            out << ", blowing down to a (" << rec.link->target_curve->g << ","
                << rec.link->target_curve->d << ") curve";
        }
        out << (rec.link->has_flop ? ", with flop" : ", no flop");
        out << "  [" << rec.link->source_citation << "]\n";
    }
    if (rec.liaison) {
        out << "  liaison:      [" << rec.liaison->type.n1 << "," << rec.liaison->type.n2
            << "] residual (" << rec.liaison->residual.g << "," << rec.liaison->residual.d
            << "), " << rec.liaison->secancy << "-secant to the curve\n";
    }
    for (const auto& note : rec.notes) out << "  note: " << note << "\n";
}

json mults_json(const DivisorClass& d) {
    json arr = json::array();
    for (long long m : d.mults) arr.push_back(m);
    return arr;
}

json cubic_case_json(const SurfaceClassification& s) {
    json j;
    j["g"] = s.curve.g;
    j["d"] = s.curve.d;
    j["k"] = s.source_class->deg_l;
    j["mults"] = mults_json(*s.source_class);
    if (s.category != SurfaceCategory::fano && s.four_secants) {
        j["four_secants"] = *s.four_secants;
    }
    j["dim_anti"] = s.dim_anti_lower;
    j["category"] = to_text(s.category);
    return j;
}

// --- tables ---------------------------------------------------------------

const char* surface_name(int degree) {
    switch (degree) {
        case 1: return "plane";
        case 2: return "quadric";
        case 3: return "cubic";
        case 4: return "quartic";
    }
    return "?";
}

json table1_result() {
    json rows = json::array();
    for (const CatalogRow& row : curve_catalog()) {
        rows.push_back(json{{"g", row.curve.g},
                            {"d", row.curve.d},
                            {"surface", surface_name(row.surface_degree)},
                            {"aset", to_text(row.label)}});
    }
    return json{{"table", "1"}, {"rows", std::move(rows)}};
}

json table2_result() {
    json rows = json::array();
    for (CurveType c : aset_members(ASetLabel::A4)) {
        auto link = link_descriptor(c);
        rows.push_back(json{{"g", c.g},
                            {"d", c.d},
                            {"link", link->target},
                            {"citation", link->source_citation}});
    }
    return json{{"table", "2"}, {"rows", std::move(rows)}};
}

json cubic_table_result(const std::string& name, SurfaceCategory cat) {
    json rows = json::array();
    for (const SurfaceClassification& s : enumerate_cubic_cases()) {
        if (s.category == cat) rows.push_back(cubic_case_json(s));
    }
    return json{{"table", name}, {"rows", std::move(rows)}};
}

json table4_result() {
    json rows = json::array();
    for (const QuarticCatalogRow& row : quartic_catalog()) {
        rows.push_back(json{{"g", row.curve.g},
                            {"d", row.curve.d},
                            {"k", row.cls.deg_l},
                            {"mults", mults_json(row.cls)},
                            {"conic_secancy", row.conic_column},
                            {"cubic_secancy", row.cubic_column}});
    }
    return json{{"table", "4"}, {"rows", std::move(rows)}};
}

json table_result(const std::string& name) {
    if (name == "1") return table1_result();
    if (name == "2") return table2_result();
    if (name == "cubic-i") return cubic_table_result(name, SurfaceCategory::fano);
    if (name == "cubic-ii") return cubic_table_result(name, SurfaceCategory::weak_fano_small);
    if (name == "cubic-iii") return cubic_table_result(name, SurfaceCategory::weak_fano_divisorial);
    if (name == "4") return table4_result();
    throw parse_error("unknown table '" + name + "' (expected 1|2|cubic-i|cubic-ii|cubic-iii|4)");
}

void print_table_markdown(std::ostream& out, const json& result) {
    const auto& rows = result.at("rows");
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
    auto cell = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    out << "|";
    for (const auto& k : keys) out << " " << k << " |";
    out << "\n|";
    for (const auto& k : keys) out << std::string(k.size() + 2, '-') << "|";
    out << "\n";
    for (const auto& row : rows) {
        out << "|";
        for (const auto& k : keys) out << " " << cell(row.at(k)) << " |";
        out << "\n";
    }
}

// --- command handlers -------------------------------------------------------

int cmd_classify(long long g, long long d, const std::string& format, std::ostream& out) {
    ClassificationRecord rec = classify(CurveType{g, d});
    if (format == "json") {
        print_report(out, make_report("classify", record_json(rec), rec.notes));
    } else {
        print_record_text(out, rec);
    }
    return 0;
}

int cmd_cubic_enumerate(const std::string& category, const std::string& format,
                        std::ostream& out) {
    json rows = json::array();
    std::ostringstream text;
    for (const SurfaceClassification& s : enumerate_cubic_cases()) {
        std::string cat = to_text(s.category);
        bool keep = category == "all" || (category == "fano" && cat == "fano") ||
                    (category == "small" && cat == "weak-fano-small") ||
                    (category == "divisorial" && cat == "weak-fano-divisorial");
        if (!keep) continue;
        rows.push_back(cubic_case_json(s));
        text << "(" << s.curve.g << "," << s.curve.d << ")  class " << to_text(*s.source_class)
             << "  " << cat;
        if (s.four_secants && s.category != SurfaceCategory::fano) {
            text << "  4-secants: " << *s.four_secants;
        }
        text << "  dim |-K| >= " << s.dim_anti_lower << "\n";
    }
    if (format == "text") {
        out << heading("curve classes on a normal cubic with nef blow-up") << "\n" << text.str();
    } else {
        print_report(out, make_report("cubic enumerate", json{{"cases", std::move(rows)}}, {}));
    }
    return 0;
}

int cmd_cubic_classify(const std::string& cls_text, const std::string& format,
                       std::ostream& out) {
    DivisorClass cls = parse_class(cls_text);
    if (cls.n_points() != 6) throw invalid_class("cubic classify: expected 6 multiplicities");
    SurfaceClassification s = classify_cubic(cls);
    json j = cubic_case_json(s);
    j["ray"] = json{{"m", s.ray.m}, {"n", s.ray.n}};
    json witnesses = json::array();
    for (const auto& w : s.witnesses) witnesses.push_back(to_text(w));
    j["max_secancy_witnesses"] = std::move(witnesses);
    if (format == "json") {
        print_report(out, make_report("cubic classify", std::move(j), {}));
    } else {
        out << heading("class " + to_text(*s.source_class) + " (normalized)") << "\n";
        out << "  type:        (" << s.curve.g << "," << s.curve.d << ")\n";
        out << "  category:    " << to_text(s.category) << "\n";
        out << "  ray:         l - " << s.ray.n << "f\n";
        if (s.four_secants) out << "  4-secants:   " << *s.four_secants << "\n";
        out << "  dim |-K| >=  " << s.dim_anti_lower << "\n";
        out << "  witnesses:   ";
        for (size_t i = 0; i < s.witnesses.size(); ++i) {
            if (i) out << ", ";
            out << to_text(s.witnesses[i]);
        }
        out << "\n";
    }
    return 0;
}

int cmd_quartic_verify(std::ostream& out) {
    int mismatches = 0;
    for (const QuarticCatalogRow& row : quartic_catalog()) {
        QuarticModelReport rep = classify_quartic_model(row.cls);
        std::vector<std::string> bad;
        if (rep.base.curve != row.curve) bad.push_back("type");
        if (!rep.admissible) bad.push_back("admissibility");
        long long conic = row.cls.deg_l - row.cls.mults[10] - row.cls.mults[11];
        long long cubic = 2 * row.cls.deg_l;
        for (int i = 7; i < 12; ++i) cubic -= row.cls.mults[i];
        if (conic != row.conic_column) bad.push_back("conic column");
        if (cubic != row.cubic_column) bad.push_back("cubic column");
        auto found = quartic_search(row.curve);
        if (std::find(found.begin(), found.end(), row.cls) == found.end()) {
            bad.push_back("search containment");
        }
        if (bad.empty()) {
            out << "[ok] (" << row.curve.g << "," << row.curve.d << ") " << to_text(row.cls)
                << "\n";
        } else {
            ++mismatches;
            out << "[mismatch] (" << row.curve.g << "," << row.curve.d << ")";
            for (const auto& b : bad) out << " " << b;
            out << "\n";
        }
    }
    out << (mismatches == 0 ? "all 13 rows verified\n"
                            : std::to_string(mismatches) + " rows mismatched\n");
    return mismatches == 0 ? 0 : 2;
}

int cmd_quartic_search(long long g, long long d, const std::string& format, std::ostream& out) {
    checked_curve(g, d);
    auto classes = quartic_search(CurveType{g, d});
    if (format == "text") {
        out << heading("admissible singular-quartic classes of type (" + std::to_string(g) +
                       "," + std::to_string(d) + ")")
            << "\n";
        for (const auto& c : classes) out << "  " << to_text(c) << "\n";
        out << classes.size() << " classes\n";
        return 0;
    }
    json arr = json::array();
    for (const auto& c : classes) {
        arr.push_back(json{{"k", c.deg_l}, {"mults", mults_json(c)}});
    }
    print_report(out,
                 make_report("quartic search",
                             json{{"g", g}, {"d", d}, {"classes", std::move(arr)}},
                             {kQuarticClassCountNote}));
    return 0;
}

int cmd_secants(long long g, long long d, const std::string& format, std::ostream& out) {
    CurveType c = checked_curve(g, d);
    SecantAnalysis analysis = secant_possibility(c);
    MoriPolynomial p = mori_polynomial(c);
    if (format == "json") {
        json verdicts = json::array();
        for (const auto& v : analysis.verdicts) {
            verdicts.push_back(json{{"degree", v.degree},
                                    {"secancy", 4 * v.degree + 1},
                                    {"possible", v.possible},
                                    {"reason", v.reason}});
        }
        json res{{"g", g},
                 {"d", d},
                 {"mori_polynomial", p.str()},
                 {"four_secant_count", lebarz_quadrisecants(c)},
                 {"verdicts", std::move(verdicts)}};
        print_report(out, make_report("secants", std::move(res), {}));
    } else {
        out << heading("bad-curve possibilities for (" + std::to_string(g) + "," +
                       std::to_string(d) + ")")
            << "\n";
        out << "  P(n) = " << p.str() << ", 4-secant count " << lebarz_quadrisecants(c) << "\n";
        static const char* names[] = {"5-secant line", "9-secant conic", "13-secant twisted cubic"};
        for (const auto& v : analysis.verdicts) {
            out << "  " << names[v.degree - 1] << ": "
                << (v.possible ? "possible" : "impossible") << " (" << v.reason << ")\n";
        }
    }
    return 0;
}

int cmd_linkage(long long g, long long d, long long n1, long long n2,
                const std::string& format, std::ostream& out) {
    CurveType c = checked_curve(g, d);
    LinkageType t = make_linkage(n1, n2);
    CurveType residual = linkage_residual(c, t);
    long long union_g = ci_genus(t);
    long long secancy = union_secancy(c.g, residual.g, union_g);
    if (format == "json") {
        json res{{"g", g},
                 {"d", d},
                 {"n1", t.n1},
                 {"n2", t.n2},
                 {"residual", curve_json(residual)},
                 {"ci_genus", union_g},
                 {"union_secancy", secancy}};
        print_report(out, make_report("linkage", std::move(res), {}));
    } else {
        out << "[" << t.n1 << "," << t.n2 << "] linkage of (" << g << "," << d << "):\n";
        out << "  residual curve:      (" << residual.g << "," << residual.d << ")\n";
        out << "  intersection genus:  " << union_g << "\n";
        out << "  mutual secancy:      " << secancy << "\n";
    }
    return 0;
}

int cmd_tables_emit(const std::string& table, const std::string& format, std::ostream& out) {
    json result = table_result(table);
    if (format == "markdown") {
        print_table_markdown(out, result);
        return 0;
    }
    std::vector<std::string> notes;
    if (table == "4") notes.push_back(kQuarticClassCountNote);
    print_report(out, make_report("tables emit --table " + table, std::move(result), notes));
    return 0;
}

int cmd_tables_diff(const std::string& table, const std::string& path, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json file_doc;
    try {
        in >> file_doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("'" + path + "' is not valid JSON: " + std::string(e.what()));
    }
    json file_result = file_doc.contains("result") ? file_doc["result"] : file_doc;
    json current = table_result(table);
    if (file_result == current) {
        out << "table " << table << ": no differences\n";
        return 0;
    }
    out << "table " << table << ": mismatch\n";
    out << "expected " << current.dump() << "\n";
    out << "found    " << file_result.dump() << "\n";
    return 2;
}

int cmd_points_classify(const std::string& path, const std::string& format, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    PointConfig cfg = parse_point_file(buf.str());
    long long d = static_cast<long long>(cfg.points.size());
    PointsVerdict verdict = numeric_verdict(cfg.dim, d);

    json res{{"k", cfg.dim}, {"d", d}, {"numeric_verdict", to_text(verdict)}};
    std::ostringstream text;
    text << heading("blow-up of " + std::to_string(d) + " points in P^" +
                    std::to_string(cfg.dim))
         << "\n";
    text << "  numeric verdict: " << to_text(verdict) << "\n";
    if (cfg.dim == 3) {
        res["k3"] = points_k3(d);
        text << "  (-K)^3 = " << points_k3(d) << "\n";
    }
    if (cfg.dim == 3 && verdict == PointsVerdict::candidate_weak_fano) {
        IncidenceReport rep = incidence_check(cfg);
        json triples = json::array();
        for (auto& t : rep.collinear_triples) triples.push_back(json{t[0] + 1, t[1] + 1, t[2] + 1});
        json quints = json::array();
        for (auto& q : rep.coplanar_quintuples) {
            quints.push_back(json{q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1, q[4] + 1});
        }
        res["collinear_triples"] = std::move(triples);
        res["coplanar_quintuples"] = std::move(quints);
        res["passes_conditions_1_2"] = rep.passes;
        res["twisted_cubic_condition"] = rep.twisted_cubic_condition;
        text << "  collinear triples: " << rep.collinear_triples.size() << "\n";
        for (auto& t : rep.collinear_triples) {
            text << "    points " << t[0] + 1 << ", " << t[1] + 1 << ", " << t[2] + 1 << "\n";
        }
        text << "  coplanar 5-tuples: " << rep.coplanar_quintuples.size() << "\n";
        for (auto& q : rep.coplanar_quintuples) {
            text << "    points " << q[0] + 1 << ", " << q[1] + 1 << ", " << q[2] + 1 << ", "
                 << q[3] + 1 << ", " << q[4] + 1 << "\n";
        }
        text << "  conditions (1)-(2): " << (rep.passes ? "pass" : "fail") << "\n";
        text << "  condition (3), 7 points on a twisted cubic: " << rep.twisted_cubic_condition
             << "\n";
    }
    if (format == "json") {
        print_report(out, make_report("points classify", std::move(res), {}));
    } else {
        out << text.str();
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification of blow-ups of P^3 along curves and points"};
    app.require_subcommand(1);

    long long genus = 0, degree = 0, n1 = 0, n2 = 0;
    std::string format = "text";
    std::string class_text, table_name, file_path, category = "all";

    auto* classify_cmd = app.add_subcommand("classify", "classify a (genus, degree) pair");
    classify_cmd->add_option("--genus", genus)->required();
    classify_cmd->add_option("--degree", degree)->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* cubic_cmd = app.add_subcommand("cubic", "curves on a normal cubic surface");
    cubic_cmd->require_subcommand(1);
    auto* cubic_enum = cubic_cmd->add_subcommand("enumerate", "all classes with nef blow-up");
    cubic_enum->add_option("--category", category)
        ->check(CLI::IsMember({"fano", "small", "divisorial", "all"}));
    std::string enum_format = "json";
    cubic_enum->add_option("--format", enum_format)->check(CLI::IsMember({"json", "text"}));
    auto* cubic_classify_cmd = cubic_cmd->add_subcommand("classify", "classify one class");
    cubic_classify_cmd->add_option("--class", class_text, "class as \"k;m1,...,m6\"")->required();
    cubic_classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* quartic_cmd = app.add_subcommand("quartic", "curves on the singular rational quartic");
    quartic_cmd->require_subcommand(1);
    auto* quartic_verify = quartic_cmd->add_subcommand("verify-table4", "check the embedded rows");
    std::string search_format = "json";
    auto* quartic_search_cmd = quartic_cmd->add_subcommand("search", "admissible classes of a type");
    quartic_search_cmd->add_option("--genus", genus)->required();
    quartic_search_cmd->add_option("--degree", degree)->required();
    quartic_search_cmd->add_option("--format", search_format)->check(CLI::IsMember({"json", "text"}));

    auto* secants_cmd = app.add_subcommand("secants", "bad-curve possibility analysis");
    secants_cmd->add_option("--genus", genus)->required();
    secants_cmd->add_option("--degree", degree)->required();
    secants_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* linkage_cmd = app.add_subcommand("linkage", "residual curve of a complete intersection");
    linkage_cmd->add_option("--genus", genus)->required();
    linkage_cmd->add_option("--degree", degree)->required();
    linkage_cmd->add_option("--n1", n1)->required();
    linkage_cmd->add_option("--n2", n2)->required();
    linkage_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* tables_cmd = app.add_subcommand("tables", "emit or diff the embedded tables");
    tables_cmd->require_subcommand(1);
    std::string tables_format = "json";
    auto* tables_emit = tables_cmd->add_subcommand("emit", "print a table");
    tables_emit->add_option("--table", table_name)
        ->required()
        ->check(CLI::IsMember({"1", "2", "cubic-i", "cubic-ii", "cubic-iii", "4"}));
    tables_emit->add_option("--format", tables_format)
        ->check(CLI::IsMember({"json", "markdown"}));
    auto* tables_diff = tables_cmd->add_subcommand("diff", "compare a table file against the current data");
    tables_diff->add_option("--table", table_name)
        ->required()
        ->check(CLI::IsMember({"1", "2", "cubic-i", "cubic-ii", "cubic-iii", "4"}));
    tables_diff->add_option("--file", file_path)->required();

    auto* points_cmd = app.add_subcommand("points", "blow-ups of point configurations");
    points_cmd->require_subcommand(1);
    auto* points_classify = points_cmd->add_subcommand("classify", "classify a point file");
    points_classify->add_option("--file", file_path)->required();
    points_classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << "Run 'wfano --help' for usage.\n";
        return 1;
    }

    try {
        if (classify_cmd->parsed()) {
            return cmd_classify(genus, degree, format, out);
        }
        if (cubic_enum->parsed()) {
            return cmd_cubic_enumerate(category, enum_format, out);
        }
        if (cubic_classify_cmd->parsed()) {
            return cmd_cubic_classify(class_text, format, out);
        }
        if (quartic_verify->parsed()) {
            return cmd_quartic_verify(out);
        }
        if (quartic_search_cmd->parsed()) {
            return cmd_quartic_search(genus, degree, search_format, out);
        }
        if (secants_cmd->parsed()) {
            return cmd_secants(genus, degree, format, out);
        }
        if (linkage_cmd->parsed()) {
            return cmd_linkage(genus, degree, n1, n2, format, out);
        }
        if (tables_emit->parsed()) {
            return cmd_tables_emit(table_name, tables_format, out);
        }
        if (tables_diff->parsed()) {
            return cmd_tables_diff(table_name, file_path, out);
        }
        if (points_classify->parsed()) {
            return cmd_points_classify(file_path, format, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command\n";
    return 1;
}

}  // namespace wfano
