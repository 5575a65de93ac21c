#include "heckeq/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>

#include "heckeq/arith.hpp"
#include "heckeq/errors.hpp"

namespace heckeq {

namespace {

constexpr const char* kToolName = "heckeq";
constexpr const char* kToolVersion = "1.0.0";

// Shortest round-trip decimal rendering of a double; stable across runs.
std::string double_to_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// RFC-4180 quoting: wrap when the cell contains a comma, quote, or newline.
std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string coeff_to_string(const mpq_class& c) {
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

nlohmann::ordered_json cyclo_json(const CycloNumber& x) {
    nlohmann::ordered_json entry;
    entry["conductor"] = x.conductor();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const mpq_class& c : x.coefficients())
        coeffs.push_back(rational_to_string(c));
    entry["coeffs"] = std::move(coeffs);
    return entry;
}

std::string cyclo_csv_cell(const CycloNumber& x) {
    std::string cell = std::to_string(x.conductor()) + ":";
    bool first = true;
    for (const mpq_class& c : x.coefficients()) {
        if (!first)
            cell += ' ';
        cell += rational_to_string(c);
        first = false;
    }
    return cell;
}

nlohmann::ordered_json complex_json(const std::complex<double>& z) {
    nlohmann::ordered_json entry;
    entry["re"] = double_to_string(z.real());
    entry["im"] = double_to_string(z.imag());
    return entry;
}

std::string complex_csv_cell(const std::complex<double>& z) {
    return double_to_string(z.real()) + " " + double_to_string(z.imag());
}

std::string complex_text_cell(const std::complex<double>& z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

nlohmann::ordered_json report_row_json(const HeckeReport& r) {
    nlohmann::ordered_json row;
    row["q"] = r.q;
    row["mu"] = r.mu;
    row["g"] = r.g;
    row["kappa_sum"] = rational_to_string(r.kappa_sum);
    row["m"] = r.m;
    row["z_rr"] = r.z_rr;
    row["sum_nchi"] = r.sum_nchi;
    row["h_forms"] = r.h_forms;
    row["h_dirichlet"] = r.h_dirichlet;
    row["y_diff"] = r.y_diff;
    row["verdict"] = r.verdict;
    row["error"] = r.error;
    return row;
}

std::size_t count_failures(const std::vector<HeckeReport>& reports) {
    std::size_t failures = 0;
    for (const HeckeReport& r : reports)
        if (!r.verdict || !r.error.empty())
            ++failures;
    return failures;
}

// Renders a grid with left-aligned, padded columns.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += "  ";
            out += row[i];
            if (i + 1 < row.size())
                out.append(widths[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string elapsed_line(double elapsed_ms) {
    return "elapsed_ms: " + double_to_string(elapsed_ms) + "\n";
}

nlohmann::ordered_json table_structure_json(
    const std::vector<ConjClassLabel>& table_classes, std::uint64_t q,
    std::uint64_t gsplit, std::pair<std::uint64_t, std::uint64_t> gnorm1,
    const char* mode) {
    nlohmann::ordered_json j;
    j["q"] = q;
    j["mode"] = mode;
    j["group_order"] = psl2_group_order(q);
    j["generator_gsplit"] = gsplit;
    j["generator_gnorm1"] = nlohmann::ordered_json::array(
        {gnorm1.first, gnorm1.second});
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const ConjClassLabel& cls : table_classes) {
        nlohmann::ordered_json c;
        c["label"] = cls.to_string();
        c["size"] = cls.size;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    return j;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "text")
        return OutputFormat::Text;
    throw InvalidElement("unknown output format '" + name +
                         "'; expected json, csv, or text");
}

// --- JSON ------------------------------------------------------------------

nlohmann::ordered_json reports_json(const std::vector<HeckeReport>& reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const HeckeReport& r : reports)
        rows.push_back(report_row_json(r));
    nlohmann::ordered_json payload;
    payload["reports"] = std::move(rows);
    payload["summary"] = {{"primes", reports.size()},
                          {"failures", count_failures(reports)}};
    return payload;
}

nlohmann::ordered_json table_json(const CharacterTable& table) {
    nlohmann::ordered_json j = table_structure_json(
        table.classes(), table.q(), table.generator_gsplit(),
        table.generator_gnorm1(), "exact");
    nlohmann::ordered_json irreps = nlohmann::ordered_json::array();
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (std::size_t row = 0; row < table.irreps().size(); ++row) {
        const IrrepLabel& irrep = table.irreps()[row];
        nlohmann::ordered_json entry;
        entry["label"] = irrep.to_string();
        entry["degree"] = table.degree(irrep);
        irreps.push_back(std::move(entry));
        nlohmann::ordered_json value_row = nlohmann::ordered_json::array();
        for (std::size_t col = 0; col < table.classes().size(); ++col)
            value_row.push_back(cyclo_json(table.value_at(row, col)));
        values.push_back(std::move(value_row));
    }
    j["irreps"] = std::move(irreps);
    j["values"] = std::move(values);
    return j;
}

nlohmann::ordered_json table_json(const NumericCharacterTable& table) {
    nlohmann::ordered_json j = table_structure_json(
        table.classes, table.q, table.gsplit, table.gnorm1, "numeric");
    nlohmann::ordered_json irreps = nlohmann::ordered_json::array();
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (std::size_t row = 0; row < table.irreps.size(); ++row) {
        nlohmann::ordered_json entry;
        entry["label"] = table.irreps[row].to_string();
        // The degree of a row is its value at the identity; numerically that
        // real part is an exact small integer.
        entry["degree"] = static_cast<std::uint64_t>(
            table.values[row][0].real() + 0.5);
        irreps.push_back(std::move(entry));
        nlohmann::ordered_json value_row = nlohmann::ordered_json::array();
        for (const std::complex<double>& z : table.values[row])
            value_row.push_back(complex_json(z));
        values.push_back(std::move(value_row));
    }
    j["irreps"] = std::move(irreps);
    j["values"] = std::move(values);
    return j;
}

nlohmann::ordered_json classes_json(std::uint64_t q) {
    nlohmann::ordered_json j;
    j["q"] = q;
    j["group_order"] = psl2_group_order(q);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ConjClassLabel& cls : enumerate_classes(q)) {
        PSL2Element rep = class_representative(q, cls);
        nlohmann::ordered_json row;
        row["label"] = cls.to_string();
        row["size"] = cls.size;
        row["representative"] = nlohmann::ordered_json::array(
            {rep.a(), rep.b(), rep.c(), rep.d()});
        row["element_order"] = element_order(rep);
        rows.push_back(std::move(row));
    }
    j["classes"] = std::move(rows);
    return j;
}

nlohmann::ordered_json cusps_json(std::uint64_t q) {
    std::vector<CuspData> cusps = cusp_representatives(q);
    std::uint64_t width_sum = 0;
    mpq_class kappa_sum(0);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CuspData& cd : cusps) {
        width_sum += cd.width;
        kappa_sum += cd.kappa;
        nlohmann::ordered_json row;
        row["r"] = cd.cusp.r;
        row["s"] = cd.cusp.s;
        row["label"] = cd.cusp.to_string();
        row["width"] = cd.width;
        row["kappa"] = rational_to_string(cd.kappa);
        rows.push_back(std::move(row));
    }
    kappa_sum.canonicalize();
    nlohmann::ordered_json j;
    j["q"] = q;
    j["count"] = cusps.size();
    j["width_sum"] = width_sum;
    j["kappa_sum"] = rational_to_string(kappa_sum);
    j["cusps"] = std::move(rows);
    return j;
}

nlohmann::ordered_json ptable_json(const CharacterTable& table) {
    nlohmann::ordered_json j;
    j["q"] = table.q();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const IrrepLabel& irrep : table.irreps()) {
        PVector pv = p_table_for_irrep(table, irrep);
        nlohmann::ordered_json row;
        row["irrep"] = irrep.to_string();
        row["degree"] = table.degree(irrep);
        row["p"] = pv.p;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

nlohmann::ordered_json envelope(const std::string& command,
                                const std::string& payload_key,
                                nlohmann::ordered_json payload,
                                double elapsed_ms) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["meta"] = {{"tool", kToolName},
                 {"version", kToolVersion},
                 {"elapsed_ms", elapsed_ms}};
    j[payload_key] = std::move(payload);
    return j;
}

// --- CSV ---------------------------------------------------------------

std::string reports_csv(const std::vector<HeckeReport>& reports) {
    std::string out =
        "q,mu,g,kappa_sum,m,z_rr,sum_nchi,h_forms,h_dirichlet,y_diff,"
        "verdict,error\n";
    for (const HeckeReport& r : reports) {
        out += std::to_string(r.q) + ',' + std::to_string(r.mu) + ',' +
               std::to_string(r.g) + ',' + rational_to_string(r.kappa_sum) +
               ',' + std::to_string(r.m) + ',' + std::to_string(r.z_rr) +
               ',' + std::to_string(r.sum_nchi) + ',' +
               std::to_string(r.h_forms) + ',' +
               std::to_string(r.h_dirichlet) + ',' +
               std::to_string(r.y_diff) + ',' +
               (r.verdict ? "true" : "false") + ',' + csv_escape(r.error) +
               '\n';
    }
    return out;
}

namespace {

template <typename Table, typename CellFn>
std::string table_csv_impl(const Table& table,
                           const std::vector<ConjClassLabel>& classes,
                           const std::vector<IrrepLabel>& irreps,
                           CellFn cell) {
    std::string out = "irrep,degree";
    for (const ConjClassLabel& cls : classes)
        out += ',' + csv_escape(cls.to_string());
    out += '\n';
    for (std::size_t row = 0; row < irreps.size(); ++row) {
        out += csv_escape(irreps[row].to_string());
        out += ',' + cell(table, row, std::size_t{0}, true);
        for (std::size_t col = 0; col < classes.size(); ++col)
            out += ',' + cell(table, row, col, false);
        out += '\n';
    }
    return out;
}

} // namespace

std::string table_csv(const CharacterTable& table) {
    auto cell = [](const CharacterTable& t, std::size_t row, std::size_t col,
                   bool degree) -> std::string {
        if (degree)
            return std::to_string(t.degree(t.irreps()[row]));
        return cyclo_csv_cell(t.value_at(row, col));
    };
    return table_csv_impl(table, table.classes(), table.irreps(), cell);
}

std::string table_csv(const NumericCharacterTable& table) {
    auto cell = [](const NumericCharacterTable& t, std::size_t row,
                   std::size_t col, bool degree) -> std::string {
        if (degree)
            return std::to_string(
                static_cast<std::uint64_t>(t.values[row][0].real() + 0.5));
        return complex_csv_cell(t.values[row][col]);
    };
    return table_csv_impl(table, table.classes, table.irreps, cell);
}

std::string classes_csv(std::uint64_t q) {
    std::string out = "label,size,rep_a,rep_b,rep_c,rep_d,element_order\n";
    for (const ConjClassLabel& cls : enumerate_classes(q)) {
        PSL2Element rep = class_representative(q, cls);
        out += csv_escape(cls.to_string()) + ',' + std::to_string(cls.size) +
               ',' + std::to_string(rep.a()) + ',' + std::to_string(rep.b()) +
               ',' + std::to_string(rep.c()) + ',' + std::to_string(rep.d()) +
               ',' + std::to_string(element_order(rep)) + '\n';
    }
    return out;
}

std::string cusps_csv(std::uint64_t q) {
    std::string out = "r,s,label,width,kappa\n";
    for (const CuspData& cd : cusp_representatives(q)) {
        out += std::to_string(cd.cusp.r) + ',' + std::to_string(cd.cusp.s) +
               ',' + cd.cusp.to_string() + ',' + std::to_string(cd.width) +
               ',' + rational_to_string(cd.kappa) + '\n';
    }
    return out;
}

std::string ptable_csv(const CharacterTable& table) {
    std::string out = "irrep,degree";
    for (std::uint64_t n = 0; n < table.q(); ++n)
        out += ",p" + std::to_string(n);
    out += '\n';
    for (const IrrepLabel& irrep : table.irreps()) {
        PVector pv = p_table_for_irrep(table, irrep);
        out += csv_escape(irrep.to_string()) + ',' +
               std::to_string(table.degree(irrep));
        for (std::uint64_t v : pv.p)
            out += ',' + std::to_string(v);
        out += '\n';
    }
    return out;
}

// --- Text ----------------------------------------------------------------

std::string cyclo_to_string(const CycloNumber& x) {
    if (x.is_rational())
        return coeff_to_string(x.rational_value());
    const std::string z = "z" + std::to_string(x.conductor());
    std::string out;
    const std::vector<mpq_class>& coeffs = x.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const mpq_class& c = coeffs[i];
        if (c == 0)
            continue;
        std::string term;
        if (i == 0) {
            term = coeff_to_string(c);
        } else {
            if (c == 1)
                term = "";
            else if (c == -1)
                term = "-";
            else
                term = coeff_to_string(c) + "*";
            term += z;
            if (i > 1)
                term += "^" + std::to_string(i);
        }
        if (!out.empty() && term[0] != '-')
            out += '+';
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string reports_text(const std::vector<HeckeReport>& reports,
                         double elapsed_ms) {
    std::string out;
    for (const HeckeReport& r : reports) {
        out += "q = " + std::to_string(r.q) + "\n";
        if (!r.error.empty()) {
            out += "  error        = " + r.error + "\n";
            out += "  verdict      = FAIL\n";
            continue;
        }
        out += "  mu           = " + std::to_string(r.mu) + "\n";
        out += "  genus        = " + std::to_string(r.g) + "\n";
        out += "  kappa_sum    = " + rational_to_string(r.kappa_sum) + "\n";
        out += "  m            = " + std::to_string(r.m) + "\n";
        out += "  z_rr         = " + std::to_string(r.z_rr) + "\n";
        out += "  sum_nchi     = " + std::to_string(r.sum_nchi) + "\n";
        out += "  h_forms      = " + std::to_string(r.h_forms) + "\n";
        out += "  h_dirichlet  = " + std::to_string(r.h_dirichlet) + "\n";
        out += "  y_diff       = " + std::to_string(r.y_diff) + "\n";
        out += std::string("  verdict      = ") +
               (r.verdict ? "OK" : "FAIL") + "\n";
    }
    out += std::to_string(reports.size()) + " primes verified, " +
           std::to_string(count_failures(reports)) + " failures\n";
    out += elapsed_line(elapsed_ms);
    return out;
}

namespace {

template <typename Classes, typename Irreps, typename CellFn>
std::string table_text_grid(const Classes& classes, const Irreps& irreps,
                            CellFn cell) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"irrep"};
    for (const ConjClassLabel& cls : classes)
        header.push_back(cls.to_string() + " (" + std::to_string(cls.size) +
                         ")");
    rows.push_back(std::move(header));
    for (std::size_t row = 0; row < irreps.size(); ++row) {
        std::vector<std::string> line{irreps[row].to_string()};
        for (std::size_t col = 0; col < classes.size(); ++col)
            line.push_back(cell(row, col));
        rows.push_back(std::move(line));
    }
    return render_grid(rows);
}

} // namespace

std::string table_text(const CharacterTable& table, double elapsed_ms) {
    std::string out = "character table, q = " + std::to_string(table.q()) +
                      ", mode = exact\n";
    out += "group order = " + std::to_string(table.group_order()) + "\n";
    out += "generator of F_q^x = " +
           std::to_string(table.generator_gsplit()) + "\n";
    auto [ga, gb] = table.generator_gnorm1();
    out += "generator of norm-one group = (" + std::to_string(ga) + ", " +
           std::to_string(gb) + ")\n";
    out += table_text_grid(table.classes(), table.irreps(),
                           [&](std::size_t row, std::size_t col) {
                               return cyclo_to_string(
                                   table.value_at(row, col));
                           });
    out += elapsed_line(elapsed_ms);
    return out;
}

std::string table_text(const NumericCharacterTable& table,
                       double elapsed_ms) {
    std::string out = "character table, q = " + std::to_string(table.q) +
                      ", mode = numeric\n";
    out += "group order = " + std::to_string(psl2_group_order(table.q)) +
           "\n";
    out += "generator of F_q^x = " + std::to_string(table.gsplit) + "\n";
    out += "generator of norm-one group = (" +
           std::to_string(table.gnorm1.first) + ", " +
           std::to_string(table.gnorm1.second) + ")\n";
    out += table_text_grid(table.classes, table.irreps,
                           [&](std::size_t row, std::size_t col) {
                               return complex_text_cell(
                                   table.values[row][col]);
                           });
    out += elapsed_line(elapsed_ms);
    return out;
}

std::string classes_text(std::uint64_t q, double elapsed_ms) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"label", "size", "representative", "order"});
    for (const ConjClassLabel& cls : enumerate_classes(q)) {
        PSL2Element rep = class_representative(q, cls);
        rows.push_back({cls.to_string(), std::to_string(cls.size),
                        "[" + std::to_string(rep.a()) + " " +
                            std::to_string(rep.b()) + "; " +
                            std::to_string(rep.c()) + " " +
                            std::to_string(rep.d()) + "]",
                        std::to_string(element_order(rep))});
    }
    std::string out = "conjugacy classes, q = " + std::to_string(q) +
                      ", group order = " +
                      std::to_string(psl2_group_order(q)) + "\n";
    out += render_grid(rows);
    out += elapsed_line(elapsed_ms);
    return out;
}

std::string cusps_text(std::uint64_t q, double elapsed_ms) {
    std::vector<CuspData> cusps = cusp_representatives(q);
    std::uint64_t width_sum = 0;
    mpq_class kappa_sum(0);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"cusp", "width", "kappa"});
    for (const CuspData& cd : cusps) {
        width_sum += cd.width;
        kappa_sum += cd.kappa;
        rows.push_back({cd.cusp.to_string(), std::to_string(cd.width),
                        rational_to_string(cd.kappa)});
    }
    kappa_sum.canonicalize();
    std::string out = "cusps, q = " + std::to_string(q) + ": " +
                      std::to_string(cusps.size()) + " cusps, width sum " +
                      std::to_string(width_sum) + ", kappa sum " +
                      rational_to_string(kappa_sum) + "\n";
    out += render_grid(rows);
    out += elapsed_line(elapsed_ms);
    return out;
}

std::string ptable_text(const CharacterTable& table, double elapsed_ms) {
    std::string out =
        "eigenvalue multiplicities p(0..q-1), q = " +
        std::to_string(table.q()) + "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"irrep", "degree", "p"});
    for (const IrrepLabel& irrep : table.irreps()) {
        PVector pv = p_table_for_irrep(table, irrep);
        std::string pstr = "[";
        for (std::size_t i = 0; i < pv.p.size(); ++i) {
            if (i)
                pstr += ' ';
            pstr += std::to_string(pv.p[i]);
        }
        pstr += "]";
        rows.push_back({irrep.to_string(),
                        std::to_string(table.degree(irrep)), pstr});
    }
    out += render_grid(rows);
    out += elapsed_line(elapsed_ms);
    return out;
}

} // namespace heckeq
