// heckeq: exact verification that the difference of the two half-discrete
// eigenvalue multiplicities on the level-q modular curve equals the class
// number h(-q), together with inspection commands for the underlying
// PSL2(F_q) data (character table, conjugacy classes, cusps, eigenvalue
// multiplicity vectors).
//
// Exit codes: 0 success, 1 runtime/verification failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "heckeq/arith.hpp"
#include "heckeq/character_table.hpp"
#include "heckeq/cyclotomic.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/gf_psl2.hpp"
#include "heckeq/hecke.hpp"
#include "heckeq/modcurve.hpp"
#include "heckeq/report_io.hpp"

namespace {

using heckeq::OutputFormat;

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

std::string dump_json(nlohmann::ordered_json j) { return j.dump(2) + "\n"; }

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << output_path
                  << "'\n";
        return 1;
    }
    out << text;
    if (!out) {
        std::cerr << "error: failed writing to '" << output_path << "'\n";
        return 1;
    }
    return 0;
}

bool all_verified(const std::vector<heckeq::HeckeReport>& reports) {
    for (const heckeq::HeckeReport& r : reports)
        if (!r.verdict || !r.error.empty())
            return false;
    return true;
}

int run_reports(const std::string& command,
                std::vector<heckeq::HeckeReport> reports, const Timer& timer,
                OutputFormat fmt, const std::string& output_path) {
    const double ms = timer.ms();
    std::string out;
    switch (fmt) {
    case OutputFormat::Json:
        out = dump_json(heckeq::envelope(command, "result",
                                         heckeq::reports_json(reports), ms));
        break;
    case OutputFormat::Csv:
        out = heckeq::reports_csv(reports);
        break;
    case OutputFormat::Text:
        out = heckeq::reports_text(reports, ms);
        break;
    }
    const int emit_rc = emit(out, output_path);
    if (emit_rc != 0)
        return emit_rc;
    return all_verified(reports) ? 0 : 1;
}

int run_verify(std::uint64_t q, OutputFormat fmt,
               const std::string& output_path) {
    Timer timer;
    heckeq::HeckeReport rep;
    try {
        rep = heckeq::verify_hecke_identity(q);
    } catch (const std::exception& e) {
        rep = heckeq::HeckeReport{};
        rep.q = q;
        rep.error = e.what();
        rep.verdict = false;
    }
    return run_reports("verify", {rep}, timer, fmt, output_path);
}

int run_sweep(std::uint64_t q_min, std::uint64_t q_max, unsigned workers,
              OutputFormat fmt, const std::string& output_path) {
    Timer timer;
    std::vector<heckeq::HeckeReport> reports =
        heckeq::sweep_verify(q_min, q_max, workers);
    return run_reports("sweep", std::move(reports), timer, fmt, output_path);
}

int run_table(std::uint64_t q, OutputFormat fmt,
              const std::string& output_path) {
    Timer timer;
    std::string out;
    try {
        heckeq::CharacterTable table = heckeq::CharacterTable::build(q);
        switch (fmt) {
        case OutputFormat::Json:
            out = dump_json(heckeq::envelope("table", "table",
                                             heckeq::table_json(table),
                                             timer.ms()));
            break;
        case OutputFormat::Csv:
            out = heckeq::table_csv(table);
            break;
        case OutputFormat::Text:
            out = heckeq::table_text(table, timer.ms());
            break;
        }
    } catch (const heckeq::ExactModeUnavailable&) {
        // Degrade to the floating-point table under a small conductor
        // ceiling; the output is annotated with mode = "numeric".
        heckeq::NumericCharacterTable table =
            heckeq::NumericCharacterTable::build(q);
        switch (fmt) {
        case OutputFormat::Json:
            out = dump_json(heckeq::envelope("table", "table",
                                             heckeq::table_json(table),
                                             timer.ms()));
            break;
        case OutputFormat::Csv:
            out = heckeq::table_csv(table);
            break;
        case OutputFormat::Text:
            out = heckeq::table_text(table, timer.ms());
            break;
        }
    }
    return emit(out, output_path);
}

int run_classes(std::uint64_t q, OutputFormat fmt,
                const std::string& output_path) {
    Timer timer;
    std::string out;
    switch (fmt) {
    case OutputFormat::Json:
        out = dump_json(heckeq::envelope("classes", "classes",
                                         heckeq::classes_json(q),
                                         timer.ms()));
        break;
    case OutputFormat::Csv:
        out = heckeq::classes_csv(q);
        break;
    case OutputFormat::Text:
        out = heckeq::classes_text(q, timer.ms());
        break;
    }
    return emit(out, output_path);
}

int run_cusps(std::uint64_t q, OutputFormat fmt,
              const std::string& output_path) {
    Timer timer;
    std::string out;
    switch (fmt) {
    case OutputFormat::Json:
        out = dump_json(heckeq::envelope("cusps", "cusps",
                                         heckeq::cusps_json(q), timer.ms()));
        break;
    case OutputFormat::Csv:
        out = heckeq::cusps_csv(q);
        break;
    case OutputFormat::Text:
        out = heckeq::cusps_text(q, timer.ms());
        break;
    }
    return emit(out, output_path);
}

int run_ptable(std::uint64_t q, OutputFormat fmt,
               const std::string& output_path) {
    Timer timer;
    heckeq::CharacterTable table = heckeq::CharacterTable::build(q);
    std::string out;
    switch (fmt) {
    case OutputFormat::Json:
        out = dump_json(heckeq::envelope("ptable", "ptable",
                                         heckeq::ptable_json(table),
                                         timer.ms()));
        break;
    case OutputFormat::Csv:
        out = heckeq::ptable_csv(table);
        break;
    case OutputFormat::Text:
        out = heckeq::ptable_text(table, timer.ms());
        break;
    }
    return emit(out, output_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "heckeq: exact arithmetic on PSL2(F_q) for q = 3 (mod 4) -- "
        "character table, cusp data, eigenvalue multiplicities, and "
        "verification that their difference equals the class number h(-q)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "heckeq 1.0.0");

    std::string format = "text";
    app.add_option("--format", format, "output format: json, csv, or text")
        ->capture_default_str();
    std::string output_path;
    app.add_option("--output", output_path,
                   "write the report to this file instead of stdout");
    std::uint64_t ceiling = heckeq::CycloNumber::conductor_ceiling();
    app.add_option("--exact-ceiling", ceiling,
                   "largest cyclotomic conductor allowed in exact mode")
        ->capture_default_str();

    std::uint64_t q = 0;
    const std::string q_help = "prime q with q = 3 (mod 4) and q > 3";

    CLI::App* verify =
        app.add_subcommand("verify", "verify the identity for one prime");
    verify->add_option("--q", q, q_help)->required();

    CLI::App* sweep = app.add_subcommand(
        "sweep", "verify the identity for every valid prime in [min, max]");
    std::uint64_t q_min = 7;
    std::uint64_t q_max = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    sweep->add_option("--min", q_min, "lower end of the prime range")
        ->capture_default_str();
    sweep->add_option("--max", q_max, "upper end of the prime range")
        ->required();
    sweep->add_option("--workers", workers, "number of worker threads")
        ->capture_default_str();

    CLI::App* table = app.add_subcommand(
        "table", "print the character table of PSL2(F_q)");
    table->add_option("--q", q, q_help)->required();

    CLI::App* classes = app.add_subcommand(
        "classes", "print the conjugacy classes of PSL2(F_q)");
    classes->add_option("--q", q, q_help)->required();

    CLI::App* cusps = app.add_subcommand(
        "cusps", "print the cusps of the level-q curve with widths and "
                 "parameters");
    cusps->add_option("--q", q, "prime q >= 5")->required();

    CLI::App* ptable = app.add_subcommand(
        "ptable", "print the eigenvalue multiplicity vectors p(0..q-1)");
    ptable->add_option("--q", q, q_help)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputFormat fmt;
    try {
        fmt = heckeq::parse_format(format);
    } catch (const heckeq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    heckeq::CycloNumber::set_conductor_ceiling(ceiling);

    try {
        if (verify->parsed() || table->parsed() || classes->parsed() ||
            ptable->parsed()) {
            try {
                heckeq::require_valid_q(q);
            } catch (const heckeq::UnsupportedPrime& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        if (cusps->parsed() && (q < 5 || !heckeq::is_prime(q))) {
            std::cerr << "error: q = " << q
                      << " is not supported: cusps requires a prime q >= 5\n";
            return 2;
        }
        if (sweep->parsed()) {
            if (q_min > q_max) {
                std::cerr << "error: --min must not exceed --max\n";
                return 2;
            }
            if (workers == 0) {
                std::cerr << "error: --workers must be positive\n";
                return 2;
            }
        }

        if (verify->parsed())
            return run_verify(q, fmt, output_path);
        if (sweep->parsed())
            return run_sweep(q_min, q_max, workers, fmt, output_path);
        if (table->parsed())
            return run_table(q, fmt, output_path);
        if (classes->parsed())
            return run_classes(q, fmt, output_path);
        if (cusps->parsed())
            return run_cusps(q, fmt, output_path);
        if (ptable->parsed())
            return run_ptable(q, fmt, output_path);
        std::cerr << "error: no command given\n";
        return 2;
    } catch (const heckeq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
