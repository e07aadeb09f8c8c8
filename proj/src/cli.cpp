#include "charvar/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "charvar/fforacle.hpp"
#include "charvar/gluing.hpp"
#include "charvar/moduli.hpp"
#include "charvar/recursion.hpp"

namespace charvar {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int max_genus_cap() {
    if (const char* env = std::getenv("EPOLY_MAX_GENUS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return 100;
}

const char* latex_label(Holonomy c) {
    switch (c) {
        case Holonomy::Id: return "\\mathrm{Id}";
        case Holonomy::MinusId: return "-\\mathrm{Id}";
        case Holonomy::JPlus: return "J_{+}";
        case Holonomy::JMinus: return "J_{-}";
        case Holonomy::XiLambda: return "\\xi_{\\lambda}";
    }
    return "?";
}

/* coefficients from leading down to the constant term, space separated */
std::string coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int e = p.degree(); e >= 0; --e) {
        if (!s.empty()) s += ' ';
        s += p.coeff(e).get_str();
    }
    return s;
}

void write_csv_header(std::ostream& os) { os << "genus,holonomy,degree,coefficients\n"; }

void write_csv_row(std::ostream& os, int g, Holonomy c, const IntPoly& p) {
    os << g << ',' << holonomy_tag(c) << ',' << p.degree() << ",\"" << coeff_list(p) << "\"\n";
}

void write_latex_row(std::ostream& os, Holonomy c, const IntPoly& p) {
    os << "$e(\\mathcal{M}_{" << latex_label(c) << "})$ & $" << p.latex() << "$ \\\\\n";
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = nullptr;

    int open(const std::string& path, std::ostream& fallback, std::ostream& err) {
        if (path.empty()) {
            os = &fallback;
            return kExitOk;
        }
        file.open(path);
        if (!file) {
            err << "error: cannot open output file '" << path << "'\n";
            return kExitUsage;
        }
        os = &file;
        return kExitOk;
    }
};

int cmd_compute(int genus, const std::string& holonomy, const std::string& format,
                std::ostream& os, std::ostream& err) {
    const auto c = holonomy_from_tag(holonomy);
    if (!c) {
        err << "error: unknown holonomy '" << holonomy
            << "' (expected id, minus-id, jplus, jminus or xi)\n";
        return kExitUsage;
    }
    const IntPoly p = moduli_epoly(*c, genus);
    if (format == "text") {
        os << p.str() << '\n';
    } else if (format == "json") {
        os << p.to_json() << '\n';
    } else if (format == "csv") {
        write_csv_header(os);
        write_csv_row(os, genus, *c, p);
    } else {  // latex
        write_latex_row(os, *c, p);
    }
    return kExitOk;
}

int cmd_table(int max_genus, const std::string& format, std::ostream& os) {
    const auto sectors = sector_vectors_up_to(max_genus);
    nlohmann::json jrows = nlohmann::json::array();
    if (format == "csv") write_csv_header(os);
    for (int g = 1; g <= max_genus; ++g) {
        if (format == "latex") os << "% genus " << g << '\n';
        for (int ci = 0; ci < 5; ++ci) {
            const Holonomy c = static_cast<Holonomy>(ci);
            const IntPoly p = moduli_epoly(c, sectors[static_cast<size_t>(g)]);
            if (format == "text") {
                os << "g=" << g << "  " << holonomy_tag(c) << ":  " << p.str() << '\n';
            } else if (format == "csv") {
                write_csv_row(os, g, c, p);
            } else if (format == "latex") {
                write_latex_row(os, c, p);
            } else {
                jrows.push_back({{"genus", g},
                                 {"holonomy", std::string(holonomy_tag(c))},
                                 {"epoly", nlohmann::json::parse(p.to_json())}});
            }
        }
    }
    if (format == "json") os << jrows.dump() << '\n';
    return kExitOk;
}

int cmd_identities(int max_genus, const std::string& format, std::ostream& os) {
    const IdentityReport report = check_identities(max_genus);
    if (format == "json") {
        os << report.to_json() << '\n';
    } else {
        int passed = 0;
        for (const auto& c : report.checks)
            if (c.passed) ++passed;
        for (const auto& c : report.checks)
            if (!c.passed)
                os << "FAIL g=" << c.genus << " " << c.name << "  residual: " << c.residual.str()
                   << '\n';
        os << passed << "/" << report.checks.size() << " identity checks passed for g <= "
           << max_genus << '\n';
    }
    return report.all_passed() ? kExitOk : kExitMismatch;
}

int cmd_verify(int prime, int max_genus, int threads, const std::string& format,
               std::ostream& os) {
    const VerifyReport report = verify_counts(prime, max_genus, threads);
    if (format == "json") {
        os << report.to_json() << '\n';
    } else {
        for (const auto& c : report.checks) {
            os << (c.passed ? "ok   " : "FAIL ") << "p=" << c.prime << " g=" << c.genus << "  "
               << c.label << "  expected " << c.expected.get_str() << "  got "
               << c.actual.get_str();
            if (c.has_twisted && !c.passed)
                os << "  [matches the monodromy-twisted prediction "
                   << c.twisted_expected.get_str() << ": " << (c.twisted_passed ? "yes" : "no")
                   << "]";
            os << '\n';
        }
        int passed = 0;
        for (const auto& c : report.checks)
            if (c.passed) ++passed;
        os << passed << "/" << report.checks.size() << " count comparisons passed at p=" << prime
           << '\n';
    }
    return report.all_passed() ? kExitOk : kExitMismatch;
}

int cmd_glue(int left, int right, const std::string& format, std::ostream& os) {
    const auto sectors = sector_vectors_up_to(std::max(left, right));
    const GluedData glued =
        glue(sectors[static_cast<size_t>(left)], sectors[static_cast<size_t>(right)]);
    if (format == "json") {
        nlohmann::json j = {{"genus", glued.genus},
                            {"left", left},
                            {"right", right},
                            {"e0", nlohmann::json::parse(glued.e0.to_json())},
                            {"e1", nlohmann::json::parse(glued.e1.to_json())},
                            {"e2", nlohmann::json::parse(glued.e2.to_json())},
                            {"e3", nlohmann::json::parse(glued.e3.to_json())},
                            {"R4", nlohmann::json::parse(glued.r4.to_json())}};
        os << j.dump() << '\n';
    } else {
        os << "genus " << glued.genus << " from (" << left << "," << right << ")\n";
        os << "e0: " << glued.e0.str() << '\n';
        os << "e1: " << glued.e1.str() << '\n';
        os << "e2: " << glued.e2.str() << '\n';
        os << "e3: " << glued.e3.str() << '\n';
        os << "R4: (" << glued.r4.t.str() << ") T + (" << glued.r4.n.str() << ") N\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact E-polynomials of SL(2,C) character varieties of once-punctured surfaces"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    const int cap = max_genus_cap();

    auto add_common = [&](CLI::App* sub, bool allow_latex_csv) {
        std::vector<std::string> formats = {"text", "json"};
        if (allow_latex_csv) {
            formats.push_back("csv");
            formats.push_back("latex");
        }
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        sub->add_option("--output,-o", output_path, "write to file instead of standard output");
    };

    int genus = 1, max_genus = 1, prime = 5, threads = 0, left = 1, right = 1;
    std::string holonomy;

    CLI::App* compute = app.add_subcommand("compute", "E-polynomial for one holonomy and genus");
    compute->add_option("--genus,-g", genus, "genus (>= 1)")->required();
    compute->add_option("--holonomy", holonomy, "id | minus-id | jplus | jminus | xi")->required();
    add_common(compute, true);

    CLI::App* table = app.add_subcommand("table", "all five holonomies for g = 1..max-genus");
    table->add_option("--max-genus,-g", max_genus, "largest genus")->required();
    add_common(table, true);

    CLI::App* identities = app.add_subcommand("identities", "run the symbolic identity suite");
    identities->add_option("--max-genus,-g", max_genus, "largest genus")->required();
    add_common(identities, false);

    CLI::App* verify = app.add_subcommand("verify", "finite-field point-count verification");
    verify->add_option("--prime,-p", prime, "odd prime >= 5")->required();
    verify->add_option("--max-genus,-g", max_genus, "largest genus")->required();
    verify->add_option("--threads,-t", threads, "worker threads (0 = hardware)");
    add_common(verify, false);

    CLI::App* glue_cmd = app.add_subcommand("glue", "genus addition for a (k,h) split");
    glue_cmd->add_option("--left,-k", left, "left genus k (>= 1)")->required();
    glue_cmd->add_option("--right", right, "right genus h (>= 1)")->required();
    add_common(glue_cmd, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        OutputTarget target;
        if (int rc = target.open(output_path, out, err); rc != kExitOk) return rc;
        std::ostream& os = *target.os;

        if (compute->parsed()) {
            if (genus < 1 || genus > cap) {
                err << "error: genus must be in [1, " << cap << "]\n";
                return kExitUsage;
            }
            return cmd_compute(genus, holonomy, format, os, err);
        }
        if (table->parsed() || identities->parsed()) {
            if (max_genus < 1 || max_genus > cap) {
                err << "error: max-genus must be in [1, " << cap << "]\n";
                return kExitUsage;
            }
            return table->parsed() ? cmd_table(max_genus, format, os)
                                   : cmd_identities(max_genus, format, os);
        }
        if (verify->parsed()) {
            if (max_genus < 1 || max_genus > cap) {
                err << "error: max-genus must be in [1, " << cap << "]\n";
                return kExitUsage;
            }
            try {
                return cmd_verify(prime, max_genus, threads, format, os);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return kExitUsage;
            }
        }
        if (glue_cmd->parsed()) {
            if (left < 1 || right < 1 || left > cap || right > cap) {
                err << "error: both genera must be in [1, " << cap << "]\n";
                return kExitUsage;
            }
            return cmd_glue(left, right, format, os);
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace charvar
