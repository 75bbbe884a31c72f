// Command-line front end: verify the built-in catalog, run DSL scripts,
// query dimensions, and list the catalog.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 parse error,
// 3 validation / structural error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "weil/catalog.hpp"
#include "weil/dsl.hpp"
#include "weil/harness.hpp"
#include "weil/report.hpp"
#include "weil/runner.hpp"
#include "weil/version.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

void emit(const weil::Report& report, bool json) {
    std::cout << (json ? report.to_json() : report.to_text(use_color()));
}

int run_verify_paper(bool json, std::uint64_t seed, int parallel, const std::string& inject) {
    weil::VerifyOptions opt;
    opt.seed = seed;
    opt.threads = parallel;
    if (inject == "wrong-apex-g") opt.inject = weil::Inject::wrong_apex_g;
    else if (inject == "h31-typo") opt.inject = weil::Inject::h31_typo;
    else if (!inject.empty()) {
        std::cerr << "unknown --inject mode '" << inject << "'\n";
        return kExitValidationError;
    }

    weil::Catalog cat = weil::build_catalog();
    weil::VerifySummary sum = weil::verify_all(cat, opt);
    weil::Report report;
    report.command = "verify-paper";
    report.seed = opt.seed;
    report.checks = sum.results;
    report.total_ms = sum.total_ms;
    emit(report, json);
    return report.exit_code();
}

int run_script(const std::string& path, bool json, std::uint64_t seed, int parallel) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitParseError;
    }
    std::stringstream ss;
    ss << in.rdbuf();

    weil::dsl::Script script = weil::dsl::parse(ss.str());
    weil::dsl::Runner runner(path);
    (void)parallel;  // script checks run in order; results are already deterministic
    weil::Report report;
    report.command = "run " + path;
    report.seed = seed;
    report.checks = runner.run(script);
    for (const auto& c : report.checks) report.total_ms += c.ms;
    emit(report, json);
    return report.exit_code();
}

weil::SimplicialObject elaborate_atom(const weil::Catalog& cat, const weil::dsl::ObjAtom& a) {
    switch (a.kind) {
        case weil::dsl::ObjAtom::Kind::d_paren:
            return weil::make_D_paren(a.n);
        case weil::dsl::ObjAtom::Kind::name:
            return cat.object(a.name);
        case weil::dsl::ObjAtom::Kind::d_power: {
            std::vector<weil::Monomial> forb;
            for (const auto& t : a.tuples) forb.push_back(weil::Monomial::of(t));
            return weil::SimplicialObject(a.n, std::move(forb));
        }
    }
    throw weil::error("unreachable");
}

int run_dim(const std::string& expr) {
    weil::Catalog cat = weil::build_catalog();
    if (cat.has_object(expr)) {
        std::cout << cat.object(expr).dim() << "\n";
        return 0;
    }
    weil::dsl::ObjExpr e = weil::dsl::Parser(expr).parse_object_expression_all();
    weil::SimplicialObject obj = elaborate_atom(cat, e.atoms[0]);
    for (size_t i = 1; i < e.atoms.size(); ++i)
        obj = weil::oplus(obj, elaborate_atom(cat, e.atoms[i]));
    std::cout << obj.dim() << "\n";
    return 0;
}

int run_catalog(bool json) {
    weil::Catalog cat = weil::build_catalog();
    if (json) {
        nlohmann::ordered_json j;
        j["tool"] = "weil";
        j["version"] = weil::version_string;
        j["objects"] = nlohmann::ordered_json::array();
        for (const auto& e : cat.objects())
            j["objects"].push_back({{"name", e.name},
                                    {"object", e.value.str()},
                                    {"dim", e.value.dim()},
                                    {"where", e.provenance}});
        j["maps"] = nlohmann::ordered_json::array();
        for (const auto& e : cat.maps())
            j["maps"].push_back({{"name", e.name},
                                 {"source", e.value.source().str()},
                                 {"target", e.value.target().str()},
                                 {"components", e.value.str()},
                                 {"where", e.provenance}});
        j["corrections"] = nlohmann::ordered_json::array();
        for (const auto& [name, note] : cat.corrections)
            j["corrections"].push_back({{"name", name}, {"note", note}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "objects (" << cat.objects().size() << "):\n";
    for (const auto& e : cat.objects())
        std::cout << "  " << e.name << " = " << e.value.str() << "  dim " << e.value.dim()
                  << "  [" << e.provenance << "]\n";
    std::cout << "maps (" << cat.maps().size() << "):\n";
    for (const auto& e : cat.maps())
        std::cout << "  " << e.name << " : " << e.value.source().str() << " -> "
                  << e.value.target().str() << " = " << e.value.str() << "  [" << e.provenance
                  << "]\n";
    if (!cat.corrections.empty()) {
        std::cout << "corrected readings (" << cat.corrections.size() << "):\n";
        for (const auto& [name, note] : cat.corrections)
            std::cout << "  " << name << ": " << note << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for the Weil-algebra pullbacks, hexagonal limits and "
                 "vanishing-sum identities behind the general Jacobi identity"};
    app.set_version_flag("--version", weil::version_string);
    app.require_subcommand(1);

    bool json = false;
    std::uint64_t seed = weil::VerifyOptions{}.seed;
    int parallel = 1;
    std::string inject;

    CLI::App* verify = app.add_subcommand("verify-paper", "run every catalog verification");
    verify->add_flag("--json", json, "machine-readable report on stdout");
    verify->add_option("--seed", seed, "seed for the randomized mediator reproductions");
    verify->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1, 256));
    verify->add_option("--inject", inject,
                       "fault injection: wrong-apex-g | h31-typo (for exercising failures)");

    CLI::App* run = app.add_subcommand("run", "execute a script of definitions and checks");
    std::string script_path;
    run->add_option("file", script_path, "script file")->required();
    run->add_flag("--json", json, "machine-readable report on stdout");
    run->add_option("--seed", seed, "seed (recorded in the report)");
    run->add_option("--parallel", parallel, "accepted for symmetry; scripts run in order");

    CLI::App* dim = app.add_subcommand("dim", "dimension of a Weil algebra");
    std::string expr;
    dim->add_option("expr", expr, "object expression, e.g. \"D^3 (+) D^3\" or a catalog name")
        ->required();

    CLI::App* catalog = app.add_subcommand("catalog", "list the named objects and maps");
    catalog->add_flag("--json", json, "machine-readable listing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify_paper(json, seed, parallel, inject);
        if (run->parsed()) return run_script(script_path, json, seed, parallel);
        if (dim->parsed()) return run_dim(expr);
        if (catalog->parsed()) return run_catalog(json);
    } catch (const weil::dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const weil::invalid_map_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const weil::object_mismatch_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const weil::mixed_algebra_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const weil::shape_mismatch_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const weil::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidationError;
    }
    return 0;
}
