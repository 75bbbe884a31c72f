// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] (optional) is the path to the CLI binary, used by the last
// criterion; when absent that criterion is a failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <optional>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "weil/harness.hpp"

using namespace weil;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what, const std::function<std::string()>& body) {
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
        std::printf("PASS  criterion-%d  %s\n", n, what.c_str());
    } else {
        ++g_failures;
        std::printf("FAIL  criterion-%d  %s\n      %s\n", n, what.c_str(), problem.c_str());
    }
}

double ms_of(const std::vector<CheckResult>& rs, const std::string& id, std::string& problem) {
    for (const CheckResult& r : rs) {
        if (r.id != id) continue;
        if (!r.pass) problem += id + " failed: " + r.diagnostic + "; ";
        return r.ms;
    }
    problem += "missing check " + id + "; ";
    return 0.0;
}

int brute_force_dim(int n, const std::vector<Monomial>& fam) {
    int count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool bad = false;
        for (const Monomial& f : fam)
            if ((f.bits() & mask) == f.bits()) { bad = true; break; }
        if (!bad) ++count;
    }
    return count;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.output.append(buf, got);
    int status = pclose(p);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

fs::path write_temp_script(const std::string& name, const std::string& body) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const Catalog cat = build_catalog();

    criterion(1, "dimension table by enumeration (dim W_E = 6, dim W_E[i] = 17, dim W_G = 16)",
              [&] {
        auto t0 = std::chrono::steady_clock::now();
        std::string problem;
        const std::pair<const char*, int> rows[] = {{"E", 6},    {"E[1]", 17}, {"E[2]", 17},
                                                    {"E[3]", 17}, {"G", 16},   {"C", 5},
                                                    {"D^3(+)D^3", 15}};
        for (auto [name, want] : rows) {
            const SimplicialObject& o = cat.object(name);
            if (o.dim() != want)
                problem += std::string(name) + " dim " + std::to_string(o.dim()) + " != " +
                           std::to_string(want) + "; ";
            if (brute_force_dim(o.arity(), o.forbidden()) != want)
                problem += std::string(name) + " brute-force disagrees; ";
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              t0).count();
        if (ms >= 100.0) problem += "took " + std::to_string(ms) + " ms (budget 100); ";
        return problem;
    });

    auto primordial = verify_primordial(cat);
    auto general = verify_general(cat);

    criterion(2, "all seven pullback squares certify, each under 0.5 s", [&] {
        std::string problem;
        double mx = ms_of(primordial, "prop-3.1.pullback", problem);
        for (const char* id : {"prop-3.7.pullback", "prop-3.8.pullback", "prop-3.9.pullback",
                               "prop-3.11.pullback", "prop-3.12.pullback", "prop-3.13.pullback"})
            mx = std::max(mx, ms_of(general, id, problem));
        if (mx >= 500.0) problem += "slowest took " + std::to_string(mx) + " ms; ";
        return problem;
    });

    criterion(3, "all three hexagonal limits certify, each under 2 s", [&] {
        std::string problem;
        double mx = std::max(ms_of(primordial, "lem-3.4.limit", problem),
                             ms_of(primordial, "lem-3.6.limit", problem));
        mx = std::max(mx, ms_of(general, "lem-3.15.limit", problem));
        if (mx >= 2000.0) problem += "slowest took " + std::to_string(mx) + " ms; ";
        return problem;
    });

    criterion(4, "mediator closed forms reproduced on 120 random compatible tuples each", [&] {
        VerifyOptions opt;
        opt.mediator_tuples = 120;
        std::string problem;
        VerifySummary sum = verify_all(cat, opt);
        ms_of(sum.results, "lem-3.4.mediator-formula", problem);
        ms_of(sum.results, "lem-3.15.mediator-formula", problem);
        return problem;
    });

    criterion(5, "primordial vanishing sum: composites, witness, diagonal, under 0.1 s", [&] {
        std::string problem;
        double total = 0.0;
        for (const char* id : {"thm-3.2.composite-1", "thm-3.2.composite-2",
                               "thm-3.2.composite-3", "thm-3.2.witness-valid", "thm-3.2.axes",
                               "thm-3.2.diagonal"})
            total += ms_of(primordial, id, problem);
        if (total >= 100.0) problem += "took " + std::to_string(total) + " ms; ";
        return problem;
    });

    criterion(6, "general vanishing sum: step composites, witness, diagonal, under 0.5 s", [&] {
        std::string problem;
        double total = 0.0;
        for (const char* id : {"thm-3.16.step-1", "thm-3.16.step-2", "thm-3.16.step-3",
                               "thm-3.16.witness-valid", "thm-3.16.axes", "thm-3.16.diagonal"})
            total += ms_of(general, id, problem);
        if (total >= 500.0) problem += "took " + std::to_string(total) + " ms; ";
        return problem;
    });

    criterion(7, "property suites: functoriality x200, hom laws exhaustive, oplus laws x100",
              [&] {
        std::string problem;
        std::mt19937_64 eng(4242);
        auto upto = [&](int lo, int hi) {
            return std::uniform_int_distribution<int>(lo, hi)(eng);
        };
        auto rnd_obj = [&] {
            int n = upto(1, 3);
            std::vector<Monomial> forb;
            for (int k = upto(0, 2); k > 0; --k) {
                int i = upto(1, n), j = upto(1, n);
                if (i != j) forb.push_back(Monomial::of({std::min(i, j), std::max(i, j)}));
            }
            return SimplicialObject(n, forb);
        };
        auto rnd_map = [&](const SimplicialObject& src,
                           const SimplicialObject& tgt) -> std::optional<InfinitesimalMap> {
            for (int attempt = 0; attempt < 60; ++attempt) {
                std::vector<WeilElement> comps;
                for (int j = 0; j < tgt.arity(); ++j) {
                    WeilElement e = WeilElement::zero(src);
                    for (const Monomial& m : src.basis()) {
                        if (m.is_unit() || m.degree() > 3) continue;
                        if (upto(0, 3) == 0)
                            e = add(e, WeilElement::monomial(src, m, rat(upto(-2, 2))));
                    }
                    comps.push_back(std::move(e));
                }
                InfinitesimalMap f(src, tgt, std::move(comps));
                if (validate_map(f).ok) return f;
            }
            return std::nullopt;
        };
        int pairs = 0;
        while (pairs < 200) {
            SimplicialObject A = rnd_obj(), B = rnd_obj(), Cc = rnd_obj();
            auto f = rnd_map(A, B);
            auto g = rnd_map(B, Cc);
            if (!f || !g) continue;
            if (!hom_equal(induced_hom(compose_maps(*f, *g)),
                           hom_compose(induced_hom(*f), induced_hom(*g)))) {
                problem += "functoriality failed on a random pair; ";
                break;
            }
            ++pairs;
        }
        for (const auto& e : cat.maps()) {
            AlgebraHom h = induced_hom(e.value);
            if (!h.is_unital() || !h.is_multiplicative()) {
                problem += "catalog hom " + e.name + " fails algebra laws; ";
                break;
            }
        }
        int objs = 0;
        while (objs < 100) {
            int n1 = upto(1, 3), n2 = upto(1, 3), n3 = upto(1, 2);
            SimplicialObject a = make_Dn(n1), b = rnd_obj(), c = make_D_paren(n3);
            (void)n2;
            if (a.arity() + b.arity() + c.arity() > 8) continue;
            if (oplus(a, b).dim() != a.dim() + b.dim() - 1)
                problem += "oplus dimension law failed; ";
            if (oplus(oplus(a, b), c) != oplus(a, oplus(b, c)))
                problem += "oplus associativity failed; ";
            ++objs;
        }
        return problem;
    });

    criterion(8, "fault injection: wrong apex fails only Lemma 3.15; printed h_31^1 is a type "
                 "error", [&] {
        std::string problem;
        auto injected = verify_general(cat, 1, Inject::wrong_apex_g);
        int failed = 0;
        for (const CheckResult& r : injected)
            if (!r.pass) {
                ++failed;
                if (r.id != "lem-3.15.limit") problem += "unexpected failure " + r.id + "; ";
            }
        if (failed != 1) problem += std::to_string(failed) + " failures, expected 1; ";
        bool threw = false;
        try {
            oplus_maps({cat.map("iota_4^1"), cat.map("iota_1^2")});
        } catch (const object_mismatch_error&) {
            threw = true;
        }
        if (!threw) problem += "printed h_31^1 reading was not rejected; ";
        return problem;
    });

    criterion(9, "CLI contract: verify-paper green, exit codes 1/2/3, full run under 10 s", [&] {
        if (cli.empty()) return std::string("no CLI path given");
        std::string problem;
        auto t0 = std::chrono::steady_clock::now();
        CommandResult main_run = run_command(cli + " verify-paper --json");
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              t0).count();
        if (main_run.exit_code != 0)
            problem += "verify-paper exit " + std::to_string(main_run.exit_code) + "; ";
        try {
            auto j = nlohmann::json::parse(main_run.output);
            for (const auto& c : j.at("checks"))
                if (c.at("status") != "pass")
                    problem += c.at("id").get<std::string>() + " not pass; ";
            if (j.at("checks").size() < 25) problem += "suspiciously few checks; ";
        } catch (const std::exception& e) {
            problem += std::string("bad JSON: ") + e.what() + "; ";
        }
        if (ms >= 10000.0) problem += "took " + std::to_string(ms) + " ms; ";

        // the report is stable under --parallel: same ids, order and statuses
        CommandResult par = run_command(cli + " verify-paper --json --parallel 4");
        try {
            auto a = nlohmann::json::parse(main_run.output).at("checks");
            auto b = nlohmann::json::parse(par.output).at("checks");
            if (a.size() != b.size()) problem += "parallel run changed the check count; ";
            for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
                if (a[i].at("id") != b[i].at("id") || a[i].at("status") != b[i].at("status")) {
                    problem += "parallel run reordered or changed checks; ";
                    break;
                }
        } catch (const std::exception& e) {
            problem += std::string("bad JSON from parallel run: ") + e.what() + "; ";
        }

        fs::path bad_syntax = write_temp_script("weil_parse_error.weil", "obj X = D^\n");
        fs::path bad_map =
            write_temp_script("weil_invalid_map.weil", "map bad : D^2 -> D = (d1 + d2)\n");
        fs::path bad_check = write_temp_script(
            "weil_failing_check.weil",
            "obj C = D^3 { (1,3) (2,3) }\n"
            "map phi : D^2 -> C = (d1, d2, 0)\n"
            "map incl : D(2) -> D^2 = (d1, d2)\n"
            "check pullback { apex = C; legs = [phi, phi]; arrows = [incl, incl] }\n");
        const std::pair<fs::path, int> runs[] = {{bad_syntax, 2}, {bad_map, 3}, {bad_check, 1}};
        for (const auto& [path, want] : runs) {
            CommandResult r = run_command(cli + " run " + path.string());
            if (r.exit_code != want)
                problem += path.filename().string() + " exit " + std::to_string(r.exit_code) +
                           " != " + std::to_string(want) + "; ";
        }
        return problem;
    });

    if (g_failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
