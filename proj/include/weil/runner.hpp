#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weil/dsl.hpp"
#include "weil/harness.hpp"
#include "weil/limits.hpp"

namespace weil::dsl {

/// Execute a parsed script: build its objects and maps, validate every map,
/// then run the check directives. Map validity failures throw
/// invalid_map_error (exit class 3); a failing check is an ordinary failing
/// CheckResult (exit class 1).
class Runner {
public:
    explicit Runner(std::string source_name = "script") : source_(std::move(source_name)) {}

    std::vector<CheckResult> run(const Script& script) {
        std::vector<CheckResult> results;
        int check_no = 0;
        for (const Statement& st : script.statements) {
            std::visit(
                [&](const auto& s) { execute(s, results, check_no); }, st);
        }
        return results;
    }

    const SimplicialObject& object(const std::string& name) const { return objects_.at(name); }
    const InfinitesimalMap& map(const std::string& name) const { return maps_.at(name); }

private:
    void execute(const ObjDef& d, std::vector<CheckResult>&, int&) {
        objects_.emplace(d.name, elaborate(d.expr));
    }

    void execute(const MapDef& d, std::vector<CheckResult>&, int&) {
        SimplicialObject src = elaborate(d.source);
        SimplicialObject tgt = elaborate(d.target);
        std::vector<WeilElement> comps;
        for (const PolyExpr& p : d.components) {
            WeilElement e = WeilElement::zero(src);
            for (const PolyTerm& t : p.terms)
                e = add(e, WeilElement::monomial(src, Monomial::of(t.vars), t.coeff));
            comps.push_back(std::move(e));
        }
        InfinitesimalMap m(src, tgt, std::move(comps));
        require_valid(m, "map " + d.name + " (" + source_ + ":" + d.pos.str() + ")");
        maps_.emplace(d.name, std::move(m));
    }

    void execute(const CheckLimit& c, std::vector<CheckResult>& out, int& check_no) {
        CheckResult r;
        r.id = "check-" + std::to_string(++check_no) + "." +
               (c.pullback ? "pullback" : "limit");
        r.location = source_ + ":" + c.pos.str();
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [diag, cone] = build_problem(c);
            LimitReport rep = is_limit_cone(diag, cone);
            r.pass = rep.is_limit && rep.witness.closed_under_product &&
                     rep.witness.contains_unit;
            r.diagnostic = harness_detail::report_limit(rep).second;
        } catch (const std::exception& e) {
            // structural problems in the directive are validation errors
            throw shape_mismatch_error(r.location + ": " + e.what());
        }
        finish(r, t0, out);
    }

    void execute(const CheckCompose& c, std::vector<CheckResult>& out, int& check_no) {
        CheckResult r;
        r.id = "check-" + std::to_string(++check_no) + ".compose";
        r.location = source_ + ":" + c.pos.str();
        auto t0 = std::chrono::steady_clock::now();
        const InfinitesimalMap& f = maps_.at(c.first);
        const InfinitesimalMap& g = maps_.at(c.second);
        const InfinitesimalMap& want = maps_.at(c.expected);
        InfinitesimalMap got = compose_maps(g, f);  // "f . g" applies g first
        r.pass = got == want;
        r.diagnostic = r.pass ? c.first + " . " + c.second + " == " + c.expected
                              : "composite is " + got.str() + ", expected " + want.str();
        finish(r, t0, out);
    }

    void execute(const CheckZeroSum& c, std::vector<CheckResult>& out, int& check_no) {
        CheckResult r;
        r.id = "check-" + std::to_string(++check_no) + ".zero-sum";
        r.location = source_ + ":" + c.pos.str();
        auto t0 = std::chrono::steady_clock::now();
        const InfinitesimalMap& w = maps_.at(c.witness);
        if (w.source() != make_D_paren(3))
            throw shape_mismatch_error(r.location + ": zero-sum witness must start from D(3)");
        const SimplicialObject D = make_Dn(1);
        std::string diag;
        bool ok = true;
        for (int i = 1; i <= 3; ++i) {
            const InfinitesimalMap& part = maps_.at(c.parts[size_t(i - 1)]);
            if (part.source() != D || part.target() != w.target())
                throw shape_mismatch_error(r.location + ": part " + std::to_string(i) +
                                           " must be a map D -> the witness target");
            std::vector<WeilElement> axis(3, WeilElement::zero(D));
            axis[size_t(i - 1)] = WeilElement::variable(D, 1);
            InfinitesimalMap along = compose_maps(InfinitesimalMap(D, w.source(), axis), w);
            if (along != part) {
                ok = false;
                diag += "axis " + std::to_string(i) + " gives " + along.str() + " not " +
                        part.str() + "; ";
            }
        }
        InfinitesimalMap diagonal(
            D, w.source(), std::vector<WeilElement>(3, WeilElement::variable(D, 1)));
        InfinitesimalMap total = compose_maps(diagonal, w);
        if (!total.is_zero_map()) {
            ok = false;
            diag += "diagonal precomposition is " + total.str() + ", not zero";
        }
        r.pass = ok;
        r.diagnostic = ok ? "axes match the parts and the diagonal vanishes" : diag;
        finish(r, t0, out);
    }

    std::pair<Diagram, Cone> build_problem(const CheckLimit& c) {
        SimplicialObject apex = elaborate(c.apex);
        std::vector<InfinitesimalMap> legs, arrows;
        for (const std::string& n : c.legs) legs.push_back(maps_.at(n));
        for (const std::string& n : c.arrows) arrows.push_back(maps_.at(n));
        for (const InfinitesimalMap& l : legs)
            if (l.target() != apex)
                throw shape_mismatch_error("leg " + l.str() + " does not map into the apex");
        if (c.pullback) {
            if (arrows[0].source() != arrows[1].source())
                throw shape_mismatch_error("pullback arrows must share their source");
            return harness_detail::pullback_problem(apex, legs[0], legs[1], arrows[0],
                                                    arrows[1]);
        }
        if (legs.size() == 3) return harness_detail::hexagon_problem(apex, legs, arrows);
        // general cyclic gluing for n legs
        std::vector<SimplicialObject> nodes;
        for (const auto& l : legs) nodes.push_back(l.source());
        const int n = int(legs.size());
        for (int i = 0; i < n; ++i) nodes.push_back(arrows[size_t(2 * i)].source());
        std::vector<Diagram::Arrow> ar;
        for (int i = 0; i < n; ++i) {
            ar.push_back({i, n + i, induced_hom(arrows[size_t(2 * i)])});
            ar.push_back({(i + 1) % n, n + i, induced_hom(arrows[size_t(2 * i + 1)])});
        }
        Diagram d(std::move(nodes), std::move(ar));
        Cone cone{apex, {}};
        for (int i = 0; i < n; ++i) cone.legs.emplace(i, induced_hom(legs[size_t(i)]));
        return {std::move(d), std::move(cone)};
    }

    SimplicialObject elaborate(const ObjExpr& e) {
        SimplicialObject out = elaborate(e.atoms[0]);
        for (size_t i = 1; i < e.atoms.size(); ++i) out = oplus(out, elaborate(e.atoms[i]));
        return out;
    }

    SimplicialObject elaborate(const ObjAtom& a) {
        switch (a.kind) {
            case ObjAtom::Kind::d_paren:
                return make_D_paren(a.n);
            case ObjAtom::Kind::name:
                return objects_.at(a.name);
            case ObjAtom::Kind::d_power: {
                std::vector<Monomial> forb;
                for (const auto& tup : a.tuples) forb.push_back(Monomial::of(tup));
                return SimplicialObject(a.n, std::move(forb));
            }
        }
        throw error("unreachable");
    }

    static void finish(CheckResult& r, std::chrono::steady_clock::time_point t0,
                       std::vector<CheckResult>& out) {
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
        out.push_back(std::move(r));
    }

    std::string source_;
    std::map<std::string, SimplicialObject> objects_;
    std::map<std::string, InfinitesimalMap> maps_;
};

}  // namespace weil::dsl
