#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weil/errors.hpp"
#include "weil/infinitesimal_map.hpp"
#include "weil/simplicial.hpp"

namespace weil {

/// The named simplicial objects and infinitesimal maps of the verified
/// development, each entry carrying the statement it comes from. Iteration
/// order is insertion order (deterministic); lookup is by name.
///
/// A handful of entries deviate from the printed statements, where the
/// printed form is inconsistent with the surrounding development; each such
/// correction is listed in `corrections` and exercised by the harness.
class Catalog {
public:
    void add_object(const std::string& name, SimplicialObject obj, const std::string& where) {
        if (object_index_.count(name)) throw error("duplicate catalog object " + name);
        object_index_.emplace(name, objects_.size());
        objects_.push_back({name, std::move(obj), where});
    }

    void add_map(const std::string& name, InfinitesimalMap map, const std::string& where) {
        if (map_index_.count(name)) throw error("duplicate catalog map " + name);
        ValidationReport rep = validate_map(map);
        if (!rep.ok)
            throw invalid_map_error("catalog map " + name + " invalid: " + rep.summary());
        map_index_.emplace(name, maps_.size());
        maps_.push_back({name, std::move(map), where});
    }

    const SimplicialObject& object(const std::string& name) const {
        auto it = object_index_.find(name);
        if (it == object_index_.end()) throw error("no catalog object named " + name);
        return objects_[it->second].value;
    }

    const InfinitesimalMap& map(const std::string& name) const {
        auto it = map_index_.find(name);
        if (it == map_index_.end()) throw error("no catalog map named " + name);
        return maps_[it->second].value;
    }

    bool has_object(const std::string& name) const { return object_index_.count(name) != 0; }

    template <typename T>
    struct Entry {
        std::string name;
        T value;
        std::string provenance;
    };

    const std::vector<Entry<SimplicialObject>>& objects() const { return objects_; }
    const std::vector<Entry<InfinitesimalMap>>& maps() const { return maps_; }

    /// Notes on entries whose printed form had to be corrected.
    std::vector<std::pair<std::string, std::string>> corrections;

private:
    std::vector<Entry<SimplicialObject>> objects_;
    std::vector<Entry<InfinitesimalMap>> maps_;
    std::map<std::string, size_t> object_index_;
    std::map<std::string, size_t> map_index_;
};

/// Build the full catalog. Every map is validated on insertion; any failure
/// aborts with the offending name.
inline Catalog build_catalog() {
    Catalog cat;

    const SimplicialObject D = make_Dn(1);
    const SimplicialObject D2 = make_Dn(2);
    const SimplicialObject D3 = make_Dn(3);
    const SimplicialObject D8 = make_Dn(8);
    const SimplicialObject Dp2 = make_D_paren(2);
    const SimplicialObject Dp3 = make_D_paren(3);
    const SimplicialObject C(3, {Monomial::of({1, 3}), Monomial::of({2, 3})});
    const SimplicialObject E(4, {Monomial::of({1, 3}), Monomial::of({2, 3}), Monomial::of({1, 4}),
                                 Monomial::of({2, 4}), Monomial::of({3, 4})});
    const SimplicialObject F1(4, {Monomial::of({2, 4}), Monomial::of({3, 4})});
    const SimplicialObject F2(4, {Monomial::of({1, 4}), Monomial::of({3, 4})});
    const SimplicialObject F3(4, {Monomial::of({1, 4}), Monomial::of({2, 4})});
    const SimplicialObject P1(3, {Monomial::of({2, 3})});
    const SimplicialObject P2(3, {Monomial::of({1, 3})});
    const SimplicialObject P3(3, {Monomial::of({1, 2})});

    auto pairs = [](std::initializer_list<std::pair<int, int>> ps) {
        std::vector<Monomial> out;
        for (auto [i, j] : ps) out.push_back(Monomial::of({i, j}));
        return out;
    };
    const SimplicialObject E1(7, pairs({{2, 6}, {3, 6}, {4, 6}, {5, 6}, {1, 7}, {2, 7}, {3, 7},
                                        {4, 7}, {5, 7}, {6, 7}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}));
    const SimplicialObject E2(7, pairs({{1, 6}, {3, 6}, {4, 6}, {5, 6}, {1, 7}, {2, 7}, {3, 7},
                                        {4, 7}, {5, 7}, {6, 7}, {1, 4}, {1, 5}, {3, 4}, {3, 5}}));
    const SimplicialObject E3(7, pairs({{1, 6}, {2, 6}, {4, 6}, {5, 6}, {1, 7}, {2, 7}, {3, 7},
                                        {4, 7}, {5, 7}, {6, 7}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}));
    const SimplicialObject G(8, pairs({{2, 4}, {3, 4}, {1, 5}, {3, 5}, {1, 6}, {2, 6}, {4, 5},
                                       {4, 6}, {5, 6}, {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7},
                                       {6, 7}, {1, 8}, {2, 8}, {3, 8}, {4, 8}, {5, 8}, {6, 8},
                                       {7, 8}}));
    const SimplicialObject DD = oplus(D3, D3);

    cat.add_object("D", D, "Section 2");
    cat.add_object("D^2", D2, "Section 2");
    cat.add_object("D^3", D3, "Section 2");
    cat.add_object("D(2)", Dp2, "Section 2");
    cat.add_object("D(3)", Dp3, "Section 2");
    cat.add_object("C", C, "Theorem 3.5 (C = D^3{(1,3),(2,3)}, introduced in Proposition 3.1)");
    cat.add_object("E", E, "Theorem 3.3");
    cat.add_object("D^4{(2,4),(3,4)}", F1, "Proposition 3.7");
    cat.add_object("D^4{(1,4),(3,4)}", F2, "Proposition 3.8");
    cat.add_object("D^4{(1,4),(2,4)}", F3, "Proposition 3.9");
    cat.add_object("D^3{(2,3)}", P1, "Proposition 3.7");
    cat.add_object("D^3{(1,3)}", P2, "Proposition 3.8");
    cat.add_object("D^3{(1,2)}", P3, "Proposition 3.9");
    cat.add_object("E[1]", E1, "Proposition 3.11");
    cat.add_object("E[2]", E2, "Proposition 3.12");
    cat.add_object("E[3]", E3, "Proposition 3.13");
    cat.add_object("G", G, "Theorem 3.14");
    cat.add_object("D^3(+)D^3", DD, "Theorem 3.14");
    cat.add_object("D^8", D8, "fault-injection stand-in for G");

    using M = std::initializer_list<std::pair<long, std::vector<int>>>;
    auto mk = [&](const std::string& name, const SimplicialObject& s, const SimplicialObject& t,
                  std::initializer_list<M> comps, const std::string& where) {
        std::vector<WeilElement> cs;
        for (const auto& terms : comps) cs.push_back(poly(s, terms));
        cat.add_map(name, InfinitesimalMap(s, t, std::move(cs)), where);
    };

    mk("phi", D2, C, {{{1, {1}}}, {{1, {2}}}, {}}, "Proposition 3.1");
    mk("psi", D2, C, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}}}, "Proposition 3.1");
    mk("i_D(2)^D^2", Dp2, D2, {{{1, {1}}}, {{1, {2}}}}, "Theorem 3.3");
    mk("l_1", D2, E, {{{1, {1}}}, {{1, {2}}}, {}, {}}, "Theorem 3.3");
    mk("l_2", D2, E, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}}, {}}, "Theorem 3.3");
    mk("l_3", D2, E, {{{1, {1}}}, {{1, {2}}}, {}, {{1, {1, 2}}}}, "Theorem 3.3");
    mk("m_1", C, E, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}}, "Theorem 3.5");
    mk("m_2", C, E, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}, {-1, {3}}}, {{1, {3}}}},
       "Theorem 3.5");
    mk("m_3", C, E, {{{1, {1}}}, {{1, {2}}}, {}, {{1, {1, 2}}, {-1, {3}}}}, "Theorem 3.5");

    mk("phi_1^3", D3, F1, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}}, "Proposition 3.7");
    mk("psi_1^3", D3, F1, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {{1, {2, 3}}}}, "Proposition 3.7");
    mk("phi_2^3", D3, F2, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}}, "Proposition 3.8");
    mk("psi_2^3", D3, F2, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {{1, {1, 3}}}}, "Proposition 3.8");
    mk("phi_3^3", D3, F3, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}}, "Proposition 3.9");
    mk("psi_3^3", D3, F3, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {{1, {1, 2}}}}, "Proposition 3.9");
    mk("i_D^3{(2,3)}^D^3", P1, D3, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}}, "Proposition 3.7");
    mk("i_D^3{(1,3)}^D^3", P2, D3, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}}, "Proposition 3.8");
    mk("i_D^3{(1,2)}^D^3", P3, D3, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}}, "Proposition 3.9");

    mk("i_14^1", Dp2, F1, {{{1, {1}}}, {}, {}, {{1, {2}}}}, "Notation after Proposition 3.9");
    mk("i_24^2", Dp2, F2, {{}, {{1, {1}}}, {}, {{1, {2}}}}, "Notation after Proposition 3.9");
    mk("i_34^3", Dp2, F3, {{}, {}, {{1, {1}}}, {{1, {2}}}}, "Notation after Proposition 3.9");

    mk("zeta", D, C, {{}, {}, {{1, {1}}}}, "Notation after Proposition 3.1");
    mk("zeta_1", D2, F1, {{{1, {1}}}, {}, {}, {{1, {2}}}}, "Notation after Proposition 3.7");
    mk("zeta_2", D2, F2, {{}, {{1, {1}}}, {}, {{1, {2}}}}, "Notation after Proposition 3.8");
    mk("zeta_3", D2, F3, {{}, {}, {{1, {1}}}, {{1, {2}}}},
       "Notation after Proposition 3.9 (target misprinted there as D^4{(1,4),(3,4)})");

    mk("eta_1^1", F1, E1, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}, {}, {{1, {4}}}, {}},
       "Proposition 3.11");
    mk("eta_2^1", F1, E1,
       {{{1, {1}}}, {}, {}, {{1, {2}}}, {{1, {3}}}, {{1, {4}}}, {{1, {1, 4}}}},
       "Proposition 3.11");
    mk("eta_1^2", F2, E2, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}, {}, {{1, {4}}}, {}},
       "Proposition 3.12");
    // Printed as (0,d2,0,d1,d3,d4,d2d4); slots 4 and 5 are swapped here so that
    // eta_2^2 . phi_2^3 and eta_2^2 . psi_2^3 reproduce the stated iota_3^2 and
    // iota_4^2, which the Lemma 3.15 computation depends on.
    mk("eta_2^2", F2, E2,
       {{}, {{1, {2}}}, {}, {{1, {3}}}, {{1, {1}}}, {{1, {4}}}, {{1, {2, 4}}}},
       "Proposition 3.12 (slots 4,5 corrected)");
    mk("eta_1^3", F3, E3, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}, {}, {{1, {4}}}, {}},
       "Proposition 3.13");
    mk("eta_2^3", F3, E3,
       {{}, {}, {{1, {3}}}, {{1, {1}}}, {{1, {2}}}, {{1, {4}}}, {{1, {3, 4}}}},
       "Proposition 3.13");

    // iota_j^i are defined as the composites eta . phi / eta . psi.
    auto comp = [&](const std::string& name, const std::string& f, const std::string& g,
                    const std::string& where) {
        cat.add_map(name, compose_maps(cat.map(f), cat.map(g)), where);
    };
    comp("iota_1^1", "phi_1^3", "eta_1^1", "Notation after Proposition 3.11");
    comp("iota_2^1", "psi_1^3", "eta_1^1", "Notation after Proposition 3.11");
    comp("iota_3^1", "phi_1^3", "eta_2^1", "Notation after Proposition 3.11");
    comp("iota_4^1", "psi_1^3", "eta_2^1", "Notation after Proposition 3.11");
    comp("iota_1^2", "phi_2^3", "eta_1^2", "Notation after Proposition 3.12");
    comp("iota_2^2", "psi_2^3", "eta_1^2",
         "Notation after Proposition 3.12 (printed with d2d3 where the composite gives d1d3)");
    comp("iota_3^2", "phi_2^3", "eta_2^2", "Notation after Proposition 3.12");
    comp("iota_4^2", "psi_2^3", "eta_2^2", "Notation after Proposition 3.12");
    comp("iota_1^3", "phi_3^3", "eta_1^3", "Notation after Proposition 3.13");
    comp("iota_2^3", "psi_3^3", "eta_1^3", "Notation after Proposition 3.13");
    comp("iota_3^3", "phi_3^3", "eta_2^3", "Notation after Proposition 3.13");
    comp("iota_4^3", "psi_3^3", "eta_2^3", "Notation after Proposition 3.13");

    mk("k_1", E1, G,
       {{{1, {1}}},
        {{1, {2}}, {1, {4}}},
        {{1, {3}}, {1, {5}}},
        {{1, {6}}, {-1, {2, 3}}, {-1, {4, 5}}},
        {{-1, {1, 5}}},
        {{1, {1, 4}}},
        {{1, {7}}, {1, {1, 2, 3}}},
        {{1, {1, 2, 3}}}},
       "Theorem 3.14");
    mk("k_2", E2, G,
       {{{1, {1}}, {1, {5}}},
        {{1, {2}}},
        {{1, {3}}, {1, {4}}},
        {{-1, {2, 3}}},
        {{1, {6}}, {-1, {1, 3}}, {-1, {4, 5}}},
        {{1, {1, 2}}},
        {{1, {2, 4, 5}}},
        {{1, {7}}}},
       "Theorem 3.14");
    // Printed with component 4 = -d4*d5 and component 7 = -d7. That map is not
    // even a morphism into G (d3*d4*d5 is nonzero in W_{E[3]} but (3,4) vanishes
    // in G), and no choice of the remaining components makes the printed form
    // commute with k_1 and k_2 around the hexagon. The components below are the
    // unique ones that do.
    mk("k_3", E3, G,
       {{{1, {1}}, {1, {4}}},
        {{1, {2}}, {1, {5}}},
        {{1, {3}}},
        {{-1, {3, 5}}},
        {{-1, {1, 3}}},
        {{1, {6}}},
        {{-1, {7}}, {1, {1, 2, 3}}, {1, {3, 4, 5}}},
        {{-1, {7}}, {1, {3, 4, 5}}}},
       "Theorem 3.14 (components 4 and 7 corrected)");

    auto par = [&](const std::string& name, const std::string& a, const std::string& b,
                   const std::string& where) {
        cat.add_map(name, oplus_maps({cat.map(a), cat.map(b)}), where);
    };
    par("h_12^1", "iota_2^1", "iota_3^1", "Theorem 3.14");
    par("h_12^2", "iota_4^2", "iota_1^2", "Theorem 3.14");
    par("h_23^2", "iota_2^2", "iota_3^2", "Theorem 3.14");
    par("h_23^3", "iota_4^3", "iota_1^3", "Theorem 3.14");
    par("h_31^3", "iota_2^3", "iota_3^3", "Theorem 3.14");
    // Printed as iota_4^1 (+) iota_1^2, which mixes targets E[1] and E[2];
    // iota_1^1 is the only type-correct reading and matches the other five.
    par("h_31^1", "iota_4^1", "iota_1^1", "Theorem 3.14 (second summand corrected to iota_1^1)");

    mk("s", Dp3, E, {{}, {}, {{1, {1}}, {-1, {2}}}, {{1, {2}}, {-1, {3}}}},
       "proof of Theorem 3.2");
    mk("t", Dp3, G,
       {{}, {}, {}, {}, {}, {}, {{1, {1}}, {-1, {3}}}, {{1, {2}}, {-1, {3}}}},
       "proof of Theorem 3.16");

    mk("e_1", C, E1, {{{1, {1}}}, {}, {}, {}, {}, {{1, {2}}}, {{1, {3}}}},
       "proof of Theorem 3.16, step 1");
    mk("e_2", C, E2, {{}, {{1, {1}}}, {}, {}, {}, {{1, {2}}}, {{1, {3}}}},
       "proof of Theorem 3.16, step 2");
    mk("e_3", C, E3, {{}, {}, {{1, {1}}}, {}, {}, {{1, {2}}}, {{1, {3}}}},
       "proof of Theorem 3.16, step 3");

    cat.corrections = {
        {"eta_2^2", "printed target slots 4,5 carry (d1,d3); the stated iota_3^2/iota_4^2 and the "
                    "Lemma 3.15 substitution computation require (d3,d1)"},
        {"iota_2^2", "printed sixth component d2*d3; the composite eta_1^2 . psi_2^3 and the "
                     "Lemma 3.15 computation give d1*d3"},
        {"h_31^1", "printed as iota_4^1 (+) iota_1^2, a target mismatch (E[1] vs E[2]); corrected "
                   "to iota_4^1 (+) iota_1^1"},
        {"k_3", "printed components 4,7 are (-d4*d5, -d7); the printed map is not a morphism into "
                "G and the hexagon forces (-d3*d5, -d7+d1*d2*d3+d3*d4*d5)"},
        {"zeta_3", "printed target D^4{(1,4),(3,4)}; the surrounding statement fixes "
                   "D^4{(1,4),(2,4)}"},
        {"G", "the coefficient list written for W_G omits the basis monomial X1*X2*X3; "
              "dim W_G = 16, not 15"},
    };
    return cat;
}

}  // namespace weil
