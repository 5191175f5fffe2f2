#include "sl3/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "sl3/bijection.hpp"
#include "sl3/flows.hpp"
#include "sl3/foamword.hpp"

namespace sl3 {

namespace {

using Json = nlohmann::json;

void fail(CheckResult& r, Json payload, std::string detail) {
    if (!r.ok) return;
    r.ok = false;
    r.counterexample = std::move(payload);
    r.detail = std::move(detail);
}

void check_roundtrip(CheckResult& r, const SignString& s) {
    std::map<StdMultitableau3, std::pair<std::string, std::size_t>> seen;
    for (const auto& b : enumerate_basis(s)) {
        auto flows = enumerate_flows(b.web);
        for (std::size_t i = 0; i < flows.size(); ++i) {
            ++r.units;
            auto payload = web_flow_payload(s, b.web, flows[i].moved);
            StdMultitableau3 t;
            try {
                t = iota(b.web, flows[i]);
                auto g = grow(t, s.size());
                if (!(g.web == b.web) || !(g.flow == flows[i])) fail(r, payload, "grow(iota) differs for " + t.str());
            } catch (const std::exception& e) {
                fail(r, payload, e.what());
                continue;
            }
            auto [it, fresh] = seen.emplace(t, std::make_pair(b.web.word().str(), i));
            if (!fresh) fail(r, payload, "iota is not injective at " + t.str());
        }
    }
}

void check_degree(CheckResult& r, const SignString& s) {
    for (const auto& b : enumerate_basis(s)) {
        for (const auto& f : enumerate_flows(b.web)) {
            ++r.units;
            auto t = iota(b.web, f);
            int d = bkw_degree(t).total, wt = weight(b.web, f);
            if (d != -wt)
                fail(r, web_flow_payload(s, b.web, f.moved),
                     "degree " + std::to_string(d) + " but weight " + std::to_string(wt));
        }
    }
}

void check_unitriangular(CheckResult& r, const SignString& s) {
    for (const auto& b : enumerate_basis(s)) {
        ++r.units;
        Flow canon = canonical_flow(b.web, b.tableau);
        StateString top = boundary_state(b.web, canon);
        auto te = tensor_expansion(b.web);
        Json payload = web_flow_payload(s, b.web, canon.moved);
        if (!(te.at(top) == LaurentPoly::constant(1))) fail(r, payload, "leading coefficient " + te.at(top).str());
        for (const auto& [j, c] : te)
            if (j != top && !c.is_zero() && !(j < top)) fail(r, payload, "coefficient above the leading state at " + state_str(j));
    }
}

void check_gdf(CheckResult& r, const SignString& s) {
    auto basis = enumerate_basis(s);
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            ++r.units;
            LaurentPoly sum;
            auto fu = enumerate_flows(u.web), fv = enumerate_flows(v.web);
            for (const auto& a : fu)
                for (const auto& b : fv)
                    if (boundary_state(u.web, a) == boundary_state(v.web, b))
                        sum.add_term(bkw_degree(iota(u.web, a)).total + bkw_degree(iota(v.web, b)).total, 1);
            LaurentPoly rhs = bracket(close(u.web, v.web)).shifted(s.size());
            if (!(sum == rhs))
                fail(r, Json{{"signs", s.str()}, {"u", u.web.word().str()}, {"v", v.web.word().str()}},
                     "sum " + sum.str() + " but q^n bracket " + rhs.str());
        }
    }
}

void check_homogeneity(CheckResult& r, const SignString& s) {
    for (const auto& bf : enumerate_cellular_basis(s)) {
        ++r.units;
        int expected = bkw_degree(bf.top_tableau).total + bkw_degree(bf.bottom_tableau).total;
        if (bf.degree() != expected) fail(r, bf.to_json(), "degree " + std::to_string(bf.degree()));
    }
}

void check_cellular(CheckResult& r, const SignString& s) {
    auto basis = enumerate_cellular_basis(s);
    std::set<std::pair<std::string, std::string>> index;
    for (const auto& bf : basis) index.insert({bf.top_tableau.str(), bf.bottom_tableau.str()});
    if (index.size() != basis.size()) fail(r, Json{{"signs", s.str()}}, "repeated cellular index");
    for (const auto& bf : basis) {
        ++r.units;
        auto star = bf.involution();
        if (!(star.top_tableau == bf.bottom_tableau) || !(star.bottom_tableau == bf.top_tableau) ||
            star.degree() != bf.degree() || !(star.involution() == bf) ||
            !index.count({star.top_tableau.str(), star.bottom_tableau.str()}))
            fail(r, bf.to_json(), "involution does not act on the index set");
    }
    mpz_class dim = 0;
    auto webs = enumerate_basis(s);
    for (const auto& u : webs)
        for (const auto& v : webs) dim += bracket(close(u.web, v.web)).at_one();
    if (dim != static_cast<unsigned long>(basis.size()))
        fail(r, Json{{"signs", s.str()}}, "basis has " + std::to_string(basis.size()) + " elements, dimension " + dim.get_str());
}

void check_brackets(CheckResult& r, const SignString& s) {
    auto basis = enumerate_basis(s);
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            ++r.units;
            auto c = close(u.web, v.web);
            auto br = bracket(c);
            Json payload{{"signs", s.str()}, {"u", u.web.word().str()}, {"v", v.web.word().str()}};
            if (!br.is_bar_symmetric()) fail(r, payload, "bracket " + br.str() + " is not bar symmetric");
            if (br.at_one() != static_cast<unsigned long>(enumerate_closed_flows(c).size()))
                fail(r, payload, "bracket at q=1 differs from the flow count");
        }
    }
}

void check_ltlength(CheckResult& r, const SignString& s) {
    auto basis = enumerate_basis(s);
    for (const auto& b : basis) {
        ++r.units;
        if (b.web.word().total_length() != basis.front().web.word().total_length())
            fail(r, Json{{"signs", s.str()}, {"word", b.web.word().str()}}, "total lengths differ");
    }
}

}  // namespace

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {"roundtrip",   "degree",   "unitriangular", "gdf",
                                                   "homogeneity", "cellular", "brackets",      "ltlength"};
    return names;
}

CheckResult check_property(const std::string& property, const SignString& s) {
    CheckResult r;
    r.property = property;
    r.signs = s.str();
    try {
        if (property == "roundtrip") check_roundtrip(r, s);
        else if (property == "degree") check_degree(r, s);
        else if (property == "unitriangular") check_unitriangular(r, s);
        else if (property == "gdf") check_gdf(r, s);
        else if (property == "homogeneity") check_homogeneity(r, s);
        else if (property == "cellular") check_cellular(r, s);
        else if (property == "brackets") check_brackets(r, s);
        else if (property == "ltlength") check_ltlength(r, s);
        else throw std::invalid_argument("unknown property '" + property + "'");
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        fail(r, Json{{"signs", s.str()}}, e.what());
    }
    return r;
}

nlohmann::json web_flow_payload(const SignString& s, const LadderWeb& w, const std::vector<int>& moved) {
    return {{"signs", s.str()}, {"word", w.word().str()}, {"n", w.n()}, {"level", w.level()}, {"flow", moved}};
}

}  // namespace sl3
