#include "sl3/foamword.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sl3 {

int Generator::degree() const {
    switch (kind) {
        case GenKind::Zip:
        case GenKind::Unzip: return 1;
        case GenKind::DigonRemoval: return -2;
        case GenKind::Shift: return 0;
        case GenKind::Split: return -count * (count - 1) / 2;
        case GenKind::Dots: return 2 * count;
        case GenKind::Identity: return 0;
    }
    return 0;
}

std::string Generator::str() const {
    std::string name;
    switch (kind) {
        case GenKind::Zip: name = "Zip"; break;
        case GenKind::Unzip: name = "Unzip"; break;
        case GenKind::DigonRemoval: name = "DigonRemoval"; break;
        case GenKind::Shift: name = "Shift"; break;
        case GenKind::Split: name = "Split"; break;
        case GenKind::Dots: name = "Dots"; break;
        case GenKind::Identity: return "Identity";
    }
    std::string out = name + "(" + std::to_string(pos);
    if (kind == GenKind::Dots || kind == GenKind::Split) out += "," + std::to_string(count);
    out += ")";
    if (adjoint) out += "*";
    return out;
}

int FoamWord::degree() const {
    int d = 0;
    for (const auto& g : generators) d += g.degree();
    return d;
}

FoamWord FoamWord::adjoint() const {
    FoamWord out{top, bottom, {}, sign};
    // Dots on distinct facets commute; a run of them keeps its order.
    std::vector<Generator> reversed;
    for (std::size_t end = generators.size(); end > 0;) {
        std::size_t begin = end - 1;
        if (generators[begin].kind == GenKind::Dots)
            while (begin > 0 && generators[begin - 1].kind == GenKind::Dots) --begin;
        reversed.insert(reversed.end(), generators.begin() + begin, generators.begin() + end);
        end = begin;
    }
    for (const Generator& original : reversed) {
        Generator g = original;
        switch (g.kind) {
            case GenKind::Zip: g.kind = GenKind::Unzip; break;
            case GenKind::Unzip: g.kind = GenKind::Zip; break;
            case GenKind::DigonRemoval:
            case GenKind::Shift:
            case GenKind::Split: g.adjoint = !g.adjoint; break;
            case GenKind::Dots:
            case GenKind::Identity: break;
        }
        out.generators.push_back(g);
    }
    return out;
}

std::string FoamWord::str() const {
    std::string out;
    for (const auto& g : generators) {
        if (!out.empty()) out += " . ";
        out += g.str();
    }
    return out.empty() ? "Identity" : out;
}

nlohmann::json FoamWord::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators) gens.push_back(g.str());
    return {{"bottom", bottom.str()}, {"top", top.str()}, {"generators", gens}, {"degree", degree()}, {"sign", sign}};
}

LTWord idempotent(const Multipartition3& shape) {
    std::vector<Step> steps;
    for (int r : residue_sequence(superstandard(shape))) steps.push_back({r, 1});
    return LTWord::from_application_order(steps);
}

LadderWeb idempotent_web(const Multipartition3& shape, int n) {
    LTWord word = idempotent(shape);
    if (n == 0) {
        n = std::max(shape.m(), 1);
        for (const Step& s : word.factors) n = std::max(n, s.index + 1);
    }
    auto web = build_web(word, n, shape.m());
    if (!web) throw std::logic_error("idempotent word of " + shape.str() + " kills the highest weight vector");
    return *web;
}

bool orthogonality_check(const Multipartition3& a, const Multipartition3& b) {
    return residue_sequence(superstandard(a)) == residue_sequence(superstandard(b));
}

std::vector<int> dot_placement(const Multipartition3& shape) {
    StdMultitableau3 t = superstandard(shape);
    std::vector<int> out;
    for (int k = 1; k <= t.max_entry(); ++k) {
        Node node = t.nodes_of(k).at(0);
        int mk = static_cast<int>(nodes_after(truncate(t, k).shape(), node, NodeKind::Addable).size());
        // Three or more dots on one facet would kill the idempotent.
        if (mk >= 3) throw std::logic_error("over-dotted idempotent for " + shape.str());
        out.push_back(mk);
    }
    return out;
}

PermutationPath minimal_permutation(const StdMultitableau3& t) {
    if (t.has_repeats()) throw std::domain_error("minimal_permutation needs distinct entries");
    const StdMultitableau3 ref = superstandard(t.shape());
    PermutationPath path;
    StdMultitableau3 x = t;
    for (int j = 1; j <= ref.max_entry(); ++j) {
        int p = x.at(ref.nodes_of(j).at(0));
        for (int a = p - 1; a >= j; --a) {
            Node na = x.nodes_of(a).at(0);
            Node nb = x.nodes_of(a + 1).at(0);
            path.residues.push_back({residue(na, x.m()), residue(nb, x.m())});
            auto rows = x.rows();
            rows[na.comp - 1][na.row - 1][na.col - 1] = a + 1;
            rows[nb.comp - 1][nb.row - 1][nb.col - 1] = a;
            x = StdMultitableau3(rows, x.m());
            if (!x.is_standard()) throw std::logic_error("transposition produced a non-standard tableau " + x.str());
            path.applied.push_back(a);
            path.intermediates.push_back(x);
        }
    }
    path.sigma.assign(path.applied.rbegin(), path.applied.rend());
    return path;
}

TranspositionClass classify_transposition(int a, int b) {
    if (a == b) return {GenKind::DigonRemoval, -2};
    if (a - b == 1 || b - a == 1) return {a < b ? GenKind::Zip : GenKind::Unzip, 1};
    return {GenKind::Shift, 0};
}

FoamWord half_foam(const StdMultitableau3& t, const LTWord& web_word) {
    FoamWord out;
    out.bottom = web_word;
    out.top = idempotent(t.shape());
    for (int v = 1; v <= t.max_entry(); ++v) {
        int mult = t.multiplicity(v);
        if (mult > 1) out.generators.push_back({GenKind::Split, v, mult, false});
    }
    StdMultitableau3 expanded = expand_repeats(t);
    PermutationPath path = minimal_permutation(expanded);
    for (std::size_t i = 0; i < path.applied.size(); ++i) {
        auto [ra, rb] = path.residues[i];
        out.generators.push_back({classify_transposition(ra, rb).kind, path.applied[i], 1, false});
    }
    if (out.generators.empty()) out.generators.push_back({});
    int expected = bkw_degree(t).total - bkw_degree(superstandard(t.shape())).total;
    if (out.degree() != expected)
        throw std::logic_error("half foam of " + t.str() + " has degree " + std::to_string(out.degree()) +
                               ", tableau degrees differ by " + std::to_string(expected));
    return out;
}

FoamWord half_foam(const LadderWeb& w, const Flow& f) { return half_foam(iota(w, f), w.word()); }

namespace {

FoamWord assemble(const Multipartition3& shape, const FoamWord& top_half, const FoamWord& bottom_half) {
    FoamWord out;
    out.bottom = bottom_half.bottom;
    out.top = top_half.bottom;
    out.sign = top_half.sign * bottom_half.sign;
    auto push = [&](const Generator& g) {
        if (g.kind != GenKind::Identity) out.generators.push_back(g);
    };
    for (const auto& g : bottom_half.generators) push(g);
    auto dots = dot_placement(shape);
    for (std::size_t k = 0; k < dots.size(); ++k)
        if (dots[k] > 0) push({GenKind::Dots, static_cast<int>(k) + 1, dots[k], false});
    for (const auto& g : top_half.adjoint().generators) push(g);
    if (out.generators.empty()) out.generators.push_back({});
    return out;
}

}  // namespace

BasisFoam BasisFoam::involution() const { return {shape, bottom_tableau, top_tableau, word.adjoint()}; }

nlohmann::json BasisFoam::to_json() const {
    return {{"shape", shape.to_json()},
            {"top", top_tableau.str()},
            {"bottom", bottom_tableau.str()},
            {"degree", degree()},
            {"word", word.to_json()}};
}

BasisFoam basis_foam(const Multipartition3& shape, const StdMultitableau3& top, const StdMultitableau3& bottom) {
    if (!(top.shape() == shape) || !(bottom.shape() == shape))
        throw std::domain_error("basis foam tableaux do not have shape " + shape.str());
    FoamWord top_half = half_foam(top, grow(top).web.word());
    FoamWord bottom_half = half_foam(bottom, grow(bottom).web.word());
    return {shape, top, bottom, assemble(shape, top_half, bottom_half)};
}

std::vector<BasisFoam> enumerate_cellular_basis(const SignString& s) {
    struct Half {
        StateString state;
        StdMultitableau3 tableau;
        FoamWord foam;
    };
    std::vector<std::vector<Half>> halves;
    for (const auto& b : enumerate_basis(s)) {
        std::vector<Half> hs;
        for (const auto& f : enumerate_flows(b.web)) {
            StdMultitableau3 t = iota(b.web, f);
            hs.push_back({boundary_state(b.web, f), t, half_foam(t, b.web.word())});
        }
        halves.push_back(std::move(hs));
    }
    using Key = std::tuple<std::vector<int>, std::string, std::string>;
    std::vector<std::pair<Key, BasisFoam>> keyed;
    for (const auto& us : halves) {
        for (const auto& vs : halves) {
            for (const auto& u : us) {
                for (const auto& v : vs) {
                    if (u.state != v.state) continue;
                    const Multipartition3& shape = u.tableau.shape();
                    if (!(v.tableau.shape() == shape))
                        throw std::logic_error("flows with equal boundary states have different shapes");
                    BasisFoam bf{shape, u.tableau, v.tableau, assemble(shape, u.foam, v.foam)};
                    keyed.push_back({{residue_sequence(superstandard(shape)), u.tableau.str(), v.tableau.str()}, bf});
                }
            }
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BasisFoam> out;
    out.reserve(keyed.size());
    for (auto& [k, bf] : keyed) out.push_back(std::move(bf));
    return out;
}

LaurentPoly graded_dim(const Multipartition3& a, const Multipartition3& b, int n) {
    if (a.total() != b.total()) throw std::domain_error("graded_dim needs shapes of equal size");
    std::vector<int> da, db;
    for (const auto& t : enumerate_standard(a)) da.push_back(bkw_degree(t).total);
    for (const auto& t : enumerate_standard(b)) db.push_back(bkw_degree(t).total);
    LaurentPoly out;
    for (int x : da)
        for (int y : db) out.add_term(x + y - n, 1);
    return out;
}

LaurentPoly pair_graded_dim(const LadderWeb& u, const LadderWeb& v) {
    if (u.top() != v.top()) throw std::domain_error("webs have different boundaries");
    std::vector<std::pair<StateString, int>> du, dv;
    for (const auto& f : enumerate_flows(u)) du.push_back({boundary_state(u, f), bkw_degree(iota(u, f)).total});
    for (const auto& f : enumerate_flows(v)) dv.push_back({boundary_state(v, f), bkw_degree(iota(v, f)).total});
    LaurentPoly out;
    for (const auto& [ju, x] : du)
        for (const auto& [jv, y] : dv)
            if (ju == jv) out.add_term(x + y - u.n(), 1);
    return out;
}

}  // namespace sl3
