#include "sl3/flows.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace sl3 {

int popcount(ColorSet s) { return std::popcount(static_cast<unsigned>(s)); }

std::string colors_str(ColorSet s) {
    std::string out = "{";
    bool first = true;
    for (int c = 1; c <= 3; ++c)
        if (s & (1 << (c - 1))) {
            if (!first) out += ",";
            out += std::to_string(c);
            first = false;
        }
    return out + "}";
}

std::string state_str(const StateString& j) {
    std::string out = "(";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? "," : "") + std::to_string(j[k]);
    return out + ")";
}

int state_of(ColorSet s) {
    switch (s) {
        case 0b001: return 1;
        case 0b010: return 0;
        case 0b100: return -1;
        case 0b011: return 1;
        case 0b101: return 0;
        case 0b110: return -1;
        default: throw std::domain_error("colour set " + colors_str(s) + " carries no state");
    }
}

nlohmann::json Flow::to_json() const {
    auto sets = [](const std::vector<ColorSet>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (ColorSet s : v) {
            nlohmann::json cs = nlohmann::json::array();
            for (int c = 1; c <= 3; ++c)
                if (s & (1 << (c - 1))) cs.push_back(c);
            a.push_back(cs);
        }
        return a;
    };
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : layers) ls.push_back(sets(l));
    return {{"moved", sets(moved)}, {"layers", ls}};
}

namespace {

std::vector<ColorSet> initial_layer(const LadderWeb& w) {
    std::vector<ColorSet> l(w.n(), 0);
    for (int k = 0; k < w.level(); ++k) l[k] = 0b111;
    return l;
}

}  // namespace

Flow flow_from_moves(const LadderWeb& w, const std::vector<ColorSet>& moved) {
    if (moved.size() != w.steps().size()) throw std::domain_error("flow has the wrong number of rungs");
    Flow f;
    f.moved = moved;
    f.layers.push_back(initial_layer(w));
    for (std::size_t k = 0; k < moved.size(); ++k) {
        const Step& s = w.steps()[k];
        auto layer = f.layers.back();
        ColorSet r = moved[k];
        if (popcount(r) != s.power) throw std::domain_error("rung carries the wrong number of colours");
        if ((layer[s.index - 1] & r) != r || (layer[s.index] & r) != 0)
            throw std::domain_error("colours " + colors_str(r) + " cannot move at rung " + std::to_string(k + 1));
        layer[s.index - 1] &= ~r;
        layer[s.index] |= r;
        f.layers.push_back(layer);
    }
    return f;
}

bool is_flow(const LadderWeb& w, const Flow& f) {
    try {
        return flow_from_moves(w, f.moved) == f;
    } catch (const std::domain_error&) {
        return false;
    }
}

std::vector<Flow> enumerate_flows(const LadderWeb& w) {
    std::vector<Flow> out;
    const auto& steps = w.steps();
    Flow cur;
    cur.layers.push_back(initial_layer(w));
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == steps.size()) {
            out.push_back(cur);
            return;
        }
        const Step& s = steps[k];
        const auto layer = cur.layers.back();
        ColorSet avail = layer[s.index - 1] & ~layer[s.index];
        for (ColorSet r = 1; r < 8; ++r) {
            if ((r & avail) != r || popcount(r) != s.power) continue;
            auto next = layer;
            next[s.index - 1] &= ~r;
            next[s.index] |= r;
            cur.moved.push_back(r);
            cur.layers.push_back(next);
            rec(k + 1);
            cur.layers.pop_back();
            cur.moved.pop_back();
        }
    };
    rec(0);
    return out;
}

StateString boundary_state(const LadderWeb& w, const Flow& f) {
    (void)w;
    StateString j;
    for (ColorSet s : f.top())
        if (s != 0 && s != 0b111) j.push_back(state_of(s));
    return j;
}

int rung_weight(const LadderWeb& w, const Flow& f, int k) {
    const Step& s = w.steps().at(k - 1);
    const auto& before = f.layers.at(k - 1);
    ColorSet r = f.moved.at(k - 1);
    int e = 0;
    for (int c = 1; c <= 3; ++c) {
        if (!(r & (1 << (c - 1)))) continue;
        for (int d = c + 1; d <= 3; ++d) {
            int bit = 1 << (d - 1);
            if (r & bit) continue;
            int h = ((before[s.index - 1] & bit) ? 1 : 0) - ((before[s.index] & bit) ? 1 : 0);
            e -= h;
        }
    }
    return e;
}

int weight(const LadderWeb& w, const Flow& f) {
    int total = 0;
    for (int k = 1; k <= static_cast<int>(w.steps().size()); ++k) total += rung_weight(w, f, k);
    return total;
}

ColTableau flow_to_colstrict(const LadderWeb& w, const Flow& f) {
    ColTableau t;
    std::array<std::vector<int>, 3> cols;
    for (int strand = 1; strand <= w.n(); ++strand)
        for (int c = 1; c <= 3; ++c)
            if (f.top()[strand - 1] & (1 << (c - 1))) cols[c - 1].push_back(strand);
    for (int c = 0; c < 3; ++c)
        if (static_cast<int>(cols[c].size()) != w.level()) throw std::logic_error("colour count is not conserved");
    for (int r = 0; r < w.level(); ++r) t.rows.push_back({cols[0][r], cols[1][r], cols[2][r]});
    return t;
}

Flow canonical_flow(const LadderWeb& w, const ColTableau& t) {
    std::vector<Flow> hits;
    for (auto& f : enumerate_flows(w))
        if (flow_to_colstrict(w, f) == t) hits.push_back(std::move(f));
    if (hits.size() != 1)
        throw std::logic_error("web " + w.word().str() + " has " + std::to_string(hits.size()) +
                               " flows with tableau " + t.str());
    return hits.front();
}

ClosedWeb close(const LadderWeb& u, const LadderWeb& v) {
    if (u.n() != v.n() || u.top() != v.top()) throw std::domain_error("webs do not share a boundary");
    return {u, v};
}

std::vector<ClosedFlow> enumerate_closed_flows(const ClosedWeb& c) {
    auto fu = enumerate_flows(c.lower);
    auto fv = enumerate_flows(c.upper);
    std::map<std::vector<ColorSet>, std::vector<std::size_t>> by_top;
    for (std::size_t b = 0; b < fv.size(); ++b) by_top[fv[b].top()].push_back(b);
    std::vector<ClosedFlow> out;
    for (std::size_t a = 0; a < fu.size(); ++a) {
        auto it = by_top.find(fu[a].top());
        if (it == by_top.end()) continue;
        int wa = weight(c.lower, fu[a]);
        for (std::size_t b : it->second) out.push_back({a, b, wa + weight(c.upper, fv[b]) + c.n()});
    }
    return out;
}

LaurentPoly bracket(const ClosedWeb& c) {
    LaurentPoly p;
    for (const auto& cf : enumerate_closed_flows(c)) p.add_term(-cf.weight, 1);
    return p;
}

std::map<StateString, LaurentPoly> tensor_expansion(const LadderWeb& w) {
    std::map<StateString, LaurentPoly> out;
    for (const auto& f : enumerate_flows(w)) {
        int wt = weight(w, f);
        out[boundary_state(w, f)].add_term(-wt, (wt % 2 == 0) ? 1 : -1);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace sl3
