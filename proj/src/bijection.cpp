#include "sl3/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sl3 {

namespace {

const char* family_name(MoveFamily f) {
    switch (f) {
        case MoveFamily::Arc: return "Arc";
        case MoveFamily::Y: return "Y";
        case MoveFamily::H: return "H";
        case MoveFamily::ShiftRight: return "right";
        case MoveFamily::ShiftLeft: return "left";
        case MoveFamily::EmptyShift: return "empty";
        case MoveFamily::Cap: return "cap";
    }
    return "?";
}

ColorSet bit(int c) { return 1 << (c - 1); }

// Index 0,1,2 for colours 1,0,-1.
int slot(int color) { return 1 - color; }

ColorSet lookup(const int (&table)[3][2], const MoveKind& k) { return table[slot(*k.color)][k.primed ? 1 : 0]; }

}  // namespace

int MoveKind::power() const {
    switch (family) {
        case MoveFamily::Arc: return type == 'a' ? 2 : 1;
        case MoveFamily::Y:
        case MoveFamily::H: return 1;
        case MoveFamily::ShiftRight: return type == 'a' ? 1 : 2;
        case MoveFamily::ShiftLeft: return type == 'a' ? 2 : 1;
        case MoveFamily::EmptyShift: return 3;
        case MoveFamily::Cap: return type == 'a' ? 1 : 2;
    }
    return 0;
}

std::string MoveKind::str() const {
    std::string out = family_name(family);
    out += "(";
    out += type;
    if (color) {
        out += "," + std::to_string(*color);
        if (primed) out += "'";
    }
    return out + ")";
}

ColorSet placement_components(const MoveKind& k) {
    // Rows are colours 1, 0, -1; columns unprimed, primed.
    static const int arc_a[3][2] = {{0b110, 0}, {0b101, 0}, {0b011, 0}};
    static const int arc_b[3][2] = {{0b100, 0}, {0b010, 0}, {0b001, 0}};
    static const int ya[3][2] = {{0b010, 0b001}, {0b100, 0b001}, {0b100, 0b010}};
    static const int yb[3][2] = {{0b100, 0b010}, {0b100, 0b001}, {0b010, 0b001}};
    static const int hb[3][2] = {{0b010, 0b100}, {0b001, 0b100}, {0b001, 0b010}};
    static const int right_a[3][2] = {{0b001, 0}, {0b010, 0}, {0b100, 0}};
    static const int right_b[3][2] = {{0b011, 0}, {0b101, 0}, {0b110, 0}};
    static const int left_a[3][2] = {{0b110, 0}, {0b101, 0}, {0b011, 0}};
    static const int left_b[3][2] = {{0b100, 0}, {0b010, 0}, {0b001, 0}};
    switch (k.family) {
        case MoveFamily::Arc: return lookup(k.type == 'a' ? arc_a : arc_b, k);
        case MoveFamily::Y: return lookup(k.type == 'a' ? ya : yb, k);
        case MoveFamily::H: return lookup(k.type == 'a' ? ya : hb, k);
        case MoveFamily::ShiftRight: return lookup(k.type == 'a' ? right_a : right_b, k);
        case MoveFamily::ShiftLeft: return lookup(k.type == 'a' ? left_a : left_b, k);
        case MoveFamily::EmptyShift: return 0b111;
        case MoveFamily::Cap: {
            // Caps carry the colours of the moving strand.
            static const int cap_a[3][2] = {{0b001, 0}, {0b010, 0}, {0b100, 0}};
            static const int cap_b[3][2] = {{0b011, 0}, {0b101, 0}, {0b110, 0}};
            return lookup(k.type == 'a' ? cap_a : cap_b, k);
        }
    }
    return 0;
}

MoveKind classify_step(const LadderWeb& w, const Flow& f, int k) {
    const Step& s = w.steps().at(k - 1);
    const auto& before = f.layers.at(k - 1);
    const auto& after = f.layers.at(k);
    const ColorSet r = f.moved.at(k - 1);
    const int a = popcount(before[s.index - 1]);
    const int b = popcount(before[s.index]);
    const int j = s.power;
    MoveKind kind;
    auto smaller_of = [](ColorSet pool, ColorSet chosen) {
        for (int c = 1; c <= 3; ++c)
            if (pool & bit(c)) return chosen == bit(c);
        return false;
    };
    if (a == 3 && b == 0) {
        if (j == 3) {
            kind = {MoveFamily::EmptyShift, 'a', std::nullopt, false};
        } else {
            kind = {MoveFamily::Arc, j == 2 ? 'a' : 'b', state_of(after[s.index - 1]), false};
        }
    } else if (a == 1 && b == 0 && j == 1) {
        kind = {MoveFamily::ShiftRight, 'a', state_of(r), false};
    } else if (a == 2 && b == 0 && j == 2) {
        kind = {MoveFamily::ShiftRight, 'b', state_of(r), false};
    } else if (a == 3 && b == 1 && j == 2) {
        kind = {MoveFamily::ShiftLeft, 'a', state_of(after[s.index - 1]), false};
    } else if (a == 3 && b == 2 && j == 1) {
        kind = {MoveFamily::ShiftLeft, 'b', state_of(after[s.index - 1]), false};
    } else if (a == 2 && j == 1 && (b == 0 || b == 1 || b == 2)) {
        ColorSet left = before[s.index - 1];
        kind = {b == 1 ? MoveFamily::H : MoveFamily::Y, 'a', state_of(left), smaller_of(left, r)};
    } else if ((a == 3 || a == 1) && b == 1 && j == 1) {
        ColorSet d = before[s.index];
        kind = {MoveFamily::Y, 'b', state_of(d), smaller_of(0b111 & ~d, r)};
    } else if (a == 1 && b == 2 && j == 1) {
        kind = {MoveFamily::Cap, 'a', state_of(r), false};
    } else if (a == 2 && b == 1 && j == 2) {
        kind = {MoveFamily::Cap, 'b', state_of(r), false};
    } else {
        throw std::logic_error("rung " + std::to_string(k) + " with weights (" + std::to_string(a) + "," +
                               std::to_string(b) + ") and power " + std::to_string(j) + " matches no move");
    }
    if (placement_components(kind) != r)
        throw std::logic_error("move " + kind.str() + " at rung " + std::to_string(k) + " carries " + colors_str(r) +
                               " but the placement table says " + colors_str(placement_components(kind)));
    return kind;
}

StdMultitableau3 iota(const LadderWeb& w, const Flow& f) {
    const int m = w.level();
    StdMultitableau3 t({}, m);
    for (int k = 1; k <= static_cast<int>(w.steps().size()); ++k) {
        const Step& s = w.steps()[k - 1];
        ColorSet comps = placement_components(classify_step(w, f, k));
        for (int c = 1; c <= 3; ++c) {
            if (!(comps & bit(c))) continue;
            auto nodes = addable_nodes(t.shape(), s.index);
            auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.comp == c; });
            if (it == nodes.end())
                throw std::logic_error("no addable node of residue " + std::to_string(s.index) + " in component " +
                                       std::to_string(c) + " at step " + std::to_string(k));
            t = t.with_entry(*it, k);
        }
    }
    // Keep the residue shift of the level even when trailing rows are empty.
    return StdMultitableau3(t.rows(), m);
}

std::string WeightDiagram::str() const {
    std::string out = "x";
    for (ColorSet s : strands) {
        out += " ";
        if (s == 0) {
            out += "o";
        } else if (s == 0b111) {
            out += "x";
        } else {
            out += std::to_string(state_of(s));
            if (popcount(s) == 2) out += "*";
        }
    }
    return out + " o";
}

WeightDiagram weight_diagram(const Multipartition3& shape, int n) {
    WeightDiagram d;
    d.m = shape.m();
    d.strands.assign(n, 0);
    for (int c = 1; c <= 3; ++c) {
        const auto& p = shape.comp(c);
        if (static_cast<int>(p.size()) > d.m) throw std::domain_error("component has more rows than the residue shift");
        for (int r = 1; r <= d.m; ++r) {
            int len = r <= static_cast<int>(p.size()) ? p[r - 1] : 0;
            int position = len - (r - 1);
            int strand = position + d.m;
            if (strand < 1 || strand > n) throw std::domain_error("k-vector position outside the strand range");
            d.strands[strand - 1] |= bit(c);
        }
    }
    return d;
}

namespace {

int needed_strands(const StdMultitableau3& t) {
    int n = t.m();
    for (int c = 1; c <= 3; ++c) {
        const auto& p = t.shape().comp(c);
        if (!p.empty()) n = std::max(n, p[0] + t.m());
    }
    return std::max(n, 1);
}

}  // namespace

std::vector<WeightDiagram> weight_diagram_tower(const StdMultitableau3& t, int n) {
    if (n == 0) n = needed_strands(t);
    std::vector<WeightDiagram> tower;
    for (int j = 0; j <= t.max_entry(); ++j) tower.push_back(weight_diagram(truncate(t, j).shape(), n));
    return tower;
}

GrownWeb grow(const StdMultitableau3& t, int n) {
    if (n == 0) n = needed_strands(t);
    auto tower = weight_diagram_tower(t, n);
    std::vector<Step> steps;
    std::vector<ColorSet> moved;
    for (std::size_t j = 1; j < tower.size(); ++j) {
        const auto& lo = tower[j - 1].strands;
        const auto& hi = tower[j].strands;
        ColorSet r = 0;
        int from = 0;
        for (int c = 1; c <= 3; ++c) {
            int src = 0, dst = 0;
            for (int s = 1; s <= n; ++s) {
                bool was = lo[s - 1] & bit(c), is = hi[s - 1] & bit(c);
                if (was && !is) src = s;
                if (!was && is) dst = s;
            }
            if (src == 0 && dst == 0) continue;
            if (dst != src + 1 || (from != 0 && from != src))
                throw std::logic_error("tower level " + std::to_string(j) + " is not a single rung");
            from = src;
            r |= bit(c);
        }
        if (r == 0) throw std::logic_error("tower level " + std::to_string(j) + " does not move anything");
        steps.push_back({from, popcount(r)});
        moved.push_back(r);
    }
    LadderWeb web = build_web_or_throw(LTWord::from_application_order(steps), n, t.m());
    return {web, flow_from_moves(web, moved)};
}

}  // namespace sl3
