#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "sl3/ladderweb.hpp"
#include "sl3/laurent.hpp"
#include "sl3/tableaux.hpp"

namespace oracle {

// Closed web evaluation by circle, digon and square removal on a planar map.
class PlanarWeb {
public:
    // Closure of u with the reflection of v, drawn as a ladder.
    PlanarWeb(const sl3::LadderWeb& u, const sl3::LadderWeb& v) {
        std::vector<sl3::Weights> layers(u.layers().begin(), u.layers().end());
        for (auto it = v.layers().rbegin() + 1; it != v.layers().rend(); ++it) layers.push_back(*it);
        const int n = u.n();
        // Vertex per rung end, half-edges in counter-clockwise order right, up, left, down.
        std::vector<int> last(n, -1);        // half-edge pointing up from the last vertex on each strand
        std::vector<int> last_label(n, 0);
        for (std::size_t t = 1; t < layers.size(); ++t) {
            int i = -1;
            for (int x = 0; x + 1 < n; ++x) {
                if (layers[t][x] != layers[t - 1][x]) {
                    i = x;
                    break;
                }
            }
            int j = std::abs(layers[t][i] - layers[t - 1][i]);
            int left = new_vertex(), right = new_vertex();
            bool rung = j == 1 || j == 2;
            int rung_l = -1, rung_r = -1;
            if (rung) {
                rung_l = add_half(left);
                rung_r = add_half(right);
                link(rung_l, rung_r);
            }
            for (int side = 0; side < 2; ++side) {
                int x = i + side;
                int vtx = side == 0 ? left : right;
                std::vector<int> order;  // ccw: right, up, left, down
                int up = -1, down = -1;
                int below = layers[t - 1][x], above = layers[t][x];
                if (below == 1 || below == 2) {
                    down = add_half(vtx);
                    if (last[x] < 0) throw std::logic_error("strand starts without a vertex");
                    link(down, last[x]);
                }
                if (above == 1 || above == 2) up = add_half(vtx);
                int r = side == 0 ? rung_l : rung_r;
                if (side == 0) order = {r, up, -1, down};
                else order = {-1, up, r, down};
                rot_[vtx].clear();
                for (int h : order)
                    if (h >= 0) rot_[vtx].push_back(h);
                last[x] = up;
                last_label[x] = above;
            }
        }
        alive_.assign(rot_.size(), true);
    }

    sl3::LaurentPoly evaluate() const { return eval(*this); }

private:
    std::vector<int> twin_;
    std::vector<int> vert_;
    std::vector<std::vector<int>> rot_;
    std::vector<bool> alive_;
    int circles_ = 0;

    int new_vertex() {
        rot_.emplace_back();
        return static_cast<int>(rot_.size()) - 1;
    }
    int add_half(int v) {
        twin_.push_back(-1);
        vert_.push_back(v);
        return static_cast<int>(twin_.size()) - 1;
    }
    void link(int a, int b) {
        twin_[a] = b;
        twin_[b] = a;
    }
    void kill(int v) {
        alive_[v] = false;
        rot_[v].clear();
    }

    // Removes degree 0 and 2 vertices, counting closed loops.
    void smooth() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < rot_.size(); ++v) {
                if (!alive_[v]) continue;
                if (rot_[v].empty()) {
                    kill(static_cast<int>(v));
                    changed = true;
                } else if (rot_[v].size() == 2) {
                    int a = rot_[v][0], b = rot_[v][1];
                    if (twin_[a] == b) {
                        ++circles_;
                    } else {
                        link(twin_[a], twin_[b]);
                    }
                    kill(static_cast<int>(v));
                    changed = true;
                }
            }
        }
    }

    int next_in_face(int h) const {
        int t = twin_[h];
        const auto& r = rot_[vert_[t]];
        auto it = std::find(r.begin(), r.end(), t);
        std::size_t k = static_cast<std::size_t>(it - r.begin());
        return r[(k + r.size() - 1) % r.size()];
    }

    static sl3::LaurentPoly eval(PlanarWeb g) {
        g.smooth();
        sl3::LaurentPoly factor = sl3::LaurentPoly::constant(1);
        for (int c = 0; c < g.circles_; ++c) factor *= sl3::qint(3);
        g.circles_ = 0;
        bool any = false;
        for (std::size_t v = 0; v < g.rot_.size(); ++v)
            if (g.alive_[v]) any = true;
        if (!any) return factor;
        // Digons: two parallel edges.
        for (std::size_t v = 0; v < g.rot_.size(); ++v) {
            if (!g.alive_[v]) continue;
            const auto r = g.rot_[v];
            for (std::size_t a = 0; a < r.size(); ++a) {
                for (std::size_t b = a + 1; b < r.size(); ++b) {
                    int w = g.vert_[g.twin_[r[a]]];
                    if (w == static_cast<int>(v) || w != g.vert_[g.twin_[r[b]]]) continue;
                    // Third half-edges of v and w.
                    int hv = -1, hw = -1;
                    for (int h : r)
                        if (h != r[a] && h != r[b]) hv = h;
                    for (int h : g.rot_[w])
                        if (h != g.twin_[r[a]] && h != g.twin_[r[b]]) hw = h;
                    if (g.twin_[hv] == hw) {
                        ++g.circles_;
                    } else {
                        g.link(g.twin_[hv], g.twin_[hw]);
                    }
                    g.kill(static_cast<int>(v));
                    g.kill(w);
                    return factor * sl3::qint(2) * eval(g);
                }
            }
        }
        // Square faces.
        std::set<int> seen;
        for (std::size_t h = 0; h < g.twin_.size(); ++h) {
            if (!g.alive_[g.vert_[h]] || seen.count(static_cast<int>(h))) continue;
            std::vector<int> face;
            int cur = static_cast<int>(h);
            do {
                face.push_back(cur);
                seen.insert(cur);
                cur = g.next_in_face(cur);
            } while (cur != static_cast<int>(h) && face.size() <= 6);
            if (face.size() != 4 || cur != static_cast<int>(h)) continue;
            std::array<int, 4> vs{};
            for (int k = 0; k < 4; ++k) vs[k] = g.vert_[face[k]];
            std::set<int> distinct(vs.begin(), vs.end());
            if (distinct.size() != 4) continue;
            // External half-edge of each square vertex.
            std::array<int, 4> ext{};
            for (int k = 0; k < 4; ++k) {
                int in = g.twin_[face[(k + 3) % 4]];
                for (int e : g.rot_[vs[k]])
                    if (e != face[k] && e != in) ext[k] = g.twin_[e];
            }
            sl3::LaurentPoly total;
            for (int shift = 0; shift < 2; ++shift) {
                PlanarWeb r = g;
                for (int k = 0; k < 4; ++k) r.kill(vs[k]);
                int a0 = ext[shift], a1 = ext[shift + 1], b0 = ext[(shift + 2) % 4], b1 = ext[(shift + 3) % 4];
                r.join(a0, a1);
                r.join(b0, b1);
                total += eval(r);
            }
            return factor * total;
        }
        throw std::logic_error("closed web without circle, digon or square face");
    }

    // Joins two dangling half-edges; a half-edge whose vertex died means the pair forms a loop.
    void join(int a, int b) {
        bool da = !alive_[vert_[a]], db = !alive_[vert_[b]];
        if (da && db) {
            ++circles_;
            return;
        }
        if (da || db) throw std::logic_error("half-joined square resolution");
        link(a, b);
    }
};

inline sl3::LaurentPoly kuperberg_bracket(const sl3::LadderWeb& u, const sl3::LadderWeb& v) {
    return PlanarWeb(u, v).evaluate();
}

// Semi-standard fillings of three columns with the content of a sign string, by brute force over rows.
inline int count_semistandard(const sl3::SignString& s) {
    const int n = s.size();
    std::vector<int> content(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        int w = s.weights[k - 1];
        content[k] = w == 1 ? 1 : w == 2 ? 2 : w == 3 ? 3 : 0;
    }
    int total = 0;
    for (int k = 1; k <= n; ++k) total += content[k];
    if (total % 3 != 0) return 0;
    const int rows = total / 3;
    std::vector<std::array<int, 3>> candidates;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = b; c <= n; ++c) candidates.push_back({a, b, c});
    int count = 0;
    std::vector<std::array<int, 3>> chosen;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(chosen.size()) == rows) {
            std::vector<int> used(n + 1, 0);
            for (const auto& r : chosen)
                for (int x : r) ++used[x];
            if (used == content) ++count;
            return;
        }
        for (const auto& r : candidates) {
            if (!chosen.empty()) {
                const auto& p = chosen.back();
                if (p[0] >= r[0] || p[1] >= r[1] || p[2] >= r[2]) continue;
            }
            chosen.push_back(r);
            rec();
            chosen.pop_back();
        }
    };
    rec();
    return count;
}

// Number of standard fillings by the hook length formula and a multinomial.
inline long long count_standard(const sl3::Multipartition3& shape) {
    auto fact = [](int k) {
        long double f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    long double result = fact(shape.total());
    for (int l = 1; l <= 3; ++l) {
        const auto& p = shape.comp(l);
        for (int r = 0; r < static_cast<int>(p.size()); ++r) {
            for (int c = 0; c < p[r]; ++c) {
                int arm = p[r] - c - 1;
                int leg = 0;
                for (int rr = r + 1; rr < static_cast<int>(p.size()) && p[rr] > c; ++rr) ++leg;
                result /= arm + leg + 1;
            }
        }
    }
    return static_cast<long long>(result + 0.5L);
}

// Degree from the definition: scan values in order, nodes of one value left to right by component.
inline int bkw_degree(const sl3::StdMultitableau3& t) {
    const int m = t.m();
    std::array<std::vector<int>, 3> shape{};  // row lengths with m rows
    for (auto& s : shape) s.assign(m + 8, 0);
    auto res = [&](int row, int col) { return col - row + m; };
    int total = 0;
    for (int v = 1; v <= t.max_entry(); ++v) {
        int mult = 0;
        for (int l = 0; l < 3; ++l) {
            const auto& rows = t.rows()[l];
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
                    if (rows[r][c] != v) continue;
                    ++mult;
                    shape[l][r] = c + 1;
                    int k = res(r + 1, c + 1);
                    int add = 0, rem = 0;
                    for (int l2 = 0; l2 < 3; ++l2) {
                        for (int r2 = 0; r2 < m + 7; ++r2) {
                            bool after = l2 > l || (l2 == l && r2 > r);
                            if (!after) continue;
                            int len = shape[l2][r2];
                            bool addable = r2 < m && (r2 == 0 || shape[l2][r2 - 1] > len);
                            if (addable && res(r2 + 1, len + 1) == k) ++add;
                            bool removable = len > 0 && shape[l2][r2 + 1] < len;
                            if (removable && res(r2 + 1, len) == k) ++rem;
                        }
                    }
                    total += add - rem;
                }
            }
        }
        total -= mult == 2 ? 1 : mult == 3 ? 3 : 0;
    }
    return total;
}

}  // namespace oracle
