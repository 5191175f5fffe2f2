#include "sl3/ladderweb.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sl3 {

bool SignString::is_classical() const {
    return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1 || w == 2; });
}

int SignString::level() const {
    int s = std::accumulate(weights.begin(), weights.end(), 0);
    if (s % 3 != 0) throw std::domain_error("sign string " + str() + " has weight not divisible by 3");
    return s / 3;
}

std::string SignString::str() const {
    static const char sym[] = {'o', '+', '-', 'x'};
    std::string out;
    for (int w : weights) out += sym[w];
    return out;
}

SignString SignString::parse(const std::string& text) {
    SignString s;
    for (char ch : text) {
        switch (ch) {
            case 'o': s.weights.push_back(0); break;
            case '+': s.weights.push_back(1); break;
            case '-': s.weights.push_back(2); break;
            case 'x': s.weights.push_back(3); break;
            case ' ': case ',': case '(': case ')': break;
            default: throw std::invalid_argument(std::string("unknown sign symbol '") + ch + "' in " + text);
        }
    }
    return s;
}

int c_of_S(const SignString& s) {
    if (!s.is_classical()) throw std::domain_error("c(S) needs a classical sign string");
    int l = s.level();
    int c = 0;
    for (int k = 1; k <= s.size(); ++k) c += s.weights[k - 1] == 1 ? k : 2 * k;
    return c - 3 * l * (l + 1) / 2;
}

std::vector<SignString> classical_sign_strings(int n) {
    std::vector<SignString> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        SignString s;
        int sum = 0;
        for (int k = 0; k < n; ++k) {
            int w = (mask >> (n - 1 - k)) & 1 ? 2 : 1;
            s.weights.push_back(w);
            sum += w;
        }
        if (sum % 3 == 0) out.push_back(s);
    }
    return out;
}

int LTWord::total_length() const {
    int s = 0;
    for (const auto& f : factors) s += f.power;
    return s;
}

std::vector<Step> LTWord::application_order() const { return {factors.rbegin(), factors.rend()}; }

LTWord LTWord::from_application_order(const std::vector<Step>& steps) {
    return LTWord{{steps.rbegin(), steps.rend()}};
}

std::string LTWord::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out += " ";
        out += "F" + std::to_string(factors[k].index);
        if (factors[k].power != 1) out += "^" + std::to_string(factors[k].power);
    }
    return out;
}

LTWord LTWord::parse(const std::string& text) {
    LTWord w;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse word '" + text + "': " + why);
    };
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected a number at offset " + std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };
    while (i < n) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        if (ch == '1' && w.factors.empty() && text.find_first_not_of(" 1") == std::string::npos) return w;
        if (ch != 'F') fail("expected 'F' at offset " + std::to_string(i));
        ++i;
        if (i < n && text[i] == '_') ++i;
        Step s;
        s.index = read_int();
        if (i < n && text[i] == '^') {
            ++i;
            bool paren = i < n && text[i] == '(';
            if (paren) ++i;
            s.power = read_int();
            if (paren) {
                if (i >= n || text[i] != ')') fail("missing ')'");
                ++i;
            }
        }
        if (s.index < 1) fail("index must be positive");
        if (s.power < 1 || s.power > 3) fail("divided power must be 1, 2 or 3");
        w.factors.push_back(s);
    }
    return w;
}

nlohmann::json LTWord::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : application_order()) out.push_back({s.index, s.power});
    return out;
}

LTWord LTWord::from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse(j.get<std::string>());
    std::vector<Step> steps;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("word JSON entries are [index, power]");
        steps.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return from_application_order(steps);
}

int total_length(const LTWord& w) { return w.total_length(); }
int length(const LTWord& w) { return w.length(); }

std::optional<Weights> apply_F(const Weights& weights, int i, int j) {
    const int n = static_cast<int>(weights.size());
    if (i < 1 || i > n - 1) throw std::domain_error("F index " + std::to_string(i) + " out of range for " +
                                                    std::to_string(n) + " strands");
    if (j < 0) throw std::domain_error("negative divided power");
    Weights out = weights;
    out[i - 1] -= j;
    out[i] += j;
    if (out[i - 1] < 0 || out[i] > 3) return std::nullopt;
    return out;
}

Weights highest_weight(int n, int level) {
    if (level < 0 || level > n) throw std::domain_error("level must lie in [0, n]");
    Weights w(n, 0);
    for (int k = 0; k < level; ++k) w[k] = 3;
    return w;
}

LadderWeb::LadderWeb(LTWord word, int n, int level, std::vector<Weights> layers)
    : word_(std::move(word)), n_(n), level_(level), layers_(std::move(layers)), steps_(word_.application_order()) {}

std::string LadderWeb::ascii() const {
    std::ostringstream out;
    for (std::size_t k = layers_.size(); k-- > 0;) {
        for (int w : layers_[k]) out << w << ' ';
        if (k > 0) {
            const Step& s = steps_[k - 1];
            out << "  <- F" << s.index;
            if (s.power != 1) out << "^" << s.power;
        }
        out << '\n';
    }
    return out.str();
}

std::optional<LadderWeb> build_web(const LTWord& word, int n, int level) {
    std::vector<Weights> layers{highest_weight(n, level)};
    for (const Step& s : word.application_order()) {
        auto next = apply_F(layers.back(), s.index, s.power);
        if (!next) return std::nullopt;
        layers.push_back(*next);
    }
    return LadderWeb(word, n, level, std::move(layers));
}

LadderWeb build_web_or_throw(const LTWord& word, int n, int level) {
    auto w = build_web(word, n, level);
    if (!w) throw std::domain_error("word " + word.str() + " kills the highest weight vector");
    return *w;
}

std::vector<ColTableau> enumerate_semistandard(const SignString& s) {
    const int rows = s.level();
    const int n = s.size();
    std::vector<ColTableau> out;
    ColTableau cur;
    cur.rows.assign(rows, {0, 0, 0});
    std::vector<int> len(rows, 0);
    // Place value k as a horizontal strip of size weights[k-1].
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            out.push_back(cur);
            return;
        }
        const int need = s.weights[k - 1];
        std::vector<int> add(rows, 0);
        std::function<void(int, int)> rec = [&](int r, int left) {
            if (r == rows) {
                if (left != 0) return;
                for (int q = 0; q < rows; ++q)
                    for (int a = 0; a < add[q]; ++a) cur.rows[q][len[q] + a] = k;
                for (int q = 0; q < rows; ++q) len[q] += add[q];
                place(k + 1);
                for (int q = 0; q < rows; ++q) len[q] -= add[q];
                for (int q = 0; q < rows; ++q)
                    for (int a = 0; a < add[q]; ++a) cur.rows[q][len[q] + a] = 0;
                return;
            }
            int cap = r == 0 ? 3 : len[r - 1];
            for (int a = 0; a <= std::min(left, cap - len[r]); ++a) {
                add[r] = a;
                rec(r + 1, left - a);
            }
            add[r] = 0;
        };
        rec(0, need);
    };
    place(1);
    return out;
}

namespace {

// Columns (0-based) in row r holding v that may be lowered to v-1, scanned left to right.
std::vector<std::pair<int, int>> lowerable(const ColTableau& t, int v) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < t.num_rows() && r + 1 < v; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (t.rows[r][c] != v) continue;
            bool blocked_above = r > 0 && t.rows[r - 1][c] == v - 1;
            bool blocked_left = c > 0 && t.rows[r][c - 1] == v &&
                                std::find(cells.begin(), cells.end(), std::make_pair(r, c - 1)) == cells.end();
            if (blocked_above || blocked_left) break;
            cells.push_back({r, c});
        }
    }
    return cells;
}

bool extraordinary(const ColTableau& t, int v) {
    for (int r = 0; r + 1 < t.num_rows(); ++r) {
        const auto& row = t.rows[r];
        if (row[0] != v - 1 || row[1] != v || t.rows[r + 1][0] != v) continue;
        bool three_below = r + 2 < t.num_rows() && t.rows[r + 2][0] == v + 1;
        bool three_right = row[2] == v + 1;
        if (three_below || three_right) return true;
    }
    return false;
}

}  // namespace

LTWord lt_generators(const ColTableau& input) {
    if (!input.is_semistandard()) throw std::domain_error("tableau " + input.str() + " is not semi-standard");
    ColTableau t = input;
    const ColTableau target = row_filling(t.num_rows());
    LTWord word;
    int guard = 0;
    while (t != target) {
        if (++guard > 10000) throw std::logic_error("LT algorithm does not terminate on " + input.str());
        int maxv = 0;
        for (const auto& row : t.rows) maxv = std::max(maxv, row[2]);
        int chosen = 0;
        std::vector<std::pair<int, int>> cells;
        for (int v = 2; v <= maxv && chosen == 0; ++v) {
            auto cand = lowerable(t, v);
            if (cand.empty()) continue;
            chosen = v;
            cells = cand;
        }
        if (chosen == 0) throw std::logic_error("LT algorithm is stuck on " + t.str());
        if (extraordinary(t, chosen)) {
            for (int w = chosen + 1; w <= maxv; ++w) {
                auto cand = lowerable(t, w);
                if (cand.empty()) continue;
                bool col1 = true, col12 = true;
                for (auto [r, c] : cand) {
                    col1 = col1 && c == 0;
                    col12 = col12 && c <= 1;
                }
                bool has2 = std::any_of(cand.begin(), cand.end(), [](auto rc) { return rc.second == 1; });
                bool only_first = col1;
                bool first_and_second = col12 && has2 && !col1 &&
                                        std::any_of(cand.begin(), cand.end(), [](auto rc) { return rc.second == 0; });
                if (only_first || first_and_second) continue;
                chosen = w;
                cells = cand;
                break;
            }
        }
        for (auto [r, c] : cells) t.rows[r][c] = chosen - 1;
        word.factors.push_back({chosen - 1, static_cast<int>(cells.size())});
    }
    return word;
}

std::vector<BasisWeb> enumerate_basis(const SignString& s) {
    if (!s.is_classical()) throw std::domain_error("basis enumeration needs a classical sign string");
    const int level = s.level();
    std::vector<BasisWeb> out;
    for (const auto& t : enumerate_semistandard(s)) {
        LTWord w = lt_generators(t);
        auto web = build_web(w, s.size(), level);
        if (!web) throw std::logic_error("LT word " + w.str() + " of " + t.str() + " is zero");
        if (web->boundary() != s) throw std::logic_error("LT word " + w.str() + " has the wrong boundary");
        out.push_back({t, *web});
    }
    return out;
}

}  // namespace sl3
