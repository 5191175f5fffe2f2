#include "sl3/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sl3 {

Partition make_partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::domain_error("partition with a negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::domain_error("partition parts must weakly decrease");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

int size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

std::string to_string(const Node& n) {
    return "(" + std::to_string(n.row) + "," + std::to_string(n.col) + "," + std::to_string(n.comp) + ")";
}

int residue(const Node& node, int m) { return node.col - node.row + m; }

int max_nonzero_rows(const std::array<Partition, 3>& comps) {
    std::size_t m = 0;
    for (const auto& p : comps) m = std::max(m, p.size());
    return static_cast<int>(m);
}

Multipartition3::Multipartition3() = default;

Multipartition3::Multipartition3(std::array<Partition, 3> comps) {
    for (auto& p : comps) p = make_partition(p);
    comps_ = std::move(comps);
    m_ = max_nonzero_rows(comps_);
}

Multipartition3::Multipartition3(std::array<Partition, 3> comps, int m) : Multipartition3(std::move(comps)) {
    if (m < 0) throw std::domain_error("residue shift must be non-negative");
    m_ = m;
}

int Multipartition3::total() const {
    int s = 0;
    for (const auto& p : comps_) s += size(p);
    return s;
}

bool Multipartition3::contains(const Node& n) const {
    if (n.comp < 1 || n.comp > 3 || n.row < 1 || n.col < 1) return false;
    const auto& p = comps_[n.comp - 1];
    return n.row <= static_cast<int>(p.size()) && n.col <= p[n.row - 1];
}

std::vector<Node> Multipartition3::nodes() const {
    std::vector<Node> out;
    for (int l = 1; l <= 3; ++l) {
        const auto& p = comps_[l - 1];
        for (int r = 1; r <= static_cast<int>(p.size()); ++r)
            for (int c = 1; c <= p[r - 1]; ++c) out.push_back({r, c, l});
    }
    return out;
}

Multipartition3 Multipartition3::with_node(const Node& n) const {
    auto comps = comps_;
    auto& p = comps[n.comp - 1];
    if (n.row == static_cast<int>(p.size()) + 1 && n.col == 1) {
        p.push_back(1);
    } else if (n.row <= static_cast<int>(p.size()) && p[n.row - 1] + 1 == n.col) {
        p[n.row - 1] += 1;
    } else {
        throw std::domain_error("node " + to_string(n) + " is not addable");
    }
    return Multipartition3(comps, m_);
}

Multipartition3 Multipartition3::without_node(const Node& n) const {
    auto comps = comps_;
    auto& p = comps[n.comp - 1];
    if (n.row > static_cast<int>(p.size()) || p[n.row - 1] != n.col)
        throw std::domain_error("node " + to_string(n) + " is not removable");
    p[n.row - 1] -= 1;
    return Multipartition3(comps, m_);
}

std::string Multipartition3::str() const {
    std::ostringstream out;
    out << "(";
    for (int l = 0; l < 3; ++l) {
        if (l) out << ", ";
        if (comps_[l].empty()) {
            out << "-";
            continue;
        }
        for (std::size_t i = 0; i < comps_[l].size(); ++i) out << (i ? "," : "") << comps_[l][i];
    }
    out << "; m=" << m_ << ")";
    return out.str();
}

nlohmann::json Multipartition3::to_json() const {
    return {{"components", {comps_[0], comps_[1], comps_[2]}}, {"m", m_}};
}

Multipartition3 Multipartition3::from_json(const nlohmann::json& j) {
    const auto& c = j.at("components");
    if (!c.is_array() || c.size() != 3) throw std::invalid_argument("components must be an array of three partitions");
    std::array<Partition, 3> comps{c[0].get<Partition>(), c[1].get<Partition>(), c[2].get<Partition>()};
    if (j.contains("m")) return Multipartition3(comps, j.at("m").get<int>());
    return Multipartition3(comps);
}

bool node_before(const Node& a, const Node& b) {
    return a.comp < b.comp || (a.comp == b.comp && a.row < b.row);
}

bool node_after(const Node& a, const Node& b) { return node_before(b, a); }

namespace {

std::vector<Node> all_addable(const Multipartition3& shape) {
    std::vector<Node> out;
    for (int l = 1; l <= 3; ++l) {
        const auto& p = shape.comp(l);
        int rows = static_cast<int>(p.size());
        for (int r = 1; r <= rows + 1; ++r) {
            int len = r <= rows ? p[r - 1] : 0;
            int above = r == 1 ? -1 : p[r - 2];
            if (r == 1 || above > len) out.push_back({r, len + 1, l});
        }
    }
    return out;
}

std::vector<Node> all_removable(const Multipartition3& shape) {
    std::vector<Node> out;
    for (int l = 1; l <= 3; ++l) {
        const auto& p = shape.comp(l);
        int rows = static_cast<int>(p.size());
        for (int r = 1; r <= rows; ++r) {
            int below = r < rows ? p[r] : 0;
            if (p[r - 1] > below) out.push_back({r, p[r - 1], l});
        }
    }
    return out;
}

std::vector<Node> with_residue(std::vector<Node> nodes, int k, int m) {
    std::erase_if(nodes, [&](const Node& n) { return residue(n, m) != k; });
    return nodes;
}

}  // namespace

std::vector<Node> addable_nodes(const Multipartition3& shape, int k) {
    return with_residue(all_addable(shape), k, shape.m());
}

std::vector<Node> removable_nodes(const Multipartition3& shape, int k) {
    return with_residue(all_removable(shape), k, shape.m());
}

std::vector<Node> nodes_after(const Multipartition3& shape, const Node& node, NodeKind kind) {
    int k = residue(node, shape.m());
    auto nodes = kind == NodeKind::Addable ? addable_nodes(shape, k) : removable_nodes(shape, k);
    std::erase_if(nodes, [&](const Node& n) { return !node_after(n, node); });
    return nodes;
}

bool dominates(const Multipartition3& a, const Multipartition3& b) {
    if (a.total() != b.total()) throw std::domain_error("dominance needs multipartitions of the same size");
    int base_a = 0;
    int base_b = 0;
    for (int l = 1; l <= 3; ++l) {
        const auto& pa = a.comp(l);
        const auto& pb = b.comp(l);
        std::size_t rows = std::max(pa.size(), pb.size());
        int sa = base_a;
        int sb = base_b;
        for (std::size_t s = 0; s < rows; ++s) {
            sa += s < pa.size() ? pa[s] : 0;
            sb += s < pb.size() ? pb[s] : 0;
            if (sb > sa) return false;
        }
        base_a += size(pa);
        base_b += size(pb);
        if (base_b > base_a) return false;
    }
    return true;
}

StdMultitableau3::StdMultitableau3(std::array<Rows, 3> rows, int m) : rows_(std::move(rows)) {
    std::array<Partition, 3> comps;
    for (int l = 0; l < 3; ++l) {
        while (!rows_[l].empty() && rows_[l].back().empty()) rows_[l].pop_back();
        for (const auto& row : rows_[l]) comps[l].push_back(static_cast<int>(row.size()));
    }
    shape_ = m > 0 ? Multipartition3(comps, m) : Multipartition3(comps);
}

StdMultitableau3::StdMultitableau3(std::array<Rows, 3> rows) : StdMultitableau3(std::move(rows), 0) {}

int StdMultitableau3::at(const Node& n) const {
    if (!shape_.contains(n)) throw std::out_of_range("node " + to_string(n) + " outside tableau");
    return rows_[n.comp - 1][n.row - 1][n.col - 1];
}

int StdMultitableau3::max_entry() const {
    int mx = 0;
    for (const auto& comp : rows_)
        for (const auto& row : comp)
            for (int v : row) mx = std::max(mx, v);
    return mx;
}

std::vector<Node> StdMultitableau3::nodes_of(int v) const {
    std::vector<Node> out;
    for (int l = 0; l < 3; ++l)
        for (std::size_t r = 0; r < rows_[l].size(); ++r)
            for (std::size_t c = 0; c < rows_[l][r].size(); ++c)
                if (rows_[l][r][c] == v) out.push_back({int(r) + 1, int(c) + 1, l + 1});
    return out;
}

bool StdMultitableau3::has_repeats() const {
    std::map<int, int> count;
    for (const auto& comp : rows_)
        for (const auto& row : comp)
            for (int v : row)
                if (++count[v] > 1) return true;
    return false;
}

bool StdMultitableau3::is_standard() const {
    try {
        validate();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

void StdMultitableau3::validate() const {
    std::map<int, std::vector<Node>> where;
    for (int l = 0; l < 3; ++l) {
        const auto& comp = rows_[l];
        for (std::size_t r = 0; r < comp.size(); ++r) {
            if (r > 0 && comp[r].size() > comp[r - 1].size())
                throw std::domain_error("rows of a component must weakly shrink");
            for (std::size_t c = 0; c < comp[r].size(); ++c) {
                int v = comp[r][c];
                if (v < 1) throw std::domain_error("entries must be positive");
                if (c > 0 && comp[r][c - 1] >= v) throw std::domain_error("rows must strictly increase");
                if (r > 0 && comp[r - 1][c] >= v) throw std::domain_error("columns must strictly increase");
                where[v].push_back({int(r) + 1, int(c) + 1, l + 1});
            }
        }
    }
    for (const auto& [v, nodes] : where) {
        if (nodes.size() > 3) throw std::domain_error("value " + std::to_string(v) + " repeated more than three times");
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (nodes[i].comp == nodes[i - 1].comp)
                throw std::domain_error("value " + std::to_string(v) + " repeated inside one component");
            if (residue(nodes[i], m()) != residue(nodes[0], m()))
                throw std::domain_error("repeated value " + std::to_string(v) + " with distinct residues");
        }
    }
}

StdMultitableau3 StdMultitableau3::with_entry(const Node& n, int value) const {
    shape_.with_node(n);  // throws when not addable
    auto rows = rows_;
    auto& comp = rows[n.comp - 1];
    if (n.row > static_cast<int>(comp.size())) comp.emplace_back();
    comp[n.row - 1].push_back(value);
    return StdMultitableau3(rows, m());
}

std::string StdMultitableau3::str() const {
    std::ostringstream out;
    out << "(";
    for (int l = 0; l < 3; ++l) {
        if (l) out << " | ";
        if (rows_[l].empty()) {
            out << "-";
            continue;
        }
        for (std::size_t r = 0; r < rows_[l].size(); ++r) {
            if (r) out << "/";
            for (std::size_t c = 0; c < rows_[l][r].size(); ++c) out << (c ? " " : "") << rows_[l][r][c];
        }
    }
    out << ")";
    return out.str();
}

StdMultitableau3 StdMultitableau3::parse(const std::string& text, int m) {
    std::string s = text;
    auto trim = [](std::string x) {
        auto b = x.find_first_not_of(" \t\n");
        auto e = x.find_last_not_of(" \t\n");
        return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    s = trim(s);
    if (!s.empty() && s.front() == '(') s.erase(0, 1);
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::array<Rows, 3> rows;
    std::stringstream comps(s);
    std::string part;
    int l = 0;
    while (std::getline(comps, part, '|')) {
        if (l >= 3) throw std::invalid_argument("tableau text has more than three components: " + text);
        part = trim(part);
        if (!part.empty() && part != "-") {
            std::stringstream rs(part);
            std::string row;
            while (std::getline(rs, row, '/')) {
                std::stringstream vs(row);
                std::vector<int> vals;
                int v;
                while (vs >> v) vals.push_back(v);
                if (!vs.eof()) throw std::invalid_argument("bad tableau row '" + row + "'");
                rows[l].push_back(vals);
            }
        }
        ++l;
    }
    if (l != 3) throw std::invalid_argument("tableau text needs three components: " + text);
    return StdMultitableau3(rows, m);
}

nlohmann::json StdMultitableau3::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (int l = 0; l < 3; ++l)
        for (std::size_t r = 0; r < rows_[l].size(); ++r)
            for (std::size_t c = 0; c < rows_[l][r].size(); ++c)
                entries.push_back({int(r) + 1, int(c) + 1, l + 1, rows_[l][r][c]});
    return {{"shape", shape_.to_json()}, {"entries", entries}};
}

StdMultitableau3 StdMultitableau3::from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse(j.get<std::string>());
    std::array<Rows, 3> rows;
    int m = 0;
    if (j.contains("shape")) {
        auto shape = Multipartition3::from_json(j.at("shape"));
        m = shape.m();
        for (int l = 0; l < 3; ++l)
            for (int len : shape.comp(l + 1)) rows[l].push_back(std::vector<int>(len, 0));
    }
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 4) throw std::invalid_argument("tableau entries are [row,col,comp,value]");
        int r = e[0], c = e[1], l = e[2], v = e[3];
        if (l < 1 || l > 3 || r < 1 || c < 1) throw std::invalid_argument("tableau entry out of range");
        auto& comp = rows[l - 1];
        if (static_cast<int>(comp.size()) < r) comp.resize(r);
        if (static_cast<int>(comp[r - 1].size()) < c) comp[r - 1].resize(c, 0);
        comp[r - 1][c - 1] = v;
    }
    for (const auto& comp : rows)
        for (const auto& row : comp)
            for (int v : row)
                if (v == 0) throw std::invalid_argument("tableau JSON leaves a node unfilled");
    StdMultitableau3 t(rows, m);
    t.validate();
    return t;
}

StdMultitableau3 superstandard(const Multipartition3& shape) {
    std::array<StdMultitableau3::Rows, 3> rows;
    int next = 1;
    for (int l = 0; l < 3; ++l)
        for (int len : shape.comp(l + 1)) {
            std::vector<int> row;
            for (int c = 0; c < len; ++c) row.push_back(next++);
            rows[l].push_back(row);
        }
    return StdMultitableau3(rows, shape.m());
}

StdMultitableau3 expand_repeats(const StdMultitableau3& t) {
    auto rows = t.rows();
    int next = 1;
    for (int v = 1; v <= t.max_entry(); ++v)
        for (const Node& n : t.nodes_of(v)) rows[n.comp - 1][n.row - 1][n.col - 1] = next++;
    return StdMultitableau3(rows, t.m());
}

std::vector<int> residue_sequence(const StdMultitableau3& t) {
    std::vector<int> out;
    for (int v = 1; v <= t.max_entry(); ++v) {
        auto nodes = t.nodes_of(v);
        if (nodes.empty()) throw std::domain_error("value " + std::to_string(v) + " missing from tableau");
        out.push_back(residue(nodes.front(), t.m()));
    }
    return out;
}

StdMultitableau3 truncate(const StdMultitableau3& t, int j) {
    if (j < 0 || j > t.max_entry()) throw std::domain_error("truncation index out of range");
    auto rows = t.rows();
    for (auto& comp : rows) {
        for (auto& row : comp) std::erase_if(row, [&](int v) { return v > j; });
    }
    return StdMultitableau3(rows, t.m());
}

BkwDegree bkw_degree(const StdMultitableau3& t) {
    static const int correction[] = {0, 0, 1, 3};
    BkwDegree out;
    Multipartition3 shape(std::array<Partition, 3>{}, t.m());
    for (int v = 1; v <= t.max_entry(); ++v) {
        auto nodes = t.nodes_of(v);
        if (nodes.empty()) throw std::domain_error("value " + std::to_string(v) + " missing from tableau");
        int deg = 0;
        for (const Node& n : nodes) {
            shape = shape.with_node(n);
            deg += static_cast<int>(nodes_after(shape, n, NodeKind::Addable).size());
            deg -= static_cast<int>(nodes_after(shape, n, NodeKind::Removable).size());
        }
        deg -= correction[nodes.size()];
        out.per_entry.push_back(deg);
        out.total += deg;
    }
    return out;
}

std::vector<StdMultitableau3> enumerate_standard(const Multipartition3& shape) {
    std::vector<StdMultitableau3> out;
    const int k = shape.total();
    std::function<void(const StdMultitableau3&, int)> rec = [&](const StdMultitableau3& cur, int next) {
        if (next > k) {
            out.push_back(cur);
            return;
        }
        for (int l = 1; l <= 3; ++l) {
            const auto& target = shape.comp(l);
            const auto& have = cur.shape().comp(l);
            for (int r = 1; r <= static_cast<int>(target.size()); ++r) {
                int len = r <= static_cast<int>(have.size()) ? have[r - 1] : 0;
                if (len >= target[r - 1]) continue;
                int above = r == 1 ? target[0] : (r - 1 <= static_cast<int>(have.size()) ? have[r - 2] : 0);
                if (r > 1 && above <= len) continue;
                rec(cur.with_entry({r, len + 1, l}, next), next + 1);
            }
        }
    };
    rec(StdMultitableau3({}, shape.m()), 1);
    return out;
}

bool tableau_dominated(const StdMultitableau3& t1, const StdMultitableau3& t2) {
    auto a = expand_repeats(t1);
    auto b = expand_repeats(t2);
    if (a.max_entry() != b.max_entry()) throw std::domain_error("tableaux of different sizes");
    for (int j = 1; j <= a.max_entry(); ++j)
        if (!dominates(truncate(b, j).shape(), truncate(a, j).shape())) return false;
    return true;
}

bool ColTableau::is_column_strict() const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < 3; ++c) {
            if (rows[r][c] < 1) return false;
            if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
        }
    return true;
}

bool ColTableau::is_semistandard() const {
    if (!is_column_strict()) return false;
    for (const auto& row : rows)
        if (row[0] > row[1] || row[1] > row[2]) return false;
    return true;
}

std::string ColTableau::str() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out << "/";
        out << rows[r][0] << " " << rows[r][1] << " " << rows[r][2];
    }
    return out.str();
}

ColTableau ColTableau::parse(const std::string& text) {
    ColTableau t;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, '/')) {
        std::stringstream vs(row);
        std::array<int, 3> vals{};
        for (int c = 0; c < 3; ++c)
            if (!(vs >> vals[c])) throw std::invalid_argument("column tableau rows need three entries: '" + text + "'");
        int extra;
        if (vs >> extra) throw std::invalid_argument("column tableau rows need three entries: '" + text + "'");
        t.rows.push_back(vals);
    }
    return t;
}

nlohmann::json ColTableau::to_json() const { return rows; }

ColTableau ColTableau::from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse(j.get<std::string>());
    ColTableau t;
    t.rows = j.get<std::vector<std::array<int, 3>>>();
    return t;
}

ColTableau row_filling(int rows) {
    ColTableau t;
    for (int r = 1; r <= rows; ++r) t.rows.push_back({r, r, r});
    return t;
}

Multipartition3 colstrict_to_multipartition(const ColTableau& t) {
    if (!t.is_column_strict()) throw std::domain_error("tableau " + t.str() + " is not column-strict");
    const int rows = t.num_rows();
    std::array<Partition, 3> comps;
    for (int c = 0; c < 3; ++c)
        for (int r = rows; r >= 1; --r) comps[c].push_back(t.rows[r - 1][c] - r);
    return Multipartition3(comps);
}

ColTableau multipartition_to_colstrict(const Multipartition3& shape, int rows) {
    ColTableau t;
    t.rows.assign(rows, {0, 0, 0});
    for (int c = 0; c < 3; ++c) {
        const auto& p = shape.comp(c + 1);
        if (static_cast<int>(p.size()) > rows) throw std::domain_error("component has more rows than the tableau");
        for (int r = 1; r <= rows; ++r) {
            int part_row = rows + 1 - r;
            int part = part_row <= static_cast<int>(p.size()) ? p[part_row - 1] : 0;
            t.rows[r - 1][c] = part + r;
        }
    }
    return t;
}

}  // namespace sl3
