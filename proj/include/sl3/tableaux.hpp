#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

namespace sl3 {

// Weakly decreasing parts, trailing zeros trimmed.
using Partition = std::vector<int>;

Partition make_partition(std::vector<int> parts);
int size(const Partition& p);

// Row, column and component are 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;
    friend bool operator==(const Node&, const Node&) = default;
};

std::string to_string(const Node& n);

// Residue of a node: col - row + m, constant along diagonals.
int residue(const Node& node, int m);

class Multipartition3 {
public:
    Multipartition3();
    explicit Multipartition3(std::array<Partition, 3> comps);
    Multipartition3(std::array<Partition, 3> comps, int m);

    const std::array<Partition, 3>& comps() const { return comps_; }
    const Partition& comp(int l) const { return comps_.at(l - 1); }
    int m() const { return m_; }
    int total() const;
    bool contains(const Node& n) const;
    std::vector<Node> nodes() const;

    // Same residue shift m is kept.
    Multipartition3 with_node(const Node& n) const;
    Multipartition3 without_node(const Node& n) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static Multipartition3 from_json(const nlohmann::json& j);

    friend bool operator==(const Multipartition3& a, const Multipartition3& b) {
        return a.comps_ == b.comps_ && a.m_ == b.m_;
    }
    friend bool operator<(const Multipartition3& a, const Multipartition3& b) {
        return a.comps_ != b.comps_ ? a.comps_ < b.comps_ : a.m_ < b.m_;
    }

private:
    std::array<Partition, 3> comps_;
    int m_ = 0;
};

int max_nonzero_rows(const std::array<Partition, 3>& comps);

// Node order: component first, then row.
bool node_before(const Node& a, const Node& b);         // a strictly before b
bool node_after(const Node& a, const Node& b);          // a strictly after b

std::vector<Node> addable_nodes(const Multipartition3& shape, int k);
std::vector<Node> removable_nodes(const Multipartition3& shape, int k);

enum class NodeKind { Addable, Removable };
// Nodes of the given kind, with the residue of `node`, strictly after `node`.
std::vector<Node> nodes_after(const Multipartition3& shape, const Node& node, NodeKind kind);

// True iff b is dominated by a. Totals must agree.
bool dominates(const Multipartition3& a, const Multipartition3& b);

// 3-multitableau; entries may repeat across components.
class StdMultitableau3 {
public:
    using Rows = std::vector<std::vector<int>>;

    StdMultitableau3() = default;
    StdMultitableau3(std::array<Rows, 3> rows, int m);
    explicit StdMultitableau3(std::array<Rows, 3> rows);

    const Multipartition3& shape() const { return shape_; }
    const std::array<Rows, 3>& rows() const { return rows_; }
    int m() const { return shape_.m(); }
    int at(const Node& n) const;
    int max_entry() const;
    // Nodes holding value v ordered by component.
    std::vector<Node> nodes_of(int v) const;
    int multiplicity(int v) const { return static_cast<int>(nodes_of(v).size()); }
    bool has_repeats() const;

    // Strict row/column increase, repeats in distinct components of equal residue, multiplicity <= 3.
    bool is_standard() const;
    void validate() const;

    StdMultitableau3 with_entry(const Node& n, int value) const;

    // "(1 2/3 | 4 | 5 6/7)", empty components as "-".
    std::string str() const;
    static StdMultitableau3 parse(const std::string& text, int m = 0);

    nlohmann::json to_json() const;
    static StdMultitableau3 from_json(const nlohmann::json& j);

    friend bool operator==(const StdMultitableau3& a, const StdMultitableau3& b) {
        return a.rows_ == b.rows_ && a.shape_.m() == b.shape_.m();
    }
    friend bool operator<(const StdMultitableau3& a, const StdMultitableau3& b) {
        return a.rows_ != b.rows_ ? a.rows_ < b.rows_ : a.m() < b.m();
    }

private:
    std::array<Rows, 3> rows_;
    Multipartition3 shape_;
};

StdMultitableau3 superstandard(const Multipartition3& shape);
StdMultitableau3 expand_repeats(const StdMultitableau3& t);
std::vector<int> residue_sequence(const StdMultitableau3& t);
StdMultitableau3 truncate(const StdMultitableau3& t, int j);

struct BkwDegree {
    int total = 0;
    std::vector<int> per_entry;
};
BkwDegree bkw_degree(const StdMultitableau3& t);

// Standard fillings with entries 1..k, no repeats, in lexicographic placement order.
std::vector<StdMultitableau3> enumerate_standard(const Multipartition3& shape);

// t1 is dominated by t2 (after expanding repeats).
bool tableau_dominated(const StdMultitableau3& t1, const StdMultitableau3& t2);

// Tableau with three columns, rows listed top to bottom.
struct ColTableau {
    std::vector<std::array<int, 3>> rows;

    int num_rows() const { return static_cast<int>(rows.size()); }
    bool is_column_strict() const;
    bool is_semistandard() const;
    std::string str() const;   // "1 1 2/3 2 3"
    static ColTableau parse(const std::string& text);
    nlohmann::json to_json() const;
    static ColTableau from_json(const nlohmann::json& j);
    friend bool operator==(const ColTableau&, const ColTableau&) = default;
    friend auto operator<=>(const ColTableau&, const ColTableau&) = default;
};

// Row-number filling with `rows` rows.
ColTableau row_filling(int rows);

Multipartition3 colstrict_to_multipartition(const ColTableau& t);
ColTableau multipartition_to_colstrict(const Multipartition3& shape, int rows);

}  // namespace sl3
