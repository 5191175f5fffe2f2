#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/ladderweb.hpp"
#include "sl3/laurent.hpp"
#include "sl3/tableaux.hpp"

namespace sl3 {

// Subsets of the colours {1,2,3} as bit masks, colour c is bit c-1.
using ColorSet = int;

int popcount(ColorSet s);
std::string colors_str(ColorSet s);  // "{1,3}"

// States in {-1,0,+1}; ordered lexicographically with +1 > 0 > -1.
using StateString = std::vector<int>;
std::string state_str(const StateString& j);  // "(1,-1,0)"

// State of a boundary strand: {1},{2},{3} -> +1,0,-1 and {1,2},{1,3},{2,3} -> +1,0,-1.
int state_of(ColorSet s);

struct Flow {
    std::vector<ColorSet> moved;               // colours carried by each rung, application order
    std::vector<std::vector<ColorSet>> layers;  // per layer, per strand

    const std::vector<ColorSet>& top() const { return layers.back(); }
    nlohmann::json to_json() const;
    friend bool operator==(const Flow&, const Flow&) = default;
    friend auto operator<=>(const Flow&, const Flow&) = default;
};

// Rebuilds layers from the moved colours; throws when the data is not a flow.
Flow flow_from_moves(const LadderWeb& w, const std::vector<ColorSet>& moved);

// Checks the vertex rule at every rung.
bool is_flow(const LadderWeb& w, const Flow& f);

std::vector<Flow> enumerate_flows(const LadderWeb& w);

// Strands of weight 0 or 3 carry no state and are skipped.
StateString boundary_state(const LadderWeb& w, const Flow& f);

int weight(const LadderWeb& w, const Flow& f);
// Contribution of the k-th applied rung (1-based).
int rung_weight(const LadderWeb& w, const Flow& f, int k);

ColTableau flow_to_colstrict(const LadderWeb& w, const Flow& f);

// Unique flow whose column tableau is t; throws otherwise.
Flow canonical_flow(const LadderWeb& w, const ColTableau& t);

// u glued to the reflection of v along the common boundary.
struct ClosedWeb {
    LadderWeb lower;
    LadderWeb upper;
    int n() const { return lower.n(); }
};

ClosedWeb close(const LadderWeb& u, const LadderWeb& v);

struct ClosedFlow {
    std::size_t lower_flow;
    std::size_t upper_flow;
    int weight;
};

std::vector<ClosedFlow> enumerate_closed_flows(const ClosedWeb& c);
LaurentPoly bracket(const ClosedWeb& c);

// Coefficients sum_f v^{wt} with v = -q^{-1}, keyed by boundary state string.
std::map<StateString, LaurentPoly> tensor_expansion(const LadderWeb& w);

}  // namespace sl3
