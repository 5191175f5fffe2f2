#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl3/flows.hpp"
#include "sl3/ladderweb.hpp"
#include "sl3/tableaux.hpp"

namespace sl3 {

enum class MoveFamily { Arc, Y, H, ShiftRight, ShiftLeft, EmptyShift, Cap };

struct MoveKind {
    MoveFamily family = MoveFamily::Arc;
    char type = 'a';
    std::optional<int> color;
    bool primed = false;

    int power() const;
    std::string str() const;  // "Arc(a,0)", "Y(b,1')", "right(b,-1)"
    friend bool operator==(const MoveKind&, const MoveKind&) = default;
};

// Components receiving the new entry, per the placement table.
ColorSet placement_components(const MoveKind& kind);

// Kind of the k-th applied rung (1-based).
MoveKind classify_step(const LadderWeb& w, const Flow& f, int k);

StdMultitableau3 iota(const LadderWeb& w, const Flow& f);

// Layer of a weight diagram tower: colour sets on strands 1..n; position l is strand l + m.
struct WeightDiagram {
    int m = 0;
    std::vector<ColorSet> strands;

    // "x 1* -1* 0* o": one full position on the left, strands, one empty position on the right.
    std::string str() const;
    friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;
};

// Diagram of the k-vectors of a (partial) tableau shape on n strands.
WeightDiagram weight_diagram(const Multipartition3& shape, int n);

// Tower from the empty shape to t; n = 0 picks the smallest strand count that fits.
std::vector<WeightDiagram> weight_diagram_tower(const StdMultitableau3& t, int n = 0);

struct GrownWeb {
    LadderWeb web;
    Flow flow;
};

GrownWeb grow(const StdMultitableau3& t, int n = 0);

}  // namespace sl3
