#include <doctest.h>

#include <algorithm>
#include <set>

#include "sl3/flows.hpp"

using namespace sl3;

namespace {

LadderWeb web(const char* word, int n, int level) { return build_web_or_throw(LTWord::parse(word), n, level); }

const char* kHexagon = "F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2";

std::multiset<int> closed_weights(const ClosedWeb& c) {
    std::multiset<int> out;
    for (const auto& f : enumerate_closed_flows(c)) out.insert(f.weight);
    return out;
}

}  // namespace

TEST_SUITE("flows") {

TEST_CASE("state dictionary") {
    CHECK(state_of(0b001) == 1);
    CHECK(state_of(0b010) == 0);
    CHECK(state_of(0b100) == -1);
    CHECK(state_of(0b011) == 1);
    CHECK(state_of(0b101) == 0);
    CHECK(state_of(0b110) == -1);
    CHECK(colors_str(0b101) == "{1,3}");
    CHECK(state_str({1, -1, 0}) == "(1,-1,0)");
}

TEST_CASE("flow counts") {
    auto arc = web("F1^2", 2, 1);
    CHECK(enumerate_flows(arc).size() == 3);
    CHECK(enumerate_closed_flows(close(arc, arc)).size() == 3);
    auto theta = web("F1 F2 F1", 3, 1);
    CHECK(enumerate_closed_flows(close(theta, theta)).size() == 6);
    CHECK(enumerate_flows(web("1", 2, 0)).size() == 1);
}

TEST_CASE("flows satisfy the vertex rule") {
    for (const char* w : {"F1 F2 F1", "F2 F1^2 F3^2 F2^2", kHexagon}) {
        int n = std::string(w) == kHexagon ? 6 : (std::string(w) == "F1 F2 F1" ? 3 : 4);
        int level = n == 3 ? 1 : n / 2;
        auto u = web(w, n, level);
        for (const auto& f : enumerate_flows(u)) {
            CHECK(is_flow(u, f));
            CHECK(flow_from_moves(u, f.moved) == f);
        }
    }
}

TEST_CASE("half-theta flow data") {
    auto half = web("F1 F2^2", 3, 2);
    auto t = ColTableau::parse("1 1 2/3 2 3");
    Flow f = canonical_flow(half, t);
    CHECK(flow_to_colstrict(half, f) == t);
    CHECK(boundary_state(half, f) == StateString{1, -1, 0});
}

TEST_CASE("hexagon flow of the flow-line picture") {
    auto hex = web(kHexagon, 6, 3);
    auto t = ColTableau::parse("2 1 2/4 3 4/6 5 6");
    // The interior hexagon can be circled either way.
    int found = 0;
    for (const auto& f : enumerate_flows(hex)) {
        if (!(flow_to_colstrict(hex, f) == t)) continue;
        ++found;
        CHECK(boundary_state(hex, f) == StateString(6, 0));
    }
    CHECK(found == 2);
    CHECK_THROWS(canonical_flow(hex, t));
    auto canon = canonical_flow(hex, ColTableau::parse("1 2 4/2 3 5/4 6 6"));
    CHECK(weight(hex, canon) == 0);
}

TEST_CASE("arc flows give the three one-row fillings") {
    auto arc = web("F1^2", 2, 1);
    std::set<std::string> rows;
    for (const auto& f : enumerate_flows(arc)) rows.insert(flow_to_colstrict(arc, f).str());
    CHECK(rows == std::set<std::string>{"1 2 2", "2 1 2", "2 2 1"});
    auto canon = canonical_flow(arc, ColTableau::parse("1 2 2"));
    CHECK(boundary_state(arc, canon) == StateString{1, -1});
}

TEST_CASE("weights") {
    auto arc = web("F1^2", 2, 1);
    CHECK(closed_weights(close(arc, arc)) == std::multiset<int>{2, 0, -2});
    auto theta = web("F1 F2 F1", 3, 1);
    CHECK(closed_weights(close(theta, theta)) == std::multiset<int>{3, 1, 1, -1, -1, -3});
    auto empty = web("1", 2, 0);
    CHECK(weight(empty, enumerate_flows(empty).front()) == 0);
    auto f = enumerate_flows(theta).front();
    int sum = 0;
    for (int k = 1; k <= 3; ++k) sum += rung_weight(theta, f, k);
    CHECK(sum == weight(theta, f));
}

TEST_CASE("the top theta flow is canonical on both halves") {
    auto theta = web("F1 F2 F1", 3, 1);
    auto flows = enumerate_flows(theta);
    auto closed = enumerate_closed_flows(close(theta, theta));
    Flow canon = canonical_flow(theta, ColTableau::parse("1 2 3"));
    int found = 0;
    for (const auto& c : closed) {
        if (c.weight != 3) continue;
        ++found;
        CHECK(flows[c.lower_flow] == canon);
        CHECK(flows[c.upper_flow] == canon);
    }
    CHECK(found == 1);
}

TEST_CASE("canonical flows exist and are unique") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& s : classical_sign_strings(n)) {
            for (const auto& b : enumerate_basis(s)) {
                int matches = 0;
                for (const auto& f : enumerate_flows(b.web))
                    if (flow_to_colstrict(b.web, f) == b.tableau) ++matches;
                CHECK(matches == 1);
                CHECK_NOTHROW(canonical_flow(b.web, b.tableau));
            }
        }
    }
}

TEST_CASE("brackets") {
    auto arc = web("F1^2", 2, 1);
    CHECK(bracket(close(arc, arc)) == qint(3));
    auto theta = web("F1 F2 F1", 3, 1);
    CHECK(bracket(close(theta, theta)).str() == "q^3 + 2*q + 2*q^-1 + q^-3");
    auto half = web("F1 F2^2", 3, 2);
    CHECK(bracket(close(half, half)) == qint(2) * qint(3));
    auto nested = web("F2 F1^2 F3^2 F2^2", 4, 2);
    auto split = web("F1^2 F2 F3^2 F2^2", 4, 2);
    CHECK(bracket(close(nested, nested)) == qint(3) * qint(3));
    CHECK(bracket(close(split, split)) == qint(3) * qint(3));
    CHECK(bracket(close(nested, split)) == qint(3));
    CHECK_THROWS(close(arc, theta));
}

TEST_CASE("bracket symmetry and flow counts") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& s : classical_sign_strings(n)) {
            auto basis = enumerate_basis(s);
            for (const auto& u : basis) {
                for (const auto& v : basis) {
                    auto c = close(u.web, v.web);
                    auto br = bracket(c);
                    CHECK(br.is_bar_symmetric());
                    CHECK(br.at_one() == static_cast<long>(enumerate_closed_flows(c).size()));
                }
            }
        }
    }
}

TEST_CASE("tensor expansion") {
    auto arc = web("F1^2", 2, 1);
    auto te = tensor_expansion(arc);
    CHECK(te.size() == 3);
    CHECK(te.at({1, -1}) == LaurentPoly::constant(1));
    auto hex = web(kHexagon, 6, 3);
    auto coeff = tensor_expansion(hex).at(StateString(6, 0));
    CHECK(coeff.coef(4) != 0);
    // A circle drawn as one ladder has no boundary states.
    auto circle = web("F1 F1^2", 2, 1);
    auto tc = tensor_expansion(circle);
    REQUIRE(tc.size() == 1);
    CHECK(tc.begin()->first.empty());
    CHECK(tc.begin()->second.terms().size() == 3);
}

TEST_CASE("unitriangularity") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& s : classical_sign_strings(n)) {
            for (const auto& b : enumerate_basis(s)) {
                StateString top = boundary_state(b.web, canonical_flow(b.web, b.tableau));
                auto te = tensor_expansion(b.web);
                CHECK(te.at(top) == LaurentPoly::constant(1));
                for (const auto& [j, c] : te)
                    if (j != top && !c.is_zero()) CHECK(j < top);
            }
        }
    }
}

}
