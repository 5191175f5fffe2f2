#include <doctest.h>

#include "oracles.hpp"
#include "sl3/bijection.hpp"
#include "sl3/flows.hpp"

using namespace sl3;

TEST_SUITE("oracles") {

TEST_CASE("planar reduction of small closed webs") {
    auto arc = build_web_or_throw(LTWord::parse("F1^2"), 2, 1);
    CHECK(oracle::kuperberg_bracket(arc, arc) == qint(3));
    auto theta = build_web_or_throw(LTWord::parse("F1 F2 F1"), 3, 1);
    CHECK(oracle::kuperberg_bracket(theta, theta) == qint(2) * qint(3));
    auto hex = build_web_or_throw(LTWord::parse("F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2"), 6, 3);
    CHECK(oracle::kuperberg_bracket(hex, hex) == bracket(close(hex, hex)));
}

TEST_CASE("flow brackets agree with planar reduction") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& s : classical_sign_strings(n)) {
            auto basis = enumerate_basis(s);
            for (const auto& u : basis)
                for (const auto& v : basis) {
                    INFO(s.str() << " " << u.web.word().str() << " | " << v.web.word().str());
                    CHECK(bracket(close(u.web, v.web)) == oracle::kuperberg_bracket(u.web, v.web));
                }
        }
    }
}

TEST_CASE("library degrees agree with the reference definition on all images") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& s : classical_sign_strings(n))
            for (const auto& b : enumerate_basis(s))
                for (const auto& f : enumerate_flows(b.web)) {
                    auto t = iota(b.web, f);
                    CHECK(bkw_degree(t).total == oracle::bkw_degree(t));
                }
}

}
