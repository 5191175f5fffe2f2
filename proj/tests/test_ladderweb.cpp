#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sl3/ladderweb.hpp"

using namespace sl3;

namespace {

const char* kHexagon = "F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2";

LTWord word_of(const char* s) { return LTWord::parse(s); }

}  // namespace

TEST_SUITE("ladderweb") {

TEST_CASE("sign strings") {
    auto s = SignString::parse("+-x o");
    CHECK(s.weights == std::vector<int>{1, 2, 3, 0});
    CHECK(s.str() == "+-xo");
    CHECK_FALSE(s.is_classical());
    CHECK(SignString::parse("+-+-").is_classical());
    CHECK(SignString::parse("---").level() == 2);
    CHECK_THROWS(SignString::parse("++").level());
    CHECK_THROWS(SignString::parse("+a"));
}

TEST_CASE("c(S)") {
    CHECK(c_of_S(SignString::parse("+-+-")) == 7);
    CHECK(c_of_S(SignString::parse("+-")) == 2);
    CHECK(c_of_S(SignString::parse("---")) == 3);
    CHECK(c_of_S(SignString::parse("+++")) == 3);
}

TEST_CASE("classical sign strings") {
    CHECK(classical_sign_strings(2).size() == 2);
    CHECK(classical_sign_strings(3).size() == 2);
    // Strings of length 6 with n+ + 2n- divisible by 3.
    CHECK(classical_sign_strings(6).size() == 22);
}

TEST_CASE("words") {
    auto w = word_of("F1 F2^2");
    CHECK(w.total_length() == 3);
    CHECK(w.length() == 2);
    CHECK(total_length(LTWord{}) == 0);
    CHECK(length(LTWord{}) == 0);
    auto hex = word_of(kHexagon);
    CHECK(hex.length() == 11);
    CHECK(hex.total_length() == 15);
    CHECK(hex.str() == kHexagon);
    CHECK(LTWord::parse("F_1 F_2^(2)") == w);
    CHECK(LTWord{}.str() == "1");
    CHECK(LTWord::from_json(hex.to_json()) == hex);
    CHECK(w.application_order() == std::vector<Step>{{2, 2}, {1, 1}});
    CHECK(LTWord::from_application_order(w.application_order()) == w);
    CHECK_THROWS(LTWord::parse("F0"));
    CHECK_THROWS(LTWord::parse("G1"));
}

TEST_CASE("divided powers on weights") {
    CHECK(apply_F({3, 3, 0, 0}, 2, 2) == Weights{3, 1, 2, 0});
    CHECK(apply_F({3, 0}, 1, 3) == Weights{0, 3});
    CHECK_FALSE(apply_F({1, 3}, 1, 1).has_value());
    CHECK_THROWS_AS(apply_F({3, 0}, 2, 1), std::domain_error);
    CHECK(highest_weight(4, 2) == Weights{3, 3, 0, 0});
}

TEST_CASE("building webs") {
    auto half = build_web(word_of("F1 F2^2"), 3, 2);
    REQUIRE(half.has_value());
    CHECK(half->top() == Weights{2, 2, 2});
    CHECK(half->boundary().str() == "---");
    CHECK(half->layers() == std::vector<Weights>{{3, 3, 0}, {3, 1, 2}, {2, 2, 2}});
    auto id = build_web(LTWord{}, 3, 1);
    REQUIRE(id.has_value());
    CHECK(id->boundary().str() == "xoo");
    CHECK_FALSE(build_web(word_of("F1^3 F1^3"), 2, 1).has_value());
    CHECK_THROWS(build_web_or_throw(word_of("F1^3 F1^3"), 2, 1));
    CHECK_FALSE(half->ascii().empty());
}

TEST_CASE("LT generators of the worked tableaux") {
    CHECK(lt_generators(ColTableau::parse("1 1 2")).str() == "F1");
    CHECK(lt_generators(ColTableau::parse("1 2 2")).str() == "F1^2");
    CHECK(lt_generators(ColTableau::parse("1 1 2/2 3 3")).str() == "F1 F2^2");
    CHECK(lt_generators(ColTableau::parse("1 2 3")).str() == "F1 F2 F1");
    CHECK(lt_generators(ColTableau::parse("1 2 3/2 4 4")).str() == "F2 F1^2 F3^2 F2^2");
    CHECK(lt_generators(ColTableau::parse("1 2 2/3 4 4")).str() == "F1^2 F2 F3^2 F2^2");
    CHECK(lt_generators(ColTableau::parse("1 2 4/2 3 5/4 6 6")).str() == kHexagon);
    CHECK(lt_generators(row_filling(2)).str() == "1");
}

TEST_CASE("semi-standard enumeration matches brute force") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& s : classical_sign_strings(n)) {
            auto ts = enumerate_semistandard(s);
            CHECK(static_cast<int>(ts.size()) == oracle::count_semistandard(s));
            for (const auto& t : ts) CHECK(t.is_semistandard());
        }
    }
    CHECK(enumerate_semistandard(SignString::parse("---")).size() == 1);
    CHECK(enumerate_semistandard(SignString::parse("+-")).size() == 1);
}

TEST_CASE("basis webs") {
    CHECK(enumerate_basis(SignString::parse("+-")).size() == 1);
    auto b = enumerate_basis(SignString::parse("+-+-"));
    std::vector<std::string> words;
    for (const auto& x : b) words.push_back(x.web.word().str());
    CHECK(std::count(words.begin(), words.end(), "F2 F1^2 F3^2 F2^2") == 1);
    CHECK(std::count(words.begin(), words.end(), "F1^2 F2 F3^2 F2^2") == 1);
    auto hex = enumerate_basis(SignString::parse("+-+-+-"));
    CHECK(std::any_of(hex.begin(), hex.end(), [](const BasisWeb& x) { return x.web.word().str() == kHexagon; }));
}

TEST_CASE("basis webs share total length and never vanish") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& s : classical_sign_strings(n)) {
            auto basis = enumerate_basis(s);
            REQUIRE_FALSE(basis.empty());
            const int lt = basis.front().web.word().total_length();
            for (const auto& b : basis) {
                CHECK(b.web.word().total_length() == lt);
                CHECK(b.web.boundary() == s);
                CHECK(build_web(b.web.word(), n, s.level()).has_value());
            }
        }
    }
}

}
