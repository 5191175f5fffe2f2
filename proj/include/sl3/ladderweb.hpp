#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/tableaux.hpp"

namespace sl3 {

// Boundary weights in {0,1,2,3}; text symbols o, +, -, x.
struct SignString {
    std::vector<int> weights;

    int size() const { return static_cast<int>(weights.size()); }
    bool is_classical() const;
    int level() const;  // sum / 3, domain error when not divisible
    std::string str() const;
    static SignString parse(const std::string& text);
    friend bool operator==(const SignString&, const SignString&) = default;
    friend auto operator<=>(const SignString&, const SignString&) = default;
};

// c(S) for a classical sign string.
int c_of_S(const SignString& s);

// All classical sign strings of length n whose weight is divisible by 3.
std::vector<SignString> classical_sign_strings(int n);

struct Step {
    int index = 1;  // F_index acts between strands index and index+1
    int power = 1;  // divided power 1..3
    friend bool operator==(const Step&, const Step&) = default;
    friend auto operator<=>(const Step&, const Step&) = default;
};

// Word of divided powers in written order; the rightmost factor acts first.
struct LTWord {
    std::vector<Step> factors;

    int length() const { return static_cast<int>(factors.size()); }
    int total_length() const;
    std::vector<Step> application_order() const;
    static LTWord from_application_order(const std::vector<Step>& steps);

    std::string str() const;  // "F1 F2^2 F1", empty word "1"
    static LTWord parse(const std::string& text);
    nlohmann::json to_json() const;  // [[i,j],...] in application order
    static LTWord from_json(const nlohmann::json& j);
    friend bool operator==(const LTWord&, const LTWord&) = default;
    friend auto operator<=>(const LTWord&, const LTWord&) = default;
};

int total_length(const LTWord& w);
int length(const LTWord& w);

using Weights = std::vector<int>;

// nullopt is the zero morphism; an index out of range is a domain error.
std::optional<Weights> apply_F(const Weights& weights, int i, int j);

Weights highest_weight(int n, int level);

class LadderWeb {
public:
    LadderWeb(LTWord word, int n, int level, std::vector<Weights> layers);

    const LTWord& word() const { return word_; }
    int n() const { return n_; }
    int level() const { return level_; }
    // layers[0] is the highest weight, layers[k] follows the k-th applied step.
    const std::vector<Weights>& layers() const { return layers_; }
    const std::vector<Step>& steps() const { return steps_; }
    const Weights& top() const { return layers_.back(); }
    SignString boundary() const { return SignString{top()}; }
    std::string ascii() const;

    friend bool operator==(const LadderWeb& a, const LadderWeb& b) {
        return a.word_ == b.word_ && a.n_ == b.n_ && a.level_ == b.level_;
    }

private:
    LTWord word_;
    int n_;
    int level_;
    std::vector<Weights> layers_;
    std::vector<Step> steps_;
};

// nullopt when some step leaves [0,3].
std::optional<LadderWeb> build_web(const LTWord& word, int n, int level);
// Throws when the word dies.
LadderWeb build_web_or_throw(const LTWord& word, int n, int level);

// Semi-standard tableaux of shape 3^level with content 1 for '+' and 2 for '-'.
std::vector<ColTableau> enumerate_semistandard(const SignString& s);

LTWord lt_generators(const ColTableau& t);

struct BasisWeb {
    ColTableau tableau;
    LadderWeb web;
};
std::vector<BasisWeb> enumerate_basis(const SignString& s);

}  // namespace sl3
