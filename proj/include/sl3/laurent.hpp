#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include <json.hpp>

namespace sl3 {

// Integer Laurent polynomial in q with arbitrary precision coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, const mpz_class& coef = 1);
    static LaurentPoly constant(const mpz_class& c) { return monomial(0, c); }

    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coef(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;
    int max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& r);
    LaurentPoly& operator-=(const LaurentPoly& r);
    LaurentPoly& operator*=(const LaurentPoly& r);
    void add_term(int exponent, const mpz_class& coef);

    LaurentPoly shifted(int k) const;
    // q -> q^{-1}
    LaurentPoly bar() const;
    bool is_bar_symmetric() const { return bar() == *this; }
    mpz_class at_one() const;

    std::string str() const;
    static LaurentPoly parse(const std::string& text);

    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<int, mpz_class> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly shift(const LaurentPoly& p, int k);

// Quantum integer [a] = q^{a-1} + q^{a-3} + ... + q^{-(a-1)}; a >= 1.
LaurentPoly qint(int a);

}  // namespace sl3
