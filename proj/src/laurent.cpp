#include "sl3/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sl3 {

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coef) {
    LaurentPoly p;
    p.add_term(exponent, coef);
    return p;
}

mpz_class LaurentPoly::coef(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
    *this = *this * r;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

mpz_class LaurentPoly::at_one() const {
    mpz_class s = 0;
    for (const auto& kv : terms_) s += kv.second;
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int e = it->first;
        mpz_class c = it->second;
        bool neg = c < 0;
        mpz_class a = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) out << a.get_str() << "*";
        out << "q";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos) {
    throw std::invalid_argument("cannot parse Laurent polynomial '" + text + "' at offset " +
                                std::to_string(pos));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly p;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](std::string& digits) {
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    };
    skip();
    if (i == n) parse_fail(text, i);
    bool first = true;
    while (true) {
        skip();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            parse_fail(text, i);
        }
        first = false;
        std::string digits;
        read_int(digits);
        mpz_class coef = digits.empty() ? mpz_class(1) : mpz_class(digits);
        int exponent = 0;
        skip();
        bool has_q = false;
        if (i < n && text[i] == '*') {
            if (digits.empty()) parse_fail(text, i);
            ++i;
            skip();
            if (i >= n || text[i] != 'q') parse_fail(text, i);
        }
        if (i < n && text[i] == 'q') {
            has_q = true;
            ++i;
            exponent = 1;
            if (i < n && text[i] == '^') {
                ++i;
                int esign = 1;
                if (i < n && text[i] == '-') {
                    esign = -1;
                    ++i;
                }
                std::string ed;
                read_int(ed);
                if (ed.empty()) parse_fail(text, i);
                exponent = esign * std::stoi(ed);
            }
        }
        if (digits.empty() && !has_q) parse_fail(text, i);
        p.add_term(exponent, sign * coef);
    }
    return p;
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) {
        if (c.fits_slong_p()) {
            j[std::to_string(e)] = c.get_si();
        } else {
            j[std::to_string(e)] = c.get_str();
        }
    }
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("Laurent polynomial JSON must be an object");
    LaurentPoly p;
    for (const auto& [key, value] : j.items()) {
        int e = std::stoi(key);
        mpz_class c = value.is_string() ? mpz_class(value.get<std::string>())
                                        : mpz_class(value.get<long>());
        p.add_term(e, c);
    }
    return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) p.add_term(ea + eb, ca * cb);
    return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
LaurentPoly shift(const LaurentPoly& p, int k) { return p.shifted(k); }

LaurentPoly qint(int a) {
    if (a <= 0) throw std::domain_error("quantum integer needs a positive argument");
    LaurentPoly p;
    for (int e = a - 1; e >= -(a - 1); e -= 2) p.add_term(e, 1);
    return p;
}

}  // namespace sl3
