#include "zigzag/qpoly.hpp"

#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "zigzag/errors.hpp"

namespace zigzag {

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw PreconditionError("not an exact rational literal (expected p or p/r): '" + text + "'");
    BigInt num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    BigInt den = match[2].matched ? BigInt(match[2].str()) : BigInt(1);
    if (den == 0)
        throw PreconditionError("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

double to_double(const Rational& r) {
    return r.get_d();
}

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0)
        terms_.emplace(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
    if (constant != 0)
        terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(Exponent exponent, const BigInt& coefficient) {
    LaurentPoly p;
    if (coefficient != 0)
        p.terms_.emplace(exponent, coefficient);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

BigInt LaurentPoly::coefficient(Exponent exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::low_degree() const {
    if (terms_.empty())
        throw std::domain_error("degree of the zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::high_degree() const {
    if (terms_.empty())
        throw std::domain_error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_)
        p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    return p;
}

void LaurentPoly::add_term(Exponent exponent, const BigInt& coefficient) {
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, BigInt(-c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    BigInt product;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            product = ca * cb;
            out.add_term(ea + eb, product);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_)
        c = -c;
    return a;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt magnitude = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out << magnitude.get_str();
        out << "q";
        if (e != 1)
            out << "^" << e;
    }
    return out.str();
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    return a + b;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    return a * b;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero())
        throw std::domain_error("div_exact: division by the zero polynomial");
    if (a.is_zero())
        return {};

    const auto low_b = b.low_degree();
    const BigInt& lead = b.terms().begin()->second;
    // Any exact quotient has its top exponent at high(a) - high(b).
    const auto top = a.high_degree() - b.high_degree();

    LaurentPoly remainder = a;
    LaurentPoly quotient;
    while (!remainder.is_zero()) {
        const auto [e, c] = *remainder.terms().begin();
        const auto qe = e - low_b;
        if (qe > top || !mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw NotDivisible("div_exact: (" + a.to_string() + ") / (" + b.to_string() + ") leaves a remainder");
        const auto term = LaurentPoly::monomial(qe, BigInt(c / lead));
        quotient += term;
        remainder -= term * b;
    }
    return quotient;
}

namespace {

Rational power(const Rational& base, LaurentPoly::Exponent exponent) {
    const auto n = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
    Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Rational eval(const LaurentPoly& p, const Rational& q0) {
    if (q0 == 0 && !p.is_zero() && p.low_degree() < 0)
        throw ZeroToNegativePower("eval: q = 0 with negative exponent " + std::to_string(p.low_degree()));
    Rational total = 0;
    for (const auto& [e, c] : p.terms())
        total += Rational(c) * power(q0, e);
    return total;
}

double eval_double(const LaurentPoly& p, double q0) {
    double total = 0.0;
    for (const auto& [e, c] : p.terms())
        total += c.get_d() * std::pow(q0, static_cast<double>(e));
    return total;
}

LaurentPoly qsquare_factorial_product(int k) {
    LaurentPoly product(1);
    for (int i = 1; i <= k; ++i)
        product *= LaurentPoly(1) - LaurentPoly::monomial(2 * i);
    return product;
}

} // namespace zigzag
