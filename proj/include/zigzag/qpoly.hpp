#pragma once

// Exact Laurent polynomials in a single formal variable q with
// arbitrary-precision integer coefficients, and exact rationals to evaluate
// them at.

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace zigzag {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "p/r" or "p". Rejects decimals, exponents and zero denominators.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long constant); // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const BigInt& constant);

    static LaurentPoly monomial(Exponent exponent, const BigInt& coefficient = 1);
    /// Builds from (exponent, coefficient) pairs, summing repeats and dropping zeros.
    static LaurentPoly from_terms(const Terms& terms);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of q^exponent (zero when absent).
    BigInt coefficient(Exponent exponent) const;
    /// Lowest and highest exponents. Precondition: nonzero.
    Exponent low_degree() const;
    Exponent high_degree() const;

    /// Multiplies by q^k.
    LaurentPoly shifted(Exponent k) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(LaurentPoly a);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human-readable form, e.g. "1 - q^2 + 3q^-1". Zero prints as "0".
    std::string to_string() const;

private:
    void add_term(Exponent exponent, const BigInt& coefficient);

    Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Returns c with b * c == a exactly. Long division runs upward from the
/// lowest exponent; throws NotDivisible if a remainder survives and
/// std::domain_error if b is zero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Exact value at q = q0. Throws ZeroToNegativePower when q0 == 0 and p has a
/// negative exponent.
Rational eval(const LaurentPoly& p, const Rational& q0);

/// Floating value at q = q0, for the numerical oracles.
double eval_double(const LaurentPoly& p, double q0);

/// prod_{i=1}^{k} (1 - q^{2i}); the empty product is 1.
LaurentPoly qsquare_factorial_product(int k);

} // namespace zigzag
