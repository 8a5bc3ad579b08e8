#pragma once

// Dense univariate polynomials over the integers with arbitrary-precision
// coefficients, and the phi-adic expansion f = sum b_i(x) phi(x)^i.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phiirred {

using Integer = mpz_class;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t power);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Empty for the zero polynomial (degree -infinity).
    std::optional<std::size_t> degree() const;
    /// Number of stored coefficients; 0 for the zero polynomial.
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of x^i, zero past the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& rhs);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const Integer& k);
IntPoly pow(const IntPoly& base, unsigned exponent);

inline IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
inline IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }
inline IntPoly operator*(const Integer& k, const IntPoly& a) { return scale(a, k); }

/// gcd of the coefficients; 0 for the zero polynomial, positive otherwise.
Integer content(const IntPoly& f);
/// f / content(f) with positive leading coefficient; zero maps to zero.
IntPoly primitive_part(const IntPoly& f);

/// Division by a monic polynomial: f = q * divisor + r, deg r < deg divisor.
/// Throws std::invalid_argument if the divisor is not monic of degree >= 1.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& divisor);

/// Exact division by a nonzero integer; throws std::domain_error when inexact.
IntPoly divide_exact(const IntPoly& f, const Integer& k);

Integer eval_at_integer(const IntPoly& f, const Integer& t);
IntPoly derivative(const IntPoly& f);
/// outer(inner(x)).
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

/// Exact square root in Z[x] if f is the square of an integer polynomial with
/// positive leading coefficient.
std::optional<IntPoly> exact_sqrt(const IntPoly& f);

struct PhiExpansion {
    IntPoly phi;
    /// terms[i] = b_i(x), every deg b_i < deg phi; no trailing zero terms.
    std::vector<IntPoly> terms;

    std::size_t phi_degree() const { return terms.empty() ? 0 : terms.size() - 1; }
};

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);
/// Throws std::invalid_argument if some term has degree >= deg phi.
IntPoly phi_assemble(const PhiExpansion& e);
/// sum terms[i] * phi^i without the degree restriction.
IntPoly assemble_in_powers(const std::vector<IntPoly>& terms, const IntPoly& phi);

}  // namespace phiirred
