#pragma once

// Irreducibility certificates for
//
//   f_c(x) = a_n phi^{2n} / u_{2n+c} + sum_{j<n} a_j(x) phi^{2j} / u_{2j+c},   c in {0, 2}.
//
// The certifier works on the cleared-denominator polynomial
// F_c = u_{2n+c} f_c = a_n phi^{2n} + sum_j (u_{2n+c}/u_{2j+c}) a_j(x) phi^{2j}
// and records, for the reference polynomial g_c = sum_j (u_{2n+c}/u_{2j+c}) phi^{2j}:
//
//   * a small-degree exclusion prime p0 | 2n-1+c ruling out factors of degree
//     in [1, deg phi) (F_c reduces to a_n phi^{2n} mod p0);
//   * for every k = 1..n a prime p_k with p_k | c_i for i <= 2n-k, p_k not
//     dividing a_n, v_{p_k}^x(a_0) = 0, phi irreducible mod p_k, and the
//     right-most slope of the phi-Newton polygon of g_c below 1/k, which rules
//     out factors of degree in [k deg phi, (k+1) deg phi).
//
// Together these cover [1, (n+1) deg phi); since deg F_c = 2n deg phi, any
// proper factorization has a factor in that range.

#include "phiirred/execution.hpp"
#include "phiirred/polygon.hpp"
#include "phiirred/valuation.hpp"
#include "phiirred/zpoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phiirred {

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for inputs whose leading coefficient a_n is a nonconstant
/// polynomial. The theorems need an integer a_n; with a polynomial a_n(x)
/// there are instances with an integer root (e.g. phi = x^2-x+5,
/// a_2 = x-3, a_1 = x+26, a_0 = 5(x-5) vanishes at 0).
class PolynomialLeadingCoefficient : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Which primes the hypotheses range over: p < value, or p <= value.
struct PrimeBound {
    std::uint64_t value = 0;
    bool inclusive = false;
    friend bool operator==(const PrimeBound&, const PrimeBound&) = default;
};

struct ProblemInstance {
    unsigned c = 0;
    unsigned n = 0;
    IntPoly phi;
    Integer a_n;
    /// a_0(x) ... a_{n-1}(x).
    std::vector<IntPoly> lower;
    /// Defaults to primes < 2n + c.
    std::optional<PrimeBound> bound;

    PrimeBound prime_bound() const { return bound.value_or(PrimeBound{2ull * n + c, false}); }
    /// Throws InvalidInstance: c not in {0,2}, n < 1, phi not monic of degree
    /// >= 1, a_n = 0, lower.size() != n, a_0 = 0.
    void validate() const;

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Returns a_n as an integer when it is constant; otherwise throws
/// PolynomialLeadingCoefficient naming the counterexample class.
Integer reject_polynomial_leading_coefficient(const IntPoly& a_n);

struct HypothesisReport {
    PrimeBound bound;
    /// Indices i with deg a_i >= deg phi.
    std::vector<std::size_t> degree_violations;
    bool phi_monic = true;
    std::vector<std::pair<std::uint32_t, bool>> phi_irreducible;
    Integer content_an_a0;
    /// (p, p does not divide content(a_n a_0)).
    std::vector<std::pair<std::uint32_t, bool>> content_coprime;
    bool structural_ok = true;
    std::string structural_note;

    bool degree_bounds_ok() const { return degree_violations.empty(); }
    bool phi_irreducible_ok() const;
    bool content_ok() const;
    bool pass() const;

    friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

struct SmallDegreeStep {
    std::optional<std::uint64_t> p0;
    bool p0_coprime_to_a_n = false;
    /// Indices 2j (j < n) with p0 | c_{2j}.
    std::vector<std::size_t> divisibility;
    bool phi_irreducible_mod_p0 = false;
    bool pass = false;
    friend bool operator==(const SmallDegreeStep&, const SmallDegreeStep&) = default;
};

struct PrimeTrial {
    std::uint64_t p = 0;
    std::string outcome;  // "accepted" or the first failed condition
    friend bool operator==(const PrimeTrial&, const PrimeTrial&) = default;
};

struct DegreeInterval {
    std::uint64_t lo = 0;  // inclusive
    std::uint64_t hi = 0;  // exclusive
    friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

struct KStep {
    unsigned k = 0;
    unsigned ell = 0;
    /// Minimum admissible prime: k+1 for c = 0, k+2 for c = 2.
    std::uint64_t threshold = 0;
    std::optional<std::uint64_t> p;
    /// Indices i <= 2n-k with c_i != 0, all divisible by p.
    std::vector<std::size_t> divisibility;
    std::vector<Ratio> polygon_slopes;
    std::optional<Ratio> rightmost_slope;
    Ratio bound;  // 1/k
    bool p_coprime_to_a_n = false;
    bool a0_unit = false;
    bool phi_irreducible_mod_p = false;
    bool slope_below_bound = false;
    bool pass = false;
    DegreeInterval excluded;
    std::vector<PrimeTrial> search_log;
    friend bool operator==(const KStep&, const KStep&) = default;
};

enum class Verdict { irreducible, inconclusive, hypothesis_failed };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct ScaledDigest {
    std::uint64_t degree = 0;
    Integer leading;
    Integer content;
    std::string digest;
    friend bool operator==(const ScaledDigest&, const ScaledDigest&) = default;
};

inline constexpr const char* kCertificateSchema = "phi-irred-cert/1";

struct Certificate {
    std::string schema = kCertificateSchema;
    ProblemInstance instance;
    std::string instance_digest;
    HypothesisReport hypotheses;
    ScaledDigest scaled;
    SmallDegreeStep small_degree;
    std::vector<KStep> steps;
    /// [1, deg phi) followed by [k deg phi, (k+1) deg phi) for k = 1..n.
    std::vector<DegreeInterval> coverage;
    Verdict verdict = Verdict::inconclusive;
    std::optional<unsigned> failing_k;
    std::string summary;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

HypothesisReport check_hypotheses(const ProblemInstance& inst);

/// c_0 ... c_{2n}: c_{2j} = u_{2n+c} / u_{2j+c}, odd entries zero.
std::vector<Integer> c_coefficients(unsigned n, unsigned c);

/// F_c = u_{2n+c} f_c with integer coefficients.
IntPoly build_scaled_polynomial(const ProblemInstance& inst);

/// Same assembly with a polynomial top coefficient a_n(x); used to replay the
/// counterexamples that PolynomialLeadingCoefficient guards against.
IntPoly build_scaled_polynomial(unsigned c, const IntPoly& phi, const IntPoly& top, const std::vector<IntPoly>& lower);

/// FNV-1a 64 over the canonical instance JSON, as 16 hex digits.
std::string instance_digest(const ProblemInstance& inst);
std::string polynomial_digest(const IntPoly& f);

/// Throws InvalidInstance for structurally invalid input.
Certificate certify(const ProblemInstance& inst, Execution exec = Execution::parallel);

struct VerificationResult {
    bool ok = true;
    std::vector<std::string> mismatches;
    explicit operator bool() const { return ok; }
};

/// Replays every recorded claim from the instance alone.
VerificationResult verify_certificate(const ProblemInstance& inst, const Certificate& cert);

}  // namespace phiirred
