#pragma once

// Polynomials over Z/pZ for small primes p < 2^31, with Rabin's
// irreducibility test and factor-degree patterns (squarefree decomposition
// followed by distinct-degree splitting).

#include "phiirred/zpoly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace phiirred {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Primes p with p < bound (or p <= bound when inclusive), ascending.
std::vector<std::uint32_t> primes_below(std::uint64_t bound, bool inclusive = false);
/// The first `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);
/// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

class FpPoly {
public:
    FpPoly(std::uint32_t p, std::vector<std::uint64_t> coeffs);
    explicit FpPoly(std::uint32_t p) : p_(p) {}

    static FpPoly x(std::uint32_t p) { return FpPoly(p, {0, 1}); }
    static FpPoly one(std::uint32_t p) { return FpPoly(p, {1}); }

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    /// 0 for the zero polynomial; check is_zero() first.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    void normalize();
    std::uint32_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

FpPoly reduce_mod_p(const IntPoly& f, std::uint64_t p);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_make_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
/// base^e mod m.
FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/// Monic gcd; gcd(0, 0) = 0. Throws on modulus mismatch.
FpPoly gcd_fp(const FpPoly& a, const FpPoly& b);

/// base^(p^e) mod modulus by e successive p-th powerings. With base = x this
/// is the Frobenius image x^(p^e). Throws if modulus is not monic of degree >= 1.
FpPoly frobenius_power(const FpPoly& base, const FpPoly& modulus, unsigned e);

/// Rabin's test. Throws std::invalid_argument if the reduction drops degree
/// or f is constant.
bool is_irreducible_mod_p(const IntPoly& f, std::uint64_t p);
bool is_irreducible_fp(const FpPoly& f);

struct IrreducibilityReport {
    std::uint64_t bound = 0;
    bool inclusive = false;
    std::vector<std::pair<std::uint32_t, bool>> per_prime;
    bool all_irreducible = true;
};

/// Every prime p < bound (p <= bound if inclusive). phi must be monic.
IrreducibilityReport irreducible_mod_all_primes_below(const IntPoly& phi, std::uint64_t bound,
                                                      bool inclusive = false);

/// degree -> number of irreducible factors of that degree, with multiplicity.
using DegreeMultiset = std::map<std::size_t, std::size_t>;

/// Squarefree decomposition of a monic polynomial: pairs (g, multiplicity),
/// each g squarefree and monic, product of g^multiplicity = f.
std::vector<std::pair<FpPoly, std::size_t>> squarefree_decomposition(const FpPoly& f);
/// Distinct-degree split of a monic squarefree polynomial.
DegreeMultiset distinct_degree_factor(const FpPoly& squarefree_monic);

/// Factor-degree multiset of f mod p. Throws if p divides the leading coefficient.
DegreeMultiset distinct_degree_factor_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace phiirred
