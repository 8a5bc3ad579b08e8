#pragma once

// One-sided, self-verifying evidence about factorizations over Z:
//   * integer roots (each one re-evaluated to zero),
//   * a mod-p degree sieve that can only prove irreducibility,
//   * recognition of (alpha phi^t - beta)(alpha phi^t + beta) and perfect squares.

#include "phiirred/certifier.hpp"
#include "phiirred/execution.hpp"
#include "phiirred/fppoly.hpp"
#include "phiirred/zpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phiirred {

struct RootSearch {
    std::vector<Integer> roots;
    /// False when the candidate divisor set could not be enumerated fully.
    bool complete = true;
};

/// Integer roots of a nonzero f, sorted ascending.
RootSearch integer_root_search(const IntPoly& f);

enum class SieveOutcome { irreducible_certain, reducible_with_witness, inconclusive };
std::string to_string(SieveOutcome o);

struct PrimePattern {
    std::uint32_t p = 0;
    DegreeMultiset degrees;
    friend bool operator==(const PrimePattern&, const PrimePattern&) = default;
};

struct SieveVerdict {
    SieveOutcome outcome = SieveOutcome::inconclusive;
    std::vector<PrimePattern> evidence;
    /// Proper factor degrees still consistent with every pattern.
    std::vector<std::size_t> feasible_degrees;
    std::optional<Integer> witness_root;
    std::vector<IntPoly> witness_factors;
    friend bool operator==(const SieveVerdict&, const SieveVerdict&) = default;
};

/// Uses the first `prime_budget` good primes (p not dividing the leading
/// coefficient, f squarefree mod p). Never returns reducible_with_witness.
SieveVerdict degree_sieve(const IntPoly& f, std::size_t prime_budget, Execution exec = Execution::parallel);

struct KnownFactorization {
    std::string pattern;  // "difference_of_squares" or "perfect_square"
    /// f = scale * product(factors).
    Integer scale;
    std::vector<IntPoly> factors;
    /// Factors written in powers of phi, e.g. "phi^2 + 15".
    std::vector<std::string> phi_forms;
};

std::optional<KnownFactorization> known_form_factor(const IntPoly& f, const IntPoly& phi);

/// "phi^2 + (x + 1)phi - 3" style rendering of an expansion.
std::string phi_form(const PhiExpansion& e);

/// Roots, known forms, then the sieve, in that order; the first reducibility
/// witness wins. Witnesses are re-verified before being returned.
SieveVerdict assess(const IntPoly& f, const IntPoly& phi, std::size_t prime_budget,
                    Execution exec = Execution::parallel);

struct CrossCheckReport {
    RootSearch roots;
    SieveVerdict sieve;
    std::optional<KnownFactorization> known;
    bool reducibility_witnessed = false;
    bool contradiction = false;
    std::vector<std::string> notes;
};

CrossCheckReport cross_check(const ProblemInstance& inst, const Certificate& cert, std::size_t prime_budget,
                             Execution exec = Execution::parallel);

/// PHI_IRRED_PRIME_BUDGET if set to a positive integer, else 25.
std::size_t default_prime_budget();

}  // namespace phiirred
