#pragma once

// Odd-number products u_j and Schur's prime lemma: among the k odd numbers
// 2n+1, 2n+3, ..., 2n+2k-1 (n > k) some member has a prime factor > 2k+1,
// except for k = 1 with 2n+1 = 3^u (u >= 2) and k = 2 with 2n+1 = 25.

#include "phiirred/execution.hpp"
#include "phiirred/zpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace phiirred {

/// Product of the odd numbers <= j; u(0) = u(1) = 1.
Integer u(std::uint64_t j);

/// u(a) / u(b) for even 0 <= b <= a: the product of the odd numbers in (b, a].
/// Throws std::invalid_argument if b > a or either is odd.
Integer u_ratio(std::uint64_t a, std::uint64_t b);

struct SchurWitness {
    std::uint64_t p = 0;
    /// Window member divisible by p.
    std::uint64_t divides = 0;
    friend bool operator==(const SchurWitness&, const SchurWitness&) = default;
};

/// Window 2n+1, ..., 2n+2k-1; smallest qualifying prime, then smallest member.
/// Throws std::invalid_argument unless n > k >= 1.
std::optional<SchurWitness> find_schur_prime(std::uint64_t n, std::uint64_t k);

/// Same search over the k odd numbers first_odd, first_odd + 2, ..., asking
/// for a prime > 2k+1. first_odd must be odd.
std::optional<SchurWitness> find_schur_prime_in_window(std::uint64_t first_odd, std::uint64_t k);

/// Re-checks a witness against the window and the p > 2k+1 bound.
bool is_valid_schur_witness(const SchurWitness& w, std::uint64_t n, std::uint64_t k);

/// Exponent u when m = 3^u with u >= 1.
std::optional<unsigned> is_power_of_three(std::uint64_t m);

struct SchurException {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    friend bool operator==(const SchurException&, const SchurException&) = default;
};

/// All (n, k) with 1 <= k <= k_max, k < n <= n_max for which no witness
/// exists, sorted by (k, n).
std::vector<SchurException> schur_exception_scan(std::uint64_t k_max, std::uint64_t n_max,
                                                 Execution exec = Execution::parallel);

}  // namespace phiirred
