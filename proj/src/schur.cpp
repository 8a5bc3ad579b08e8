#include "phiirred/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "phiirred/fppoly.hpp"

namespace phiirred {

Integer u(std::uint64_t j) {
    Integer r = 1;
    for (std::uint64_t odd = 3; odd <= j; odd += 2) r *= static_cast<unsigned long>(odd);
    return r;
}

Integer u_ratio(std::uint64_t a, std::uint64_t b) {
    if (a % 2 != 0 || b % 2 != 0) throw std::invalid_argument("u_ratio needs even arguments");
    if (b > a) throw std::invalid_argument("u_ratio needs b <= a");
    Integer r = 1;
    for (std::uint64_t odd = b + 1; odd < a; odd += 2) r *= static_cast<unsigned long>(odd);
    return r;
}

std::optional<SchurWitness> find_schur_prime_in_window(std::uint64_t first_odd, std::uint64_t k) {
    if (first_odd % 2 == 0) throw std::invalid_argument("window must start at an odd number");
    if (k == 0) throw std::invalid_argument("window must be nonempty");
    std::optional<SchurWitness> best;
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t member = first_odd + 2 * i;
        std::uint64_t rest = member;
        while (rest > 1) {
            const std::uint64_t q = smallest_prime_factor(rest);
            while (rest % q == 0) rest /= q;
            if (q <= 2 * k + 1) continue;
            // Members are scanned ascending, so "<" keeps the smallest member for a tied prime.
            if (!best || q < best->p) best = SchurWitness{q, member};
        }
    }
    return best;
}

std::optional<SchurWitness> find_schur_prime(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || n <= k) throw std::invalid_argument("find_schur_prime needs n > k >= 1");
    return find_schur_prime_in_window(2 * n + 1, k);
}

bool is_valid_schur_witness(const SchurWitness& w, std::uint64_t n, std::uint64_t k) {
    const std::uint64_t lo = 2 * n + 1, hi = 2 * n + 2 * k - 1;
    return w.p > 2 * k + 1 && is_prime(w.p) && w.divides % 2 == 1 && w.divides >= lo && w.divides <= hi &&
           w.divides % w.p == 0;
}

std::optional<unsigned> is_power_of_three(std::uint64_t m) {
    if (m < 3) return std::nullopt;
    unsigned e = 0;
    while (m % 3 == 0) {
        m /= 3;
        ++e;
    }
    if (m != 1) return std::nullopt;
    return e;
}

std::vector<SchurException> schur_exception_scan(std::uint64_t k_max, std::uint64_t n_max, Execution exec) {
    // One flag per (k, n) cell; cells are independent.
    const std::int64_t rows = static_cast<std::int64_t>(k_max);
    const std::int64_t cols = static_cast<std::int64_t>(n_max);
    std::vector<char> missing(static_cast<std::size_t>(rows * (cols + 1)), 0);
    auto cell = [&](std::int64_t idx) {
        const std::uint64_t k = static_cast<std::uint64_t>(idx / (cols + 1)) + 1;
        const std::uint64_t n = static_cast<std::uint64_t>(idx % (cols + 1));
        if (n <= k) return;
        missing[static_cast<std::size_t>(idx)] = find_schur_prime(n, k) ? 0 : 1;
    };
    const std::int64_t total = rows * (cols + 1);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t idx = 0; idx < total; ++idx) cell(idx);
    } else {
        for (std::int64_t idx = 0; idx < total; ++idx) cell(idx);
    }

    std::vector<SchurException> out;
    for (std::int64_t idx = 0; idx < total; ++idx)
        if (missing[static_cast<std::size_t>(idx)])
            out.push_back({static_cast<std::uint64_t>(idx % (cols + 1)), static_cast<std::uint64_t>(idx / (cols + 1)) + 1});
    return out;
}

}  // namespace phiirred
