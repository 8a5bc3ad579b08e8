#include "phiirred/oracle.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdlib>
#include <map>
#include <set>

#include "phiirred/poly_io.hpp"

namespace phiirred {

namespace {

constexpr std::size_t kMaxDivisors = 1u << 18;
constexpr unsigned long kTrialLimit = 1000000;

// Prime factorization by trial division; a leftover cofactor is kept as one
// "prime" entry and flagged when it is not (probably) prime.
std::map<Integer, unsigned> factor_integer(Integer n, bool& complete) {
    std::map<Integer, unsigned> out;
    n = abs(n);
    for (unsigned long q = 2; q <= kTrialLimit && Integer(q) * q <= n; ++q) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            ++out[Integer(q)];
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) complete = false;
        ++out[n];
    }
    return out;
}

boost::dynamic_bitset<> subset_sums(const DegreeMultiset& pattern, std::size_t total) {
    boost::dynamic_bitset<> reach(total + 1);
    reach.set(0);
    for (const auto& [deg, count] : pattern)
        for (std::size_t i = 0; i < count; ++i) reach |= reach << deg;
    return reach;
}

struct PrimeProbe {
    bool good = false;
    DegreeMultiset degrees;
};

PrimeProbe probe(const IntPoly& f, std::uint32_t p) {
    PrimeProbe out;
    const FpPoly r = reduce_mod_p(f, p);
    if (r.is_zero() || r.degree() != *f.degree()) return out;
    const FpPoly monic = fp_make_monic(r);
    if (!gcd_fp(monic, fp_derivative(monic)).is_one()) return out;
    out.good = true;
    out.degrees = distinct_degree_factor(monic);
    return out;
}

bool divides_exactly(const IntPoly& f, const std::vector<IntPoly>& factors, const Integer& scale) {
    IntPoly prod = IntPoly::constant(scale);
    for (const auto& g : factors) prod = mul(prod, g);
    return prod == f;
}

bool is_nontrivial(const std::vector<IntPoly>& factors) {
    return factors.size() >= 2 &&
           std::all_of(factors.begin(), factors.end(), [](const IntPoly& g) { return !g.is_constant(); });
}

}  // namespace

std::string to_string(SieveOutcome o) {
    switch (o) {
        case SieveOutcome::irreducible_certain: return "IRREDUCIBLE_CERTAIN";
        case SieveOutcome::reducible_with_witness: return "REDUCIBLE_WITH_WITNESS";
        case SieveOutcome::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

RootSearch integer_root_search(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
    RootSearch out;
    const auto& c = f.coeffs();
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) out.roots.push_back(0);
    if (low == c.size() - 1) return out;

    // Nonzero roots divide the lowest nonzero coefficient and obey |r| <= 1 + max|c_i / c_lead|.
    Integer bound = 0;
    for (const auto& ci : c) bound = std::max(bound, Integer(abs(ci)));
    bound = bound / abs(f.leading()) + 1;

    bool complete = true;
    const auto primes = factor_integer(c[low], complete);
    std::vector<Integer> divisors{1};
    for (const auto& [q, e] : primes) {
        const std::size_t base = divisors.size();
        Integer power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= q;
            for (std::size_t k = 0; k < base; ++k) {
                Integer d = divisors[k] * power;
                if (d <= bound) divisors.push_back(std::move(d));
            }
        }
        if (divisors.size() > kMaxDivisors) {
            complete = false;
            break;
        }
    }
    for (const auto& d : divisors)
        for (const Integer& r : {Integer(d), Integer(-d)})
            if (eval_at_integer(f, r) == 0) out.roots.push_back(r);
    std::sort(out.roots.begin(), out.roots.end());
    out.complete = complete;
    return out;
}

SieveVerdict degree_sieve(const IntPoly& f, std::size_t prime_budget, Execution exec) {
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("degree sieve needs deg f >= 1");
    const std::size_t deg = *f.degree();
    SieveVerdict v;
    boost::dynamic_bitset<> feasible(deg + 1);
    for (std::size_t d = 1; d < deg; ++d) feasible.set(d);

    const auto candidates = first_primes(4 * prime_budget + 32);
    if (exec == Execution::parallel) {
        std::vector<PrimeProbe> probes(candidates.size());
        const int count = static_cast<int>(candidates.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < count; ++i) probes[static_cast<std::size_t>(i)] = probe(f, candidates[static_cast<std::size_t>(i)]);
        for (std::size_t i = 0; i < candidates.size() && v.evidence.size() < prime_budget; ++i)
            if (probes[i].good) v.evidence.push_back({candidates[i], std::move(probes[i].degrees)});
    } else {
        for (std::size_t i = 0; i < candidates.size() && v.evidence.size() < prime_budget; ++i) {
            PrimeProbe pr = probe(f, candidates[i]);
            if (pr.good) v.evidence.push_back({candidates[i], std::move(pr.degrees)});
        }
    }

    for (const auto& pat : v.evidence) feasible &= subset_sums(pat.degrees, deg);
    for (std::size_t d = 1; d < deg; ++d)
        if (feasible.test(d)) v.feasible_degrees.push_back(d);
    // Degree 1 needs no primes: nothing proper to exclude.
    v.outcome = v.feasible_degrees.empty() && (deg == 1 || !v.evidence.empty()) ? SieveOutcome::irreducible_certain
                                                                                 : SieveOutcome::inconclusive;
    return v;
}

std::string phi_form(const PhiExpansion& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = e.terms.size(); i-- > 0;) {
        const IntPoly& b = e.terms[i];
        if (b.is_zero()) continue;
        std::string coeff;
        bool negative = false;
        const auto nonzero = std::count_if(b.coeffs().begin(), b.coeffs().end(), [](const Integer& v) { return v != 0; });
        if (b.is_constant()) {
            negative = b.leading() < 0;
            Integer mag = abs(b.leading());
            if (i == 0 || mag != 1) coeff = mag.get_str();
        } else if (i == 0 && nonzero == 1) {
            negative = b.leading() < 0;
            coeff = to_string(negative ? -b : b);
        } else {
            coeff = "(" + to_string(b) + ")";
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coeff;
        if (i >= 1) out += "phi";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::optional<KnownFactorization> known_form_factor(const IntPoly& f, const IntPoly& phi) {
    if (!phi.is_monic() || phi.is_constant()) throw std::invalid_argument("phi must be monic of degree >= 1");
    if (f.is_zero() || f.is_constant()) return std::nullopt;
    Integer sc = content(f);
    if (f.leading() < 0) sc = -sc;
    const IntPoly g = divide_exact(f, sc);

    auto finish = [&](std::string pattern, std::vector<IntPoly> factors) -> std::optional<KnownFactorization> {
        if (!is_nontrivial(factors) || !divides_exactly(f, factors, sc)) return std::nullopt;
        KnownFactorization k{std::move(pattern), sc, std::move(factors), {}};
        for (const auto& h : k.factors) k.phi_forms.push_back(phi_form(phi_expand(h, phi)));
        return k;
    };

    if (auto root = exact_sqrt(g)) {
        if (auto k = finish("perfect_square", {*root, *root})) return k;
    }

    // alpha^2 phi^{2t} - beta^2 with exactly two nonzero phi-terms.
    const PhiExpansion e = phi_expand(g, phi);
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        if (!e.terms[i].is_zero()) nz.push_back(i);
    if (nz.size() == 2 && nz[0] == 0 && nz[1] % 2 == 0) {
        const std::size_t t = nz[1] / 2;
        auto alpha = exact_sqrt(e.terms[nz[1]]);
        auto beta = exact_sqrt(-e.terms[0]);
        if (alpha && beta) {
            const IntPoly head = mul(*alpha, pow(phi, static_cast<unsigned>(t)));
            if (auto k = finish("difference_of_squares", {head - *beta, head + *beta})) return k;
        }
    }
    return std::nullopt;
}

SieveVerdict assess(const IntPoly& f, const IntPoly& phi, std::size_t prime_budget, Execution exec) {
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("assess needs deg f >= 1");
    if (*f.degree() >= 2) {
        const RootSearch rs = integer_root_search(f);
        if (!rs.roots.empty()) {
            const Integer r = rs.roots.front();
            SieveVerdict v;
            v.outcome = SieveOutcome::reducible_with_witness;
            v.witness_root = r;
            const IntPoly lin{std::vector<Integer>{-r, 1}};
            auto [q, rem] = divmod_monic(f, lin);
            if (!rem.is_zero() || eval_at_integer(f, r) != 0) throw std::logic_error("root witness does not verify");
            v.witness_factors = {lin, q};
            return v;
        }
    }
    if (auto k = known_form_factor(f, phi)) {
        SieveVerdict v;
        v.outcome = SieveOutcome::reducible_with_witness;
        v.witness_factors = k->factors;
        if (k->scale != 1) v.witness_factors.insert(v.witness_factors.begin(), IntPoly::constant(k->scale));
        return v;
    }
    return degree_sieve(f, prime_budget, exec);
}

CrossCheckReport cross_check(const ProblemInstance& inst, const Certificate& cert, std::size_t prime_budget,
                             Execution exec) {
    CrossCheckReport rep;
    const IntPoly F = build_scaled_polynomial(inst);
    rep.roots = integer_root_search(F);
    rep.known = known_form_factor(F, inst.phi);
    rep.sieve = degree_sieve(F, prime_budget, exec);

    for (const auto& r : rep.roots.roots)
        if (eval_at_integer(F, r) != 0) throw std::logic_error("reported root does not vanish");
    if (!rep.roots.roots.empty() && *F.degree() >= 2) {
        rep.reducibility_witnessed = true;
        rep.notes.push_back("integer root " + rep.roots.roots.front().get_str());
    }
    if (rep.known) {
        rep.reducibility_witnessed = true;
        std::string desc = rep.known->pattern + ":";
        for (const auto& s : rep.known->phi_forms) desc += " (" + s + ")";
        rep.notes.push_back(desc);
    }
    if (!rep.roots.complete) rep.notes.push_back("root search incomplete (unfactored constant term)");
    rep.notes.push_back("sieve " + to_string(rep.sieve.outcome) + " over " + std::to_string(rep.sieve.evidence.size()) +
                        " primes");

    if (cert.verdict == Verdict::irreducible && rep.reducibility_witnessed) {
        rep.contradiction = true;
        rep.notes.push_back("certificate claims IRREDUCIBLE but a factorization witness exists");
    }
    if (rep.sieve.outcome == SieveOutcome::irreducible_certain && rep.reducibility_witnessed) {
        rep.contradiction = true;
        rep.notes.push_back("sieve excluded every factor degree but a witness exists");
    }
    return rep;
}

std::size_t default_prime_budget() {
    if (const char* env = std::getenv("PHI_IRRED_PRIME_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 25;
}

}  // namespace phiirred
