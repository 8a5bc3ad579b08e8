#include "phiirred/certifier.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <sstream>

#include "phiirred/certificate_io.hpp"
#include "phiirred/fppoly.hpp"
#include "phiirred/poly_io.hpp"
#include "phiirred/schur.hpp"

namespace phiirred {

namespace {

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool divides(std::uint64_t p, const Integer& value) {
    return mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

std::uint64_t phi_degree(const ProblemInstance& inst) { return *inst.phi.degree(); }

SmallDegreeStep small_degree_step(const ProblemInstance& inst, const std::vector<Integer>& cs) {
    SmallDegreeStep s;
    const std::uint64_t odd = 2ull * inst.n - 1 + inst.c;
    if (odd < 2) return s;
    const std::uint64_t p0 = smallest_prime_factor(odd);
    s.p0 = p0;
    s.p0_coprime_to_a_n = !divides(p0, inst.a_n);
    bool all = true;
    for (std::size_t j = 0; j < inst.n; ++j) {
        if (divides(p0, cs[2 * j]))
            s.divisibility.push_back(2 * j);
        else
            all = false;
    }
    s.phi_irreducible_mod_p0 = is_irreducible_mod_p(inst.phi, p0);
    s.pass = s.p0_coprime_to_a_n && all && s.phi_irreducible_mod_p0;
    return s;
}

KStep k_step(const ProblemInstance& inst, const std::vector<Integer>& cs, unsigned k) {
    const unsigned n = inst.n;
    KStep st;
    st.k = k;
    st.ell = k - 1;
    st.threshold = inst.c == 0 ? k + 1 : k + 2;
    st.bound = Ratio(1, k);
    const std::uint64_t d = phi_degree(inst);
    st.excluded = {k * d, (k + 1) * d};

    const std::size_t last = 2 * n - k;  // i <= 2n - ell - 1
    std::vector<std::size_t> required;
    for (std::size_t i = 0; i <= last; ++i)
        if (cs[i] != 0) required.push_back(i);

    for (std::uint32_t p : primes_below(2ull * n + inst.c)) {
        if (p < st.threshold) continue;
        auto reject = [&](std::string why) { st.search_log.push_back({p, std::move(why)}); };

        auto miss = std::find_if(required.begin(), required.end(), [&](std::size_t i) { return !divides(p, cs[i]); });
        if (miss != required.end()) {
            reject("does not divide c_" + std::to_string(*miss));
            continue;
        }
        if (divides(p, inst.a_n)) {
            reject("divides a_n");
            continue;
        }
        if (vpx(inst.lower[0], p) != ExtendedNat(0)) {
            reject("divides content of a_0");
            continue;
        }
        if (!is_irreducible_mod_p(inst.phi, p)) {
            reject("phi reducible mod p");
            continue;
        }
        const Ratio slope = rightmost_slope_formula(n, inst.c, p);
        const NewtonPolygon np = build_polygon_from_constants(cs, p);
        if (rightmost_slope(np) != slope)
            throw std::logic_error("closed-form slope disagrees with the built polygon at p = " + std::to_string(p));
        if (!(slope < st.bound)) {
            reject("right-most slope " + slope.to_string() + " not < " + st.bound.to_string());
            continue;
        }
        st.search_log.push_back({p, "accepted"});
        st.p = p;
        st.divisibility = required;
        st.polygon_slopes = np.slopes();
        st.rightmost_slope = slope;
        st.p_coprime_to_a_n = true;
        st.a0_unit = true;
        st.phi_irreducible_mod_p = true;
        st.slope_below_bound = true;
        st.pass = true;
        break;
    }
    return st;
}

std::vector<DegreeInterval> coverage_intervals(std::uint64_t n, std::uint64_t d) {
    std::vector<DegreeInterval> out;
    out.push_back({1, d});
    for (std::uint64_t k = 1; k <= n; ++k) out.push_back({k * d, (k + 1) * d});
    return out;
}

bool tiles(const std::vector<DegreeInterval>& cov, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t next = lo;
    for (const auto& iv : cov) {
        if (iv.lo > iv.hi) return false;
        if (iv.lo == iv.hi) continue;  // [1, 1) when deg phi = 1
        if (iv.lo != next) return false;
        next = iv.hi;
    }
    return next == hi;
}

ScaledDigest scaled_digest(const IntPoly& F) {
    return {F.degree().value_or(0), F.leading(), content(F), polynomial_digest(F)};
}

std::string summarize(const Certificate& cert) {
    std::ostringstream os;
    const auto& inst = cert.instance;
    const std::uint64_t d = *inst.phi.degree();
    os << "F = u_" << 2 * inst.n + inst.c << " * f has degree " << cert.scaled.degree << " = 2n deg(phi); ";
    os << "a proper factorization needs a factor of degree in [1, " << (inst.n + 1) * d << "). ";
    if (cert.small_degree.p0)
        os << "p0 = " << *cert.small_degree.p0 << " excludes degrees [1, " << d << ")"
           << (cert.small_degree.pass ? "" : " (FAILED)") << ". ";
    else
        os << "no small-degree prime exists (2n-1+c = 1). ";
    for (const auto& st : cert.steps) {
        os << "k=" << st.k << ": ";
        if (st.p)
            os << "p=" << *st.p << " slope " << st.rightmost_slope->to_string() << " < " << st.bound.to_string()
               << " excludes [" << st.excluded.lo << ", " << st.excluded.hi << "); ";
        else
            os << "no admissible prime; ";
    }
    os << "verdict " << to_string(cert.verdict) << ".";
    return os.str();
}

}  // namespace

void ProblemInstance::validate() const {
    if (c != 0 && c != 2) throw InvalidInstance("c must be 0 or 2, got " + std::to_string(c));
    if (n < 1) throw InvalidInstance("n must be a positive integer");
    if (!phi.is_monic() || phi.is_constant()) throw InvalidInstance("phi must be monic of degree >= 1");
    if (a_n == 0) throw InvalidInstance("a_n must be nonzero");
    if (lower.size() != n)
        throw InvalidInstance("expected " + std::to_string(n) + " lower coefficients a_0..a_{n-1}, got " +
                              std::to_string(lower.size()));
    if (lower[0].is_zero()) throw InvalidInstance("a_0(x) must be nonzero");
    if (bound && bound->value < 2) throw InvalidInstance("prime bound must be >= 2");
}

Integer reject_polynomial_leading_coefficient(const IntPoly& a_n) {
    if (a_n.is_constant()) return a_n.coeff(0);
    throw PolynomialLeadingCoefficient(
        "a_n must be an integer, got the polynomial " + to_string(a_n) +
        ": with a polynomial leading coefficient the irreducibility criterion fails, e.g. phi = x^2 - x + 5, "
        "a_2(x) = x - 3, a_1(x) = x + 26, a_0(x) = 5x - 25 gives a polynomial with root 0");
}

bool HypothesisReport::phi_irreducible_ok() const {
    return std::all_of(phi_irreducible.begin(), phi_irreducible.end(), [](const auto& e) { return e.second; });
}

bool HypothesisReport::content_ok() const {
    return std::all_of(content_coprime.begin(), content_coprime.end(), [](const auto& e) { return e.second; });
}

bool HypothesisReport::pass() const {
    return degree_bounds_ok() && phi_monic && phi_irreducible_ok() && content_ok() && structural_ok;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::irreducible: return "IRREDUCIBLE";
        case Verdict::inconclusive: return "INCONCLUSIVE";
        case Verdict::hypothesis_failed: return "HYPOTHESIS_FAILED";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "IRREDUCIBLE") return Verdict::irreducible;
    if (s == "INCONCLUSIVE") return Verdict::inconclusive;
    if (s == "HYPOTHESIS_FAILED") return Verdict::hypothesis_failed;
    throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

HypothesisReport check_hypotheses(const ProblemInstance& inst) {
    inst.validate();
    HypothesisReport rep;
    rep.bound = inst.prime_bound();
    const std::size_t d = *inst.phi.degree();
    for (std::size_t i = 0; i < inst.lower.size(); ++i)
        if (inst.lower[i].size() > d) rep.degree_violations.push_back(i);
    rep.phi_monic = inst.phi.is_monic();

    const auto primes = primes_below(rep.bound.value, rep.bound.inclusive);
    rep.content_an_a0 = content(scale(inst.lower[0], inst.a_n));
    for (std::uint32_t p : primes) {
        rep.phi_irreducible.emplace_back(p, is_irreducible_mod_p(inst.phi, p));
        rep.content_coprime.emplace_back(p, !divides(p, rep.content_an_a0));
    }

    if (inst.c == 0 && inst.n < 2) {
        rep.structural_ok = false;
        rep.structural_note = "n = 1 is excluded for c = 0: phi^2 - x^2 = (phi - x)(phi + x) for deg phi >= 3";
    }
    if (inst.c == 2) {
        if (auto e = is_power_of_three(2ull * inst.n + 1); e && *e >= 2) {
            rep.structural_ok = false;
            rep.structural_note =
                "2n+1 = " + std::to_string(2ull * inst.n + 1) + " = 3^" + std::to_string(*e) + " is excluded for c = 2";
        }
    }
    return rep;
}

std::vector<Integer> c_coefficients(unsigned n, unsigned c) {
    std::vector<Integer> out(2 * static_cast<std::size_t>(n) + 1);
    for (unsigned j = 0; j <= n; ++j) out[2 * j] = u_ratio(2ull * n + c, 2ull * j + c);
    return out;
}

IntPoly build_scaled_polynomial(unsigned c, const IntPoly& phi, const IntPoly& top, const std::vector<IntPoly>& lower) {
    const unsigned n = static_cast<unsigned>(lower.size());
    const auto cs = c_coefficients(n, c);
    std::vector<IntPoly> terms(2 * static_cast<std::size_t>(n) + 1);
    for (unsigned j = 0; j < n; ++j) terms[2 * j] = scale(lower[j], cs[2 * j]);
    terms[2 * n] = top;
    return assemble_in_powers(terms, phi);
}

IntPoly build_scaled_polynomial(const ProblemInstance& inst) {
    inst.validate();
    return build_scaled_polynomial(inst.c, inst.phi, IntPoly::constant(inst.a_n), inst.lower);
}

std::string instance_digest(const ProblemInstance& inst) { return fnv1a_hex(instance_to_json(inst).dump()); }

std::string polynomial_digest(const IntPoly& f) { return fnv1a_hex(to_json_literal(f).dump()); }

Certificate certify(const ProblemInstance& inst, Execution exec) {
    inst.validate();
    Certificate cert;
    cert.instance = inst;
    cert.instance_digest = instance_digest(inst);
    cert.hypotheses = check_hypotheses(inst);
    cert.scaled = scaled_digest(build_scaled_polynomial(inst));

    const auto cs = c_coefficients(inst.n, inst.c);
    cert.small_degree = small_degree_step(inst, cs);

    cert.steps.resize(inst.n);
    const int count = static_cast<int>(inst.n);
    if (exec == Execution::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < count; ++i) {
            try {
                cert.steps[static_cast<std::size_t>(i)] = k_step(inst, cs, static_cast<unsigned>(i) + 1);
            } catch (...) {
#pragma omp critical(phiirred_certify_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (int i = 0; i < count; ++i)
            cert.steps[static_cast<std::size_t>(i)] = k_step(inst, cs, static_cast<unsigned>(i) + 1);
    }

    const std::uint64_t d = *inst.phi.degree();
    cert.coverage = coverage_intervals(inst.n, d);
    if (!tiles(cert.coverage, 1, (inst.n + 1) * d))
        throw std::logic_error("degree intervals do not tile [1, (n+1) deg phi)");

    for (const auto& st : cert.steps)
        if (!st.pass) {
            cert.failing_k = st.k;
            break;
        }
    if (!cert.hypotheses.pass())
        cert.verdict = Verdict::hypothesis_failed;
    else if (!cert.small_degree.pass || cert.failing_k)
        cert.verdict = Verdict::inconclusive;
    else
        cert.verdict = Verdict::irreducible;
    cert.summary = summarize(cert);
    return cert;
}

VerificationResult verify_certificate(const ProblemInstance& inst, const Certificate& cert) {
    VerificationResult res;
    auto fail = [&](std::string what) {
        res.ok = false;
        res.mismatches.push_back(std::move(what));
    };

    if (cert.schema != kCertificateSchema) fail("schema is \"" + cert.schema + "\"");
    try {
        inst.validate();
    } catch (const std::exception& e) {
        fail(std::string("instance invalid: ") + e.what());
        return res;
    }
    if (!(cert.instance == inst)) fail("instance echo differs from the supplied instance");
    if (cert.instance_digest != instance_digest(inst)) fail("instance digest mismatch");

    const HypothesisReport hyp = check_hypotheses(inst);
    if (!(hyp == cert.hypotheses)) fail("hypothesis report does not replay");

    const IntPoly F = build_scaled_polynomial(inst);
    if (!(scaled_digest(F) == cert.scaled)) fail("scaled polynomial digest mismatch");

    // c_{2j} recomputed as u(2n+c) / u(2j+c) by exact division of the full products.
    const unsigned n = inst.n, c = inst.c;
    std::vector<Integer> cs(2 * static_cast<std::size_t>(n) + 1);
    const Integer top = u(2ull * n + c);
    for (unsigned j = 0; j <= n; ++j) {
        const Integer below = u(2ull * j + c);
        if (!mpz_divisible_p(top.get_mpz_t(), below.get_mpz_t())) fail("u ratio is not integral");
        cs[2 * j] = top / below;
    }

    // Small-degree exclusion.
    const auto& sd = cert.small_degree;
    const std::uint64_t odd = 2ull * n - 1 + c;
    if (sd.p0) {
        const std::uint64_t p0 = *sd.p0;
        if (!is_prime(p0) || odd % p0 != 0) fail("p0 = " + std::to_string(p0) + " is not a prime factor of 2n-1+c");
        else if (odd >= 2 && p0 != smallest_prime_factor(odd)) fail("p0 is not the smallest prime factor of 2n-1+c");
        if (sd.p0_coprime_to_a_n != !divides(p0, inst.a_n)) fail("p0 / a_n divisibility claim is false");
        std::vector<std::size_t> expect;
        for (std::size_t j = 0; j < n; ++j) expect.push_back(2 * j);
        if (sd.divisibility != expect) fail("small-degree divisibility list is incomplete");
        for (std::size_t i : sd.divisibility)
            if (i >= cs.size() || !divides(p0, cs[i])) fail("p0 does not divide c_" + std::to_string(i));
        if (is_prime(p0) && sd.phi_irreducible_mod_p0 != is_irreducible_mod_p(inst.phi, p0))
            fail("phi mod p0 claim is false");
        const bool should = sd.p0_coprime_to_a_n && sd.divisibility == expect && sd.phi_irreducible_mod_p0;
        if (sd.pass != should) fail("small-degree pass flag inconsistent");
    } else if (odd >= 2 || sd.pass) {
        fail("small-degree step missing its prime");
    }

    // Per-k steps.
    if (cert.steps.size() != n) fail("expected " + std::to_string(n) + " per-k steps");
    const IntPoly g = assemble_in_powers(
        [&] {
            std::vector<IntPoly> t;
            for (const auto& ci : cs) t.push_back(IntPoly::constant(ci));
            return t;
        }(),
        IntPoly::x());
    const std::uint64_t d = *inst.phi.degree();
    for (std::size_t idx = 0; idx < cert.steps.size() && idx < n; ++idx) {
        const KStep& st = cert.steps[idx];
        const unsigned k = static_cast<unsigned>(idx) + 1;
        const std::string tag = "k=" + std::to_string(k) + ": ";
        if (st.k != k || st.ell != k - 1) fail(tag + "step out of order");
        if (st.threshold != (c == 0 ? k + 1 : k + 2)) fail(tag + "wrong prime threshold");
        if (st.bound != Ratio(1, k)) fail(tag + "bound is not 1/k");
        if (!(st.excluded == DegreeInterval{k * d, (k + 1) * d})) fail(tag + "excluded degree interval wrong");
        if (!st.p) {
            if (st.pass) fail(tag + "passes without a prime");
            continue;
        }
        const std::uint64_t p = *st.p;
        if (!is_prime(p)) {
            fail(tag + std::to_string(p) + " is not prime");
            continue;
        }
        if (p < st.threshold || p >= 2ull * n + c) fail(tag + "prime outside the admissible window");

        std::vector<std::size_t> required;
        for (std::size_t i = 0; i <= 2ull * n - k; ++i)
            if (cs[i] != 0) required.push_back(i);
        if (st.divisibility != required) fail(tag + "divisibility list does not cover every c_i with i <= 2n-k");
        for (std::size_t i : st.divisibility)
            if (i >= cs.size() || !divides(p, cs[i])) fail(tag + "p does not divide c_" + std::to_string(i));

        const bool coprime = !divides(p, inst.a_n);
        const bool unit = vpx(inst.lower[0], p) == ExtendedNat(0);
        const bool irred = is_irreducible_mod_p(inst.phi, p);
        if (st.p_coprime_to_a_n != coprime) fail(tag + "a_n claim is false");
        if (st.a0_unit != unit) fail(tag + "a_0 content claim is false");
        if (st.phi_irreducible_mod_p != irred) fail(tag + "phi irreducibility claim is false");

        // Slope via the polygon of g_c actually built in Z[x] with phi = x.
        const NewtonPolygon np = build_polygon(g, IntPoly::x(), p);
        const Ratio slope = rightmost_slope(np);
        if (!st.rightmost_slope || *st.rightmost_slope != slope)
            fail(tag + "recorded right-most slope does not match the polygon (" + slope.to_string() + ")");
        if (st.polygon_slopes != np.slopes()) fail(tag + "recorded polygon slopes differ");
        const bool below = slope < Ratio(1, k);
        if (st.slope_below_bound != below) fail(tag + "slope comparison claim is false");
        if (st.rightmost_slope && !(*st.rightmost_slope < st.bound) && st.pass)
            fail(tag + "recorded slope is not strictly below 1/k");

        const bool should = coprime && unit && irred && below && st.divisibility == required;
        if (st.pass != should) fail(tag + "pass flag inconsistent");
    }

    if (!(cert.coverage == coverage_intervals(n, d)) || !tiles(cert.coverage, 1, (n + 1) * d))
        fail("coverage intervals do not tile [1, (n+1) deg phi)");

    std::optional<unsigned> first_fail;
    for (const auto& st : cert.steps)
        if (!st.pass) {
            first_fail = st.k;
            break;
        }
    if (first_fail != cert.failing_k) fail("failing_k inconsistent with steps");
    Verdict expect;
    if (!cert.hypotheses.pass())
        expect = Verdict::hypothesis_failed;
    else if (!cert.small_degree.pass || first_fail || cert.steps.size() != n)
        expect = Verdict::inconclusive;
    else
        expect = Verdict::irreducible;
    if (cert.verdict != expect) fail("verdict " + to_string(cert.verdict) + " does not follow from the steps");
    return res;
}

}  // namespace phiirred
