#include "phiirred/hermite.hpp"

#include <string>

#include "phiirred/schur.hpp"

namespace phiirred {

void HermiteSpec::validate() const {
    if (!phi.is_monic() || phi.is_constant()) throw std::invalid_argument("phi must be monic of degree >= 1");
    if (a_top == 0) throw std::invalid_argument("a_[m/2] must be nonzero");
    if (a_low.size() != m / 2)
        throw std::invalid_argument("expected " + std::to_string(m / 2) + " lower coefficients, got " +
                                    std::to_string(a_low.size()));
    const std::size_t d = *phi.degree();
    for (std::size_t i = 0; i < a_low.size(); ++i)
        if (a_low[i].size() > d)
            throw std::invalid_argument("deg a_" + std::to_string(i) + " must be < deg phi");
}

std::vector<Integer> binomial_row(unsigned m) {
    std::vector<Integer> row{1};
    for (unsigned r = 1; r <= m; ++r) {
        std::vector<Integer> next(r + 1);
        next[0] = next[r] = 1;
        for (unsigned i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return row;
}

IntPoly classical_hermite(unsigned m) {
    const auto binom = binomial_row(m);
    std::vector<Integer> coeffs(m + 1);
    for (unsigned j = 0; 2 * j <= m; ++j) {
        Integer term = binom[2 * j] * u(2 * j);
        coeffs[m - 2 * j] = (j % 2 == 0) ? term : Integer(-term);
    }
    return IntPoly(std::move(coeffs));
}

IntPoly generalized_hermite(const HermiteSpec& spec) {
    spec.validate();
    const unsigned m = spec.m, half = m / 2;
    const auto binom = binomial_row(m);
    // terms[i] multiplies phi^i.
    std::vector<IntPoly> terms(m + 1);
    terms[m] = IntPoly::constant(spec.a_top);
    for (unsigned j = 1; j <= half; ++j) terms[m - 2 * j] = scale(spec.a_low[half - j], binom[2 * j] * u(2 * j));
    return assemble_in_powers(terms, spec.phi);
}

HermiteSpec classical_spec(unsigned m, const IntPoly& phi) {
    HermiteSpec s{m, phi, 1, {}};
    const unsigned half = m / 2;
    for (unsigned i = 0; i < half; ++i) s.a_low.push_back(IntPoly::constant((half - i) % 2 == 0 ? 1 : -1));
    return s;
}

IntPoly hermite_of_phi(unsigned m, const IntPoly& phi) { return compose(classical_hermite(m), phi); }

HermiteReduction hermite_to_instance(const HermiteSpec& spec, HermiteBound mode) {
    if (spec.m < 3) throw std::invalid_argument("m must be >= 3 for certification");
    spec.validate();
    const unsigned m = spec.m, n = m / 2;
    const bool odd = m % 2 == 1;
    if (odd) {
        if (auto e = is_power_of_three(m); e && *e >= 2)
            throw HermiteExcluded("m = " + std::to_string(m) + " = 3^" + std::to_string(*e) +
                                  " is excluded for odd m");
    }

    const auto binom = binomial_row(n);
    HermiteReduction red;
    red.instance.c = odd ? 2 : 0;
    red.instance.n = n;
    red.instance.phi = spec.phi;
    red.instance.a_n = spec.a_top;
    for (unsigned j = 0; j < n; ++j) red.instance.lower.push_back(scale(spec.a_low[j], binom[j]));
    red.instance.bound = PrimeBound{m, mode == HermiteBound::theorem};
    if (odd) red.odd_factor = spec.phi;

    IntPoly rebuilt = build_scaled_polynomial(red.instance);
    if (odd) rebuilt = mul(rebuilt, spec.phi);
    if (rebuilt != generalized_hermite(spec))
        throw std::logic_error("u_{2n+c} * f * (phi or 1) does not reproduce H^phi_m");
    return red;
}

HermiteCertificate certify_hermite(const HermiteSpec& spec, HermiteBound mode, Execution exec) {
    HermiteReduction red = hermite_to_instance(spec, mode);
    HermiteCertificate out;
    out.certificate = certify(red.instance, exec);
    out.odd_factor = red.odd_factor;
    const IntPoly full = generalized_hermite(spec);
    out.cofactor = red.odd_factor ? divmod_monic(full, *red.odd_factor).first : full;
    return out;
}

}  // namespace phiirred
