#include "phiirred/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace phiirred {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
    std::vector<Integer> v(power + 1);
    v[power] = c;
    return IntPoly(std::move(v));
}

std::optional<std::size_t> IntPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = mul(*this, rhs); }

IntPoly& IntPoly::operator*=(const Integer& rhs) {
    if (rhs == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly sub(const IntPoly& a, const IntPoly& b) { return a - b; }

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly& a, const Integer& k) {
    IntPoly r = a;
    r *= k;
    return r;
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
    IntPoly result = IntPoly::constant(1);
    IntPoly b = base;
    while (exponent) {
        if (exponent & 1u) result = mul(result, b);
        exponent >>= 1;
        if (exponent) b = mul(b, b);
    }
    return result;
}

Integer content(const IntPoly& f) {
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Integer g = content(f);
    if (f.leading() < 0) g = -g;
    return divide_exact(f, g);
}

IntPoly divide_exact(const IntPoly& f, const Integer& k) {
    if (k == 0) throw std::domain_error("division by zero");
    std::vector<Integer> out = f.coeffs();
    for (auto& c : out) {
        if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
            throw std::domain_error("inexact division of polynomial by integer");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& divisor) {
    if (!divisor.is_monic() || divisor.is_constant())
        throw std::invalid_argument("divisor must be monic of degree >= 1");
    const std::size_t dd = *divisor.degree();
    if (f.size() <= dd) return {IntPoly{}, f};

    std::vector<Integer> rem = f.coeffs();
    std::vector<Integer> quo(rem.size() - dd);
    const auto& dc = divisor.coeffs();
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Integer q = rem[i];
        if (q == 0) continue;
        quo[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * dc[j];
    }
    rem.resize(dd);
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

Integer eval_at_integer(const IntPoly& f, const Integer& t) {
    Integer acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.size() <= 1) return {};
    std::vector<Integer> out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(out));
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
    IntPoly acc;
    const auto& c = outer.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = mul(acc, inner) + IntPoly::constant(c[i]);
    return acc;
}

std::optional<IntPoly> exact_sqrt(const IntPoly& f) {
    if (f.is_zero()) return IntPoly{};
    const std::size_t df = *f.degree();
    if (df % 2 != 0 || f.leading() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(f.leading().get_mpz_t())) return std::nullopt;

    // Solve for the root's coefficients from the top down; each new
    // coefficient is pinned by one coefficient of f.
    const std::size_t d = df / 2;
    std::vector<Integer> s(d + 1);
    mpz_sqrt(s[d].get_mpz_t(), f.leading().get_mpz_t());
    const Integer two_lead = 2 * s[d];
    for (std::size_t step = 1; step <= d; ++step) {
        const std::size_t target = df - step;
        Integer acc = f.coeff(target);
        for (std::size_t i = d - step + 1; i <= d; ++i) {
            const std::size_t j = target - i;
            if (j > d || j < d - step + 1) continue;
            acc -= s[i] * s[j];
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(s[d - step].get_mpz_t(), acc.get_mpz_t(), two_lead.get_mpz_t());
    }
    IntPoly root(std::move(s));
    if (mul(root, root) != f) return std::nullopt;
    return root;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
    if (!phi.is_monic() || phi.is_constant())
        throw std::invalid_argument("phi must be monic of degree >= 1");
    PhiExpansion e{phi, {}};
    IntPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divmod_monic(rest, phi);
        e.terms.push_back(std::move(r));
        rest = std::move(q);
    }
    return e;
}

IntPoly assemble_in_powers(const std::vector<IntPoly>& terms, const IntPoly& phi) {
    IntPoly acc;
    for (std::size_t i = terms.size(); i-- > 0;) acc = mul(acc, phi) + terms[i];
    return acc;
}

IntPoly phi_assemble(const PhiExpansion& e) {
    if (!e.phi.is_monic() || e.phi.is_constant())
        throw std::invalid_argument("phi must be monic of degree >= 1");
    const std::size_t dphi = *e.phi.degree();
    for (const auto& t : e.terms)
        if (t.size() > dphi) throw std::invalid_argument("phi-expansion term has degree >= deg phi");
    return assemble_in_powers(e.terms, e.phi);
}

}  // namespace phiirred
