#include "phiirred/polygon.hpp"

#include <stdexcept>
#include <string>

#include "phiirred/fppoly.hpp"
#include "phiirred/poly_io.hpp"
#include "phiirred/schur.hpp"

namespace phiirred {

namespace {
Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
}  // namespace

std::vector<Ratio> NewtonPolygon::slopes() const {
    std::vector<Ratio> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back(e.slope);
    return out;
}

std::vector<PolygonEdge> NewtonPolygon::principal_part() const {
    std::vector<PolygonEdge> out;
    for (const auto& e : edges)
        if (e.slope != Ratio()) out.push_back(e);
    return out;
}

NewtonPolygon build_polygon_from_valuations(std::span<const ExtendedNat> valuations) {
    if (valuations.size() < 2) throw std::invalid_argument("phi-Newton polygon needs phi-degree n >= 1");
    const std::size_t n = valuations.size() - 1;
    if (valuations[0].is_infinite() || valuations[n].is_infinite())
        throw std::invalid_argument("phi-expansion violates b_0(x)b_n(x) != 0");

    NewtonPolygon np;
    for (std::size_t i = 0; i <= n; ++i) {
        const ExtendedNat& v = valuations[n - i];
        if (!v.is_infinite()) np.points.push_back({i, v});
    }

    auto height = [&](std::size_t idx) { return big(valuations[n - idx].value()); };

    std::size_t cur = 0;
    np.vertices.push_back(0);
    while (cur < n) {
        std::size_t best = cur;
        Ratio best_slope;
        for (const auto& pt : np.points) {
            if (pt.index <= cur) continue;
            Ratio s(height(pt.index) - height(cur), big(pt.index - cur));
            // Ascending scan: "<=" keeps the largest index among equal minima.
            if (best == cur || s <= best_slope) {
                best = pt.index;
                best_slope = s;
            }
        }
        np.edges.push_back({cur, best, best_slope});
        np.vertices.push_back(best);
        cur = best;
    }
    return np;
}

NewtonPolygon build_polygon_from_constants(std::span<const Integer> coeffs, std::uint64_t p) {
    std::vector<ExtendedNat> vals;
    vals.reserve(coeffs.size());
    for (const auto& c : coeffs) vals.push_back(vp(c, p));
    return build_polygon_from_valuations(vals);
}

NewtonPolygon build_polygon(const IntPoly& f, const IntPoly& phi, std::uint64_t p) {
    if (!phi.is_monic() || phi.is_constant()) throw std::invalid_argument("phi must be monic of degree >= 1");
    if (!is_irreducible_mod_p(phi, p))
        throw std::invalid_argument("phi = " + to_string(phi) + " is reducible modulo p = " + std::to_string(p));
    const PhiExpansion e = phi_expand(f, phi);
    std::vector<ExtendedNat> vals;
    vals.reserve(e.terms.size());
    for (const auto& b : e.terms) vals.push_back(vpx(b, p));
    return build_polygon_from_valuations(vals);
}

Ratio rightmost_slope(const NewtonPolygon& np) {
    if (np.edges.empty()) throw std::invalid_argument("degenerate polygon has no edges");
    return np.edges.back().slope;
}

Ratio rightmost_slope_formula(unsigned n, unsigned c, std::uint64_t p) {
    Ratio best;
    for (unsigned j = 1; j <= n; ++j) {
        const std::uint64_t v = vp(u(2 * j + c), p).value();
        Ratio s(big(v), big(2 * j));
        if (s > best) best = s;
    }
    return best;
}

bool is_valid_hull(const NewtonPolygon& np) {
    if (np.vertices.empty() || np.vertices.front() != 0 || np.edges.empty()) return false;
    for (std::size_t e = 1; e < np.edges.size(); ++e)
        if (!(np.edges[e - 1].slope < np.edges[e].slope)) return false;

    auto height = [&](std::size_t idx) -> std::optional<Integer> {
        for (const auto& pt : np.points)
            if (pt.index == idx && !pt.valuation.is_infinite()) return big(pt.valuation.value());
        return std::nullopt;
    };
    for (const auto& e : np.edges) {
        const auto y0 = height(e.from);
        const auto y1 = height(e.to);
        if (!y0 || !y1) return false;
        // (y1 - y0) / (to - from) must be the stored slope.
        if (Ratio(*y1 - *y0, big(e.to - e.from)) != e.slope) return false;
        for (const auto& pt : np.points) {
            if (pt.valuation.is_infinite()) continue;
            const Integer yi = big(pt.valuation.value());
            const Integer di = big(pt.index) - big(e.from);
            // yi >= y0 + slope * di, cross-multiplied by den > 0.
            if ((yi - *y0) * e.slope.den() < e.slope.num() * di) return false;
        }
    }
    return true;
}

}  // namespace phiirred
