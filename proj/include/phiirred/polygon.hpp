#pragma once

// phi-Newton polygons. For f = sum_{i=0}^{n} b_i(x) phi(x)^i with b_0 b_n != 0
// and a prime p, the points are P_i = (i, v_p^x(b_{n-i})) for the nonzero
// b_{n-i}. Starting at P_0, each next vertex is the LARGEST index reaching the
// minimal slope from the current vertex; this repeats until index n.

#include "phiirred/valuation.hpp"
#include "phiirred/zpoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace phiirred {

struct PolygonPoint {
    std::size_t index = 0;
    ExtendedNat valuation;
    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Ratio slope;
    friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

struct NewtonPolygon {
    std::vector<PolygonPoint> points;
    std::vector<std::size_t> vertices;
    std::vector<PolygonEdge> edges;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.back(); }
    std::vector<Ratio> slopes() const;
    /// Edges with nonzero slope (the polygon minus its horizontal part).
    std::vector<PolygonEdge> principal_part() const;

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// valuations[i] = v_p^x(b_i) (infinity for b_i = 0), i = 0..n.
/// Throws std::invalid_argument if b_0 or b_n is zero or n = 0.
NewtonPolygon build_polygon_from_valuations(std::span<const ExtendedNat> valuations);

/// Polygon of sum coeffs[i] * phi^i for integer coefficients; independent of phi.
NewtonPolygon build_polygon_from_constants(std::span<const Integer> coeffs, std::uint64_t p);

/// Throws std::invalid_argument if phi is not monic, phi is reducible mod p,
/// or the phi-expansion has b_0 = 0 or b_n = 0.
NewtonPolygon build_polygon(const IntPoly& f, const IntPoly& phi, std::uint64_t p);

/// Throws std::invalid_argument for a polygon without edges.
Ratio rightmost_slope(const NewtonPolygon& np);

/// max over 1 <= j <= n of v_p(u_{2j+c}) / (2j): the right-most slope of the
/// polygon of g_c = sum_j (u_{2n+c}/u_{2j+c}) phi^{2j}.
Ratio rightmost_slope_formula(unsigned n, unsigned c, std::uint64_t p);

/// Every point on or above the supporting line of every edge, slopes
/// strictly increasing, vertices spanning [0, n].
bool is_valid_hull(const NewtonPolygon& np);

}  // namespace phiirred
