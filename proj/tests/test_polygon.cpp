#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "phiirred/certifier.hpp"
#include "phiirred/fppoly.hpp"
#include "phiirred/poly_io.hpp"
#include "phiirred/polygon.hpp"
#include "phiirred/schur.hpp"
#include "support.hpp"

using namespace phiirred;
using testing_support::uniform;

namespace {

IntPoly P(const char* s) { return parse_inline(s); }

IntPoly in_powers(const std::vector<Integer>& c, const IntPoly& phi) {
    std::vector<IntPoly> terms;
    for (const auto& v : c) terms.push_back(IntPoly::constant(v));
    return assemble_in_powers(terms, phi);
}

// Monotone-chain lower hull with collinear points dropped.
std::vector<std::size_t> lower_hull(const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::pair<long, long>> h;
    for (const auto& pt : pts) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h[h.size() - 1];
            const long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(pt);
    }
    std::vector<std::size_t> out;
    for (const auto& pt : h) out.push_back(static_cast<std::size_t>(pt.first));
    return out;
}

}  // namespace

TEST_CASE("g_1 for n=2 at p=3") {
    for (const char* phi_text : {"x", "x^2-x+5", "x^3-x+37"}) {
        const IntPoly phi = P(phi_text);
        if (!is_irreducible_mod_p(phi, 3)) continue;
        const NewtonPolygon np = build_polygon(in_powers({3, 0, 3, 0, 1}, phi), phi, 3);
        REQUIRE(np.points.size() == 3);
        CHECK(np.points[0] == PolygonPoint{0, 0});
        CHECK(np.points[1] == PolygonPoint{2, 1});
        CHECK(np.points[2] == PolygonPoint{4, 1});
        CHECK(np.vertices == std::vector<std::size_t>{0, 4});
        REQUIRE(np.edges.size() == 1);
        CHECK(np.edges[0].slope == Ratio(1, 4));
        CHECK(rightmost_slope(np) == Ratio(1, 4));
        CHECK(rightmost_slope(np) < Ratio(1, 2));
    }
}

TEST_CASE("flat polygon") {
    const NewtonPolygon np = build_polygon(P("x^3+x^2+2x+1"), P("x"), 5);
    CHECK(np.vertices == std::vector<std::size_t>{0, 3});
    CHECK(rightmost_slope(np) == Ratio(0, 1));
    CHECK(rightmost_slope(np).to_string() == "0/1");
    CHECK(np.principal_part().empty());
}

TEST_CASE("g_2 for n=2 at p=5") {
    const NewtonPolygon np = build_polygon(in_powers({15, 0, 5, 0, 1}, P("x")), P("x"), 5);
    REQUIRE(np.points.size() == 3);
    CHECK(np.points[1] == PolygonPoint{2, 1});
    CHECK(np.points[2] == PolygonPoint{4, 1});
    REQUIRE(np.edges.size() == 1);
    CHECK(np.edges[0].slope == Ratio(1, 4));
}

TEST_CASE("largest-index tie-break") {
    // Valuations b_3..b_0 = 0, 1, 2, 3: all points collinear, one edge to the end.
    const std::vector<ExtendedNat> v{3, 2, 1, 0};
    const NewtonPolygon np = build_polygon_from_valuations(v);
    CHECK(np.vertices == std::vector<std::size_t>{0, 3});
    CHECK(np.edges.size() == 1);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_WITH_AS(build_polygon(P("x^4+3x^2"), P("x"), 3), doctest::Contains("b_0(x)b_n(x) != 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_polygon(P("x^4+1"), P("x^2+1"), 2), doctest::Contains("reducible modulo p = 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(build_polygon(P("x^4+1"), P("2x+1"), 3), std::invalid_argument);
    CHECK_THROWS_AS(build_polygon_from_constants(std::vector<Integer>{Integer(5)}, 5), std::invalid_argument);
}

TEST_CASE("zero terms are omitted and the hull is valid") {
    const std::vector<ExtendedNat> v{4, ExtendedNat::infinity(), 1, ExtendedNat::infinity(), 0};
    const NewtonPolygon np = build_polygon_from_valuations(v);
    CHECK(np.points.size() == 3);
    CHECK(is_valid_hull(np));
}

TEST_CASE("random polygons match an independent lower hull") {
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 12));
        std::vector<ExtendedNat> vals(n + 1);
        std::vector<std::pair<long, long>> pts;
        for (std::size_t i = 0; i <= n; ++i) {
            const bool present = i == 0 || i == n || uniform(0, 3) != 0;
            vals[i] = present ? ExtendedNat(static_cast<std::uint64_t>(uniform(0, 6))) : ExtendedNat::infinity();
        }
        // Point P_i uses b_{n-i}.
        for (std::size_t i = 0; i <= n; ++i)
            if (!vals[n - i].is_infinite()) pts.emplace_back(static_cast<long>(i), static_cast<long>(vals[n - i].value()));
        const NewtonPolygon np = build_polygon_from_valuations(vals);
        CHECK(is_valid_hull(np));
        CHECK(np.vertices == lower_hull(pts));
        const auto s = np.slopes();
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
    }
}

TEST_CASE("closed-form slope equals the built polygon") {
    CHECK(rightmost_slope_formula(2, 0, 3) == Ratio(1, 4));
    CHECK(rightmost_slope_formula(2, 2, 5) == Ratio(1, 4));
    CHECK(rightmost_slope_formula(1, 0, 7) == Ratio(0, 1));
    for (unsigned c : {0u, 2u}) {
        for (unsigned n = 1; n <= 30; ++n) {
            const auto cs = c_coefficients(n, c);
            for (std::uint64_t p : primes_below(2 * n + c, true)) {
                const NewtonPolygon np = build_polygon(in_powers(cs, P("x")), P("x"), p);
                CHECK(rightmost_slope(np) == rightmost_slope_formula(n, c, p));
            }
        }
    }
}

TEST_CASE("polygon does not depend on phi") {
    const IntPoly phi = P("x^2-x+5");
    for (unsigned n = 1; n <= 6; ++n) {
        const auto cs = c_coefficients(n, 0);
        for (std::uint64_t p : {2u, 3u}) {
            CHECK(build_polygon(in_powers(cs, P("x")), P("x"), p) == build_polygon(in_powers(cs, phi), phi, p));
            CHECK(build_polygon(in_powers(cs, phi), phi, p) == build_polygon_from_constants(cs, p));
        }
    }
}
