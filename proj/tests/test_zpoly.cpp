#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "phiirred/poly_io.hpp"
#include "phiirred/zpoly.hpp"
#include "support.hpp"

using namespace phiirred;
using testing_support::random_monic;
using testing_support::random_nonzero;
using testing_support::random_poly;
using testing_support::uniform;

namespace {

IntPoly P(const char* s) { return parse_inline(s); }

Integer gcd_of(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

}  // namespace

TEST_CASE("normalization and degree") {
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK_FALSE(IntPoly{}.degree().has_value());
    CHECK(IntPoly{1, 2, 0}.degree() == 1u);
    CHECK(IntPoly{1, 2, 0} == IntPoly{1, 2});
    CHECK_THROWS_AS(IntPoly{}.leading(), std::logic_error);
}

TEST_CASE("add") {
    CHECK(P("x^2+1") + P("-x^2") == IntPoly::constant(1));
    const IntPoly f = P("3x^5 - 7x + 2");
    CHECK(IntPoly() + f == f);
    CHECK(P("x-3") + P("x+26") == P("2x+23"));
}

TEST_CASE("mul") {
    const IntPoly phi = P("x^2-x+5");
    const IntPoly lhs = (pow(phi, 2) + IntPoly::constant(3)) * (pow(phi, 2) - IntPoly::constant(3));
    CHECK(lhs == pow(phi, 4) - IntPoly::constant(9));
    CHECK(P("4x^3-x") * IntPoly::constant(1) == P("4x^3-x"));
    CHECK(P("x+1") * P("x-1") == P("x^2-1"));
    CHECK((IntPoly() * P("x")).is_zero());
}

TEST_CASE("content") {
    CHECK(content(P("6x^2+9")) == 3);
    CHECK(content(P("5x-25")) == 5);
    CHECK(content(P("x+26")) == 1);
    CHECK(content(IntPoly()) == 0);
    CHECK(content(P("-4x-6")) == 2);
    CHECK(primitive_part(P("-4x-6")) == P("2x+3"));
}

TEST_CASE("divmod_monic") {
    const IntPoly phi = P("x^2-x+5");
    auto [q, r] = divmod_monic(pow(phi, 2), phi);
    CHECK(q == phi);
    CHECK(r.is_zero());
    std::tie(q, r) = divmod_monic(P("x^2"), phi);
    CHECK(q == IntPoly::constant(1));
    CHECK(r == P("x-5"));
    std::tie(q, r) = divmod_monic(IntPoly::constant(7), phi);
    CHECK(q.is_zero());
    CHECK(r == IntPoly::constant(7));
    CHECK_THROWS_AS(divmod_monic(P("x^3"), P("2x+1")), std::invalid_argument);
    CHECK_THROWS_AS(divmod_monic(P("x^3"), IntPoly::constant(1)), std::invalid_argument);
}

TEST_CASE("phi_expand") {
    const IntPoly phi = P("x^2-x+5");
    PhiExpansion e = phi_expand(pow(phi, 4) - IntPoly::constant(9), phi);
    REQUIRE(e.terms.size() == 5);
    CHECK(e.terms[0] == IntPoly::constant(-9));
    CHECK(e.terms[1].is_zero());
    CHECK(e.terms[2].is_zero());
    CHECK(e.terms[3].is_zero());
    CHECK(e.terms[4] == IntPoly::constant(1));

    const IntPoly phi3 = P("x^3-x+37");
    e = phi_expand(pow(phi3, 2) - P("x^2"), phi3);
    REQUIRE(e.terms.size() == 3);
    CHECK(e.terms[0] == P("-x^2"));
    CHECK(e.terms[1].is_zero());
    CHECK(e.terms[2] == IntPoly::constant(1));

    CHECK(phi_expand(IntPoly(), phi).terms.empty());
    CHECK_THROWS_AS(phi_expand(P("x^2"), P("3x+1")), std::invalid_argument);
}

TEST_CASE("phi_assemble") {
    for (const char* phi_text : {"x", "x^2-x+5", "x^3+2"}) {
        const IntPoly phi = P(phi_text);
        const PhiExpansion e{phi, {IntPoly::constant(3), IntPoly(), IntPoly::constant(3), IntPoly(), IntPoly::constant(1)}};
        CHECK(phi_assemble(e) == pow(phi, 4) + scale(pow(phi, 2), 3) + IntPoly::constant(3));
        CHECK(phi_assemble(PhiExpansion{phi, {IntPoly::constant(-8)}}) == IntPoly::constant(-8));
    }
    CHECK_THROWS_AS(phi_assemble(PhiExpansion{P("x^2+1"), {P("x^2")}}), std::invalid_argument);
}

TEST_CASE("eval_at_integer") {
    CHECK(eval_at_integer(P("x^2-x+5"), 0) == 5);
    CHECK(eval_at_integer(P("x^2-x+11"), 0) == 11);
    CHECK(eval_at_integer(P("7x^9 - 2x + 44"), 0) == 44);
    CHECK(eval_at_integer(P("x^3-2"), -3) == -29);
}

TEST_CASE("compose, derivative, exact_sqrt") {
    CHECK(compose(P("x^2+1"), P("x-1")) == P("x^2-2x+2"));
    CHECK(derivative(P("x^3-2x+5")) == P("3x^2-2"));
    const IntPoly g = P("x^3-4x+7");
    CHECK(exact_sqrt(g * g) == g);
    CHECK_FALSE(exact_sqrt(P("x^2+1")).has_value());
    CHECK_FALSE(exact_sqrt(P("-x^2")).has_value());
}

TEST_CASE("inline parsing and printing") {
    CHECK(to_string(P("x^4 - 6x^2 + 3")) == "x^4 - 6x^2 + 3");
    CHECK(to_string(IntPoly()) == "0");
    CHECK(to_string(P("-x")) == "-x");
    CHECK_THROWS_AS(P("2*x^2 + -3"), std::invalid_argument);
    CHECK(P("  -x^2+x-1 ") == IntPoly{-1, 1, -1});
    CHECK(P("x^2 + x^2") == IntPoly{0, 0, 2});
    CHECK_THROWS_AS(P("x^"), std::invalid_argument);
    CHECK_THROWS_AS(P("y+1"), std::invalid_argument);
    CHECK_THROWS_AS(P(""), std::invalid_argument);
    const IntPoly big = IntPoly{std::vector<Integer>{Integer("123456789012345678901234567890"), 1}};
    CHECK(P("x + 123456789012345678901234567890") == big);
}

TEST_CASE("JSON literal round trip") {
    const IntPoly phi = P("x^2-x+5");
    CHECK(to_json_literal(phi).dump() == R"(["5","-1","1"])");
    CHECK(from_json_literal(nlohmann::json::parse(R"(["5","-1","1"])")) == phi);
    CHECK(to_json_literal(IntPoly()).dump() == "[]");
    CHECK_THROWS_AS(from_json_literal(nlohmann::json::parse(R"(["5","x"])")), std::invalid_argument);
    for (int i = 0; i < 100; ++i) {
        const IntPoly f = random_poly(8, 1000000000);
        CHECK(from_json_literal(to_json_literal(f)) == f);
        CHECK(P(to_string(f).c_str()) == f);
    }
}

TEST_CASE("ring axioms on random inputs") {
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(6, 50), b = random_poly(6, 50), c = random_poly(6, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());
        // Evaluation is a ring homomorphism: an oracle independent of the convolution code.
        const Integer t = uniform(-20, 20);
        CHECK(eval_at_integer(a * b, t) == eval_at_integer(a, t) * eval_at_integer(b, t));
        CHECK(eval_at_integer(a - b, t) == eval_at_integer(a, t) - eval_at_integer(b, t));
    }
}

TEST_CASE("Gauss lemma: content is multiplicative") {
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_nonzero(5, 40) * IntPoly::constant(uniform(1, 12));
        const IntPoly b = random_nonzero(5, 40) * IntPoly::constant(uniform(1, 12));
        CHECK(content(a * b) == content(a) * content(b));
        CHECK(content(a) == gcd_of(a.coeffs()));
    }
}

TEST_CASE("phi-expansion round trip, 1000 random pairs") {
    for (int trial = 0; trial < 1000; ++trial) {
        const IntPoly phi = random_monic(static_cast<std::size_t>(uniform(1, 3)), 1000000);
        const IntPoly f = random_poly(14, 1000000);
        const PhiExpansion e = phi_expand(f, phi);
        for (const auto& b : e.terms) CHECK(b.size() <= *phi.degree());
        if (!e.terms.empty()) CHECK_FALSE(e.terms.back().is_zero());
        CHECK(phi_assemble(e) == f);
    }
}
