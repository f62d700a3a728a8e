#include <doctest.h>

#include "lambdalie/psdo.hpp"

using namespace lambdalie;

namespace {

ParamScalar L_() { return ParamScalar::lambda(); }
ParamScalar num(long v) { return ParamScalar(v); }
Laurent xp(int n, long c = 1) { return Laurent::x_pow(n, num(c)); }

PsdoSymbol sym(int sector, std::initializer_list<std::pair<int, Laurent>> terms, std::optional<int> floor = std::nullopt) {
    PsdoSymbol s(sector, floor);
    for (const auto& [k, c] : terms) s.add(k, c);
    return s;
}

}  // namespace

TEST_CASE("Laurent coefficients") {
    Laurent f = xp(-1) + xp(2, 3);
    CHECK(f.residue() == num(1));
    CHECK(f.derivative() == xp(-2, -1) + xp(1, 6));
    CHECK_FALSE(f.polynomial_degree());
    CHECK((xp(2) + num(1)).polynomial_degree() == 2);
    CHECK((xp(1) * xp(-1)) == Laurent(num(1)));
    CHECK((f - f).is_zero());
}

TEST_CASE("lambda binomials") {
    CHECK(psdo_binomial(0, -1, 1) == num(-1));
    CHECK(psdo_binomial(0, -1, 2) == num(1));
    CHECK(psdo_binomial(1, 0, 2) == L_() * (L_() - num(1)) / num(2));
    CHECK(psdo_binomial(1, 0, 0) == num(1));
    CHECK(psdo_binomial(0, 2, 3).is_zero());
}

TEST_CASE("composition examples") {
    PsdoSymbol x = PsdoSymbol::coefficient(xp(1));
    // D^lambda o x = x D^lambda + lambda D^(lambda-1)
    PsdoSymbol r = compose(PsdoSymbol::d_pow(1, 0), x);
    CHECK(r.exact());
    CHECK(r.sector() == 1);
    CHECK(r.coeff(0) == xp(1));
    CHECK(r.coeff(-1) == Laurent(L_()));
    CHECK(r.terms().size() == 2);
    CHECK(compose(PsdoSymbol::d_pow(1, 0), PsdoSymbol::coefficient(num(1))).agrees_with(PsdoSymbol::d_pow(1, 0)));
    // D^-1 o x = x D^-1 - D^-2
    PsdoSymbol q = compose(PsdoSymbol::d_pow(0, -1), x);
    CHECK(q.agrees_with(sym(0, {{-1, xp(1)}, {-2, num(-1)}})));
    // and D o (x D^-1 - D^-2) = x
    CHECK(compose(PsdoSymbol::d_pow(0, 1), q).agrees_with(x));
}

TEST_CASE("non-terminating expansions need a floor") {
    PsdoSymbol inv = PsdoSymbol::coefficient(xp(-1));
    CHECK_THROWS_AS(compose(PsdoSymbol::d_pow(0, -1), inv), PsdoError);
    // D^-1 o x^-1 = sum_m (-1)^m (x^-1)^(m) D^(-1-m) = sum_m m! x^(-1-m) D^(-1-m)
    PsdoSymbol r = compose(PsdoSymbol::d_pow(0, -1), inv, -4);
    REQUIRE(r.floor() == -4);
    CHECK(r.coeff(-1) == xp(-1));
    CHECK(r.coeff(-2) == xp(-2, 1));
    CHECK(r.coeff(-3) == xp(-3, 2));
    CHECK(r.coeff(-4) == xp(-4, 6));
    CHECK_THROWS_AS(r.coeff(-5), PsdoError);
}

TEST_CASE("sector overflow") {
    CHECK_THROWS_AS(compose(PsdoSymbol::d_pow(1, 0), PsdoSymbol::d_pow(1, 0)), PsdoError);
    CHECK_THROWS_AS(compose(PsdoSymbol::d_pow(-1, 0), PsdoSymbol::d_pow(-1, 0)), PsdoError);
}

TEST_CASE("split into differential and integral parts") {
    PsdoSymbol p = sym(0, {{1, num(1)}, {0, xp(1)}, {-1, Laurent(L_())}});
    auto [plus, minus] = split(p);
    CHECK(plus.agrees_with(sym(0, {{1, num(1)}, {0, xp(1)}})));
    CHECK(minus.agrees_with(sym(0, {{-1, Laurent(L_())}})));
    auto [p2, m2] = split(PsdoSymbol::d_pow(0, 2));
    CHECK(m2.is_zero());
    CHECK(p2.agrees_with(PsdoSymbol::d_pow(0, 2)));
    auto [p3, m3] = split(PsdoSymbol::d_pow(0, -3));
    CHECK(p3.is_zero());
    CHECK_THROWS_AS(split(PsdoSymbol::d_pow(1, 0)), PsdoError);
    // the differential part must be fully known
    CHECK_THROWS_AS(split(sym(0, {{2, num(1)}}, 1)), PsdoError);
}

TEST_CASE("trace") {
    CHECK(trace(sym(0, {{-1, xp(-1)}})) == num(1));
    CHECK(trace(sym(0, {{-1, xp(1)}})).is_zero());
    CHECK(trace(sym(0, {{-1, xp(-1, 5)}, {-2, xp(-1, 7)}})) == num(5));
    CHECK_THROWS_AS(trace(sym(0, {{1, num(1)}}, 0)), PsdoError);
    CHECK_THROWS_AS(trace(PsdoSymbol::d_pow(1, 0)), PsdoError);
}

TEST_CASE("trace of a commutator, worked pair") {
    PsdoSymbol a = compose(PsdoSymbol::d_pow(-1, 0), PsdoSymbol::d_pow(0, 1));
    PsdoSymbol b = compose(PsdoSymbol::d_pow(1, 0), PsdoSymbol::coefficient(xp(1)));
    PsdoSymbol ab = compose(a, b, -4), ba = compose(b, a, -4);
    CHECK(trace(ab) == trace(ba));
}

TEST_CASE("pairing") {
    // L = x^-1 D^-1 o D^lambda, X = D^-lambda
    PsdoSymbol l = compose(sym(0, {{-1, xp(-1)}}), PsdoSymbol::d_pow(1, 0));
    CHECK(pairing(PsdoSymbol::d_pow(-1, 0), l) == num(1));
    CHECK(pairing(PsdoSymbol::d_pow(-1, 0), PsdoSymbol(1)).is_zero());
    CHECK_THROWS_AS(pairing(PsdoSymbol::d_pow(1, 0), l), PsdoError);
    PsdoSampler s(3);
    for (int i = 0; i < 5; ++i) {
        PsdoSymbol x = s.cotangent(2, 4);
        PsdoSymbol l1 = compose(sym(0, {{-1, s.laurent()}, {-2, s.laurent()}}), PsdoSymbol::d_pow(1, 0));
        PsdoSymbol l2 = compose(sym(0, {{-1, s.laurent()}}), PsdoSymbol::d_pow(1, 0));
        CHECK(pairing(x, l1 + l2) == pairing(x, l1) + pairing(x, l2));
    }
}

TEST_CASE("Hamiltonian vector field, worked example") {
    // Y = D^-lambda o D, L = D^lambda o (1 + x D^-1); expanding [D + x, L] by hand:
    // [D, L] = D^(lambda-1), [x, L] = -lambda D^(lambda-1) - (lambda-1) x D^(lambda-2) - lambda(lambda-2) D^(lambda-3)
    PsdoSymbol y = cotangent_element(PsdoSymbol::d_pow(0, 1), 5);
    PsdoSymbol l = group_element({{1, xp(1)}}, 5);
    PsdoSymbol h = hamiltonian(y, l);
    CHECK(tangent_shape(h));
    ParamScalar one_minus = num(1) - L_();
    PsdoSymbol want = sym(1, {{-1, Laurent(one_minus)}, {-2, one_minus * xp(1)}, {-3, Laurent(-L_() * (L_() - num(2)))}});
    REQUIRE(h.valid_at(-3));
    CHECK(h.agrees_with(want));
    // the same field as a commutator with D + x
    PsdoSymbol dx = sym(0, {{1, num(1)}, {0, xp(1)}});
    PsdoSymbol lx = compose(PsdoSymbol::d_pow(1, 0), sym(0, {{0, num(1)}, {-1, xp(1)}}));
    CHECK(h.agrees_with(compose(dx, lx) - compose(lx, dx)));
}

TEST_CASE("Y = D^-lambda gives the zero field") {
    CHECK(hamiltonian(PsdoSymbol::d_pow(-1, 0), PsdoSymbol::d_pow(1, 0)).is_zero());
    PsdoSampler s(7);
    for (int i = 0; i < 5; ++i) {
        PsdoSymbol h = hamiltonian(PsdoSymbol::d_pow(-1, 0), s.group(5));
        for (const auto& [k, c] : h.terms()) CHECK(c.is_zero());
    }
}

TEST_CASE("Hamiltonian is linear in Y") {
    PsdoSampler s(9);
    for (int i = 0; i < 5; ++i) {
        PsdoSymbol l = s.group(5), y1 = s.cotangent(2, 5), y2 = s.cotangent(2, 5);
        CHECK(hamiltonian(y1 + y2, l).agrees_with(hamiltonian(y1, l) + hamiltonian(y2, l)));
    }
}

TEST_CASE("depth bookkeeping") {
    PsdoSymbol g = group_element({{1, xp(1)}}, 4);
    CHECK(g.floor() == -3);
    CHECK(cotangent_element(PsdoSymbol::d_pow(0, 2), 3).floor() == 0);
    CHECK_THROWS(group_element({}, 0));
}

TEST_CASE("adjoint") {
    // (x D)* = -D o x = -x D - 1
    PsdoSymbol a = psdo_adjoint(sym(0, {{1, xp(1)}}));
    CHECK(a.agrees_with(sym(0, {{1, xp(1, -1)}, {0, num(-1)}})));
    CHECK(psdo_adjoint(PsdoSymbol::coefficient(num(4))).agrees_with(PsdoSymbol::coefficient(num(4))));
    PsdoSampler s(13);
    for (int i = 0; i < 20; ++i) {
        PsdoSymbol p = s.differential(3);
        CHECK(psdo_adjoint(psdo_adjoint(p)).agrees_with(p));
        PsdoSymbol q = s.differential(2);
        // anti-automorphism
        CHECK(psdo_adjoint(compose(p, q)).agrees_with(compose(psdo_adjoint(q), psdo_adjoint(p))));
    }
}

TEST_CASE("super residue and adjoint in the 1|1 case") {
    SuperPsdoSymbol p{PsdoSymbol(0), sym(0, {{-1, xp(-1)}})};
    CHECK(super_residue(p) == num(1));
    CHECK(super_residue(SuperPsdoSymbol{sym(0, {{-1, xp(-1)}}), PsdoSymbol(0)}).is_zero());
    CHECK(super_residue(SuperPsdoSymbol{PsdoSymbol(0), sym(0, {{-1, xp(1)}})}).is_zero());
    SuperPsdoSymbol q{sym(0, {{1, xp(1)}}), sym(0, {{2, xp(2)}})};
    SuperPsdoSymbol qq = psdo_adjoint(psdo_adjoint(q));
    CHECK(qq.even.agrees_with(q.even));
    CHECK(qq.odd.agrees_with(q.odd));
}

TEST_CASE("json round trip") {
    PsdoSymbol g = group_element({{1, xp(1)}, {2, xp(-1, 3)}}, 4);
    PsdoSymbol back = PsdoSymbol::from_json(g.to_json());
    CHECK(back.sector() == g.sector());
    CHECK(back.floor() == g.floor());
    CHECK(back.agrees_with(g));
    CHECK_THROWS(PsdoSymbol::from_json(Json::parse(R"({"sector": 3, "terms": {}})")));
}

// ---- properties on random data ----

TEST_CASE("associativity on retained orders") {
    PsdoSampler s(21);
    for (int i = 0; i < 10; ++i) {
        PsdoSymbol g = s.group(5), c = s.cotangent(2, 5), d = s.differential(2);
        PsdoSymbol left = compose(compose(g, c, -6), d, -6);
        PsdoSymbol right = compose(g, compose(c, d, -6), -6);
        CHECK(left.agrees_with(right));
    }
}

TEST_CASE("trace property on random pairs") {
    PsdoSampler s(31);
    for (int i = 0; i < 20; ++i) {
        PsdoSymbol x = s.cotangent(2, 5), l = s.group(5);
        CHECK(trace(compose(x, l, -2)) == trace(compose(l, x, -2)));
    }
}

TEST_CASE("Hamiltonian fields are tangent") {
    PsdoSampler s(41);
    for (int i = 0; i < 20; ++i) CHECK(tangent_shape(hamiltonian(s.cotangent(2, 5), s.group(5))));
}

TEST_CASE("Poisson bracket antisymmetry and Jacobi") {
    PsdoSampler s(51);
    for (int i = 0; i < 20; ++i) {
        PsdoSymbol l = s.group(6);
        PsdoSymbol x = s.cotangent(1, 6), y = s.cotangent(1, 6), z = s.cotangent(1, 6);
        CHECK(poisson_bracket(x, y, l) == -poisson_bracket(y, x, l));
        CHECK(poisson_bracket(x, x, l).is_zero());
        CHECK(jacobi_sum(x, y, z, l).is_zero());
    }
}

TEST_CASE("Jacobi with second-order functionals needs more depth") {
    PsdoSampler s(61);
    PsdoSymbol l6 = s.group(6);
    PsdoSymbol a = s.cotangent(2, 6), b = s.cotangent(2, 6), c = s.cotangent(2, 6);
    CHECK_THROWS_AS(jacobi_sum(a, b, c, l6), PsdoError);
    for (int i = 0; i < 5; ++i) {
        PsdoSymbol l = s.group(8);
        PsdoSymbol x = s.cotangent(2, 8), y = s.cotangent(2, 8), z = s.cotangent(2, 8);
        CHECK(poisson_bracket(x, y, l) == -poisson_bracket(y, x, l));
        CHECK(poisson_bracket(x, x, l).is_zero());
        CHECK(jacobi_sum(x, y, z, l).is_zero());
    }
}
