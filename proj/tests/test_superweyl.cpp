#include <doctest.h>

#include "lambdalie/super_op.hpp"

#include <random>

using namespace lambdalie;

namespace {

SuperOp op(const std::string& s) { return parse_op(s); }

// Apply an even-sector operator to a polynomial in u given as coefficient
// list; used as an independent oracle for normal ordering.
std::vector<Rational> act_on(const SuperOp& a, const std::vector<Rational>& p) {
    std::vector<Rational> out(p.size() + 16);
    for (const auto& [m, c] : a.terms()) {
        REQUIRE(c.is_constant());
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] == 0 || k < m.b) continue;
            Rational f = p[k] * c.constant_value();
            for (unsigned i = 0; i < m.b; ++i) f *= Rational(long(k - i));
            out[k - m.b + m.a] += f;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

SuperOp random_op(std::mt19937& rng, int parity) {
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), bit(0, 1);
    SuperOp r;
    for (int i = 0; i < 4; ++i) {
        unsigned th = unsigned(bit(rng));
        unsigned dth = unsigned(parity < 0 ? bit(rng) : (int(th) + parity) % 2);
        ParamScalar coeff = ParamScalar(c(rng)) + ParamScalar(c(rng)) * ParamScalar::lambda();
        r += SuperOp::monomial(unsigned(e(rng)), th, unsigned(e(rng)), dth, coeff);
    }
    return r;
}

int sign_rule(int p, int q) { return (p * q) ? -1 : 1; }

}  // namespace

TEST_CASE("normal ordering examples") {
    CHECK(op("du*u") == op("u*du + 1"));
    CHECK(op("theta*theta").is_zero());
    CHECK(op("dtheta*dtheta").is_zero());
    CHECK(op("dtheta*theta") == op("1 - theta*dtheta"));
    SuperOp lhs = op("du^2*u^2");
    CHECK(lhs == op("u^2*du^2 + 4*u*du + 2"));
    // act on u^k for k = 0..4 and compare with the composed action
    for (int k = 0; k <= 4; ++k) {
        std::vector<Rational> p(k + 1);
        p[k] = 1;
        CHECK(act_on(lhs, p) == act_on(op("du^2"), act_on(op("u^2"), p)));
    }
}

TEST_CASE("bracket examples") {
    SuperOp x = op("u^2*du - (lambda-1)*u"), y = op("-du");
    CHECK(bracket(x, y) == op("2*u*du - (lambda-1)"));
    SuperOp U = op("dtheta - theta*dx");
    CHECK(bracket(U, U) == op("-2*dx"));
    CHECK(bracket(x, x).is_zero());
    CHECK(ad_power(x, op("du^2"), 0) == op("du^2"));
    // expansion: [u^2 du, du^2] = -4u du^2 - 2du and [-(lambda-1)u, du^2] = 2(lambda-1)du
    CHECK(ad_power(x, op("du^2"), 1) == op("-4*u*du^2 + 2*(lambda-2)*du"));
    CHECK(ad_power(x, op("t*du^2"), 5).is_zero());
    CHECK(!ad_power(x, op("t*du^2"), 4).is_zero());
}

TEST_CASE("adjoint examples") {
    CHECK(adjoint(op("u*du")) == op("-u*du - 1"));
    CHECK(adjoint(op("du^3")) == op("-du^3"));
    CHECK(adjoint(op("du^2")) == op("du^2"));
    for (int j = 0; j <= 5; ++j) {
        SuperOp d = SuperOp::monomial(0, 0, unsigned(j), 0);
        CHECK(adjoint(d) == ParamScalar(j % 2 ? -1 : 1) * d);
    }
}

TEST_CASE("weights and parities") {
    auto w = weight_and_parity(op("du^2"));
    CHECK(w.weight == -4);
    CHECK(w.parity == 0);
    CHECK(weight_and_parity(op("u^2*du - (lambda-1)*u")).weight == 2);
    auto inh = weight_and_parity(op("u + du"));
    CHECK(!inh.weight.has_value());
    CHECK(inh.parity == 0);
    CHECK(weight_and_parity(op("x*dtheta + x*theta*dx - lambda*theta")).parity == 1);
    CHECK(weight_and_parity(op("x*dtheta + x*theta*dx - lambda*theta")).weight == 1);
    // [H, A] = w A for monomials
    SuperOp H = op("2*x*dx + theta*dtheta - lambda");
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        SuperOp m = SuperOp::monomial(unsigned(rng() % 4), unsigned(rng() % 2), unsigned(rng() % 4), unsigned(rng() % 2));
        auto wp = weight_and_parity(m);
        CHECK(bracket(H, m) == ParamScalar(*wp.weight) * m);
    }
}

TEST_CASE("associativity and super Jacobi on random operators") {
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
        int pa = int(rng() % 2), pb = int(rng() % 2), pc = int(rng() % 2);
        SuperOp a = random_op(rng, pa), b = random_op(rng, pb), c = random_op(rng, pc);
        CHECK((a * b) * c == a * (b * c));
        // [a,[b,c]] = [[a,b],c] + (-1)^{pa pb} [b,[a,c]]
        CHECK(bracket(a, bracket(b, c)) ==
              bracket(bracket(a, b), c) + ParamScalar(sign_rule(pa, pb)) * bracket(b, bracket(a, c)));
        CHECK(bracket(a, b) == ParamScalar(-sign_rule(pa, pb)) * bracket(b, a));
        auto wa = weight_and_parity(a), wb = weight_and_parity(b);
        SuperOp ab = bracket(a, b);
        if (wa.weight && wb.weight && !ab.is_zero()) CHECK(weight_and_parity(ab).weight == *wa.weight + *wb.weight);
    }
}

TEST_CASE("adjoint is a sign-rule anti-automorphism") {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        int pa = int(rng() % 2), pb = int(rng() % 2);
        SuperOp a = random_op(rng, pa), b = random_op(rng, pb);
        CHECK(adjoint(a * b) == ParamScalar(sign_rule(pa, pb)) * (adjoint(b) * adjoint(a)));
        SuperOp e = random_op(rng, 0).parity_part(0);
        SuperOp even_only;
        for (const auto& [m, c] : e.terms())
            if (!m.c && !m.d) even_only += SuperOp::monomial(m.a, 0, m.b, 0, c);
        CHECK(adjoint(adjoint(even_only)) == even_only);
    }
}

TEST_CASE("json round trip") {
    SuperOp a = op("(lambda+1)/3*x^2*theta*dx*dtheta - t^2*dx + 1/2");
    CHECK(SuperOp::from_json(a.to_json()) == a);
    CHECK(SuperOp::from_json(Json::parse(a.to_json().dump())).to_json().dump() == a.to_json().dump());
}

TEST_CASE("dequantize examples") {
    // 3[z1,z2] - 2[z,z3] - 24 t^2 (lambda^2-4) y = 0
    auto out = dequantize({3, -2, eval_scalar("-24*t^2*(lambda^2-4)")}, DequantFamily::SL);
    CHECK(out[0] == ParamScalar(3));
    CHECK(out[1] == ParamScalar(-2));
    CHECK(out[2] == eval_scalar("-24*t^2"));
    auto same = dequantize({1, -1}, DequantFamily::SL);
    CHECK(same[0] == ParamScalar(1));
    CHECK(same[1] == ParamScalar(-1));
    auto osp = dequantize({1, eval_scalar("-2*t^2*(lambda-1)*(lambda+2)"), eval_scalar("-2*t*(2*lambda+1)")},
                          DequantFamily::SUPER);
    CHECK(osp[1] == eval_scalar("-2*t^2"));
    CHECK(osp[2] == eval_scalar("-4*t"));
    CHECK_THROWS(dequantize({eval_scalar("1/(lambda-1)")}, DequantFamily::SL));
}
