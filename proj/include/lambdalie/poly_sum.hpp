#pragma once
// Univariate polynomials over ParamScalar and closed-form summation.

#include "lambdalie/param_scalar.hpp"

#include <vector>

namespace lambdalie {

struct UPoly {
    std::vector<ParamScalar> c;  // c[j] multiplies k^j

    UPoly() = default;
    explicit UPoly(std::vector<ParamScalar> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly monomial(unsigned j, const ParamScalar& coeff = ParamScalar(1));

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    ParamScalar eval(const ParamScalar& x) const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly shift(const ParamScalar& a) const;  // p(x + a)
    bool operator==(const UPoly& o) const { return c == o.c; }
    std::string str(const char* var = "D") const;
};

std::vector<Rational> bernoulli_numbers(unsigned n);

// q with q(D) = sum_{k=0}^{D-1} p(k)
UPoly poly_sum_closed_form(const UPoly& p);

}  // namespace lambdalie
