#pragma once
// Rational functions in (lambda, t, alpha): the coefficient field.

#include "lambdalie/param_poly.hpp"

#include <map>
#include <string>

namespace lambdalie {

class ParamScalar {
public:
    ParamScalar() = default;
    ParamScalar(long v) : num_(v) {}
    ParamScalar(const Rational& q) : num_(q) {}
    ParamScalar(const ParamPoly& p) : num_(p) {}
    static ParamScalar var(int v) { return ParamScalar(ParamPoly::var(v)); }
    static ParamScalar lambda() { return var(LAMBDA); }
    static ParamScalar t() { return var(T); }
    static ParamScalar alpha() { return var(ALPHA); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const;  // requires is_constant()
    bool has_var(int v) const { return num_.has_var(v) || den_.has_var(v); }

    ParamScalar operator-() const;
    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }
    ParamScalar pow(long k) const;
    bool operator==(const ParamScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }

    // substitute a variable by another scalar
    ParamScalar substitute(int v, const ParamScalar& value) const;
    ParamScalar substitute(const std::map<int, ParamScalar>& values) const;

    std::string str() const;
    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

    friend ParamScalar ratfun_normalize(const ParamPoly& num, const ParamPoly& den);

private:
    ParamPoly num_;
    ParamPoly den_ = ParamPoly(1);
};

// canonical form: gcd(num, den) = 1, den monic under graded-lex order
ParamScalar ratfun_normalize(const ParamPoly& num, const ParamPoly& den);

}  // namespace lambdalie
