#include "lambdalie/param_scalar.hpp"

#include <stdexcept>

namespace lambdalie {

ParamScalar ratfun_normalize(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    ParamScalar r;
    if (num.is_zero()) return r;
    if (den.is_constant()) {
        r.num_ = num.scaled(1 / den.constant_value());
        return r;
    }
    ParamPoly g = poly_gcd(num, den);
    ParamPoly n = num, d = den;
    if (!g.is_one()) {
        n = *ParamPoly::divide(num, g);
        d = *ParamPoly::divide(den, g);
    }
    Rational lc = d.leading().c;
    if (lc != 1) {
        n = n.scaled(1 / lc);
        d = d.scaled(1 / lc);
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

Rational ParamScalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("scalar is not a rational constant: " + str());
    return num_.constant_value();
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -num_;
    return r;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return ParamScalar(a.num_ + b.num_);
    if (a.den_ == b.den_) return ratfun_normalize(a.num_ + b.num_, a.den_);
    return ratfun_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero() || b.is_zero()) return ParamScalar();
    if (a.den_.is_one() && b.den_.is_one()) return ParamScalar(a.num_ * b.num_);
    // cross-cancel before multiplying to keep sizes small
    ParamPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    ParamPoly n1 = *ParamPoly::divide(a.num_, g1), d2 = *ParamPoly::divide(b.den_, g1);
    ParamPoly n2 = *ParamPoly::divide(b.num_, g2), d1 = *ParamPoly::divide(a.den_, g2);
    ParamPoly num = n1 * n2, den = d1 * d2;
    ParamScalar r;
    Rational lc = den.leading().c;
    if (den.is_constant()) {
        r.num_ = num.scaled(1 / lc);
        return r;
    }
    r.num_ = num.scaled(1 / lc);
    r.den_ = den.scaled(1 / lc);
    return r;
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero scalar");
    ParamScalar inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    Rational lc = inv.den_.leading().c;
    inv.num_ = inv.num_.scaled(1 / lc);
    inv.den_ = inv.den_.scaled(1 / lc);
    return a * inv;
}

ParamScalar ParamScalar::pow(long k) const {
    if (k < 0) return ParamScalar(1) / pow(-k);
    ParamScalar r;
    r.num_ = num_.pow(unsigned(k));
    r.den_ = den_.pow(unsigned(k));
    return r;
}

ParamScalar ParamScalar::substitute(int v, const ParamScalar& value) const {
    if (!has_var(v)) return *this;
    auto sub = [&](const ParamPoly& p) {
        auto cs = p.coeffs_in(v);
        ParamScalar acc;
        for (std::size_t k = cs.size(); k-- > 0;) acc = acc * value + ParamScalar(cs[k]);
        return acc;
    };
    return sub(num_) / sub(den_);
}

ParamScalar ParamScalar::substitute(const std::map<int, ParamScalar>& values) const {
    ParamScalar r = *this;
    for (const auto& [v, val] : values) r = r.substitute(v, val);
    return r;
}

std::string ParamScalar::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const ParamPoly& p) {
        std::string s = p.str();
        return p.size() > 1 || s.find('*') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace lambdalie
