#include "lambdalie/poly_sum.hpp"

#include <sstream>

namespace lambdalie {

UPoly UPoly::monomial(unsigned j, const ParamScalar& coeff) {
    UPoly p;
    p.c.assign(j + 1, ParamScalar());
    p.c[j] = coeff;
    p.trim();
    return p;
}

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

ParamScalar UPoly::eval(const ParamScalar& x) const {
    ParamScalar acc;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t j = 0; j < r.c.size(); ++j) {
        if (j < c.size()) r.c[j] += c[j];
        if (j < o.c.size()) r.c[j] += o.c[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly neg = o;
    for (auto& x : neg.c) x = -x;
    return *this + neg;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    UPoly r;
    r.c.assign(c.size() + o.c.size() - 1, ParamScalar());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

UPoly UPoly::shift(const ParamScalar& a) const {
    UPoly r, lin({a, ParamScalar(1)});
    for (std::size_t j = c.size(); j-- > 0;) r = r * lin + UPoly({c[j]});
    return r;
}

std::string UPoly::str(const char* var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = c.size(); j-- > 0;) {
        if (c[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[j].str() << ")";
        if (j > 0) os << "*" << var;
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
    // B_0..B_n with B_1 = -1/2
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rational s = 0;
        mpz_class binom = 1;  // C(m+1, k)
        for (unsigned k = 0; k < m; ++k) {
            s += Rational(binom) * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[m] = -s / (m + 1);
    }
    return b;
}

UPoly poly_sum_closed_form(const UPoly& p) {
    if (p.is_zero()) return UPoly();
    unsigned deg = unsigned(p.degree());
    auto bern = bernoulli_numbers(deg);
    UPoly out;
    out.c.assign(deg + 2, ParamScalar());
    for (unsigned j = 0; j <= deg; ++j) {
        if (p.c[j].is_zero()) continue;
        // sum_{k<D} k^j = 1/(j+1) sum_i C(j+1,i) B_i D^{j+1-i}
        mpz_class binom = 1;
        for (unsigned i = 0; i <= j; ++i) {
            Rational coeff = Rational(binom) * bern[i] / (j + 1);
            if (coeff != 0) out.c[j + 1 - i] += p.c[j] * ParamScalar(coeff);
            binom = binom * (j + 1 - i) / (i + 1);
        }
    }
    out.trim();
    return out;
}

}  // namespace lambdalie
