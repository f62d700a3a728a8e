#pragma once
// Sparse polynomials in the parameters (lambda, t, alpha) over the rationals.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lambdalie {

using Rational = mpq_class;

enum Var : int { LAMBDA = 0, T = 1, ALPHA = 2 };
inline constexpr int kNumVars = 3;
const char* var_name(int v);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// Exponent vector packed so that integer order equals graded-lex order with
// lambda > t > alpha: [total:16][e_lambda:16][e_t:16][e_alpha:16].
struct Monomial {
    std::uint64_t key = 0;

    static Monomial from_exps(unsigned el, unsigned et, unsigned ea);
    unsigned exp(int v) const { return unsigned((key >> (16 * (2 - v))) & 0xffffu); }
    unsigned total() const { return unsigned(key >> 48); }
    Monomial operator*(Monomial o) const { return Monomial{key + o.key}; }
    bool divides(Monomial o) const;
    Monomial operator/(Monomial o) const { return Monomial{key - o.key}; }
    bool operator==(Monomial o) const { return key == o.key; }
    bool operator<(Monomial o) const { return key < o.key; }
};

class ParamPoly {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    ParamPoly() = default;
    ParamPoly(long v);
    ParamPoly(const Rational& q);
    static ParamPoly var(int v, unsigned power = 1);
    static ParamPoly monomial(Monomial m, const Rational& c);
    static ParamPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.key == 0); }
    Rational constant_value() const;  // coefficient of the unit monomial
    bool is_one() const;

    // terms sorted by decreasing monomial
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    std::size_t size() const { return terms_.size(); }

    unsigned degree(int v) const;
    unsigned total_degree() const;
    bool has_var(int v) const { return degree(v) > 0; }

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly scaled(const Rational& q) const;
    ParamPoly pow(unsigned k) const;
    bool operator==(const ParamPoly& o) const;
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // exact division; nullopt when b does not divide a
    static std::optional<ParamPoly> divide(const ParamPoly& a, const ParamPoly& b);

    // coefficients with respect to one variable, index = power
    std::vector<ParamPoly> coeffs_in(int v) const;
    static ParamPoly from_coeffs(int v, const std::vector<ParamPoly>& c);

    // substitute variable v by a polynomial
    ParamPoly substitute(int v, const ParamPoly& value) const;
    ParamPoly derivative(int v) const;

    std::string str() const;
    std::size_t hash() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);
// content with respect to v: gcd of the coefficients of powers of v
ParamPoly poly_content(const ParamPoly& p, int v);

}  // namespace lambdalie
