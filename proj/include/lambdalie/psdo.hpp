#pragma once
// Pseudodifferential symbols sum_k w_k(x) D^(eps*lambda + k) with Laurent
// polynomial coefficients, tracked down to an explicit validity floor.
#include "lambdalie/json_io.hpp"
#include "lambdalie/param_scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace lambdalie {

// finitely supported map x-exponent -> coefficient
class Laurent {
public:
    Laurent() = default;
    Laurent(const ParamScalar& c) { add(0, c); }
    static Laurent x_pow(int n, const ParamScalar& c = ParamScalar(1));

    const std::map<int, ParamScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(int e, const ParamScalar& c);
    ParamScalar coeff(int e) const;
    ParamScalar residue() const { return coeff(-1); }
    Laurent derivative() const;
    // no negative powers: the m-th derivative vanishes for m > degree
    std::optional<int> polynomial_degree() const;

    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b);
    friend Laurent operator-(Laurent a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const ParamScalar& s, const Laurent& a);
    bool operator==(const Laurent& o) const { return t_ == o.t_; }

    std::string str() const;

private:
    std::map<int, ParamScalar> t_;
};

class PsdoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponents are sector*lambda + k.  Offsets below floor() are unknown;
// an exact symbol has no floor.
class PsdoSymbol {
public:
    PsdoSymbol(int sector = 0, std::optional<int> floor = std::nullopt);
    static PsdoSymbol d_pow(int sector, int k, std::optional<int> floor = std::nullopt);
    static PsdoSymbol coefficient(const Laurent& f);

    int sector() const { return sector_; }
    std::optional<int> floor() const { return floor_; }
    bool exact() const { return !floor_; }
    const std::map<int, Laurent>& terms() const { return t_; }
    Laurent coeff(int k) const;
    bool is_zero() const { return t_.empty(); }
    // highest offset carried; for a truncated zero this is floor - 1
    std::optional<int> top() const;
    bool valid_at(int k) const { return !floor_ || k >= *floor_; }

    void add(int k, const Laurent& c);
    PsdoSymbol truncated(int floor) const;

    PsdoSymbol operator-() const;
    friend PsdoSymbol operator+(const PsdoSymbol& a, const PsdoSymbol& b);
    friend PsdoSymbol operator-(const PsdoSymbol& a, const PsdoSymbol& b) { return a + (-b); }
    friend PsdoSymbol operator*(const ParamScalar& s, const PsdoSymbol& a);
    // equal on the common validity range
    bool agrees_with(const PsdoSymbol& o) const;

    std::string str() const;
    Json to_json() const;
    static PsdoSymbol from_json(const Json& j);

private:
    void prune();
    int sector_;
    std::optional<int> floor_;
    std::map<int, Laurent> t_;
};

// lambda-binomial (a choose m) for a = sector*lambda + k
ParamScalar psdo_binomial(int sector, int k, unsigned m);

// P o Q by the Leibniz rule; an optional floor caps non-terminating expansions
PsdoSymbol compose(const PsdoSymbol& p, const PsdoSymbol& q, std::optional<int> floor = std::nullopt);

// sector 0 only: (differential part, integral part)
std::pair<PsdoSymbol, PsdoSymbol> split(const PsdoSymbol& p);

// Res at x = 0 of the D^-1 coefficient, sector 0
ParamScalar trace(const PsdoSymbol& p);

// <X, L> = Tr(L o X), X in sector -1 and L in sector +1
ParamScalar pairing(const PsdoSymbol& x, const PsdoSymbol& l);

// H_Y(L) = (L Y)_+ L - L (Y L)_+
PsdoSymbol hamiltonian(const PsdoSymbol& y, const PsdoSymbol& l);
// sector +1 with only negative offsets
bool tangent_shape(const PsdoSymbol& h);

// {X, Y}(L) = X(H_Y(L)) for linear functionals X, Y
ParamScalar poisson_bracket(const PsdoSymbol& x, const PsdoSymbol& y, const PsdoSymbol& l);
// gradient at L of the quadratic functional L -> {Y, Z}(L), modulo D^-lambda o (integral part)
PsdoSymbol bracket_gradient(const PsdoSymbol& y, const PsdoSymbol& z, const PsdoSymbol& l);
// {X, {Y, Z}} + {Y, {Z, X}} + {Z, {X, Y}} at L
ParamScalar jacobi_sum(const PsdoSymbol& x, const PsdoSymbol& y, const PsdoSymbol& z, const PsdoSymbol& l);

// D^lambda o (1 + sum_k u_k D^-k), valid for `depth` orders
PsdoSymbol group_element(const std::map<int, Laurent>& u, int depth);
// D^-lambda o (differential operator), valid for `depth` orders
PsdoSymbol cotangent_element(const PsdoSymbol& diff_op, int depth);

// formal adjoint on sector 0: (a D^i)* = (-D)^i o a
PsdoSymbol psdo_adjoint(const PsdoSymbol& p);

// 1|1 contact case: even part plus theta times the odd part; theta^2 = 0
struct SuperPsdoSymbol {
    PsdoSymbol even;
    PsdoSymbol odd;  // coefficient of theta
};
// coefficient of theta/x in the D^-1 term
ParamScalar super_residue(const SuperPsdoSymbol& p);
// theta is an odd constant for D = d/dx, so the adjoint acts componentwise
SuperPsdoSymbol psdo_adjoint(const SuperPsdoSymbol& p);

// seeded random data for property checks
struct PsdoSampler {
    std::mt19937_64 rng;
    int coeff_range = 3;   // integer coefficients in [-r, r]
    int x_degree = 2;      // x-exponents in [-d, d]
    explicit PsdoSampler(std::uint64_t seed) : rng(seed) {}

    Laurent laurent(int max_terms = 2);
    // differential operator of order <= order
    PsdoSymbol differential(int order);
    PsdoSymbol group(int depth);             // random element of G_lambda
    PsdoSymbol cotangent(int order, int depth);
};

}  // namespace lambdalie
