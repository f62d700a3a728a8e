#pragma once
// Differential operators in one even variable u (also called x) and one odd
// variable theta, kept in the normal order u^a theta^c du^b dtheta^d.

#include "lambdalie/expr.hpp"
#include "lambdalie/json_io.hpp"
#include "lambdalie/param_scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lambdalie {

struct SuperMonomial {
    unsigned a = 0;  // u
    unsigned c = 0;  // theta
    unsigned b = 0;  // du
    unsigned d = 0;  // dtheta

    int parity() const { return int((c + d) & 1u); }
    int weight() const { return 2 * (int(a) - int(b)) + (int(c) - int(d)); }
    std::uint64_t key() const {
        return (std::uint64_t(b) << 34) | (std::uint64_t(a) << 2) | (std::uint64_t(c) << 1) | d;
    }
    bool operator<(const SuperMonomial& o) const { return key() < o.key(); }
    bool operator==(const SuperMonomial& o) const { return key() == o.key(); }
    std::string str(bool super_names) const;
};

class SuperOp {
public:
    using TermMap = std::map<SuperMonomial, ParamScalar>;

    SuperOp() = default;
    SuperOp(const ParamScalar& c);  // c times identity
    static SuperOp monomial(unsigned a, unsigned c, unsigned b, unsigned d, const ParamScalar& coeff = 1);
    static SuperOp u() { return monomial(1, 0, 0, 0); }
    static SuperOp du() { return monomial(0, 0, 1, 0); }
    static SuperOp theta() { return monomial(0, 1, 0, 0); }
    static SuperOp dtheta() { return monomial(0, 0, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // scalar multiple of the identity
    std::optional<ParamScalar> as_scalar() const;
    ParamScalar coeff(const SuperMonomial& m) const;

    // parity of a homogeneous operator; -1 when mixed, 0 for zero
    int parity() const;
    SuperOp parity_part(int p) const;

    SuperOp operator-() const;
    SuperOp& operator+=(const SuperOp& o);
    SuperOp& operator-=(const SuperOp& o);
    friend SuperOp operator+(SuperOp a, const SuperOp& b) { return a += b; }
    friend SuperOp operator-(SuperOp a, const SuperOp& b) { return a -= b; }
    friend SuperOp operator*(const SuperOp& a, const SuperOp& b);
    friend SuperOp operator*(const ParamScalar& s, const SuperOp& a);
    bool operator==(const SuperOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const SuperOp& o) const { return !(*this == o); }

    SuperOp map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const;
    SuperOp substitute(int var, const ParamScalar& value) const;

    // printing uses u/du for even-only operators unless super_names is set
    std::string str(bool super_names = false) const;
    Json to_json() const;
    static SuperOp from_json(const Json& j);

private:
    void add_term(const SuperMonomial& m, const ParamScalar& c);
    TermMap terms_;
};

SuperOp bracket(const SuperOp& a, const SuperOp& b);
SuperOp ad_power(const SuperOp& a, const SuperOp& b, unsigned k);
SuperOp adjoint(const SuperOp& a);

struct WeightParity {
    std::optional<int> weight;  // nullopt means inhomogeneous
    int parity;                 // 0 even, 1 odd, -1 mixed
};
WeightParity weight_and_parity(const SuperOp& a);

// Parse an operator formula over u, x, du, dx, theta, dtheta (products are
// operator composition) with scalar symbols from env.
SuperOp parse_op(const std::string& text, const ScalarEnv& env = {});

enum class DequantFamily { SL, OSP, SUPER };

// Rescale t (t -> t/lambda, or t/lambda^2 for OSP) in the coefficient list of
// an identity sum_i c_i w_i = 0 and return the leading coefficients in lambda.
std::vector<ParamScalar> dequantize(const std::vector<ParamScalar>& coeffs, DequantFamily fam);

}  // namespace lambdalie
