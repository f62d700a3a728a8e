#include "lambdalie/super_op.hpp"

#include <sstream>
#include <stdexcept>

namespace lambdalie {

namespace {

// u^a theta^c du^b dtheta^d written with the given names
std::string monomial_text(const SuperMonomial& m, bool super_names) {
    const char* uname = super_names ? "x" : "u";
    const char* duname = super_names ? "dx" : "du";
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, unsigned e) {
        if (!e) return;
        if (!first) os << "*";
        first = false;
        os << name;
        if (e > 1) os << "^" << e;
    };
    put(uname, m.a);
    put("theta", m.c);
    put(duname, m.b);
    put("dtheta", m.d);
    return first ? "1" : os.str();
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class falling(unsigned n, unsigned k) {
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (n - i);
    return r;
}

}  // namespace

std::string SuperMonomial::str(bool super_names) const { return monomial_text(*this, super_names); }

SuperOp::SuperOp(const ParamScalar& c) {
    if (!c.is_zero()) terms_.emplace(SuperMonomial{}, c);
}

SuperOp SuperOp::monomial(unsigned a, unsigned c, unsigned b, unsigned d, const ParamScalar& coeff) {
    if (c > 1 || d > 1) return SuperOp();
    SuperOp r;
    if (!coeff.is_zero()) r.terms_.emplace(SuperMonomial{a, c, b, d}, coeff);
    return r;
}

void SuperOp::add_term(const SuperMonomial& m, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<ParamScalar> SuperOp::as_scalar() const {
    if (terms_.empty()) return ParamScalar();
    if (terms_.size() == 1 && terms_.begin()->first == SuperMonomial{}) return terms_.begin()->second;
    return std::nullopt;
}

ParamScalar SuperOp::coeff(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamScalar() : it->second;
}

int SuperOp::parity() const {
    int p = -2;
    for (const auto& [m, c] : terms_) {
        if (p == -2)
            p = m.parity();
        else if (p != m.parity())
            return -1;
    }
    return p == -2 ? 0 : p;
}

SuperOp SuperOp::parity_part(int p) const {
    SuperOp r;
    for (const auto& [m, c] : terms_)
        if (m.parity() == p) r.terms_.emplace(m, c);
    return r;
}

SuperOp SuperOp::operator-() const {
    SuperOp r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SuperOp& SuperOp::operator+=(const SuperOp& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperOp& SuperOp::operator-=(const SuperOp& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperOp operator*(const ParamScalar& s, const SuperOp& a) {
    if (s.is_zero()) return SuperOp();
    if (s.is_one()) return a;
    SuperOp r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
}

SuperOp operator*(const SuperOp& x, const SuperOp& y) {
    SuperOp r;
    for (const auto& [m1, c1] : x.terms_) {
        for (const auto& [m2, c2] : y.terms_) {
            // theta part: theta^c1 dtheta^d1 theta^c2 dtheta^d2 as a combination
            // of (c, d, sign); even factors commute with it
            struct Cl {
                unsigned c, d;
                int s;
            };
            Cl cl[2];
            int ncl = 0;
            if (m1.d == 1 && m2.c == 1) {
                // dtheta theta = 1 - theta dtheta
                cl[ncl++] = {m1.c, m2.d, 1};
                if (m1.c == 0 && m2.d == 0) cl[ncl++] = {1, 1, -1};
            } else if (m1.d == 1) {
                // theta^c1 dtheta dtheta^d2
                if (m2.d == 0) cl[ncl++] = {m1.c, 1, 1};
            } else {
                // theta^c1 theta^c2 dtheta^d2
                if (!(m1.c == 1 && m2.c == 1)) cl[ncl++] = {m1.c + m2.c, m2.d, 1};
            }
            if (ncl == 0) continue;
            ParamScalar cc = c1 * c2;
            // du^b1 u^a2 = sum_k C(b1,k) a2^(k) u^(a2-k) du^(b1-k)
            unsigned kmax = std::min(m1.b, m2.a);
            for (unsigned k = 0; k <= kmax; ++k) {
                mpz_class f = binomial(m1.b, k) * falling(m2.a, k);
                unsigned a = m1.a + m2.a - k;
                unsigned b = m1.b - k + m2.b;
                for (int i = 0; i < ncl; ++i) {
                    Rational q(f * cl[i].s);
                    r.add_term(SuperMonomial{a, cl[i].c, b, cl[i].d}, cc * ParamScalar(q));
                }
            }
        }
    }
    return r;
}

SuperOp SuperOp::map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const {
    SuperOp r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
}

SuperOp SuperOp::substitute(int var, const ParamScalar& value) const {
    return map_coeffs([&](const ParamScalar& c) { return c.substitute(var, value); });
}

std::string SuperOp::str(bool super_names) const {
    if (terms_.empty()) return "0";
    bool super = super_names;
    for (const auto& [m, c] : terms_)
        if (m.c || m.d) super = true;
    std::ostringstream os;
    bool first = true;
    // print highest du-order first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string mono = monomial_text(m, super);
        if (c.is_one()) {
            os << mono;
        } else {
            os << "(" << c.str() << ")";
            if (mono != "1") os << "*" << mono;
        }
    }
    return os.str();
}

Json SuperOp::to_json() const {
    Json arr = Json::array();
    for (const auto& [m, c] : terms_)
        arr.push_back({{"u", m.a}, {"theta", m.c}, {"du", m.b}, {"dtheta", m.d}, {"coeff", scalar_to_json(c)}});
    return Json{{"terms", arr}};
}

SuperOp SuperOp::from_json(const Json& j) {
    if (j.is_string()) return parse_op(j.get<std::string>());
    SuperOp r;
    for (const auto& t : j.at("terms")) {
        unsigned c = t.value("theta", 0u), d = t.value("dtheta", 0u);
        if (c > 1 || d > 1) throw std::invalid_argument("odd exponents must be 0 or 1");
        r.add_term(SuperMonomial{t.value("u", 0u), c, t.value("du", 0u), d}, scalar_from_json(t.at("coeff")));
    }
    return r;
}

SuperOp bracket(const SuperOp& a, const SuperOp& b) {
    SuperOp r;
    for (int p = 0; p < 2; ++p) {
        SuperOp ap = a.parity_part(p);
        if (ap.is_zero()) continue;
        for (int q = 0; q < 2; ++q) {
            SuperOp bq = b.parity_part(q);
            if (bq.is_zero()) continue;
            if (p && q)
                r += ap * bq + bq * ap;
            else
                r += ap * bq - bq * ap;
        }
    }
    return r;
}

SuperOp ad_power(const SuperOp& a, const SuperOp& b, unsigned k) {
    SuperOp r = b;
    for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = bracket(a, r);
    return r;
}

SuperOp adjoint(const SuperOp& a) {
    // (u^a theta^c du^b dtheta^d)* = (-1)^(b+d+cd) dtheta^d du^b theta^c u^a
    SuperOp r;
    for (const auto& [m, c] : a.terms()) {
        int sign = ((m.b + m.d + m.c * m.d) & 1u) ? -1 : 1;
        SuperOp left = SuperOp::monomial(0, 0, m.b, m.d);  // du^b dtheta^d = dtheta^d du^b
        SuperOp right = SuperOp::monomial(m.a, m.c, 0, 0);
        r += ParamScalar(sign) * c * (left * right);
    }
    return r;
}

WeightParity weight_and_parity(const SuperOp& a) {
    WeightParity wp{0, a.parity()};
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        if (first) {
            wp.weight = m.weight();
            first = false;
        } else if (wp.weight && *wp.weight != m.weight()) {
            wp.weight.reset();
        }
    }
    return wp;
}

namespace {

struct OpCtx {
    SuperOp symbol(const std::string& n) {
        if (n == "u" || n == "x") return SuperOp::u();
        if (n == "du" || n == "dx" || n == "d") return SuperOp::du();
        if (n == "theta") return SuperOp::theta();
        if (n == "dtheta") return SuperOp::dtheta();
        throw EvalError("unknown operator symbol '" + n + "'");
    }
    SuperOp from_scalar(const ParamScalar& s) { return SuperOp(s); }
    SuperOp add(const SuperOp& a, const SuperOp& b) { return a + b; }
    SuperOp scale(const ParamScalar& s, const SuperOp& a) { return s * a; }
    SuperOp mul(const SuperOp& a, const SuperOp& b) { return a * b; }
    SuperOp bracket(const SuperOp& a, const SuperOp& b) { return lambdalie::bracket(a, b); }
};

}  // namespace

SuperOp parse_op(const std::string& text, const ScalarEnv& env) {
    OpCtx ctx;
    return eval_in<SuperOp>(parse_expr(text), ctx, env);
}

std::vector<ParamScalar> dequantize(const std::vector<ParamScalar>& coeffs, DequantFamily fam) {
    ParamScalar lam = ParamScalar::lambda();
    ParamScalar scale = fam == DequantFamily::OSP ? lam * lam : lam;
    std::vector<ParamScalar> sub;
    unsigned shift = 0;
    for (const auto& c : coeffs) {
        ParamScalar s = c.substitute(T, ParamScalar::t() / scale);
        const ParamPoly& den = s.den();
        // the denominator must be a pure power of lambda
        if (den.size() != 1 || den.leading().m.exp(T) || den.leading().m.exp(ALPHA))
            throw std::domain_error("identity is not polynomial after rescaling: " + c.str());
        shift = std::max(shift, den.leading().m.exp(LAMBDA));
        sub.push_back(s);
    }
    ParamScalar mult = ParamScalar(ParamPoly::var(LAMBDA, shift));
    unsigned top = 0;
    std::vector<ParamPoly> polys;
    for (auto& s : sub) {
        ParamScalar p = s * mult;
        polys.push_back(p.num());
        if (!p.is_zero()) top = std::max(top, p.num().degree(LAMBDA));
    }
    std::vector<ParamScalar> out;
    for (const auto& p : polys) {
        auto cs = p.coeffs_in(LAMBDA);
        out.push_back(cs.size() > top ? ParamScalar(cs[top]) : ParamScalar());
    }
    return out;
}

}  // namespace lambdalie
