#include "lambdalie/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lambdalie {

const char* var_name(int v) {
    static const char* names[] = {"lambda", "t", "alpha"};
    return names[v];
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Monomial Monomial::from_exps(unsigned el, unsigned et, unsigned ea) {
    std::uint64_t tot = el + et + ea;
    if (tot > 0xffff) throw std::overflow_error("monomial degree overflow");
    return Monomial{(tot << 48) | (std::uint64_t(el) << 32) | (std::uint64_t(et) << 16) | ea};
}

bool Monomial::divides(Monomial o) const {
    for (int v = 0; v < kNumVars; ++v)
        if (exp(v) > o.exp(v)) return false;
    return true;
}

ParamPoly::ParamPoly(long v) {
    if (v != 0) terms_.push_back({Monomial{}, Rational(v)});
}

ParamPoly::ParamPoly(const Rational& q) {
    if (q != 0) terms_.push_back({Monomial{}, q});
    if (!terms_.empty()) terms_[0].c.canonicalize();
}

ParamPoly ParamPoly::var(int v, unsigned power) {
    unsigned e[3] = {0, 0, 0};
    e[v] = power;
    return monomial(Monomial::from_exps(e[0], e[1], e[2]), 1);
}

ParamPoly ParamPoly::monomial(Monomial m, const Rational& c) {
    ParamPoly p;
    if (c != 0) p.terms_.push_back({m, c});
    if (!p.terms_.empty()) p.terms_[0].c.canonicalize();
    return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
    ParamPoly p;
    p.terms_ = std::move(terms);
    for (auto& t : p.terms_) t.c.canonicalize();
    p.canonicalize();
    return p;
}

void ParamPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        Monomial m = terms_[i].m;
        Rational c = terms_[i].c;
        std::size_t j = i + 1;
        for (; j < terms_.size() && terms_[j].m == m; ++j) c += terms_[j].c;
        if (c != 0) {
            terms_[out].m = m;
            terms_[out].c = c;
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

Rational ParamPoly::constant_value() const {
    if (!terms_.empty() && terms_.back().m.key == 0) return terms_.back().c;
    return 0;
}

bool ParamPoly::is_one() const { return terms_.size() == 1 && terms_[0].m.key == 0 && terms_[0].c == 1; }

unsigned ParamPoly::degree(int v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.exp(v));
    return d;
}

unsigned ParamPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().m.total(); }

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

static std::vector<ParamPoly::Term> merge_terms(const std::vector<ParamPoly::Term>& a,
                                                const std::vector<ParamPoly::Term>& b, bool subtract) {
    std::vector<ParamPoly::Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && b[j].m < a[i].m)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || a[i].m < b[j].m) {
            r.push_back({b[j].m, subtract ? Rational(-b[j].c) : b[j].c});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
            if (c != 0) r.push_back({a[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].m.key == 0) return b.scaled(a.terms_[0].c);
    if (b.terms_.size() == 1 && b.terms_[0].m.key == 0) return a.scaled(b.terms_[0].c);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.push_back({x.m * y.m, x.c * y.c});
    r.canonicalize();
    return r;
}

ParamPoly ParamPoly::scaled(const Rational& q) const {
    if (q == 0) return ParamPoly();
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.c *= q;
    return r;
}

ParamPoly ParamPoly::pow(unsigned k) const {
    ParamPoly r(1), base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::optional<ParamPoly> ParamPoly::divide(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    ParamPoly rem = a, quo;
    const Term& lb = b.leading();
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lb.m.divides(lr.m)) return std::nullopt;
        Monomial qm = lr.m / lb.m;
        Rational qc = lr.c / lb.c;
        qterms.push_back({qm, qc});
        rem -= b * monomial(qm, qc);
    }
    quo.terms_ = std::move(qterms);
    quo.canonicalize();
    return quo;
}

std::vector<ParamPoly> ParamPoly::coeffs_in(int v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) {
        unsigned e[3] = {t.m.exp(0), t.m.exp(1), t.m.exp(2)};
        unsigned k = e[v];
        e[v] = 0;
        buckets[k].push_back({Monomial::from_exps(e[0], e[1], e[2]), t.c});
    }
    std::vector<ParamPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

ParamPoly ParamPoly::from_coeffs(int v, const std::vector<ParamPoly>& c) {
    std::vector<Term> all;
    for (std::size_t k = 0; k < c.size(); ++k) {
        unsigned e[3] = {0, 0, 0};
        e[v] = unsigned(k);
        Monomial shift = Monomial::from_exps(e[0], e[1], e[2]);
        for (const auto& t : c[k].terms()) all.push_back({t.m * shift, t.c});
    }
    return from_terms(std::move(all));
}

ParamPoly ParamPoly::substitute(int v, const ParamPoly& value) const {
    auto cs = coeffs_in(v);
    ParamPoly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
}

ParamPoly ParamPoly::derivative(int v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e[3] = {t.m.exp(0), t.m.exp(1), t.m.exp(2)};
        if (e[v] == 0) continue;
        Rational c = t.c * e[v];
        e[v] -= 1;
        out.push_back({Monomial::from_exps(e[0], e[1], e[2]), c});
    }
    return from_terms(std::move(out));
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = t.m.key == 0;
        if (unit || c != 1) {
            os << c.get_str();
            if (!unit) os << "*";
        }
        bool firstv = true;
        for (int v = 0; v < kNumVars; ++v) {
            unsigned e = t.m.exp(v);
            if (!e) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << var_name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::size_t ParamPoly::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& t : terms_) {
        h ^= std::hash<std::uint64_t>()(t.m.key) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>()(t.c.get_str()) + (h << 6) + (h >> 2);
    }
    return h;
}

// ---- gcd -------------------------------------------------------------------

namespace {

ParamPoly make_monic(const ParamPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading().c);
}

int first_var(const ParamPoly& a, const ParamPoly& b) {
    for (int v = 0; v < kNumVars; ++v)
        if (a.has_var(v) || b.has_var(v)) return v;
    return -1;
}

// pseudo-remainder of a by b in variable v
ParamPoly prem(const ParamPoly& a, const ParamPoly& b, int v) {
    auto bc = b.coeffs_in(v);
    unsigned db = unsigned(bc.size() - 1);
    const ParamPoly& lcb = bc.back();
    ParamPoly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        auto rc = r.coeffs_in(v);
        unsigned dr = unsigned(rc.size() - 1);
        ParamPoly shift = rc.back() * ParamPoly::var(v, dr - db);
        r = r * lcb - shift * b;
    }
    return r;
}

// scale to integer coefficients with gcd 1
ParamPoly numeric_primitive(const ParamPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den = 1, num = 0;
    for (const auto& t : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num_mpz_t());
    }
    Rational f(den, num);
    f.canonicalize();
    return p.scaled(f);
}

ParamPoly primitive_part(const ParamPoly& p, int v) {
    ParamPoly c = poly_content(p, v);
    return numeric_primitive(*ParamPoly::divide(p, c));
}

}  // namespace

ParamPoly poly_content(const ParamPoly& p, int v) {
    ParamPoly g;
    for (const auto& c : p.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return ParamPoly(1);
    if (a == b) return make_monic(a);
    // quick exact-division shortcuts
    if (a.size() <= b.size()) {
        if (ParamPoly::divide(b, a)) return make_monic(a);
    } else if (ParamPoly::divide(a, b)) {
        return make_monic(b);
    }
    int v = first_var(a, b);
    if (!a.has_var(v)) return poly_gcd(a, poly_content(b, v));
    if (!b.has_var(v)) return poly_gcd(poly_content(a, v), b);
    ParamPoly ca = poly_content(a, v), cb = poly_content(b, v);
    ParamPoly c = poly_gcd(ca, cb);
    ParamPoly p = numeric_primitive(*ParamPoly::divide(a, ca)), q = numeric_primitive(*ParamPoly::divide(b, cb));
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    while (true) {
        ParamPoly r = prem(p, q, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            q = ParamPoly(1);
            break;
        }
        p = q;
        q = primitive_part(r, v);
    }
    return make_monic(c * q);
}

}  // namespace lambdalie
