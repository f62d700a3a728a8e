#include "lambdalie/psdo.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambdalie {

// ---- Laurent ----

Laurent Laurent::x_pow(int n, const ParamScalar& c) {
    Laurent l;
    l.add(n, c);
    return l;
}

void Laurent::add(int e, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

ParamScalar Laurent::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? ParamScalar() : it->second;
}

Laurent Laurent::derivative() const {
    Laurent d;
    for (const auto& [e, c] : t_)
        if (e) d.add(e - 1, ParamScalar(long(e)) * c);
    return d;
}

std::optional<int> Laurent::polynomial_degree() const {
    if (t_.empty()) return -1;
    if (t_.begin()->first < 0) return std::nullopt;
    return t_.rbegin()->first;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

Laurent operator+(Laurent a, const Laurent& b) {
    for (const auto& [e, c] : b.t_) a.add(e, c);
    return a;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, c1] : a.t_)
        for (const auto& [e2, c2] : b.t_) r.add(e1 + e2, c1 * c2);
    return r;
}

Laurent operator*(const ParamScalar& s, const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.t_) r.add(e, s * c);
    return r;
}

namespace {

std::string wrap(const std::string& s) {
    bool plain = s.find_first_of("+*/ ") == std::string::npos && s.find('-', 1) == std::string::npos;
    return plain ? s : "(" + s + ")";
}

}  // namespace

std::string Laurent::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string x = e == 0 ? "" : e == 1 ? "x" : "x^" + std::to_string(e);
        std::string cs = c.str();
        std::string term = x.empty() ? cs : cs == "1" ? x : cs == "-1" ? "-" + x : wrap(cs) + "*" + x;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

// ---- symbols ----

PsdoSymbol::PsdoSymbol(int sector, std::optional<int> floor) : sector_(sector), floor_(floor) {
    if (sector < -1 || sector > 1) throw PsdoError("sector must be -1, 0 or +1");
}

PsdoSymbol PsdoSymbol::d_pow(int sector, int k, std::optional<int> floor) {
    PsdoSymbol p(sector, floor);
    p.add(k, Laurent(ParamScalar(1)));
    return p;
}

PsdoSymbol PsdoSymbol::coefficient(const Laurent& f) {
    PsdoSymbol p(0);
    p.add(0, f);
    return p;
}

Laurent PsdoSymbol::coeff(int k) const {
    if (!valid_at(k)) throw PsdoError("offset " + std::to_string(k) + " is below the validity floor");
    auto it = t_.find(k);
    return it == t_.end() ? Laurent() : it->second;
}

std::optional<int> PsdoSymbol::top() const {
    if (!t_.empty()) return t_.rbegin()->first;
    if (floor_) return *floor_ - 1;
    return std::nullopt;
}

void PsdoSymbol::add(int k, const Laurent& c) {
    if (!valid_at(k)) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
}

void PsdoSymbol::prune() {
    for (auto it = t_.begin(); it != t_.end();)
        it = (it->second.is_zero() || !valid_at(it->first)) ? t_.erase(it) : std::next(it);
}

PsdoSymbol PsdoSymbol::truncated(int floor) const {
    PsdoSymbol r = *this;
    r.floor_ = floor_ ? std::max(*floor_, floor) : floor;
    r.prune();
    return r;
}

PsdoSymbol PsdoSymbol::operator-() const {
    PsdoSymbol r(sector_, floor_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

namespace {

std::optional<int> max_floor(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

}  // namespace

PsdoSymbol operator+(const PsdoSymbol& a, const PsdoSymbol& b) {
    if (a.sector_ != b.sector_) throw PsdoError("adding symbols from different sectors");
    PsdoSymbol r(a.sector_, max_floor(a.floor_, b.floor_));
    for (const auto& [k, c] : a.t_) r.add(k, c);
    for (const auto& [k, c] : b.t_) r.add(k, c);
    return r;
}

PsdoSymbol operator*(const ParamScalar& s, const PsdoSymbol& a) {
    PsdoSymbol r(a.sector_, a.floor_);
    for (const auto& [k, c] : a.t_) r.add(k, s * c);
    return r;
}

bool PsdoSymbol::agrees_with(const PsdoSymbol& o) const {
    return (*this - o).is_zero();
}

namespace {

std::string exponent_str(int sector, int k) {
    if (sector == 0) return std::to_string(k);
    std::string s = sector > 0 ? "lambda" : "-lambda";
    if (k > 0) s += "+" + std::to_string(k);
    if (k < 0) s += std::to_string(k);
    return s;
}

}  // namespace

std::string PsdoSymbol::str() const {
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string cs = c.str();
        std::string d = (sector_ == 0 && k == 0) ? "" : "D^(" + exponent_str(sector_, k) + ")";
        std::string term = d.empty() ? cs : cs == "1" ? d : wrap(cs) + "*" + d;
        if (!out.empty()) out += " + ";
        out += term;
    }
    if (out.empty()) out = "0";
    if (floor_) out += " + O(D^(" + exponent_str(sector_, *floor_ - 1) + "))";
    return out;
}

Json PsdoSymbol::to_json() const {
    Json terms = Json::object();
    for (const auto& [k, c] : t_) {
        Json lj = Json::object();
        for (const auto& [e, v] : c.terms()) lj[std::to_string(e)] = scalar_to_json(v);
        terms[std::to_string(k)] = lj;
    }
    return Json{{"sector", sector_}, {"floor", floor_ ? Json(*floor_) : Json(nullptr)}, {"terms", terms}};
}

PsdoSymbol PsdoSymbol::from_json(const Json& j) {
    if (!j.is_object()) throw PsdoError("symbol JSON must be an object");
    std::optional<int> floor;
    if (j.contains("floor") && !j["floor"].is_null()) floor = j["floor"].get<int>();
    PsdoSymbol p(j.value("sector", 0), floor);
    if (j.contains("terms"))
        for (auto it = j["terms"].begin(); it != j["terms"].end(); ++it) {
            Laurent l;
            if (it.value().is_object()) {
                for (auto e = it.value().begin(); e != it.value().end(); ++e) l.add(std::stoi(e.key()), scalar_from_json(e.value()));
            } else {
                l.add(0, scalar_from_json(it.value()));
            }
            p.add(std::stoi(it.key()), l);
        }
    return p;
}

// ---- composition ----

ParamScalar psdo_binomial(int sector, int k, unsigned m) {
    ParamScalar a = ParamScalar(long(sector)) * ParamScalar::lambda() + ParamScalar(long(k));
    ParamScalar r(1);
    for (unsigned i = 0; i < m; ++i) r = r * (a - ParamScalar(long(i))) / ParamScalar(long(i + 1));
    return r;
}

PsdoSymbol compose(const PsdoSymbol& p, const PsdoSymbol& q, std::optional<int> floor) {
    int s = p.sector() + q.sector();
    if (s < -1 || s > 1) throw PsdoError("composition leaves the sectors -1, 0, +1");
    // unknown tails: P below its floor meets all of Q and vice versa
    std::optional<int> f = floor;
    if (p.floor() && q.top()) f = max_floor(f, *p.floor() + *q.top());
    if (q.floor() && p.top()) f = max_floor(f, *q.floor() + *p.top());
    PsdoSymbol r(s, f);
    for (const auto& [i, pc] : p.terms())
        for (const auto& [j, qc] : q.terms()) {
            bool terminates = (p.sector() == 0 && i >= 0) || qc.polynomial_degree().has_value();
            if (!terminates && !f) throw PsdoError("non-terminating expansion needs a truncation floor");
            Laurent deriv = qc;
            for (unsigned m = 0;; ++m) {
                int off = i + j - int(m);
                if (f && off < *f) break;
                if (deriv.is_zero()) break;
                ParamScalar b = psdo_binomial(p.sector(), i, m);
                if (b.is_zero() && p.sector() == 0 && i >= 0) break;
                if (!b.is_zero()) r.add(off, b * (pc * deriv));
                deriv = deriv.derivative();
            }
        }
    return r;
}

std::pair<PsdoSymbol, PsdoSymbol> split(const PsdoSymbol& p) {
    if (p.sector() != 0) throw PsdoError("split needs a sector-0 symbol");
    if (!p.valid_at(0)) throw PsdoError("differential part is not known: symbol truncated above D^0");
    PsdoSymbol plus(0), minus(0, p.floor());
    for (const auto& [k, c] : p.terms()) (k >= 0 ? plus : minus).add(k, c);
    return {plus, minus};
}

ParamScalar trace(const PsdoSymbol& p) {
    if (p.sector() != 0) throw PsdoError("trace needs a sector-0 symbol");
    if (!p.valid_at(-1)) throw PsdoError("trace needs the D^-1 coefficient; increase the depth");
    return p.coeff(-1).residue();
}

ParamScalar pairing(const PsdoSymbol& x, const PsdoSymbol& l) {
    if (x.sector() != -1 || l.sector() != 1) throw PsdoError("pairing needs X in sector -1 and L in sector +1");
    return trace(compose(l, x));
}

PsdoSymbol hamiltonian(const PsdoSymbol& y, const PsdoSymbol& l) {
    if (y.sector() != -1 || l.sector() != 1) throw PsdoError("hamiltonian needs Y in sector -1 and L in sector +1");
    PsdoSymbol ly = split(compose(l, y)).first;
    PsdoSymbol yl = split(compose(y, l)).first;
    return compose(ly, l) - compose(l, yl);
}

bool tangent_shape(const PsdoSymbol& h) {
    if (h.sector() != 1) return false;
    return h.terms().empty() || h.terms().rbegin()->first < 0;
}

ParamScalar poisson_bracket(const PsdoSymbol& x, const PsdoSymbol& y, const PsdoSymbol& l) {
    return pairing(x, hamiltonian(y, l));
}

PsdoSymbol bracket_gradient(const PsdoSymbol& y, const PsdoSymbol& z, const PsdoSymbol& l) {
    // d/de Tr(H_Z(L + eV) Y) = Tr(V W), using Tr(A_+ B) = Tr(A B_-) and cyclicity
    PsdoSymbol ly_m = split(compose(l, y)).second;
    PsdoSymbol lz_p = split(compose(l, z)).first;
    PsdoSymbol zl_p = split(compose(z, l)).first;
    PsdoSymbol yl_m = split(compose(y, l)).second;
    return compose(z, ly_m) + compose(y, lz_p) - compose(zl_p, y) - compose(yl_m, z);
}

ParamScalar jacobi_sum(const PsdoSymbol& x, const PsdoSymbol& y, const PsdoSymbol& z, const PsdoSymbol& l) {
    auto term = [&](const PsdoSymbol& a, const PsdoSymbol& b, const PsdoSymbol& c) {
        return pairing(a, hamiltonian(bracket_gradient(b, c, l), l));
    };
    return term(x, y, z) + term(y, z, x) + term(z, x, y);
}

PsdoSymbol group_element(const std::map<int, Laurent>& u, int depth) {
    if (depth < 1) throw PsdoError("depth must be positive");
    PsdoSymbol inner(0);
    inner.add(0, Laurent(ParamScalar(1)));
    for (const auto& [k, c] : u) {
        if (k < 1) throw PsdoError("group coordinates u_k need k >= 1");
        inner.add(-k, c);
    }
    return compose(PsdoSymbol::d_pow(1, 0), inner, 1 - depth);
}

PsdoSymbol cotangent_element(const PsdoSymbol& diff_op, int depth) {
    if (diff_op.sector() != 0 || !diff_op.exact()) throw PsdoError("cotangent elements are D^-lambda o (exact differential operator)");
    if (!diff_op.terms().empty() && diff_op.terms().begin()->first < 0) throw PsdoError("not a differential operator");
    if (depth < 1) throw PsdoError("depth must be positive");
    int top = diff_op.top().value_or(0);
    return compose(PsdoSymbol::d_pow(-1, 0), diff_op, top + 1 - depth);
}

PsdoSymbol psdo_adjoint(const PsdoSymbol& p) {
    if (p.sector() != 0) throw PsdoError("adjoint is modeled on sector 0 only");
    PsdoSymbol r(0, p.floor());
    for (const auto& [i, c] : p.terms()) {
        PsdoSymbol t = compose(PsdoSymbol::d_pow(0, i), PsdoSymbol::coefficient(c), p.floor());
        r = r + ((i % 2) ? -t : t);
    }
    return r;
}

ParamScalar super_residue(const SuperPsdoSymbol& p) {
    if (!p.even.valid_at(-1) || !p.odd.valid_at(-1)) throw PsdoError("residue needs the D^-1 term; increase the depth");
    return trace(p.odd);
}

SuperPsdoSymbol psdo_adjoint(const SuperPsdoSymbol& p) {
    return {psdo_adjoint(p.even), psdo_adjoint(p.odd)};
}

// ---- sampling ----

Laurent PsdoSampler::laurent(int max_terms) {
    std::uniform_int_distribution<int> n(1, max_terms), e(-x_degree, x_degree), c(-coeff_range, coeff_range);
    Laurent l;
    int k = n(rng);
    for (int i = 0; i < k; ++i) {
        int v = 0;
        while (!v) v = c(rng);
        l.add(e(rng), ParamScalar(long(v)));
    }
    return l;
}

PsdoSymbol PsdoSampler::differential(int order) {
    PsdoSymbol p(0);
    std::uniform_int_distribution<int> c(-coeff_range, coeff_range), ex(0, x_degree);
    for (int k = 0; k <= order; ++k) {
        // nonnegative x-powers keep the top coefficient honest
        Laurent l = k == order ? Laurent::x_pow(ex(rng), ParamScalar(long(std::max(1, std::abs(c(rng)))))) : laurent();
        p.add(k, l);
    }
    return p;
}

PsdoSymbol PsdoSampler::group(int depth) {
    std::map<int, Laurent> u;
    for (int k = 1; k < depth; ++k) u[k] = laurent();
    return group_element(u, depth);
}

PsdoSymbol PsdoSampler::cotangent(int order, int depth) {
    return cotangent_element(differential(order), depth);
}

}  // namespace lambdalie
