#include "lambdalie/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace lambdalie {

std::size_t StructAlgebra::count(int p) const {
    std::size_t k = 0;
    for (int q : parity) k += (q == p);
    return k;
}

AlgVec AlgVec::zero(std::shared_ptr<const StructAlgebra> a) {
    AlgVec v;
    v.c.assign(a->dim(), ParamScalar());
    v.alg = std::move(a);
    return v;
}

AlgVec AlgVec::basis(std::shared_ptr<const StructAlgebra> a, std::size_t i) {
    AlgVec v = zero(std::move(a));
    v.c.at(i) = 1;
    return v;
}

bool AlgVec::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

int AlgVec::parity() const {
    int p = 0;
    bool seen = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (seen && alg->parity[i] != p) return -1;
        p = alg->parity[i];
        seen = true;
    }
    return p;
}

std::string AlgVec::str() const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c[i].str() + ")*" + alg->names[i];
    }
    return out.empty() ? "0" : out;
}

static void same_algebra(const AlgVec& a, const AlgVec& b) {
    if (a.alg != b.alg) throw std::invalid_argument("vectors from different algebras");
}

AlgVec operator+(const AlgVec& a, const AlgVec& b) {
    same_algebra(a, b);
    AlgVec r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

AlgVec operator*(const ParamScalar& s, const AlgVec& a) {
    AlgVec r = a;
    for (auto& x : r.c) x = s * x;
    return r;
}

AlgVec bracket(const AlgVec& a, const AlgVec& b) {
    same_algebra(a, b);
    AlgVec r = AlgVec::zero(a.alg);
    const auto& tab = a.alg->table;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            const auto& entry = tab[i][j];
            if (entry.empty()) continue;
            ParamScalar f = a.c[i] * b.c[j];
            for (const auto& [k, s] : entry) r.c[k] += f * s;
        }
    }
    return r;
}

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

template <class Op>
Element binary(const Element& a, const Element& b, Op op, const char* what) {
    if (a.index() != b.index()) throw std::invalid_argument(std::string(what) + " of elements of different kinds");
    return std::visit(
        [&](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            return op(x, std::get<T>(b));
        },
        a);
}

}  // namespace

Element el_add(const Element& a, const Element& b) {
    return binary(a, b, [](const auto& x, const auto& y) -> Element { return x + y; }, "sum");
}

Element el_sub(const Element& a, const Element& b) { return el_add(a, el_scale(ParamScalar(-1), b)); }

Element el_scale(const ParamScalar& s, const Element& a) {
    return std::visit([&](const auto& x) -> Element { return s * x; }, a);
}

Element el_bracket(const Element& a, const Element& b) {
    return binary(a, b, [](const auto& x, const auto& y) -> Element { return bracket(x, y); }, "bracket");
}

Element el_mul(const Element& a, const Element& b) {
    if (std::holds_alternative<AlgVec>(a)) throw std::invalid_argument("no associative product in a structure-constant algebra");
    return binary(
        a, b,
        overloaded{[](const SuperOp& x, const SuperOp& y) -> Element { return x * y; },
                   [](const SuperMatrix& x, const SuperMatrix& y) -> Element { return x * y; },
                   [](const AlgVec& x, const AlgVec&) -> Element { return x; }},
        "product");
}

Element el_scalar_like(const Element& shape, const ParamScalar& s) {
    return std::visit(overloaded{[&](const SuperOp&) -> Element { return SuperOp(s); },
                                 [&](const SuperMatrix& m) -> Element { return s * SuperMatrix::identity(m.format()); },
                                 [&](const AlgVec& v) -> Element {
                                     if (!s.is_zero())
                                         throw std::invalid_argument("scalar " + s.str() + " in a structure-constant algebra");
                                     return AlgVec::zero(v.alg);
                                 }},
                      shape);
}

bool el_is_zero(const Element& a) {
    return std::visit([](const auto& x) { return x.is_zero(); }, a);
}

int el_parity(const Element& a) {
    return std::visit([](const auto& x) { return x.parity(); }, a);
}

std::string el_str(const Element& a, bool super_names) {
    return std::visit(overloaded{[&](const SuperOp& x) { return x.str(super_names); },
                                 [](const SuperMatrix& m) { return m.str(); },
                                 [](const AlgVec& v) { return v.str(); }},
                      a);
}

Json el_to_json(const Element& a) {
    return std::visit(overloaded{[](const SuperOp& x) { return x.to_json(); },
                                 [](const SuperMatrix& m) { return m.to_json(); },
                                 [](const AlgVec& v) {
                                     Json j = Json::object();
                                     for (std::size_t i = 0; i < v.c.size(); ++i)
                                         if (!v.c[i].is_zero()) j[v.alg->names[i]] = scalar_to_json(v.c[i]);
                                     return Json{{"basis", j}};
                                 }},
                      a);
}

Element el_substitute(const Element& a, int var, const ParamScalar& value) {
    return std::visit(overloaded{[&](const SuperOp& x) -> Element { return x.substitute(var, value); },
                                 [&](const SuperMatrix& m) -> Element { return m.substitute(var, value); },
                                 [&](const AlgVec& v) -> Element {
                                     AlgVec r = v;
                                     for (auto& x : r.c) x = x.substitute(var, value);
                                     return r;
                                 }},
                      a);
}

SparseVec el_coords(const Element& a) {
    SparseVec out;
    std::visit(overloaded{[&](const SuperOp& x) {
                              for (const auto& [m, c] : x.terms()) out.emplace(m.key(), c);
                          },
                          [&](const SuperMatrix& m) {
                              const auto& e = m.entries();
                              for (std::size_t i = 0; i < e.size(); ++i)
                                  if (!e[i].is_zero()) out.emplace(i, e[i]);
                          },
                          [&](const AlgVec& v) {
                              for (std::size_t i = 0; i < v.c.size(); ++i)
                                  if (!v.c[i].is_zero()) out.emplace(i, v.c[i]);
                          }},
               a);
    return out;
}

const char* el_kind(const Element& a) {
    static const char* names[] = {"operator", "matrix", "structure"};
    return names[a.index()];
}

SparseVec Echelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        std::uint64_t key = it->first;
        ParamScalar f = it->second;
        for (const auto& [k, c] : row->second) {
            ParamScalar& slot = v[k];
            slot -= f * c;
        }
        for (auto jt = v.lower_bound(key); jt != v.end();) {
            if (jt->second.is_zero())
                jt = v.erase(jt);
            else
                ++jt;
        }
        it = v.upper_bound(key);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto pivot = v.begin();
    ParamScalar inv = ParamScalar(1) / pivot->second;
    if (!pivot->second.num().is_constant()) excluded_.push_back(pivot->second.num());
    for (auto& [k, c] : v) c = c * inv;
    // keep existing rows reduced against the new pivot
    std::uint64_t key = pivot->first;
    for (auto& [pk, row] : rows_) {
        auto hit = row.find(key);
        if (hit == row.end()) continue;
        ParamScalar f = hit->second;
        for (const auto& [k, c] : v) row[k] -= f * c;
        for (auto jt = row.begin(); jt != row.end();) {
            if (jt->second.is_zero())
                jt = row.erase(jt);
            else
                ++jt;
        }
    }
    rows_.emplace(key, std::move(v));
    return true;
}

std::vector<ParamScalar> solve_linear(std::vector<std::vector<ParamScalar>> m, std::vector<ParamScalar> b) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular linear system");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        ParamScalar inv = ParamScalar(1) / m[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            ParamScalar f = m[r][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<ParamScalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
    return x;
}

}  // namespace lambdalie
