#include "lambdalie/verma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lambdalie {

std::string VermaBasis::label(std::size_t i) const {
    std::size_t k = super ? i / 2 : i;
    bool th = super && (i % 2);
    std::string s = k == 0 ? (th ? "" : "1") : k == 1 ? "x" : "x^" + std::to_string(k);
    if (!super && k > 0) s[0] = 'u';
    if (th) s += s.empty() ? "theta" : "*theta";
    return s;
}

namespace {

// k (k-1) ... (k-a+1) as a polynomial in k
UPoly falling(unsigned a) {
    UPoly p = UPoly::monomial(0);
    for (unsigned i = 0; i < a; ++i) p = p * UPoly(std::vector<ParamScalar>{ParamScalar(-long(i)), ParamScalar(1)});
    return p;
}

Rational falling_at(unsigned long k, unsigned a) {
    Rational r = 1;
    for (unsigned i = 0; i < a; ++i) r *= Rational(long(k) - long(i));
    return r;
}

}  // namespace

SuperMatrix act(const SuperOp& op, const VermaBasis& b) {
    SuperMatrix m(b.format());
    for (const auto& [mono, c] : op.terms()) {
        if (!b.super && (mono.c || mono.d)) throw std::invalid_argument("operator involves theta; use the super basis");
        long band = long(mono.a) - long(mono.b);
        if (std::labs(band) >= long(b.cutoff)) throw std::out_of_range("operator band exceeds the cutoff");
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t k = b.super ? j / 2 : j;
        unsigned e = b.super ? unsigned(j % 2) : 0;
        for (const auto& [mono, c] : op.terms()) {
            unsigned e1 = e;
            if (mono.d) {
                if (!e1) continue;
                e1 = 0;
            }
            if (k < mono.b) continue;
            Rational f = falling_at(k, mono.b);
            std::size_t k1 = k - mono.b;
            if (mono.c) {
                if (e1) continue;
                e1 = 1;
            }
            std::size_t k2 = k1 + mono.a;
            if (k2 >= b.cutoff) continue;
            std::size_t row = b.super ? 2 * k2 + e1 : k2;
            m.at(row, j) += c * ParamScalar(f);
        }
    }
    return m;
}

UPoly bernstein_trace(const SuperOp& op, bool super) {
    UPoly even, odd;
    for (const auto& [mono, c] : op.terms()) {
        if (mono.a != mono.b || mono.c != mono.d) continue;
        if (!super && mono.c) throw std::invalid_argument("operator involves theta; use the super trace");
        UPoly p = UPoly(std::vector<ParamScalar>{c}) * falling(mono.a);
        if (!mono.c) even = even + p;
        odd = odd + p;
    }
    return poly_sum_closed_form(super ? even - odd : even);
}

namespace {

struct MatrixCtx {
    const std::map<std::string, SuperOp>& ops;
    const VermaBasis& basis;
    ParamScalar lambda;

    SuperMatrix symbol(const std::string& n) {
        auto it = ops.find(n);
        if (it == ops.end()) throw EvalError("unknown basis operator '" + n + "'");
        return act(it->second.substitute(LAMBDA, lambda), basis);
    }
    SuperMatrix from_scalar(const ParamScalar& s) { return s * SuperMatrix::identity(basis.format()); }
    SuperMatrix add(const SuperMatrix& a, const SuperMatrix& b) { return a + b; }
    SuperMatrix scale(const ParamScalar& s, const SuperMatrix& a) { return s * a; }
    SuperMatrix mul(const SuperMatrix& a, const SuperMatrix& b) { return a * b; }
    SuperMatrix bracket(const SuperMatrix& a, const SuperMatrix& b) { return lambdalie::bracket(a, b); }
};

}  // namespace

ModuleCasimir casimir_on_module(const Catalog& cat, const std::string& which, long mu, std::size_t cutoff) {
    if (cutoff < 4) throw std::invalid_argument("cutoff must be at least 4");
    CasimirResult c = cat.casimir(which);
    ScalarEnv env{{"mu", ParamScalar(mu)}};
    ModuleCasimir out;
    out.mu = mu;
    out.lambda = eval_scalar(c.module_lambda, env);
    out.expected = eval_scalar(c.module_value, env);
    VermaBasis b{cutoff, c.basis.count("Np") > 0};
    MatrixCtx ctx{c.basis, b, out.lambda};
    SuperMatrix m = eval_in<SuperMatrix>(parse_expr(c.element), ctx, ScalarEnv{});
    // quadratic words raise the level by at most two; columns below are exact
    std::size_t exact = b.super ? 2 * (cutoff - 2) : cutoff - 2;
    ParamScalar v = m.at(0, 0);
    for (std::size_t j = 0; j < exact; ++j)
        for (std::size_t i = 0; i < b.size(); ++i)
            if (m.at(i, j) != (i == j ? v : ParamScalar())) return out;
    out.value = v;
    return out;
}

std::string Component::str() const {
    std::string s = "L^" + std::to_string(m);
    return pi ? "Pi(" + s + ")" : s;
}

Json Decomposition::to_json() const {
    Json levels = Json::array();
    for (std::size_t k = 0; k < new_at_level.size(); ++k) {
        Json comps = Json::array();
        for (const auto& c : new_at_level[k]) comps.push_back(Json{{"component", c.str()}, {"lowest", c.lowest}});
        levels.push_back(Json{{"level", k}, {"new", comps}});
    }
    Json cen = Json::array();
    for (std::size_t k = 0; k < census.size(); ++k)
        for (std::size_t i = 0; i < census[k].size(); ++i) {
            const auto& [e, o] = census[k][i];
            if (e || o) cen.push_back(Json{{"level", k}, {"weight", int(i) - weight_cutoff}, {"even", e}, {"odd", o}});
        }
    return Json{{"super", super}, {"k_max", k_max}, {"weight_cutoff", weight_cutoff}, {"levels", levels}, {"census", cen}};
}

std::pair<std::size_t, std::size_t> expected_weight_dim(bool super, int k, int w) {
    std::size_t n = 0;
    int aw = std::abs(w);
    if (!super) {
        if (w % 2) return {0, 0};
        for (int j = 0; j <= k; ++j) n += aw <= 2 * j;
        return {n, 0};
    }
    for (int j = 0; j <= k; ++j) n += aw <= 2 * j;
    for (int i = 0; 2 * i + 1 <= 2 * k - 3; ++i) n += aw <= 2 * i + 1;
    return aw % 2 ? std::make_pair(std::size_t(0), n) : std::make_pair(n, std::size_t(0));
}

Decomposition decompose(const Catalog& cat, int k_max, int weight_cutoff, bool super) {
    if (k_max < 0 || weight_cutoff < 0) throw std::invalid_argument("level and weight cutoffs must be nonnegative");
    CasimirResult cas = cat.casimir(super ? "osp12" : "sl2");
    std::vector<SuperOp> gens;
    for (const char* n : {"Np", "Nm", "Xp", "Xm", "H"})
        if (cas.basis.count(n)) gens.push_back(cas.basis.at(n));
    const SuperOp& lower = cas.basis.at(super ? "Nm" : "Xm");

    Decomposition d;
    d.super = super;
    d.k_max = k_max;
    d.weight_cutoff = weight_cutoff;
    std::map<int, Echelon> span;
    std::map<int, std::vector<SuperOp>> elems;
    std::map<int, std::size_t> kernel_prev;
    std::vector<SuperOp> frontier{SuperOp(ParamScalar(1))};
    const std::uint64_t tag = std::uint64_t(1) << 60;

    for (int k = 0; k <= k_max; ++k) {
        std::vector<SuperOp> cand;
        if (k == 0)
            cand = frontier;
        else
            for (const auto& e : frontier)
                for (const auto& g : gens) cand.push_back(g * e);
        frontier.clear();
        for (auto& op : cand) {
            if (op.is_zero()) continue;
            auto wp = weight_and_parity(op);
            if (!wp.weight) throw std::logic_error("product of weight vectors is not homogeneous");
            int w = *wp.weight;
            if (span[w].insert(el_coords(op))) {
                elems[w].push_back(op);
                frontier.push_back(op);
            }
        }
        // census
        std::vector<std::pair<std::size_t, std::size_t>> row(std::size_t(2 * weight_cutoff + 1));
        for (const auto& [w, list] : elems)
            if (std::abs(w) <= weight_cutoff) {
                auto& slot = row[std::size_t(w + weight_cutoff)];
                (std::abs(w) % 2 ? slot.second : slot.first) = list.size();
            }
        d.census.push_back(row);
        // lowest vectors: kernel of ad(lower) on each weight space, newest elements pivot first
        std::vector<Component> fresh;
        for (const auto& [w, list] : elems) {
            if (w > 0 || -w > weight_cutoff) continue;
            Echelon ech;
            const std::size_t n = list.size();
            for (std::size_t i = 0; i < n; ++i) {
                SparseVec v = el_coords(Element(bracket(lower, list[i])));
                for (const auto& [key, c] : v)
                    if (key >= tag) throw std::overflow_error("monomial key collides with the kernel tag");
                v.emplace(tag + (n - 1 - i), ParamScalar(1));
                ech.insert(std::move(v));
            }
            std::size_t kernel = 0;
            std::vector<SuperOp> reps;
            auto prev = kernel_prev.find(w);
            // number of elements present before this level
            std::size_t new_count = 0;
            for (const auto& op : frontier) {
                auto wp = weight_and_parity(op);
                if (*wp.weight == w) ++new_count;
            }
            const std::size_t old_n = n - new_count;
            for (const auto& [piv, r] : ech.rows()) {
                if (piv < tag) continue;
                ++kernel;
                std::size_t idx = n - 1 - std::size_t(piv - tag);
                if (idx < old_n) continue;
                SuperOp rep;
                for (const auto& [key, c] : r) rep += c * list[n - 1 - std::size_t(key - tag)];
                if (!rep.is_zero()) rep = (ParamScalar(1) / rep.terms().begin()->second) * rep;
                reps.push_back(rep);
            }
            std::size_t before = prev == kernel_prev.end() ? 0 : prev->second;
            if (kernel < before) throw std::logic_error("kernel shrank along the filtration");
            for (std::size_t i = 0; i < kernel - before; ++i) {
                Component c;
                c.m = -w;
                c.pi = super && (c.m % 2);
                c.level = k;
                if (i < reps.size()) c.lowest = reps[i].str(super);
                fresh.push_back(c);
            }
            kernel_prev[w] = kernel;
        }
        std::sort(fresh.begin(), fresh.end(), [](const Component& a, const Component& b) { return a.m < b.m; });
        d.new_at_level.push_back(fresh);
    }
    return d;
}

}  // namespace lambdalie
