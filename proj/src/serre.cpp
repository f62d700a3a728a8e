#include "lambdalie/serre.hpp"

#include <stdexcept>

namespace lambdalie {

namespace {

struct Node {
    std::vector<int> root;
    int par = 0;
    int gen = 0;
    long child = -1;
};

// [x_i^{-s}, node]: either a Cartan vector (for generator nodes) or a combination of side-s nodes
struct Opp {
    bool is_h = false;
    std::vector<ParamScalar> h;
    SparseVec v;
};

struct Side {
    int sign;
    std::vector<Node> nodes;
    std::map<std::pair<int, long>, SparseVec> ad_same;  // [x_j^s, node b]
    std::map<std::pair<int, long>, Opp> opp;            // [x_i^{-s}, node b]
};

using Matrix = std::vector<std::vector<ParamScalar>>;

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<ParamScalar>(n)); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix r = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

int sgn(int p) { return (p & 1) ? -1 : 1; }

void build_side(Side& S, const Matrix& A, const std::vector<int>& par, int max_height, std::vector<ParamPoly>& excluded) {
    const int r = int(A.size());
    const int s = S.sign;
    for (int j = 0; j < r; ++j) {
        Node n;
        n.root.assign(r, 0);
        n.root[j] = 1;
        n.par = par[j];
        n.gen = j;
        S.nodes.push_back(n);
        for (int i = 0; i < r; ++i) {
            Opp o;
            o.is_h = true;
            o.h.assign(r, ParamScalar());
            if (i == j) o.h[j] = s == 1 ? ParamScalar(-sgn(par[j])) : ParamScalar(1);
            S.opp[{i, j}] = o;
        }
    }
    std::vector<long> level;
    for (int j = 0; j < r; ++j) level.push_back(j);
    int height = 1;
    while (!level.empty()) {
        if (++height > max_height) throw std::runtime_error("root heights exceed the bound; algebra may be infinite");
        std::map<std::vector<int>, std::vector<std::pair<int, long>>> by_root;
        for (int j = 0; j < r; ++j)
            for (long b : level) {
                std::vector<int> root = S.nodes[b].root;
                root[j] += 1;
                by_root[root].push_back({j, b});
            }
        std::vector<long> next;
        for (auto& [root, cands] : by_root) {
            // images of each candidate [x_j, b] under ad x_i^{-s}
            std::vector<std::vector<SparseVec>> imgs;
            for (auto [j, b] : cands) {
                std::vector<SparseVec> img(r);
                for (int i = 0; i < r; ++i) {
                    SparseVec res;
                    if (i == j) {
                        ParamScalar coef = s == 1 ? ParamScalar(-sgn(par[j])) : ParamScalar(1);
                        ParamScalar w;
                        for (int k = 0; k < r; ++k) w += ParamScalar(S.nodes[b].root[k]) * A[j][k];
                        w = w * ParamScalar(s);
                        if (!w.is_zero()) res[b] += coef * w;
                    }
                    ParamScalar sign(sgn(par[i] * par[j]));
                    const Opp& o = S.opp.at({i, b});
                    if (o.is_h) {
                        ParamScalar w;
                        for (int m = 0; m < r; ++m) w += o.h[m] * A[m][j];
                        w = w * ParamScalar(-s);
                        if (!w.is_zero()) res[j] += sign * w;
                    } else {
                        for (const auto& [bb, cc] : o.v)
                            for (const auto& [b2, c2] : S.ad_same.at({j, long(bb)})) res[b2] += sign * cc * c2;
                    }
                    for (auto it = res.begin(); it != res.end();)
                        it = it->second.is_zero() ? res.erase(it) : std::next(it);
                    img[i] = std::move(res);
                }
                imgs.push_back(std::move(img));
            }
            auto flatten = [&](const std::vector<SparseVec>& img) {
                SparseVec v;
                for (int i = 0; i < r; ++i)
                    for (const auto& [k, c] : img[i]) v[(std::uint64_t(i) << 24) | k] = c;
                return v;
            };
            const std::uint64_t aug = std::uint64_t(1) << 40;
            Echelon ech;
            std::vector<long> chosen_node(cands.size(), -1);
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                SparseVec v = flatten(imgs[ci]);
                SparseVec red = ech.reduce(v);
                auto [j, b] = cands[ci];
                if (red.empty() || red.begin()->first >= aug) {
                    // dependent: express through earlier chosen candidates
                    SparseVec combo;
                    for (const auto& [k, c] : red)
                        if (k >= aug) {
                            long node = chosen_node[k - aug];
                            combo[node] = -c;
                        }
                    S.ad_same[{j, b}] = combo;
                    continue;
                }
                v[aug + ci] = 1;
                ech.insert(v);
                Node n;
                n.root = root;
                n.par = (par[j] + S.nodes[b].par) & 1;
                n.gen = j;
                n.child = b;
                S.nodes.push_back(n);
                long id = long(S.nodes.size()) - 1;
                chosen_node[ci] = id;
                for (int i = 0; i < r; ++i) {
                    Opp o;
                    o.v = imgs[ci][i];
                    S.opp[{i, id}] = o;
                }
                S.ad_same[{j, b}] = SparseVec{{std::uint64_t(id), ParamScalar(1)}};
                next.push_back(id);
            }
            for (const auto& p : ech.excluded()) excluded.push_back(p);
        }
        for (int j = 0; j < r; ++j)
            for (long b : level) S.ad_same.try_emplace({j, b});
        level = next;
    }
}

std::string node_name(const Side& S, long b, char letter) {
    const Node& n = S.nodes[b];
    std::string g = std::string(1, letter) + std::to_string(n.gen + 1);
    if (n.child < 0) return g;
    return "[" + g + "," + node_name(S, n.child, letter) + "]";
}

struct SerreCtx {
    const SerreAlgebra& s;
    AlgVec symbol(const std::string& name) {
        for (std::size_t i = 0; i < s.alg->dim(); ++i)
            if (s.alg->names[i] == name) return s.vec(i);
        throw EvalError("unknown basis element '" + name + "'");
    }
    AlgVec from_scalar(const ParamScalar& c) {
        if (!c.is_zero()) throw EvalError("nonzero scalar in a structure-constant algebra");
        return AlgVec::zero(s.alg);
    }
    AlgVec add(const AlgVec& a, const AlgVec& b) { return a + b; }
    AlgVec scale(const ParamScalar& c, const AlgVec& a) { return c * a; }
    AlgVec mul(const AlgVec&, const AlgVec&) { throw EvalError("products are not defined here"); }
    AlgVec bracket(const AlgVec& a, const AlgVec& b) { return lambdalie::bracket(a, b); }
};

}  // namespace

std::vector<ParamScalar> principal_coefficients(const std::vector<std::vector<ParamScalar>>& cartan,
                                                const std::vector<int>& parities) {
    const std::size_t r = cartan.size();
    bool all_even = true, all_odd = true;
    for (int p : parities) {
        all_even = all_even && p == 0;
        all_odd = all_odd && p == 1;
    }
    if (!all_even && !all_odd) throw std::domain_error("principal embedding needs generators of one parity");
    Matrix at = zero_matrix(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) at[i][j] = cartan[j][i];
    std::vector<ParamScalar> rhs(r, ParamScalar(all_even ? 2 : 1));
    try {
        return solve_linear(at, rhs);
    } catch (const std::domain_error&) {
        throw std::domain_error("Cartan matrix is not invertible; no principal embedding");
    }
}

SerreAlgebra serre_build(const std::vector<std::vector<ParamScalar>>& cartan, const std::vector<int>& parities,
                         int max_height, bool want_principal) {
    const int r = int(cartan.size());
    if (r == 0 || int(parities.size()) != r) throw std::invalid_argument("Cartan matrix and parities disagree");
    for (const auto& row : cartan)
        if (int(row.size()) != r) throw std::invalid_argument("Cartan matrix must be square");

    SerreAlgebra out;
    out.cartan = cartan;
    out.gen_parity = parities;
    Side P{+1, {}, {}, {}}, N{-1, {}, {}, {}};
    build_side(P, cartan, parities, max_height, out.excluded);
    build_side(N, cartan, parities, max_height, out.excluded);

    const std::size_t nP = P.nodes.size(), nN = N.nodes.size();
    const std::size_t dim = nP + r + nN;
    auto idx = [&](int side, long b) { return side == 1 ? std::size_t(b) : nP + r + std::size_t(b); };
    auto hidx = [&](int m) { return nP + std::size_t(m); };

    auto alg = std::make_shared<StructAlgebra>();
    alg->names.resize(dim);
    alg->parity.resize(dim);
    out.roots.assign(dim, std::vector<int>(r, 0));
    for (std::size_t b = 0; b < nP; ++b) {
        alg->names[idx(1, b)] = node_name(P, b, 'e');
        alg->parity[idx(1, b)] = P.nodes[b].par;
        out.roots[idx(1, b)] = P.nodes[b].root;
    }
    for (int m = 0; m < r; ++m) {
        alg->names[hidx(m)] = "h" + std::to_string(m + 1);
        alg->parity[hidx(m)] = 0;
    }
    for (std::size_t b = 0; b < nN; ++b) {
        alg->names[idx(-1, b)] = node_name(N, b, 'f');
        alg->parity[idx(-1, b)] = N.nodes[b].par;
        for (int k = 0; k < r; ++k) out.roots[idx(-1, b)][k] = -N.nodes[b].root[k];
    }

    auto gen_ad = [&](int side, int j) {
        Side& S = side == 1 ? P : N;
        Side& O = side == 1 ? N : P;
        Matrix M = zero_matrix(dim);
        for (std::size_t b = 0; b < S.nodes.size(); ++b) {
            auto it = S.ad_same.find({j, long(b)});
            if (it == S.ad_same.end()) continue;
            for (const auto& [b2, c] : it->second) M[idx(side, long(b2))][idx(side, b)] += c;
        }
        for (int m = 0; m < r; ++m) M[idx(side, j)][hidx(m)] += ParamScalar(-side) * cartan[m][j];
        for (std::size_t b = 0; b < O.nodes.size(); ++b) {
            const Opp& o = O.opp.at({j, long(b)});
            if (o.is_h) {
                for (int m = 0; m < r; ++m) M[hidx(m)][idx(-side, b)] += o.h[m];
            } else {
                for (const auto& [b2, c] : o.v) M[idx(-side, long(b2))][idx(-side, b)] += c;
            }
        }
        return M;
    };

    std::vector<Matrix> ad(dim);
    for (int m = 0; m < r; ++m) {
        Matrix M = zero_matrix(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            ParamScalar w;
            for (int q = 0; q < r; ++q) w += ParamScalar(out.roots[k][q]) * cartan[m][q];
            M[k][k] = w;
        }
        ad[hidx(m)] = std::move(M);
    }
    std::vector<Matrix> ade(r), adf(r);
    for (int j = 0; j < r; ++j) {
        ade[j] = gen_ad(1, j);
        adf[j] = gen_ad(-1, j);
    }
    for (int side : {1, -1}) {
        Side& S = side == 1 ? P : N;
        auto& gens = side == 1 ? ade : adf;
        for (std::size_t b = 0; b < S.nodes.size(); ++b) {
            const Node& n = S.nodes[b];
            if (n.child < 0) {
                ad[idx(side, b)] = gens[n.gen];
                continue;
            }
            const Matrix& g = gens[n.gen];
            const Matrix& c = ad[idx(side, n.child)];
            ParamScalar sign(sgn(parities[n.gen] * S.nodes[n.child].par));
            Matrix gc = mat_mul(g, c), cg = mat_mul(c, g);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < dim; ++k) gc[i][k] -= sign * cg[i][k];
            ad[idx(side, b)] = std::move(gc);
        }
    }

    alg->table.assign(dim, std::vector<std::vector<std::pair<std::size_t, ParamScalar>>>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (!ad[i][k][j].is_zero()) alg->table[i][j].push_back({k, ad[i][k][j]});
    out.alg = alg;
    for (int j = 0; j < r; ++j) {
        out.e.push_back(idx(1, j));
        out.f.push_back(idx(-1, j));
        out.h.push_back(hidx(j));
    }
    if (want_principal) {
        try {
            out.principal = principal_coefficients(cartan, parities);
        } catch (const std::domain_error&) {
            out.principal.reset();
        }
    }
    return out;
}

AlgVec SerreAlgebra::principal_plus() const {
    if (!principal) throw std::domain_error("no principal embedding");
    AlgVec v = AlgVec::zero(alg);
    for (std::size_t i = 0; i < e.size(); ++i) v.c[e[i]] = (*principal)[i];
    return v;
}

AlgVec SerreAlgebra::principal_minus() const {
    AlgVec v = AlgVec::zero(alg);
    for (std::size_t i = 0; i < f.size(); ++i) v.c[f[i]] = 1;
    return v;
}

AlgVec SerreAlgebra::eval(const std::string& text, const ScalarEnv& env) const {
    SerreCtx ctx{*this};
    return eval_in<AlgVec>(parse_expr(text), ctx, env);
}

std::vector<int> principal_spectrum(const SerreAlgebra& s) {
    if (!s.principal) throw std::domain_error("no principal embedding");
    const std::size_t r = s.cartan.size();
    std::map<long, long> mult;
    for (std::size_t k = 0; k < s.alg->dim(); ++k) {
        ParamScalar w;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) w += (*s.principal)[i] * s.cartan[i][j] * ParamScalar(s.roots[k][j]);
        if (!w.is_constant() || w.constant_value().get_den() != 1)
            throw std::domain_error("principal weights are not integers");
        mult[w.constant_value().get_num().get_si()] += 1;
    }
    bool super = s.gen_parity[0] == 1;
    int step = super ? 1 : 2;
    std::vector<int> out;
    for (const auto& [w, m] : mult) {
        if (w < 0) continue;
        long above = mult.count(w + step) ? mult.at(w + step) : 0;
        for (long k = 0; k < m - above; ++k) out.push_back(int(w));
    }
    return out;
}

}  // namespace lambdalie
