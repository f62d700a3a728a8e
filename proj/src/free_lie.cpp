#include "lambdalie/free_lie.hpp"

#include <chrono>
#include <queue>
#include <stdexcept>

namespace lambdalie {

namespace {

std::uint64_t pair_key(int l, int r) { return (std::uint64_t(std::uint32_t(l)) << 32) | std::uint32_t(r); }

void combo_add(std::map<int, mpq_class>& acc, const HallBasis::Combo& c, const mpq_class& f) {
    for (const auto& [id, x] : c) acc[id] += x * f;
}

HallBasis::Combo from_acc(const std::map<int, mpq_class>& acc) {
    HallBasis::Combo out;
    for (const auto& [id, c] : acc)
        if (c != 0) out.emplace_back(id, c);
    return out;
}

}  // namespace

HallBasis::HallBasis(std::vector<std::string> letters, std::vector<int> parities, int cutoff)
    : names_(std::move(letters)), cutoff_(cutoff) {
    if (names_.size() != parities.size()) throw std::invalid_argument("one parity per letter");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");
    by_degree_.resize(std::size_t(cutoff) + 1);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        nodes_.push_back(Node{-1, -1, 1, parities[i] & 1});
        by_degree_[1].push_back(int(i));
    }
    for (int d = 2; d <= cutoff; ++d) {
        for (int a = d - 1; 2 * a >= d; --a) {
            int b = d - a;
            for (int h : by_degree_[std::size_t(a)])
                for (int k : by_degree_[std::size_t(b)]) {
                    const Node& nh = nodes_[std::size_t(h)];
                    bool ok;
                    if (h == k)
                        ok = nh.parity == 1;
                    else
                        ok = less(h, k) && (nh.left < 0 || !less(nh.right, k));
                    if (!ok) continue;
                    if (excluded(h, k)) continue;
                    int id = int(nodes_.size());
                    nodes_.push_back(Node{h, k, d, (nh.parity + nodes_[std::size_t(k)].parity) & 1});
                    by_degree_[std::size_t(d)].push_back(id);
                    index_.emplace(pair_key(h, k), id);
                }
        }
    }
}

int HallBasis::letter(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

bool HallBasis::less(int h, int k) const {
    int dh = nodes_[std::size_t(h)].degree, dk = nodes_[std::size_t(k)].degree;
    return dh != dk ? dh > dk : h < k;
}

std::string HallBasis::str(int id) const {
    const Node& n = nodes_[std::size_t(id)];
    if (n.left < 0) return names_[std::size_t(id)];
    return "[" + str(n.left) + "," + str(n.right) + "]";
}

bool HallBasis::excluded(int h, int k) const {
    const Node& nh = nodes_[std::size_t(h)];
    return nh.left >= 0 && nh.right == k && nodes_[std::size_t(k)].parity == 1;
}

int HallBasis::find(int l, int r) const {
    auto it = index_.find(pair_key(l, r));
    return it == index_.end() ? -1 : it->second;
}

const HallBasis::Combo& HallBasis::bracket(int h, int k) {
    std::uint64_t key = pair_key(h, k);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    const Node& nh = nodes_[std::size_t(h)];
    const Node& nk = nodes_[std::size_t(k)];
    if (nh.degree + nk.degree > cutoff_) throw std::out_of_range("bracket beyond the cutoff");
    Combo out;
    if (h == k) {
        if (nh.parity == 1) {
            int id = find(h, h);
            if (id < 0) throw std::logic_error("missing square tree");
            out.emplace_back(id, 1);
        }
    } else if (less(k, h)) {
        // [h,k] = -(-1)^{|h||k|}[k,h]
        mpq_class s = (nh.parity & nk.parity) ? 1 : -1;
        Combo r = bracket(k, h);
        for (auto& [id, c] : r) c *= s;
        out = std::move(r);
    } else if (excluded(h, k)) {
        // [[u,k],k] = [u,[k,k]]/2 for odd k, and [[k,k],k] = 0
        std::map<int, mpq_class> acc;
        if (nh.left != k)
            for (const auto& [t, c] : Combo(bracket(k, k))) combo_add(acc, Combo(bracket(nh.left, t)), c / 2);
        out = from_acc(acc);
    } else if (nh.left < 0 || !less(nh.right, k)) {
        int id = find(h, k);
        if (id < 0) throw std::logic_error("missing Hall tree " + str(h) + " " + str(k));
        out.emplace_back(id, 1);
    } else {
        // [[u,v],k] = [u,[v,k]] - (-1)^{|u||v|}[v,[u,k]]
        int u = nh.left, v = nh.right;
        mpq_class s = (nodes_[std::size_t(u)].parity & nodes_[std::size_t(v)].parity) ? 1 : -1;
        std::map<int, mpq_class> acc;
        Combo vk = bracket(v, k);
        for (const auto& [t, c] : vk) combo_add(acc, Combo(bracket(u, t)), c);
        Combo uk = bracket(u, k);
        for (const auto& [t, c] : uk) combo_add(acc, Combo(bracket(v, t)), c * s);
        out = from_acc(acc);
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

FreeElem free_bracket(HallBasis& hb, const FreeElem& a, const FreeElem& b, bool* truncated) {
    FreeElem out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            if (hb.node(i).degree + hb.node(j).degree > hb.cutoff()) {
                if (truncated) *truncated = true;
                continue;
            }
            mpq_class f = ci * cj;
            for (const auto& [id, c] : hb.bracket(i, j)) {
                mpq_class& slot = out[id];
                slot += f * c;
                if (slot == 0) out.erase(id);
            }
        }
    return out;
}

Json PresentationReport::to_json() const {
    Json deg = Json::array();
    for (std::size_t d = 1; d < per_degree.size(); ++d)
        deg.push_back(Json{{"degree", d}, {"even", per_degree[d].even}, {"odd", per_degree[d].odd}});
    return Json{{"cutoff", cutoff},
                {"per_degree", deg},
                {"total", total.total()},
                {"superdimension", total.str()},
                {"stabilized", stabilized},
                {"certified", certified},
                {"relation_count", relation_count},
                {"max_relation_degree", max_relation_degree},
                {"hall_size", hall_size},
                {"ideal_rank", ideal_rank},
                {"wall_time", wall_time}};
}

Presentation::Presentation(std::vector<std::string> letters, std::vector<int> parities, std::string ad_base)
    : letters_(std::move(letters)), parities_(std::move(parities)), ad_base_(std::move(ad_base)) {
    if (letters_.size() != parities_.size()) throw std::invalid_argument("one parity per letter");
}

void Presentation::add_relation(const std::string& name, const std::string& text, const ScalarEnv& env) {
    rels_.push_back(FreeRelation{name, text});
    envs_.push_back(env);
}

namespace {

struct FreeCtx {
    HallBasis& hb;
    const std::string& ad_base;
    bool truncated = false;

    FreeElem letter(const std::string& n) {
        int id = hb.letter(n);
        if (id < 0) throw EvalError("unknown letter '" + n + "'");
        return {{id, mpq_class(1)}};
    }
    FreeElem symbol(const std::string& n) {
        if (hb.letter(n) >= 0) return letter(n);
        auto d = split_derived(n);
        if (!d || ad_base.empty() || hb.letter(d->first) < 0) throw EvalError("unknown letter '" + n + "'");
        FreeElem w = letter(ad_base), v = letter(d->first);
        for (int i = 0; i < d->second; ++i) v = bracket(w, v);
        return v;
    }
    FreeElem from_scalar(const ParamScalar& s) {
        if (!s.is_zero()) throw EvalError("scalar term " + s.str() + " in a Lie relation");
        return {};
    }
    FreeElem add(FreeElem a, const FreeElem& b) {
        for (const auto& [k, c] : b) {
            mpq_class& slot = a[k];
            slot += c;
            if (slot == 0) a.erase(k);
        }
        return a;
    }
    FreeElem scale(const ParamScalar& s, FreeElem a) {
        if (!s.is_constant()) throw EvalError("relation coefficient " + s.str() + " is not a number");
        mpq_class q = s.constant_value();
        if (q == 0) return {};
        for (auto& [k, c] : a) c *= q;
        return a;
    }
    FreeElem mul(const FreeElem&, const FreeElem&) { throw EvalError("products are not Lie words"); }
    FreeElem bracket(const FreeElem& a, const FreeElem& b) { return free_bracket(hb, a, b, &truncated); }
};

int top_degree(const HallBasis& hb, const FreeElem& v) {
    int d = 0;
    for (const auto& [k, c] : v) d = std::max(d, hb.node(k).degree);
    return d;
}

}  // namespace

FreeElem Quotient::element(const std::string& text, const ScalarEnv& env) {
    FreeCtx ctx{hb_, p_.ad_base()};
    FreeElem v = eval_in<FreeElem>(parse_expr(text), ctx, env);
    if (ctx.truncated) throw std::invalid_argument("'" + text + "' exceeds the cutoff " + std::to_string(hb_.cutoff()));
    return v;
}

FreeElem Quotient::reduce(FreeElem v) const {
    // pivots are the largest ids; walk down from the top
    auto it = v.rbegin();
    while (it != v.rend()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        int key = it->first;
        mpq_class f = it->second;
        for (const auto& [k, c] : row->second) {
            mpq_class& slot = v[k];
            slot -= f * c;
            if (slot == 0) v.erase(k);
        }
        // continue below the eliminated key
        auto below = v.lower_bound(key);
        it = std::make_reverse_iterator(below);
    }
    return v;
}

bool Quotient::in_ideal(const FreeElem& v) const { return reduce(v).empty(); }

Quotient::Quotient(const Presentation& p, int cutoff) : p_(p), hb_(p.letters(), p.parities(), cutoff) {
    auto t0 = std::chrono::steady_clock::now();
    report_.cutoff = cutoff;
    report_.hall_size = hb_.size();
    report_.relation_count = p.relations().size();

    using Item = std::pair<int, std::size_t>;  // (degree, serial)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    std::vector<FreeElem> pending;
    auto push = [&](FreeElem v) {
        if (v.empty()) return;
        queue.emplace(top_degree(hb_, v), pending.size());
        pending.push_back(std::move(v));
    };
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
        FreeElem v = element(p.relations()[i].text, p.env_of(i));
        report_.max_relation_degree = std::max(report_.max_relation_degree, top_degree(hb_, v));
        push(std::move(v));
    }
    std::vector<FreeElem> letters;
    for (std::size_t i = 0; i < hb_.letters(); ++i) letters.push_back(FreeElem{{int(i), mpq_class(1)}});

    while (!queue.empty()) {
        std::size_t serial = queue.top().second;
        queue.pop();
        FreeElem v = reduce(std::move(pending[serial]));
        pending[serial].clear();
        if (v.empty()) continue;
        int pivot = v.rbegin()->first;
        mpq_class inv = 1 / v.rbegin()->second;
        std::vector<std::pair<int, mpq_class>> row;
        row.reserve(v.size());
        for (auto& [k, c] : v) {
            c *= inv;
            row.emplace_back(k, c);
        }
        rows_.emplace(pivot, std::move(row));
        if (hb_.node(pivot).degree < cutoff)
            for (const auto& g : letters) push(free_bracket(hb_, g, v));
    }

    report_.ideal_rank = rows_.size();
    report_.per_degree.assign(std::size_t(cutoff) + 1, SuperDim{});
    for (int d = 1; d <= cutoff; ++d)
        for (int id : hb_.of_degree(d))
            if (!rows_.count(id)) (hb_.node(id).parity ? report_.per_degree[std::size_t(d)].odd : report_.per_degree[std::size_t(d)].even) += 1;
    int last = 0;
    for (int d = 1; d <= cutoff; ++d) {
        report_.total.even += report_.per_degree[std::size_t(d)].even;
        report_.total.odd += report_.per_degree[std::size_t(d)].odd;
        if (report_.per_degree[std::size_t(d)].total()) last = d;
    }
    report_.stabilized = cutoff - last >= 2;
    report_.certified = last > 0 && cutoff >= 2 * last;
    report_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PresentationReport presentation_quotient(const Presentation& p, int cutoff) { return Quotient(p, cutoff).report(); }

Presentation jacobson_presentation(const Catalog& cat, const std::string& family, long n) {
    AlgebraId id;
    id.family = family;
    id.n = n;
    id.t = ParamScalar(1);
    GenSet g = cat.generators(id, RealizationKind::Matrix);
    std::vector<int> par;
    for (const auto& name : g.names) par.push_back(std::max(0, el_parity(g.at(name))));
    Presentation p(g.names, par, g.ad_base);
    for (const auto& rel : cat.relations(id)) {
        if (rel.applies == "dequantized" || !rel.expected_to_hold(family)) continue;
        p.add_relation(rel.tag(), "(" + rel.lhs + ") - (" + rel.rhs + ")", g.env);
    }
    return p;
}

Presentation serre_presentation(const std::vector<std::vector<mpq_class>>& cartan, const std::vector<int>& parities) {
    const std::size_t r = cartan.size();
    if (parities.size() != r) throw std::invalid_argument("one parity per simple root");
    std::vector<std::string> names;
    std::vector<int> par;
    auto nm = [](const char* s, std::size_t i) { return std::string(s) + std::to_string(i + 1); };
    for (std::size_t i = 0; i < r; ++i) {
        names.push_back(nm("e", i));
        par.push_back(parities[i] & 1);
    }
    for (std::size_t i = 0; i < r; ++i) {
        names.push_back(nm("f", i));
        par.push_back(parities[i] & 1);
    }
    for (std::size_t i = 0; i < r; ++i) {
        names.push_back(nm("h", i));
        par.push_back(0);
    }
    Presentation p(names, par);
    auto q = [](const mpq_class& x) { return "(" + x.get_str() + ")"; };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) p.add_relation("hh", "[" + nm("h", i) + "," + nm("h", j) + "]");
        for (std::size_t j = 0; j < r; ++j) {
            std::string ef = "[" + nm("e", i) + "," + nm("f", j) + "]";
            p.add_relation("ef", i == j ? ef + " - " + nm("h", i) : ef);
            p.add_relation("he", "[" + nm("h", i) + "," + nm("e", j) + "] - " + q(cartan[i][j]) + "*" + nm("e", j));
            p.add_relation("hf", "[" + nm("h", i) + "," + nm("f", j) + "] + " + q(cartan[i][j]) + "*" + nm("f", j));
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (parities[i] & 1) {
            if (cartan[i][i] == 0) {
                p.add_relation("ee", "[" + nm("e", i) + "," + nm("e", i) + "]");
                p.add_relation("ff", "[" + nm("f", i) + "," + nm("f", i) + "]");
            }
            continue;
        }
        if (cartan[i][i] != 2) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            const mpq_class& a = cartan[i][j];
            if (a > 0 || a.get_den() != 1) throw std::invalid_argument("Serre relations need nonpositive integer a_ij");
            long k = 1 - a.get_num().get_si();
            p.add_relation("serre", "ad(" + nm("e", i) + ")^" + std::to_string(k) + "(" + nm("e", j) + ")");
            p.add_relation("serre", "ad(" + nm("f", i) + ")^" + std::to_string(k) + "(" + nm("f", j) + ")");
        }
    }
    return p;
}

}  // namespace lambdalie
