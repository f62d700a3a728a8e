#include "lambdalie/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <regex>
#include <thread>

namespace lambdalie {

std::optional<std::pair<std::string, int>> split_derived(const std::string& name) {
    static const std::regex re("^([A-Za-z]+?)_?([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    return std::make_pair(m[1].str(), std::stoi(m[2].str()));
}

Element Evaluator::symbol(const std::string& name) {
    if (g_.has(name)) return g_.at(name);
    auto hit = memo_.find(name);
    if (hit != memo_.end()) return hit->second;
    auto d = split_derived(name);
    if (!d || !g_.has(d->first))
        throw EvalError("unresolved name '" + name + "' in " + g_.id.str() + " (" + realization_name(g_.kind) + ")");
    const Element& w = g_.at(g_.ad_base);
    Element v = g_.at(d->first);
    for (int i = 1; i <= d->second; ++i) {
        std::string key = d->first + std::to_string(i);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            v = it->second;
            continue;
        }
        v = el_bracket(w, v);
        memo_.emplace(key, v);
    }
    memo_.emplace(name, v);
    return v;
}

Element Evaluator::from_scalar(const ParamScalar& s) { return el_scalar_like(g_.at(g_.names.front()), s); }

Element Evaluator::eval(const std::string& text) { return eval_in<Element>(parse_expr(text), *this, g_.env); }

Element eval_word(const GenSet& g, const std::string& text) {
    Evaluator ev(g);
    return ev.eval(text);
}

Json CheckResult::to_json() const {
    Json j{{"algebra", algebra}, {"realization", realization}, {"label", label}, {"status", status}};
    if (status == "failed") j["residual"] = residual;
    if (status == "skipped") j["reason"] = reason;
    if (expected_hold) j["expected"] = *expected_hold ? "hold" : "fail";
    j["wall_time"] = wall_time;
    return j;
}

Element relation_residual(const GenSet& g, const Relation& rel) {
    Evaluator ev(g);
    return el_sub(ev.eval(rel.lhs), ev.eval(rel.rhs));
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string truncated(std::string s, std::size_t max = 2000) {
    if (s.size() > max) s = s.substr(0, max) + " ...";
    return s;
}

}  // namespace

CheckResult check_relation(const GenSet& g, const Relation& rel) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.algebra = g.id.str();
    r.realization = realization_name(g.kind);
    r.label = rel.tag();
    if (!g.verbatim) r.expected_hold = rel.expected_to_hold(g.id.family);
    if (rel.applies == "dequantized") {
        r.status = "skipped";
        r.reason = "limit row, compared formally against the generic row";
    } else if (rel.applies == "integer" && g.kind == RealizationKind::Operator) {
        r.status = "skipped";
        r.reason = "shearing rows hold only in integer matrix realizations";
    } else if (!rel.for_variant(g.id.variant)) {
        r.status = "skipped";
        r.reason = "row belongs to another variant";
    } else {
        try {
            Element res = relation_residual(g, rel);
            if (el_is_zero(res)) {
                r.status = "ok";
            } else {
                r.status = "failed";
                r.residual = truncated(el_str(res, true));
            }
        } catch (const std::exception& e) {
            r.status = "failed";
            r.residual = std::string("error: ") + e.what();
        }
    }
    r.wall_time = seconds_since(t0);
    return r;
}

std::vector<CheckResult> verify_suite(const Catalog& cat, const AlgebraId& id, RealizationKind kind,
                                      const VerifyOptions& opt) {
    GenSet g = cat.generators(id, kind, opt.verbatim_generators);
    std::vector<Relation> rows;
    for (auto& rel : cat.relations(id)) {
        if (!opt.include_expected_failures && !rel.expected_to_hold(id.family)) continue;
        if (rel.applies == "dequantized" && kind != RealizationKind::Operator) continue;
        rows.push_back(rel);
    }
    std::vector<CheckResult> out(rows.size());
    auto run = [&](std::size_t i) {
        if (rows[i].applies == "dequantized") {
            out[i] = check_dequantized(cat, id.family, rows[i]);
            out[i].algebra = g.id.str();
        } else {
            out[i] = check_relation(g, rows[i]);
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || rows.size() < 2) {
        for (std::size_t i = 0; i < rows.size(); ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < rows.size();) run(i);
            });
        for (auto& th : pool) th.join();
    }
    std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.algebra, a.label) < std::tie(b.algebra, b.label);
    });
    return out;
}

Json report_json(const std::vector<CheckResult>& results) {
    Json rows = Json::array();
    std::size_t ok = 0, failed = 0, skipped = 0, unexpected = 0;
    for (const auto& r : results) {
        rows.push_back(r.to_json());
        ok += r.status == "ok";
        failed += r.status == "failed";
        skipped += r.status == "skipped";
        unexpected += r.unexpected();
    }
    return Json{{"results", rows},
                {"summary", {{"ok", ok}, {"failed", failed}, {"skipped", skipped}, {"unexpected_failures", unexpected}}}};
}

bool any_unexpected(const std::vector<CheckResult>& results) {
    return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.unexpected(); });
}

SuperDim closure_dimension(const GenSet& g, const std::vector<std::string>& names) {
    std::vector<Element> gens;
    for (const auto& n : names.empty() ? g.names : names) gens.push_back(g.at(n));
    Echelon ech;
    SuperDim d;
    std::vector<Element> frontier;
    auto take = [&](const Element& e) {
        if (el_is_zero(e)) return;
        int p = el_parity(e);
        if (p < 0) throw std::invalid_argument("closure of an inhomogeneous element");
        if (!ech.insert(el_coords(e))) return;
        (p ? d.odd : d.even) += 1;
        frontier.push_back(e);
    };
    for (const auto& e : gens) take(e);
    // left-normed brackets with generators span the generated subalgebra
    for (std::size_t i = 0; i < frontier.size(); ++i)
        for (const auto& a : gens) take(el_bracket(a, frontier[i]));
    return d;
}

std::optional<int> minimal_vanishing_power(const GenSet& g, const std::string& a, const std::string& b, int max_k) {
    Evaluator ev(g);
    Element w = ev.symbol(a), v = ev.symbol(b);
    for (int k = 0; k <= max_k; ++k) {
        if (el_is_zero(v)) return k;
        v = el_bracket(w, v);
    }
    return std::nullopt;
}

namespace {

struct FormalCtx {
    const ParityFn& leaf;
    std::map<std::string, int> parity;

    int par(const std::string& w) {
        auto it = parity.find(w);
        return it != parity.end() ? it->second : leaf(w);
    }
    FormalCombo symbol(const std::string& n) {
        parity[n] = leaf(n);
        return {{n, ParamScalar(1)}};
    }
    FormalCombo from_scalar(const ParamScalar& s) {
        if (!s.is_zero()) throw EvalError("scalar term " + s.str() + " in a bracket identity");
        return {};
    }
    FormalCombo add(FormalCombo a, const FormalCombo& b) {
        for (const auto& [w, c] : b) {
            ParamScalar& slot = a[w];
            slot += c;
            if (slot.is_zero()) a.erase(w);
        }
        return a;
    }
    FormalCombo scale(const ParamScalar& s, FormalCombo a) {
        if (s.is_zero()) return {};
        for (auto& [w, c] : a) c = s * c;
        return a;
    }
    FormalCombo mul(const FormalCombo&, const FormalCombo&) {
        throw EvalError("associative products are not bracket words");
    }
    FormalCombo bracket(const FormalCombo& a, const FormalCombo& b) {
        FormalCombo out;
        for (const auto& [u, cu] : a)
            for (const auto& [v, cv] : b) {
                int pu = par(u), pv = par(v);
                ParamScalar c = cu * cv;
                std::string w;
                if (u == v) {
                    if (pu == 0) continue;
                    w = "[" + u + "," + v + "]";
                } else if (u < v) {
                    w = "[" + u + "," + v + "]";
                } else {
                    w = "[" + v + "," + u + "]";
                    if (!(pu & pv)) c = -c;
                }
                parity[w] = (pu + pv) & 1;
                out = add(std::move(out), FormalCombo{{w, c}});
            }
        return out;
    }
};

}  // namespace

FormalCombo formal_expand(const std::string& text, const ParityFn& leaf_parity, const ScalarEnv& env) {
    FormalCtx ctx{leaf_parity, {}};
    return eval_in<FormalCombo>(parse_expr(text), ctx, env);
}

std::string formal_str(const FormalCombo& c) {
    std::string s;
    for (const auto& [w, x] : c) s += (s.empty() ? "" : " + ") + ("(" + x.str() + ")*" + w);
    return s.empty() ? "0" : s;
}

ParityFn name_parity(const Catalog& cat, const std::string& family) {
    auto kinds = cat.realizations(family);
    if (kinds.empty() || kinds.front() != RealizationKind::Operator)
        throw std::invalid_argument("family '" + family + "' has no operator realization");
    AlgebraId id;
    id.family = family;
    GenSet g = cat.generators(id, RealizationKind::Operator);
    std::map<std::string, int> base;
    for (const auto& n : g.names) base[n] = el_parity(g.at(n));
    int pw = base.at(g.ad_base);
    return [base, pw](const std::string& name) {
        auto it = base.find(name);
        if (it != base.end()) return it->second;
        auto d = split_derived(name);
        if (!d || !base.count(d->first)) throw EvalError("unknown leaf '" + name + "'");
        return (base.at(d->first) + d->second * pw) & 1;
    };
}

CheckResult check_dequantized(const Catalog& cat, const std::string& family, const Relation& limit_row) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.algebra = family;
    r.realization = "formal";
    r.label = limit_row.tag();
    r.expected_hold = limit_row.expected_to_hold(family);
    try {
        const Relation* generic = nullptr;
        auto rows = cat.own_relations(family);
        for (const auto& x : rows)
            if (x.label == limit_row.label && x.applies == "generic" && x.form != "verbatim") {
                generic = &x;
                break;
            }
        if (!generic) throw std::invalid_argument("no generic row " + limit_row.label + " in " + family);
        std::string fam = cat.dequant_family(family);
        DequantFamily df = fam == "sl" ? DequantFamily::SL : fam == "osp" ? DequantFamily::OSP : DequantFamily::SUPER;
        ParityFn par = name_parity(cat, family);
        FormalCombo gen = formal_expand("(" + generic->lhs + ") - (" + generic->rhs + ")", par);
        FormalCombo lim = formal_expand("(" + limit_row.lhs + ") - (" + limit_row.rhs + ")", par, {{"t", ParamScalar(1)}});
        std::vector<std::string> words;
        std::vector<ParamScalar> coeffs;
        for (const auto& [w, c] : gen) {
            words.push_back(w);
            coeffs.push_back(c);
        }
        auto leading = dequantize(coeffs, df);
        FormalCombo limit;
        for (std::size_t i = 0; i < words.size(); ++i) {
            ParamScalar c = leading[i].substitute(T, ParamScalar(1));
            if (!c.is_zero()) limit[words[i]] = c;
        }
        // equal up to a nonzero overall factor
        bool same = !limit.empty() && limit.size() == lim.size();
        if (same) {
            const auto& [w0, c0] = *limit.begin();
            auto it = lim.find(w0);
            same = it != lim.end();
            if (same) {
                ParamScalar f = it->second / c0;
                for (const auto& [w, c] : limit) {
                    auto jt = lim.find(w);
                    if (jt == lim.end() || jt->second != f * c) {
                        same = false;
                        break;
                    }
                }
            }
        }
        if (same) {
            r.status = "ok";
        } else {
            r.status = "failed";
            r.residual = "limit of generic row: " + formal_str(limit) + " = 0; limit row: " + formal_str(lim) + " = 0";
        }
    } catch (const std::exception& e) {
        r.status = "failed";
        r.residual = std::string("error: ") + e.what();
    }
    r.wall_time = seconds_since(t0);
    return r;
}

ShearReport shear_at_symbolic_lambda(const Catalog& cat, const std::string& family, long n) {
    AlgebraId id;
    id.family = family;
    id.n = n;
    id.t = ParamScalar(1);
    GenSet g = cat.generators(id, RealizationKind::Operator);
    const Relation* row = nullptr;
    auto rows = cat.relations(family);
    for (const auto& x : rows)
        if (x.applies == "integer" && x.expected_to_hold(family)) {
            row = &x;
            break;
        }
    if (!row) throw std::invalid_argument("no shearing row for " + family);
    Element res = relation_residual(g, *row);
    ShearReport rep;
    rep.residual_nonzero = !el_is_zero(res);
    Element at_n = el_substitute(res, LAMBDA, ParamScalar(n));
    rep.divisible = el_is_zero(at_n);
    // apply to u^k, k < n, without truncation
    if (const auto* op = std::get_if<SuperOp>(&at_n)) {
        rep.kills_module = true;
        for (long k = 0; k < n && rep.kills_module; ++k) {
            std::map<long, ParamScalar> image;
            for (const auto& [m, c] : op->terms()) {
                if (m.c || m.d || long(m.b) > k) continue;
                Rational f = 1;
                for (unsigned i = 0; i < m.b; ++i) f *= Rational(k - long(i));
                image[k - long(m.b) + long(m.a)] += c * ParamScalar(f);
            }
            for (const auto& [e, c] : image)
                if (!c.is_zero()) rep.kills_module = false;
        }
    }
    rep.residual = truncated(el_str(res, false), 400);
    return rep;
}

}  // namespace lambdalie
