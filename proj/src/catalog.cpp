#include "lambdalie/catalog.hpp"

#include "catalog_data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lambdalie {

const char* realization_name(RealizationKind k) {
    switch (k) {
        case RealizationKind::Operator: return "operator";
        case RealizationKind::Matrix: return "matrix";
        case RealizationKind::Serre: return "serre";
    }
    return "?";
}

RealizationKind parse_realization(const std::string& s) {
    if (s == "operator") return RealizationKind::Operator;
    if (s == "matrix") return RealizationKind::Matrix;
    if (s == "serre") return RealizationKind::Serre;
    throw std::invalid_argument("unknown realization '" + s + "' (operator, matrix, serre)");
}

std::string AlgebraId::str() const {
    std::string s = family;
    std::vector<std::string> parts;
    if (n) parts.push_back("n=" + std::to_string(*n));
    if (lambda) parts.push_back("lambda=" + lambda->str());
    if (alpha) parts.push_back("alpha=" + alpha->str());
    if (t) parts.push_back("t=" + t->str());
    if (!variant.empty()) parts.push_back("variant=" + variant);
    if (!parts.empty()) {
        s += "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
        s += ")";
    }
    return s;
}

const Element& GenSet::at(const std::string& name) const {
    auto it = elements.find(name);
    if (it == elements.end()) throw EvalError("no generator '" + name + "' in " + id.str());
    return it->second;
}

Element GenSet::zero() const {
    if (elements.empty()) throw std::logic_error("empty generator set");
    return el_scale(ParamScalar(), elements.begin()->second);
}

bool Relation::expected_to_hold(const std::string& target_family) const {
    if (!expect_hold) return false;
    for (const auto& f : expect_fail_in)
        if (f == target_family) return false;
    return true;
}

bool Relation::for_variant(const std::string& v) const {
    if (variants.empty() || v.empty()) return true;
    for (const auto& x : variants)
        if (x == v) return true;
    return false;
}

std::string Relation::tag() const {
    std::string s = label;
    std::vector<std::string> q;
    if (applies == "dequantized") q.push_back("dequantized");
    if (!form.empty()) q.push_back(form);
    if (variants.size() == 1) q.insert(q.begin(), "variant " + variants[0]);
    if (!q.empty()) {
        s += " (";
        for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + q[i];
        s += ")";
    }
    return s;
}

Catalog::Catalog(Json data) : data_(std::move(data)) {
    if (!data_.contains("version") || !data_.contains("families")) throw std::runtime_error("catalog lacks version or families");
}

Catalog Catalog::embedded() { return Catalog(Json::parse(detail::kCatalogJson)); }

Catalog Catalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path);
    return Catalog(Json::parse(in));
}

const Catalog& Catalog::instance() {
    static const Catalog cat = [] {
        const char* path = std::getenv("LAMBDALIE_CATALOG");
        if (path && *path) return from_file(path);
        return embedded();
    }();
    return cat;
}

int Catalog::version() const { return data_.at("version").get<int>(); }

std::vector<std::string> Catalog::families() const {
    std::vector<std::string> out;
    for (auto it = data_["families"].begin(); it != data_["families"].end(); ++it) out.push_back(it.key());
    return out;
}

bool Catalog::has_family(const std::string& f) const { return data_["families"].contains(f); }

const Json& Catalog::family_json(const std::string& f) const {
    if (!has_family(f)) {
        std::string known;
        for (const auto& k : families()) known += (known.empty() ? "" : ", ") + k;
        throw std::invalid_argument("unknown family '" + f + "' (known: " + known + ")");
    }
    return data_["families"][f];
}

std::vector<RealizationKind> Catalog::realizations(const std::string& family) const {
    std::vector<RealizationKind> out;
    const Json& r = family_json(family)["realizations"];
    for (auto k : {RealizationKind::Operator, RealizationKind::Matrix, RealizationKind::Serre})
        if (r.contains(realization_name(k))) out.push_back(k);
    return out;
}

const Json& Catalog::realization_json(const std::string& f, RealizationKind k) const {
    const Json& fam = family_json(f);
    const Json& r = fam["realizations"];
    if (!r.contains(realization_name(k))) {
        std::string known;
        for (auto x : realizations(f)) known += (known.empty() ? "" : ", ") + std::string(realization_name(x));
        throw std::invalid_argument("family '" + f + "' has no " + realization_name(k) +
                                    " realization (supported: " + known + ")");
    }
    return r[realization_name(k)];
}

std::string Catalog::title(const std::string& family, RealizationKind k) const {
    const Json& r = realization_json(family, k);
    if (r.contains("title")) return r["title"];
    return family_json(family).value("title", family);
}

std::string Catalog::dequant_family(const std::string& family) const {
    return family_json(family).value("dequantize", "");
}

bool Catalog::is_super(const std::string& family) const { return family_json(family).value("super", false); }

namespace {

// a generator entry: a string, {"resolved","verbatim"} or {"variants": {...}}
std::string pick_text(const Json& spec, bool verbatim, const std::string& variant, const std::string& name) {
    if (spec.is_string()) return spec.get<std::string>();
    if (spec.contains("variants")) {
        if (variant.empty()) throw std::invalid_argument("generator '" + name + "' needs a variant");
        if (!spec["variants"].contains(variant))
            throw std::invalid_argument("unknown variant '" + variant + "' for generator '" + name + "'");
        return pick_text(spec["variants"][variant], verbatim, variant, name);
    }
    if (verbatim && spec.contains("verbatim")) return spec["verbatim"];
    if (spec.contains("resolved")) return spec["resolved"];
    throw std::invalid_argument("malformed generator entry '" + name + "'");
}

struct OpCtxNamed {
    const std::map<std::string, SuperOp>& basis;
    SuperOp symbol(const std::string& n) {
        auto it = basis.find(n);
        if (it == basis.end()) throw EvalError("unknown symbol '" + n + "'");
        return it->second;
    }
    SuperOp from_scalar(const ParamScalar& s) { return SuperOp(s); }
    SuperOp add(const SuperOp& a, const SuperOp& b) { return a + b; }
    SuperOp scale(const ParamScalar& s, const SuperOp& a) { return s * a; }
    SuperOp mul(const SuperOp& a, const SuperOp& b) { return a * b; }
    SuperOp bracket(const SuperOp& a, const SuperOp& b) { return lambdalie::bracket(a, b); }
};

SuperMatrix build_matrix(const Json& spec, const Format& fmt, const ScalarEnv& env, bool verbatim, const std::string& name) {
    SuperMatrix m(fmt);
    const long size = long(fmt.size());
    for (const auto& term : spec.at("terms")) {
        std::string var;
        long lo = 0, hi = 0;
        if (term.contains("sum")) {
            var = term["sum"][0];
            lo = eval_integer(parse_expr(term["sum"][1]), env);
            hi = eval_integer(parse_expr(term["sum"][2]), env);
        }
        ExprPtr coef = parse_expr(term.at("coef")), row = parse_expr(term.at("row")), col = parse_expr(term.at("col"));
        for (long i = lo; i <= hi; ++i) {
            ScalarEnv e = env;
            if (!var.empty()) e[var] = ParamScalar(i);
            long r = eval_integer(row, e), c = eval_integer(col, e);
            if (r < 1 || c < 1 || r > size || c > size)
                throw std::out_of_range("matrix unit E(" + std::to_string(r) + "," + std::to_string(c) +
                                        ") outside size " + std::to_string(size) + " in generator " + name);
            m.at(r - 1, c - 1) += eval_scalar(coef, e);
        }
    }
    if (spec.contains("scale")) {
        std::string text = spec["scale"].is_string() ? spec["scale"].get<std::string>()
                                                     : pick_text(spec["scale"], verbatim, "", name);
        m = eval_scalar(text, env) * m;
    }
    return m;
}

Relation parse_relation(const std::string& family, const Json& j) {
    Relation r;
    r.family = family;
    r.label = j.at("label");
    r.type = j.value("type", "");
    r.lhs = j.at("lhs");
    r.rhs = j.at("rhs");
    r.applies = j.value("applies", "generic");
    r.form = j.value("form", "");
    r.note = j.value("note", "");
    if (j.contains("variants")) r.variants = j["variants"].get<std::vector<std::string>>();
    r.expect_hold = j.value("expect", "hold") != "fail";
    if (j.contains("expect_fail_in")) r.expect_fail_in = j["expect_fail_in"].get<std::vector<std::string>>();
    return r;
}

}  // namespace

std::shared_ptr<const SerreAlgebra> Catalog::serre_algebra(const std::string& family,
                                                           const std::optional<ParamScalar>& alpha) const {
    std::string key = family + "|" + (alpha ? alpha->str() : std::string("*"));
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = serre_cache_.find(key);
        if (it != serre_cache_.end()) return it->second;
    }
    const Json& r = realization_json(family, RealizationKind::Serre);
    ScalarEnv env;
    if (alpha) env["alpha"] = *alpha;
    std::vector<std::vector<ParamScalar>> cartan;
    for (const auto& row : r.at("cartan")) {
        std::vector<ParamScalar> v;
        for (const auto& x : row) v.push_back(eval_scalar(x.get<std::string>(), env));
        cartan.push_back(v);
    }
    auto par = r.at("parities").get<std::vector<int>>();
    auto s = std::make_shared<const SerreAlgebra>(serre_build(cartan, par));
    std::lock_guard<std::mutex> lock(cache_mu_);
    return serre_cache_.emplace(key, s).first->second;
}

GenSet Catalog::generators(const AlgebraId& id, RealizationKind kind, bool verbatim) const {
    const Json& fam = family_json(id.family);
    const Json& r = realization_json(id.family, kind);
    GenSet g;
    g.id = id;
    g.kind = kind;
    g.verbatim = verbatim;
    g.title = title(id.family, kind);
    g.ad_base = r.at("ad_base");
    if (id.t) g.env["t"] = *id.t;
    if (id.alpha) g.env["alpha"] = *id.alpha;
    if (fam.contains("variants")) {
        if (id.variant.empty()) throw std::invalid_argument("family '" + id.family + "' needs a variant (a, b or c)");
    } else if (!id.variant.empty()) {
        throw std::invalid_argument("variants apply only to osp_alpha_4_2");
    }
    const Json& gens = r.at("generators");
    for (auto it = gens.begin(); it != gens.end(); ++it) g.names.push_back(it.key());

    if (kind == RealizationKind::Operator) {
        if (id.lambda) g.env["lambda"] = *id.lambda;
        if (id.n) g.env["n"] = ParamScalar(*id.n);
        for (const auto& name : g.names)
            g.elements[name] = parse_op(pick_text(gens[name], verbatim, id.variant, name), g.env);
    } else if (kind == RealizationKind::Matrix) {
        if (!id.n) throw std::invalid_argument(g.title + " needs an integer parameter n");
        long nmin = r.value("n_min", 1);
        if (*id.n < nmin)
            throw std::invalid_argument(g.title + " is catalogued for n >= " + std::to_string(nmin));
        g.env["n"] = ParamScalar(*id.n);
        ParamScalar lam = eval_scalar(r.at("lambda").get<std::string>(), g.env);
        if (id.lambda && *id.lambda != lam)
            throw std::invalid_argument("lambda is fixed to " + lam.str() + " by the matrix realization");
        g.env["lambda"] = lam;
        long size = eval_integer(parse_expr(r.at("size")), g.env);
        std::string f = r.value("format", "even");
        Format fmt = f == "alternating" ? Format::alternating(size) : Format::even(size);
        for (const auto& name : g.names) {
            SuperMatrix m = build_matrix(gens[name], fmt, g.env, verbatim, name);
            if (id.t) m = m.substitute(T, *id.t);
            g.elements[name] = m;
        }
    } else {
        g.serre = serre_algebra(id.family, id.alpha);
        for (const auto& name : g.names) {
            AlgVec v = g.serre->eval(pick_text(gens[name], verbatim, id.variant, name), g.env);
            g.elements[name] = v;
        }
    }
    return g;
}

std::vector<Relation> Catalog::own_relations(const std::string& family) const {
    std::vector<Relation> out;
    for (const auto& j : family_json(family).at("relations")) out.push_back(parse_relation(family, j));
    return out;
}

std::vector<Relation> Catalog::relations(const std::string& family) const {
    std::vector<Relation> out;
    const Json& fam = family_json(family);
    if (fam.contains("include")) {
        for (auto& r : own_relations(fam["include"]))
            if (r.applies != "dequantized") out.push_back(r);
    }
    for (auto& r : own_relations(family)) out.push_back(r);
    return out;
}

std::vector<Relation> Catalog::relations(const AlgebraId& id) const {
    std::vector<Relation> out;
    for (auto& r : relations(id.family))
        if (r.for_variant(id.variant)) out.push_back(r);
    return out;
}

CasimirResult Catalog::casimir(const std::string& which) const {
    const Json& cas = data_.at("casimir");
    if (!cas.contains(which)) throw std::invalid_argument("unknown Casimir family '" + which + "' (sl2, osp12)");
    const Json& c = cas[which];
    CasimirResult out;
    out.family = which;
    out.element = c.at("element");
    for (auto it = c.at("basis").begin(); it != c.at("basis").end(); ++it)
        out.basis[it.key()] = parse_op(it.value().get<std::string>());
    OpCtxNamed ctx{out.basis};
    out.realized = eval_in<SuperOp>(parse_expr(out.element), ctx, ScalarEnv{});
    auto s = out.realized.as_scalar();
    if (!s) throw std::runtime_error("Casimir element is not a scalar: " + out.realized.str(true));
    out.value = *s;
    out.normalized = out.value;
    // complete the square: a l^2 + b l + c  ->  l -> l - b/(2a)
    if (out.value.den().total_degree() == 0) {
        auto cf = out.value.num().coeffs_in(LAMBDA);
        if (cf.size() == 3 && cf[2].total_degree() == 0 && cf[1].total_degree() == 0 && cf[1] != ParamPoly()) {
            Rational d = cf[1].constant_value() / (2 * cf[2].constant_value());
            out.normalized = out.value.substitute(LAMBDA, ParamScalar::lambda() - ParamScalar(d));
            d.canonicalize();
            out.shift = "lambda " + std::string(d > 0 ? "- " : "+ ") + Rational(abs(d)).get_str();
        }
    }
    if (c.contains("element_verbatim")) {
        out.verbatim_element = c["element_verbatim"];
        out.verbatim_realized = eval_in<SuperOp>(parse_expr(out.verbatim_element), ctx, ScalarEnv{});
        out.verbatim_scalar = out.verbatim_realized->as_scalar().has_value();
    }
    out.expected = eval_scalar(c.at("expected").get<std::string>());
    out.module_value = c.value("module_value", "");
    out.module_lambda = c.value("module_lambda", "");
    out.matches = out.normalized == out.expected;
    return out;
}

Exponents Catalog::exponents(const std::string& family, long n) const {
    const Json& fam = family_json(family);
    Exponents e;
    if (fam.contains("two_k2")) e.two_k2 = fam["two_k2"].get<int>();
    if (!fam.contains("exponents")) return e;
    ScalarEnv env{{"n", ParamScalar(n)}};
    auto expand = [&](const Json& j) {
        std::vector<int> v;
        long first = j.at("first"), step = j.at("step");
        long count = eval_integer(parse_expr(j.at("count")), env);
        for (long i = 0; i < count; ++i) v.push_back(int(first + i * step));
        return v;
    };
    const Json& x = fam["exponents"];
    if (x.contains("even")) e.even = expand(x["even"]);
    if (x.contains("odd")) e.odd = expand(x["odd"]);
    return e;
}

}  // namespace lambdalie
