// Command line front end: suites, reports and ad-hoc exact computations.
#include "lambdalie/catalog.hpp"
#include "lambdalie/free_lie.hpp"
#include "lambdalie/psdo.hpp"
#include "lambdalie/verifier.hpp"
#include "lambdalie/verma.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

using namespace lambdalie;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct Params {
    std::string algebra;
    std::string realization;
    std::string lambda = "symbolic";
    std::string t = "1";
    std::string alpha = "symbolic";
    std::string variant;
    long n = 0;
    bool include_expected = false;
    bool verbatim = false;
};

std::optional<ParamScalar> param(const std::string& s, const char* what) {
    if (s == "symbolic") return std::nullopt;
    try {
        ParamScalar v = eval_scalar(s);
        if (!v.is_constant()) throw UsageError(std::string(what) + " must be a rational or 'symbolic'");
        return v;
    } catch (const EvalError& e) {
        throw UsageError(std::string("bad value for ") + what + ": " + e.what());
    }
}

const Catalog& catalog() { return Catalog::instance(); }

void require_family(const std::string& f) {
    if (!catalog().has_family(f)) {
        std::string known;
        for (const auto& k : catalog().families()) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("unknown algebra '" + f + "' (known: " + known + ")");
    }
}

AlgebraId make_id(const Params& p) {
    require_family(p.algebra);
    AlgebraId id;
    id.family = p.algebra;
    id.lambda = param(p.lambda, "--lambda");
    id.t = param(p.t, "--t");
    id.alpha = param(p.alpha, "--alpha");
    if (p.n) id.n = p.n;
    id.variant = p.variant;
    return id;
}

RealizationKind pick_realization(const Params& p) {
    auto avail = catalog().realizations(p.algebra);
    if (p.realization.empty()) {
        if (p.n && std::find(avail.begin(), avail.end(), RealizationKind::Matrix) != avail.end()) return RealizationKind::Matrix;
        return avail.front();
    }
    RealizationKind k;
    try {
        k = parse_realization(p.realization);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (std::find(avail.begin(), avail.end(), k) == avail.end())
        throw UsageError("algebra '" + p.algebra + "' has no " + p.realization + " realization");
    return k;
}

void add_params(CLI::App* c, Params& p, bool suite) {
    c->add_option("--algebra,-a", p.algebra, "catalog family")->required();
    c->add_option("--realization,-r", p.realization, "operator, matrix or serre");
    c->add_option("--n", p.n, "integer size parameter (matrix realizations)");
    c->add_option("--lambda", p.lambda, "rational value or 'symbolic'")->capture_default_str();
    c->add_option("--t", p.t, "rational value or 'symbolic'")->capture_default_str();
    c->add_option("--alpha", p.alpha, "rational value or 'symbolic'")->capture_default_str();
    c->add_option("--variant", p.variant, "a, b or c for osp_alpha_4_2");
    c->add_flag("--verbatim", p.verbatim, "use generator displays as printed");
    if (suite) c->add_flag("--include-expected-failures", p.include_expected, "also run rows known to fail");
}

// ---- output ----

struct Out {
    Json json;
    std::string text;
    int status = 0;
};

void emit(const Common& c, const Out& o) {
    std::string body = c.format == "json" ? o.json.dump(2) + "\n" : o.text;
    if (c.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw std::runtime_error("cannot write " + c.output);
    f << body;
}

std::string results_text(const std::vector<CheckResult>& rs) {
    std::ostringstream s;
    std::size_t ok = 0, failed = 0, skipped = 0;
    for (const auto& r : rs) {
        s << r.algebra << "  " << r.realization << "  " << r.label << "  " << r.status;
        if (r.status == "failed") s << (r.unexpected() ? "  UNEXPECTED" : "  (expected)") << "  residual: " << r.residual;
        if (r.status == "skipped") s << "  (" << r.reason << ")";
        s << "\n";
        ok += r.status == "ok";
        failed += r.status == "failed";
        skipped += r.status == "skipped";
    }
    s << "ok " << ok << ", failed " << failed << ", skipped " << skipped << "\n";
    return s.str();
}

Out suite_out(const std::vector<CheckResult>& rs) {
    return Out{report_json(rs), results_text(rs), any_unexpected(rs) ? 1 : 0};
}

// ---- subcommands ----

Out run_verify(const Params& p, const Common& c) {
    AlgebraId id = make_id(p);
    RealizationKind k = pick_realization(p);
    VerifyOptions opt;
    opt.include_expected_failures = p.include_expected;
    opt.verbatim_generators = p.verbatim;
    opt.jobs = c.jobs;
    return suite_out(verify_suite(catalog(), id, k, opt));
}

// every family in every realization at the standard sizes
Out run_verify_all(const Common& c, bool include_expected) {
    struct Job {
        std::string family;
        RealizationKind kind;
        std::optional<long> n;
        std::string variant;
    };
    std::vector<Job> jobs;
    for (const auto& f : catalog().families())
        for (auto k : catalog().realizations(f)) {
            if (k == RealizationKind::Operator) jobs.push_back({f, k, std::nullopt, ""});
            if (k == RealizationKind::Serre)
                for (const char* v : {"a", "b", "c"}) jobs.push_back({f, k, std::nullopt, v});
            if (k == RealizationKind::Matrix) {
                std::vector<long> sizes = f == "sl" ? std::vector<long>{3, 4, 5, 6}
                                          : f == "osp_super" ? std::vector<long>{1, 2}
                                                             : std::vector<long>{3, 4};
                for (long n : sizes) jobs.push_back({f, k, n, ""});
            }
        }
    VerifyOptions opt;
    opt.include_expected_failures = include_expected;
    opt.jobs = c.jobs;
    std::vector<CheckResult> all;
    for (const auto& j : jobs) {
        AlgebraId id;
        id.family = j.family;
        id.n = j.n;
        id.t = ParamScalar(1);
        id.variant = j.variant;
        auto rs = verify_suite(catalog(), id, j.kind, opt);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.algebra, a.realization, a.label) < std::tie(b.algebra, b.realization, b.label);
    });
    return suite_out(all);
}

Out run_gens(const Params& p) {
    AlgebraId id = make_id(p);
    RealizationKind k = pick_realization(p);
    GenSet g = catalog().generators(id, k, p.verbatim);
    bool sup = catalog().is_super(p.algebra);
    Out o;
    Json gens = Json::object();
    std::ostringstream s;
    s << g.title << "  [" << id.str() << ", " << realization_name(k) << "]\n";
    for (const auto& name : g.names) {
        gens[name] = el_to_json(g.at(name));
        s << name << " = " << el_str(g.at(name), sup) << "\n";
    }
    o.json = Json{{"algebra", id.str()}, {"realization", realization_name(k)}, {"title", g.title}, {"generators", gens}};
    o.text = s.str();
    return o;
}

Out run_casimir(const std::string& fam, int mu_count, std::size_t cutoff) {
    CasimirResult r;
    try {
        r = catalog().casimir(fam);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Out o;
    Json mods = Json::array();
    std::ostringstream s;
    s << "element   " << r.element << "\n";
    s << "value     " << r.value.str() << "\n";
    if (!r.shift.empty()) s << "shifted   " << r.normalized.str() << "   (lambda -> " << r.shift << ")\n";
    s << "expected  " << r.expected.str() << "   " << (r.matches ? "match" : "MISMATCH") << "\n";
    if (r.verbatim_realized)
        s << "printed element " << r.verbatim_element << " -> "
          << (r.verbatim_scalar ? "scalar " : "not a scalar: ") << r.verbatim_realized->str(true) << "\n";
    bool mods_ok = true;
    for (long mu = 0; mu < mu_count; ++mu) {
        ModuleCasimir m = casimir_on_module(catalog(), fam, mu, cutoff);
        bool ok = m.value && *m.value == m.expected;
        mods_ok = mods_ok && ok;
        mods.push_back(Json{{"mu", mu},
                            {"lambda", m.lambda.str()},
                            {"value", m.value ? Json(m.value->str()) : Json(nullptr)},
                            {"expected", m.expected.str()},
                            {"match", ok}});
        s << "L^" << mu << "  value " << (m.value ? m.value->str() : "not scalar") << "  expected " << m.expected.str()
          << (ok ? "" : "  MISMATCH") << "\n";
    }
    o.json = Json{{"family", fam},
                  {"element", r.element},
                  {"value", r.value.str()},
                  {"normalized", r.normalized.str()},
                  {"shift", r.shift},
                  {"expected", r.expected.str()},
                  {"match", r.matches},
                  {"modules", mods}};
    if (r.verbatim_realized)
        o.json["printed_element"] = Json{{"element", r.verbatim_element},
                                         {"realized", r.verbatim_realized->str(true)},
                                         {"scalar", r.verbatim_scalar}};
    o.text = s.str();
    o.status = (r.matches && mods_ok) ? 0 : 1;
    return o;
}

Out run_closure(const Params& p) {
    AlgebraId id = make_id(p);
    RealizationKind k = pick_realization(p);
    GenSet g = catalog().generators(id, k, p.verbatim);
    auto t0 = std::chrono::steady_clock::now();
    SuperDim d = closure_dimension(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Out o;
    o.json = Json{{"algebra", id.str()}, {"realization", realization_name(k)}, {"even", d.even}, {"odd", d.odd},
                  {"superdimension", d.str()}, {"wall_time", secs}};
    o.text = d.str() + "\n";
    return o;
}

Out run_present(const std::string& pres, const std::string& fam, long n, int cutoff) {
    if (n < 2) throw UsageError("--n must be at least 2");
    Presentation p = [&] {
        if (pres == "jacobson") {
            require_family(fam);
            return jacobson_presentation(catalog(), fam, n);
        }
        if (fam != "sl") throw UsageError("the Serre presentation is built for sl(n) only");
        std::vector<std::vector<mpq_class>> a(std::size_t(n - 1), std::vector<mpq_class>(std::size_t(n - 1)));
        for (std::size_t i = 0; i + 1 < std::size_t(n); ++i) {
            a[i][i] = 2;
            if (i + 2 < std::size_t(n)) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return serre_presentation(a, std::vector<int>(std::size_t(n - 1), 0));
    }();
    PresentationReport r = presentation_quotient(p, cutoff);
    Out o;
    o.json = r.to_json();
    o.json["presentation"] = pres;
    o.json["algebra"] = fam + "(" + std::to_string(n) + ")";
    std::ostringstream s;
    s << pres << " presentation of " << fam << "(" << n << "), cutoff " << cutoff << "\n";
    for (std::size_t d = 1; d < r.per_degree.size(); ++d) s << "  degree " << d << ": " << r.per_degree[d].str() << "\n";
    s << "total " << r.total.str() << (r.stabilized ? ", stabilized" : ", not stabilized")
      << (r.certified ? ", certified" : "") << "\n";
    o.text = s.str();
    return o;
}

std::vector<std::vector<ParamScalar>> parse_matrix(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("--cartan is not JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError("--cartan must be a square JSON array");
    std::vector<std::vector<ParamScalar>> m;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j.size()) throw UsageError("--cartan must be a square JSON array");
        std::vector<ParamScalar> r;
        for (const auto& x : row) r.push_back(scalar_from_json(x));
        m.push_back(r);
    }
    return m;
}

Out run_serre(const std::string& cartan, const std::string& parities, const std::string& family, const std::string& alpha) {
    std::shared_ptr<const SerreAlgebra> s;
    if (!family.empty()) {
        require_family(family);
        s = catalog().serre_algebra(family, param(alpha, "--alpha"));
    } else {
        if (cartan.empty()) throw UsageError("give --cartan or --family");
        auto a = parse_matrix(cartan);
        std::vector<int> par(a.size(), 0);
        if (!parities.empty()) {
            Json pj = Json::parse(parities);
            if (!pj.is_array() || pj.size() != a.size()) throw UsageError("--parities must list one parity per row");
            par = pj.get<std::vector<int>>();
        }
        s = std::make_shared<SerreAlgebra>(serre_build(a, par));
    }
    const StructAlgebra& alg = *s->alg;
    SuperDim d{alg.count(0), alg.count(1)};
    Out o;
    Json excl = Json::array();
    for (const auto& p : s->excluded) excl.push_back(ParamScalar(p).str());
    o.json = Json{{"dimension", d.total()}, {"superdimension", d.str()}, {"basis", alg.names}, {"excluded", excl}};
    std::ostringstream t;
    t << "superdimension " << d.str() << "\n";
    if (s->principal) {
        Json pc = Json::array();
        for (const auto& c : *s->principal) pc.push_back(c.str());
        o.json["principal"] = pc;
        o.json["spectrum"] = principal_spectrum(*s);
        t << "principal spectrum";
        for (int m : principal_spectrum(*s)) t << " " << m;
        t << "\n";
    }
    if (!excl.empty()) t << "generic away from " << excl.dump() << "\n";
    o.text = t.str();
    return o;
}

SuperOp op_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return SuperOp::from_json(Json::parse(arg));
    auto colon = arg.find(':');
    if (colon != std::string::npos) {
        CasimirResult r = catalog().casimir(arg.substr(0, colon));
        auto it = r.basis.find(arg.substr(colon + 1));
        if (it == r.basis.end()) throw UsageError("no basis operator '" + arg.substr(colon + 1) + "'");
        return it->second;
    }
    return parse_op(arg);
}

Out run_verma(const std::string& op_arg, std::size_t cutoff, bool want_trace, const std::string& at_lambda, bool super) {
    SuperOp op = op_from_arg(op_arg);
    if (auto v = param(at_lambda, "--at-lambda")) op = op.substitute(LAMBDA, *v);
    bool sup = super || weight_and_parity(op).parity != 0 || op.str(true).find("theta") != std::string::npos;
    VermaBasis b{cutoff, sup};
    SuperMatrix m = act(op, b);
    Out o;
    Json labels = Json::array();
    for (std::size_t i = 0; i < b.size(); ++i) labels.push_back(b.label(i));
    o.json = Json{{"operator", op.str(sup)}, {"basis", labels}, {"matrix", m.to_json()}};
    std::ostringstream s;
    s << "basis:";
    for (std::size_t i = 0; i < b.size(); ++i) s << " " << b.label(i);
    s << "\n" << m.str() << "\n";
    if (want_trace) {
        UPoly tr = bernstein_trace(op, sup);
        ParamScalar at = tr.eval(ParamScalar::lambda());
        o.json["trace"] = tr.str();
        o.json["trace_at_D_lambda"] = at.str();
        s << "tr(op; D) = " << tr.str() << "\ntr(op; lambda) = " << at.str() << "\n";
    }
    o.text = s.str();
    return o;
}

Out run_decompose(int k, int w, bool super) {
    Decomposition d = decompose(catalog(), k, w, super);
    Out o;
    o.json = d.to_json();
    bool census_ok = true;
    for (int lvl = 0; lvl <= k; ++lvl)
        for (int x = -w; x <= w; ++x)
            census_ok = census_ok && d.census[std::size_t(lvl)][std::size_t(x + w)] == expected_weight_dim(super, lvl, x);
    o.json["census_matches_pattern"] = census_ok;
    std::ostringstream s;
    for (std::size_t lvl = 0; lvl < d.new_at_level.size(); ++lvl) {
        s << "level " << lvl << ":";
        for (const auto& c : d.new_at_level[lvl]) s << "  " << c.str() << " [" << c.lowest << "]";
        s << "\n";
    }
    s << "weight census " << (census_ok ? "matches" : "DOES NOT match") << " the expected pattern\n";
    o.text = s.str();
    o.status = census_ok ? 0 : 1;
    return o;
}

// symbol JSON, or {"group": {k: laurent}} / {"cotangent": symbol}
PsdoSymbol read_symbol(const Json& j, int depth) {
    if (j.is_object() && j.contains("group")) {
        std::map<int, Laurent> u;
        for (auto it = j["group"].begin(); it != j["group"].end(); ++it)
            u[std::stoi(it.key())] = PsdoSymbol::from_json(Json{{"terms", {{"0", it.value()}}}}).coeff(0);
        return group_element(u, depth);
    }
    if (j.is_object() && j.contains("cotangent")) return cotangent_element(PsdoSymbol::from_json(j["cotangent"]), depth);
    return PsdoSymbol::from_json(j);
}

Json read_input(const std::string& in) {
    std::string text = in;
    if (!in.empty() && in.front() != '{') {
        std::ifstream f(in);
        if (!f) throw UsageError("cannot read " + in);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("--input is not JSON: ") + e.what());
    }
}

Out run_psdo_check(int depth, int count, std::uint64_t seed);

Out run_psdo(const std::string& what, int depth, const std::string& input, std::uint64_t seed, int count) {
    if (depth < 1) throw UsageError("--depth must be positive");
    if (what == "check") return run_psdo_check(depth, count, seed);
    Json in = read_input(input);
    auto sym = [&](const char* key) {
        if (!in.contains(key)) throw UsageError(std::string("input lacks '") + key + "'");
        return read_symbol(in[key], depth);
    };
    Out o;
    if (what == "compose") {
        PsdoSymbol p = sym("P"), q = sym("Q");
        std::optional<int> floor;
        if (p.top() && q.top()) floor = *p.top() + *q.top() + 1 - depth;
        PsdoSymbol r = compose(p, q, floor);
        o.json = r.to_json();
        o.text = r.str() + "\n";
    } else if (what == "trace") {
        ParamScalar t = trace(sym("P"));
        o.json = Json{{"trace", t.str()}};
        o.text = t.str() + "\n";
    } else if (what == "hamiltonian") {
        PsdoSymbol h = hamiltonian(sym("Y"), sym("L"));
        o.json = Json{{"H", h.to_json()}, {"tangent_shape", tangent_shape(h)}};
        o.text = h.str() + "\n";
    } else if (what == "bracket") {
        ParamScalar v = poisson_bracket(sym("X"), sym("Y"), sym("L"));
        o.json = Json{{"bracket", v.str()}};
        o.text = v.str() + "\n";
    } else {
        throw UsageError("psdo action must be compose, trace, hamiltonian, bracket or check");
    }
    return o;
}

Out run_psdo_check(int depth, int count, std::uint64_t seed) {
    PsdoSampler s(seed);
    std::size_t assoc = 0, trace_sym = 0, shape = 0, anti = 0, jac = 0;
    for (int i = 0; i < count; ++i) {
        PsdoSymbol l = s.group(depth);
        PsdoSymbol x = s.cotangent(1, depth), y = s.cotangent(1, depth), z = s.cotangent(1, depth);
        PsdoSymbol a = s.differential(1);
        assoc += (compose(compose(l, x), a).agrees_with(compose(l, compose(x, a))));
        trace_sym += trace(compose(l, x)) == trace(compose(x, l));
        shape += tangent_shape(hamiltonian(y, l));
        anti += (poisson_bracket(x, y, l) + poisson_bracket(y, x, l)).is_zero();
        jac += jacobi_sum(x, y, z, l).is_zero();
    }
    Out o;
    o.json = Json{{"seed", seed}, {"depth", depth}, {"instances", count}, {"associativity", assoc},
                  {"trace_symmetry", trace_sym}, {"tangent_shape", shape}, {"antisymmetry", anti}, {"jacobi", jac}};
    std::ostringstream t;
    t << "associativity " << assoc << "/" << count << "\ntrace symmetry " << trace_sym << "/" << count
      << "\ntangent shape " << shape << "/" << count << "\nantisymmetry " << anti << "/" << count << "\njacobi " << jac
      << "/" << count << "\n";
    o.text = t.str();
    std::size_t n = std::size_t(count);
    o.status = (assoc == n && trace_sym == n && shape == n && anti == n && jac == n) ? 0 : 1;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Jacobson-generator relations for Lie algebras of complex size"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--output,-o", common.output, "write the report here instead of stdout");
    app.add_option("--seed", common.seed, "seed for random instances")->capture_default_str();
    app.add_option("--jobs,-j", common.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    Params vp, gp, cp;
    auto* verify = app.add_subcommand("verify", "check the relation table of one algebra");
    add_params(verify, vp, true);

    bool all_expected = false;
    auto* verify_all = app.add_subcommand("verify-all", "every family at the standard sizes");
    verify_all->add_flag("--include-expected-failures", all_expected);

    auto* gens = app.add_subcommand("gens", "print the generators of a realization");
    add_params(gens, gp, false);

    std::string cas_family;
    int cas_mu = 5;
    std::size_t cas_cutoff = 12;
    auto* cas = app.add_subcommand("casimir", "Casimir scalar in the realization and on L^mu");
    cas->add_option("--family", cas_family, "sl2 or osp12")->required();
    cas->add_option("--mu-count", cas_mu, "check L^0 .. L^(count-1)")->capture_default_str();
    cas->add_option("--cutoff", cas_cutoff, "Verma truncation")->capture_default_str();

    auto* closure = app.add_subcommand("closure-dim", "dimension of the algebra generated by the generators");
    add_params(closure, cp, false);

    std::string pres = "jacobson", pres_alg = "sl";
    long pres_n = 3;
    int pres_cut = 10;
    auto* present = app.add_subcommand("present-dim", "dimension of a truncated finitely presented quotient");
    present->add_option("--presentation", pres, "jacobson or serre")->check(CLI::IsMember({"jacobson", "serre"}))->capture_default_str();
    present->add_option("--algebra,-a", pres_alg, "catalog family")->capture_default_str();
    present->add_option("--n", pres_n, "size")->capture_default_str();
    present->add_option("--cutoff", pres_cut, "degree cutoff")->capture_default_str();

    std::string sb_cartan, sb_par, sb_family, sb_alpha = "symbolic";
    auto* serre = app.add_subcommand("serre-build", "contragredient algebra from a Cartan matrix");
    serre->add_option("--cartan", sb_cartan, "JSON matrix, entries may be formulas in alpha");
    serre->add_option("--parities", sb_par, "JSON list of 0/1");
    serre->add_option("--family", sb_family, "catalog family with a Serre realization");
    serre->add_option("--alpha", sb_alpha)->capture_default_str();

    std::string vm_op, vm_lambda = "symbolic";
    std::size_t vm_cut = 6;
    bool vm_trace = false, vm_super = false;
    auto* verma = app.add_subcommand("verma", "matrix of an operator on the truncated Verma module");
    verma->add_option("--op", vm_op, "formula, operator JSON, or family:name (e.g. sl2:H)")->required();
    verma->add_option("--cutoff", vm_cut, "number of levels")->capture_default_str();
    verma->add_flag("--trace", vm_trace, "Bernstein trace polynomial");
    verma->add_option("--at-lambda", vm_lambda)->capture_default_str();
    verma->add_flag("--super", vm_super, "use the x^k, x^k theta basis");

    int dc_k = 3, dc_w = 6;
    bool dc_super = false;
    auto* dec = app.add_subcommand("decompose", "adjoint decomposition of the filtered U_lambda");
    dec->add_option("--k", dc_k, "filtration level")->capture_default_str();
    dec->add_option("--weights", dc_w, "weight cutoff")->capture_default_str();
    dec->add_flag("--super", dc_super, "osp(1|2) instead of sl(2)");

    std::string ps_what, ps_input;
    int ps_depth = 6, ps_count = 20;
    auto* ps = app.add_subcommand("psdo", "pseudodifferential symbol calculus");
    ps->add_option("action", ps_what, "compose, trace, hamiltonian, bracket or check")->required();
    ps->add_option("--depth", ps_depth, "valid orders")->capture_default_str();
    ps->add_option("--input", ps_input, "JSON file or inline JSON");
    ps->add_option("--count", ps_count, "instances for check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Out o;
        if (*verify) o = run_verify(vp, common);
        else if (*verify_all) o = run_verify_all(common, all_expected);
        else if (*gens) o = run_gens(gp);
        else if (*cas) o = run_casimir(cas_family, cas_mu, cas_cutoff);
        else if (*closure) o = run_closure(cp);
        else if (*present) o = run_present(pres, pres_alg, pres_n, pres_cut);
        else if (*serre) o = run_serre(sb_cartan, sb_par, sb_family, sb_alpha);
        else if (*verma) o = run_verma(vm_op, vm_cut, vm_trace, vm_lambda, vm_super);
        else if (*dec) o = run_decompose(dc_k, dc_w, dc_super);
        else if (*ps) o = run_psdo(ps_what, ps_depth, ps_input, common.seed, ps_count);
        emit(common, o);
        return o.status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
