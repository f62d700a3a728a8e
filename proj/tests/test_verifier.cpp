#include <doctest.h>

#include "lambdalie/free_lie.hpp"
#include "lambdalie/verifier.hpp"

#include <set>

using namespace lambdalie;

namespace {

const Catalog& cat() { return Catalog::instance(); }

AlgebraId fam(const std::string& f, std::optional<long> n = std::nullopt) {
    AlgebraId id;
    id.family = f;
    id.n = n;
    return id;
}

std::size_t count_status(const std::vector<CheckResult>& rs, const std::string& s) {
    return std::size_t(std::count_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.status == s; }));
}

std::vector<std::vector<mpq_class>> cartan_a(int r) {
    const std::size_t n = std::size_t(r);
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < r; ++i) {
        a[std::size_t(i)][std::size_t(i)] = 2;
        if (i + 1 < r) a[std::size_t(i)][std::size_t(i + 1)] = a[std::size_t(i + 1)][std::size_t(i)] = -1;
    }
    return a;
}

}  // namespace

TEST_CASE("derived names") {
    CHECK(split_derived("z1") == std::make_pair(std::string("z"), 1));
    CHECK(split_derived("Z_3") == std::make_pair(std::string("Z"), 3));
    CHECK(split_derived("Y12") == std::make_pair(std::string("Y"), 12));
    CHECK_FALSE(split_derived("x"));
    CHECK_FALSE(split_derived("7"));
}

TEST_CASE("derived names are iterated brackets with the ad base") {
    GenSet g = cat().generators(fam("sl"), RealizationKind::Operator);
    const Element& x = g.at(g.ad_base);
    Element z2 = el_bracket(x, el_bracket(x, g.at("z")));
    CHECK(el_is_zero(el_sub(eval_word(g, "z2"), z2)));
    CHECK(el_is_zero(el_sub(eval_word(g, "[z1, y] - [y, z1]"), el_scale(ParamScalar(2), el_bracket(eval_word(g, "z1"), g.at("y"))))));
}

TEST_CASE("operator suites hold identically in lambda and t") {
    for (const char* f : {"sl", "o_sp", "osp_super", "sl_super"}) {
        auto rs = verify_suite(cat(), fam(f), RealizationKind::Operator);
        CAPTURE(f);
        CHECK(count_status(rs, "failed") == 0);
        CHECK(count_status(rs, "ok") >= 8);
        CHECK_FALSE(any_unexpected(rs));
    }
}

TEST_CASE("expected failures are reported but not unexpected") {
    VerifyOptions opt;
    opt.include_expected_failures = true;
    auto rs = verify_suite(cat(), fam("o_sp"), RealizationKind::Operator, opt);
    bool saw = false;
    for (const auto& r : rs)
        if (r.label == "2.2 (dequantized, verbatim)") {
            saw = true;
            CHECK(r.status == "failed");
            CHECK_FALSE(r.unexpected());
        }
    CHECK(saw);
    CHECK_FALSE(any_unexpected(rs));
}

TEST_CASE("a wrong relation is caught") {
    GenSet g = cat().generators(fam("sl"), RealizationKind::Operator);
    Relation r;
    r.family = "sl";
    r.label = "bogus";
    r.type = "1";
    r.lhs = "[y, z]";
    r.rhs = "z";
    r.applies = "generic";
    CheckResult c = check_relation(g, r);
    CHECK(c.status == "failed");
    CHECK(c.unexpected());
    CHECK_FALSE(c.residual.empty());
    Relation bad = r;
    bad.lhs = "[y, nosuch]";
    CHECK(check_relation(g, bad).status == "failed");
}

TEST_CASE("matrix suites at small n") {
    for (auto [f, n] : std::vector<std::pair<std::string, long>>{{"sl", 3}, {"o_odd", 3}, {"sp_even", 3}, {"sl_super", 3}, {"osp_super", 1}}) {
        auto rs = verify_suite(cat(), fam(f, n), RealizationKind::Matrix);
        CAPTURE(f);
        CHECK(count_status(rs, "failed") == 0);
        bool shear = false;
        for (const auto& r : rs) shear = shear || (r.label.rfind("inf", 0) == 0 && r.status == "ok");
        CHECK(shear);
    }
}

TEST_CASE("report schema and canonical order") {
    VerifyOptions opt;
    opt.jobs = 3;
    auto rs = verify_suite(cat(), fam("sl", 4), RealizationKind::Matrix, opt);
    Json j = report_json(rs);
    REQUIRE(j.contains("results"));
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["unexpected_failures"] == 0);
    for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].label <= rs[i].label);
    auto serial = verify_suite(cat(), fam("sl", 4), RealizationKind::Matrix);
    REQUIRE(serial.size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(serial[i].label == rs[i].label);
}

TEST_CASE("closure dimensions") {
    for (long n = 3; n <= 5; ++n)
        CHECK(closure_dimension(cat().generators(fam("sl", n), RealizationKind::Matrix)) == SuperDim{std::size_t(n * n - 1), 0});
    CHECK(closure_dimension(cat().generators(fam("o_odd", 3), RealizationKind::Matrix)) == SuperDim{21, 0});
    CHECK(closure_dimension(cat().generators(fam("sp_even", 3), RealizationKind::Matrix)) == SuperDim{21, 0});
    // sl(3|2): (9 + 4 - 1) | 2*3*2
    CHECK(closure_dimension(cat().generators(fam("sl_super", 2), RealizationKind::Matrix)) == SuperDim{12, 12});
    // osp(3|2): o(3) + sp(2) | 3*2
    CHECK(closure_dimension(cat().generators(fam("osp_super", 1), RealizationKind::Matrix)) == SuperDim{6, 6});
}

TEST_CASE("vanishing powers of ad x on z") {
    CHECK(minimal_vanishing_power(cat().generators(fam("sl"), RealizationKind::Operator), "x", "z", 12) == 5);
    CHECK(minimal_vanishing_power(cat().generators(fam("o_sp"), RealizationKind::Operator), "x", "z", 12) == 7);
    CHECK_FALSE(minimal_vanishing_power(cat().generators(fam("sl"), RealizationKind::Operator), "x", "z", 3));
}

TEST_CASE("formal expansion signs") {
    auto even = [](const std::string&) { return 0; };
    auto odd = [](const std::string&) { return 1; };
    CHECK(formal_expand("[a,b] + [b,a]", even).empty());
    CHECK(formal_expand("[a,a]", even).empty());
    auto c = formal_expand("[b,a]", odd);
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->second == ParamScalar(1));
    CHECK(formal_expand("[a,a]", odd).size() == 1);
    CHECK(formal_expand("2*[b,a] - lambda*[a,b]", even).begin()->second == eval_scalar("-lambda - 2"));
}

TEST_CASE("shearing residuals in operators lie in J_n") {
    for (long n : {3, 4}) {
        ShearReport r = shear_at_symbolic_lambda(cat(), "sl", n);
        CAPTURE(n);
        CHECK(r.residual_nonzero);
        // nonzero at lambda = n, yet zero on the n-dimensional invariant subspace
        CHECK_FALSE(r.divisible);
        CHECK(r.kills_module);
    }
}

// ---- free Lie algebras ----

TEST_CASE("Hall basis dimensions match the Witt formula") {
    HallBasis hb({"a", "b"}, {0, 0}, 6);
    std::vector<std::size_t> witt{0, 2, 1, 2, 3, 6, 9};
    for (int d = 1; d <= 6; ++d) CHECK(hb.of_degree(d).size() == witt[std::size_t(d)]);
    HallBasis three({"a", "b", "c"}, {0, 0, 0}, 4);
    // (1/d) sum mu(d/e) 3^e
    CHECK(three.of_degree(2).size() == 3);
    CHECK(three.of_degree(3).size() == 8);
    CHECK(three.of_degree(4).size() == 18);
}

TEST_CASE("super Hall basis matches the PBW count") {
    HallBasis one({"a"}, {1}, 4);
    CHECK(one.of_degree(1).size() == 1);
    CHECK(one.of_degree(2).size() == 1);
    CHECK(one.of_degree(3).size() == 0);
    // T(V), V = 0|2: 2^d = coefficient of t^d in (1+t)^2 / (1-t^2)^3 (1+t^3)^o3 ...
    HallBasis two({"a", "b"}, {1, 1}, 3);
    CHECK(two.of_degree(2).size() == 3);
    CHECK(two.of_degree(3).size() == 2);
}

TEST_CASE("free brackets satisfy antisymmetry and Jacobi") {
    HallBasis hb({"a", "b", "c"}, {0, 1, 1}, 5);
    std::vector<FreeElem> l;
    for (int i = 0; i < 3; ++i) l.push_back(FreeElem{{i, 1}});
    auto br = [&](const FreeElem& x, const FreeElem& y) { return free_bracket(hb, x, y); };
    auto add = [](FreeElem x, const FreeElem& y, int s) {
        for (const auto& [k, v] : y) {
            x[k] += s * v;
            if (x[k] == 0) x.erase(k);
        }
        return x;
    };
    std::vector<int> par{0, 1, 1};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int s = (par[std::size_t(i)] && par[std::size_t(j)]) ? 1 : -1;
            CHECK(add(br(l[std::size_t(i)], l[std::size_t(j)]), br(l[std::size_t(j)], l[std::size_t(i)]), -s).empty());
            for (int k = 0; k < 3; ++k) {
                // [x,[y,z]] = [[x,y],z] + (-1)^{xy} [y,[x,z]]
                const auto &x = l[std::size_t(i)], &y = l[std::size_t(j)], &z = l[std::size_t(k)];
                int sxy = (par[std::size_t(i)] && par[std::size_t(j)]) ? -1 : 1;
                FreeElem lhs = br(x, br(y, z));
                FreeElem rhs = add(br(br(x, y), z), br(y, br(x, z)), sxy);
                CHECK(add(lhs, rhs, -1).empty());
            }
        }
}

TEST_CASE("Serre presentation of sl(3) gives dimension 8") {
    PresentationReport r = presentation_quotient(serre_presentation(cartan_a(2), {0, 0}), 6);
    CHECK(r.total == SuperDim{8, 0});
    CHECK(r.stabilized);
    CHECK(r.certified);
}

TEST_CASE("odd relation 1.2 with the type-0 rows implies 1.1") {
    auto build = [](bool with_12) {
        Presentation p({"X", "Y", "Z"}, {1, 0, 1}, "X");
        for (const auto& rel : cat().relations("osp_super"))
            if (rel.label == "0.1" || rel.label == "0.2" || rel.label == "0.3" || (with_12 && rel.label == "1.2"))
                p.add_relation(rel.label, "(" + rel.lhs + ") - (" + rel.rhs + ")");
        return p;
    };
    Presentation with = build(true), without = build(false);
    Quotient q(with, 5);
    CHECK(q.in_ideal(q.element("[Y,Z]")));
    Quotient q0(without, 5);
    CHECK_FALSE(q0.in_ideal(q0.element("[Y,Z]")));
    CHECK_THROWS(q.element("ad(X)^9(Z)"));
}
