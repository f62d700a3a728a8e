#include <doctest.h>

#include "lambdalie/catalog.hpp"
#include "lambdalie/verifier.hpp"

#include <set>

using namespace lambdalie;

namespace {

const Catalog& cat() { return Catalog::instance(); }

AlgebraId fam(const std::string& f) {
    AlgebraId id;
    id.family = f;
    return id;
}

std::set<std::string> labels(const std::vector<Relation>& rs) {
    std::set<std::string> out;
    for (const auto& r : rs) out.insert(r.label);
    return out;
}

}  // namespace

TEST_CASE("families and realizations") {
    auto fs = cat().families();
    for (const char* f : {"sl", "o_sp", "o_odd", "sp_even", "osp_super", "sl_super", "osp_alpha_4_2"})
        CHECK(std::find(fs.begin(), fs.end(), f) != fs.end());
    CHECK(cat().realizations("sl") == std::vector<RealizationKind>{RealizationKind::Operator, RealizationKind::Matrix});
    CHECK(cat().realizations("osp_alpha_4_2") == std::vector<RealizationKind>{RealizationKind::Serre});
    CHECK(cat().is_super("osp_super"));
    CHECK_FALSE(cat().is_super("sl"));
    CHECK_THROWS(cat().realizations("nope"));
    CHECK(parse_realization("matrix") == RealizationKind::Matrix);
    CHECK_THROWS(parse_realization("tensor"));
}

TEST_CASE("relation tables carry the expected rows") {
    CHECK(labels(cat().relations("sl")) == std::set<std::string>{"0.1", "0.2", "1.1", "1.2", "1.3", "2.1", "3.1", "3.2", "inf"});
    auto osp = labels(cat().relations("o_sp"));
    CHECK(osp.count("2.2"));
    // sl_super inherits the osp_super rows except the dequantized ones
    auto slsup = cat().relations("sl_super");
    auto l = labels(slsup);
    for (const char* s : {"0.1", "0.4", "0.8", "1.1", "1.4", "1.5", "1.6", "2.3", "2.4"}) CHECK(l.count(s));
    for (const auto& r : slsup) CHECK(r.applies != "dequantized");
}

TEST_CASE("relation tags and expectations") {
    for (const auto& r : cat().relations("o_sp"))
        if (r.label == "2.2" && r.applies == "dequantized") {
            if (r.form == "verbatim") {
                CHECK(r.tag() == "2.2 (dequantized, verbatim)");
                CHECK_FALSE(r.expected_to_hold("o_sp"));
            } else {
                CHECK(r.expected_to_hold("o_sp"));
            }
        }
}

TEST_CASE("variant filter for osp_alpha") {
    AlgebraId a = fam("osp_alpha_4_2");
    a.variant = "a";
    AlgebraId b = a;
    b.variant = "b";
    auto ra = cat().relations(a), rb = cat().relations(b);
    for (const auto& r : ra) CHECK(r.for_variant("a"));
    for (const auto& r : rb) CHECK(r.for_variant("b"));
    CHECK(ra.size() != rb.size());
}

TEST_CASE("algebra id strings") {
    AlgebraId id = fam("sl");
    id.n = 3;
    id.t = ParamScalar(1);
    CHECK(id.str() == "sl(n=3,t=1)");
}

TEST_CASE("operator generators of sl") {
    AlgebraId id = fam("sl");
    id.t = ParamScalar(1);
    GenSet g = cat().generators(id, RealizationKind::Operator);
    REQUIRE(g.has("x"));
    REQUIRE(g.has("y"));
    REQUIRE(g.has("z"));
    // x, y span sl(2): [x, y] is the Cartan element up to scale, and ad x raises the weight of z
    auto wx = weight_and_parity(std::get<SuperOp>(g.at("x")));
    auto wy = weight_and_parity(std::get<SuperOp>(g.at("y")));
    REQUIRE(wx.weight);
    REQUIRE(wy.weight);
    CHECK(*wx.weight == -*wy.weight);
}

TEST_CASE("matrix generators need n at least n_min") {
    AlgebraId id = fam("sl");
    id.n = 3;
    GenSet g = cat().generators(id, RealizationKind::Matrix);
    CHECK(std::get<SuperMatrix>(g.at("x")).format().size() == 3);
    id.n = 1;
    CHECK_THROWS(cat().generators(id, RealizationKind::Matrix));
}

TEST_CASE("verbatim generators differ where the catalog resolved a display") {
    AlgebraId id = fam("o_sp");
    id.t = ParamScalar(1);
    GenSet r = cat().generators(id, RealizationKind::Operator, false);
    GenSet v = cat().generators(id, RealizationKind::Operator, true);
    CHECK(el_str(r.at("z")) != el_str(v.at("z")));
    CHECK(el_is_zero(el_add(r.at("z"), v.at("z"))));
}

TEST_CASE("even Casimir is lambda^2 - 1") {
    CasimirResult c = cat().casimir("sl2");
    CHECK(c.value == eval_scalar("lambda^2 - 1"));
    CHECK(c.shift.empty());
    CHECK(c.matches);
    // centrality, checked directly
    for (const auto& [name, op] : c.basis) CHECK(bracket(c.realized, op).is_zero());
}

TEST_CASE("osp(1|2) Casimir: central element and the printed one") {
    CasimirResult c = cat().casimir("osp12");
    for (const auto& [name, op] : c.basis) CHECK(bracket(c.realized, op).is_zero());
    CHECK(c.value == eval_scalar("lambda^2 + lambda"));
    CHECK(c.shift == "lambda - 1/2");
    CHECK(c.normalized == eval_scalar("lambda^2 - 1/4"));
    REQUIRE(c.verbatim_realized);
    CHECK_FALSE(c.verbatim_scalar);
    // the printed element fails to commute with an odd generator
    CHECK_FALSE(bracket(*c.verbatim_realized, c.basis.at("Nm")).is_zero());
    CHECK_THROWS(cat().casimir("g2"));
}

TEST_CASE("osp(1|2) basis satisfies the osp(1|2) brackets") {
    CasimirResult c = cat().casimir("osp12");
    const auto& b = c.basis;
    CHECK(bracket(b.at("Np"), b.at("Nm")) == b.at("H"));
    CHECK(bracket(b.at("Np"), b.at("Np")) == ParamScalar(2) * b.at("Xp"));
    CHECK(bracket(b.at("Nm"), b.at("Nm")) == ParamScalar(-2) * b.at("Xm"));
    CHECK(bracket(b.at("H"), b.at("Np")) == b.at("Np"));
    CHECK(bracket(b.at("H"), b.at("Nm")) == -b.at("Nm"));
    CHECK(bracket(b.at("Xp"), b.at("Xm")) == b.at("H"));
}

TEST_CASE("catalog from a file path") {
    CHECK_THROWS(Catalog::from_file("/nonexistent/catalog.json"));
    Catalog c = Catalog::embedded();
    CHECK(c.version() == cat().version());
}
