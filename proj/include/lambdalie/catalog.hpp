#pragma once
// Generator sets, relation tables, Casimir elements and exponents, loaded
// from the versioned catalog file.
#include "lambdalie/serre.hpp"
#include "lambdalie/structure.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace lambdalie {

enum class RealizationKind { Operator, Matrix, Serre };

const char* realization_name(RealizationKind k);
RealizationKind parse_realization(const std::string& s);

struct AlgebraId {
    std::string family;
    std::optional<ParamScalar> lambda;  // unset: symbolic
    std::optional<long> n;              // integer size parameter
    std::optional<ParamScalar> alpha;   // unset: symbolic
    std::optional<ParamScalar> t;       // unset: symbolic
    std::string variant;                // a, b or c for osp_alpha_4_2

    std::string str() const;
};

struct GenSet {
    AlgebraId id;
    RealizationKind kind = RealizationKind::Operator;
    std::string title;
    std::string ad_base;
    bool verbatim = false;
    std::vector<std::string> names;  // catalog order
    std::map<std::string, Element> elements;
    ScalarEnv env;  // bindings used when reading relation constants
    std::shared_ptr<const SerreAlgebra> serre;

    const Element& at(const std::string& name) const;
    Element zero() const;
    bool has(const std::string& name) const { return elements.count(name) != 0; }
};

struct Relation {
    std::string family;
    std::string label;
    std::string type;     // 0, 1, 2, 3 or inf
    std::string lhs, rhs;
    std::string applies;  // generic, integer or dequantized
    std::string form;     // verbatim or resolved
    std::string note;
    std::vector<std::string> variants;  // empty: every variant
    bool expect_hold = true;
    std::vector<std::string> expect_fail_in;

    bool expected_to_hold(const std::string& target_family) const;
    bool for_variant(const std::string& v) const;
    // e.g. "2.2 (dequantized, verbatim)"
    std::string tag() const;
};

struct Exponents {
    std::vector<int> even;  // L^m summands
    std::vector<int> odd;   // Pi(L^m) summands
    std::optional<int> two_k2;
};

struct CasimirResult {
    std::string family;
    std::string element;
    SuperOp realized;
    ParamScalar value;       // the realized scalar
    ParamScalar normalized;  // linear term in lambda completed away
    std::string shift;       // lambda substitution giving the normalized form, empty if none
    ParamScalar expected;
    bool matches = false;    // normalized == expected
    // the catalog's alternate (as printed) element, when it has one
    std::string verbatim_element;
    std::optional<SuperOp> verbatim_realized;
    bool verbatim_scalar = false;
    std::string module_value;   // value on L^mu, a formula in mu
    std::string module_lambda;  // lambda in terms of mu
    std::map<std::string, SuperOp> basis;
};

class Catalog {
public:
    explicit Catalog(Json data);
    // LAMBDALIE_CATALOG overrides the embedded file
    static const Catalog& instance();
    static Catalog embedded();
    static Catalog from_file(const std::string& path);

    int version() const;
    const Json& data() const { return data_; }
    std::vector<std::string> families() const;
    bool has_family(const std::string& f) const;
    std::vector<RealizationKind> realizations(const std::string& family) const;
    std::string title(const std::string& family, RealizationKind k) const;
    std::string dequant_family(const std::string& family) const;  // empty when none
    bool is_super(const std::string& family) const;

    GenSet generators(const AlgebraId& id, RealizationKind kind, bool verbatim = false) const;
    // every row of the family, including rows inherited through "include"
    std::vector<Relation> relations(const std::string& family) const;
    // rows that concern this algebra id (variant filter applied)
    std::vector<Relation> relations(const AlgebraId& id) const;
    // rows stored under the family itself, without inheritance
    std::vector<Relation> own_relations(const std::string& family) const;

    CasimirResult casimir(const std::string& which) const;
    Exponents exponents(const std::string& family, long n) const;

    std::shared_ptr<const SerreAlgebra> serre_algebra(const std::string& family,
                                                      const std::optional<ParamScalar>& alpha) const;

private:
    const Json& family_json(const std::string& f) const;
    const Json& realization_json(const std::string& f, RealizationKind k) const;

    Json data_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::string, std::shared_ptr<const SerreAlgebra>> serre_cache_;
};

}  // namespace lambdalie
