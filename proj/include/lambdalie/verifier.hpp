#pragma once
// Bracket-word evaluation, relation residuals, suites and closure dimensions.
#include "lambdalie/catalog.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lambdalie {

// Resolves generator names and derived names (z1, Z_3, ...) in a GenSet:
// base + i means ad(ad_base)^i(base).  Derived names are memoized.
class Evaluator {
public:
    explicit Evaluator(const GenSet& g) : g_(g) {}

    Element symbol(const std::string& name);
    Element from_scalar(const ParamScalar& s);
    Element add(const Element& a, const Element& b) { return el_add(a, b); }
    Element scale(const ParamScalar& s, const Element& a) { return el_scale(s, a); }
    Element mul(const Element& a, const Element& b) { return el_mul(a, b); }
    Element bracket(const Element& a, const Element& b) { return el_bracket(a, b); }

    Element eval(const std::string& text);
    const GenSet& gens() const { return g_; }

private:
    const GenSet& g_;
    std::map<std::string, Element> memo_;
};

// (base, i) when name is base followed by digits, optionally with '_'
std::optional<std::pair<std::string, int>> split_derived(const std::string& name);

Element eval_word(const GenSet& g, const std::string& text);

struct CheckResult {
    std::string algebra;
    std::string realization;
    std::string label;  // Relation::tag()
    std::string status;  // ok, failed, skipped
    std::string residual;  // set when failed
    std::string reason;    // set when skipped
    std::optional<bool> expected_hold;  // unset when no expectation applies
    double wall_time = 0;

    bool unexpected() const { return status == "failed" && expected_hold.value_or(true); }
    Json to_json() const;
};

struct VerifyOptions {
    bool include_expected_failures = false;  // report rows known to fail
    bool verbatim_generators = false;        // use the generator displays as printed
    int jobs = 1;
};

// lhs - rhs evaluated in g
Element relation_residual(const GenSet& g, const Relation& rel);

// evaluate one row; applicability mismatches give "skipped"
CheckResult check_relation(const GenSet& g, const Relation& rel);

// every row of the algebra in the given realization, sorted by label
std::vector<CheckResult> verify_suite(const Catalog& cat, const AlgebraId& id, RealizationKind kind,
                                      const VerifyOptions& opt = {});

Json report_json(const std::vector<CheckResult>& results);
bool any_unexpected(const std::vector<CheckResult>& results);

struct SuperDim {
    std::size_t even = 0, odd = 0;
    std::size_t total() const { return even + odd; }
    std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
    bool operator==(const SuperDim& o) const { return even == o.even && odd == o.odd; }
};

// dimension of the subalgebra generated by the listed elements (all generators when empty)
SuperDim closure_dimension(const GenSet& g, const std::vector<std::string>& names = {});

// smallest k <= max_k with ad(a)^k(b) = 0
std::optional<int> minimal_vanishing_power(const GenSet& g, const std::string& a, const std::string& b, int max_k);

// Formal linear combinations of canonical bracket words over named leaves.
// [A,B] is stored with A <= B as strings, [B,A] = -(-1)^{|A||B|}[A,B],
// and [A,A] vanishes for even A.
using FormalCombo = std::map<std::string, ParamScalar>;
using ParityFn = std::function<int(const std::string&)>;
FormalCombo formal_expand(const std::string& text, const ParityFn& leaf_parity, const ScalarEnv& env = {});
std::string formal_str(const FormalCombo& c);

// parity of generators and derived names in a family's first realization
ParityFn name_parity(const Catalog& cat, const std::string& family);

// Compare the limit of a generic row with its dequantized counterpart at t = 1.
CheckResult check_dequantized(const Catalog& cat, const std::string& family, const Relation& limit_row);

// Shearing rows at symbolic lambda in operators.  The residual is a nonzero
// operator; at lambda = n it lies in the ideal J_n, i.e. it annihilates the
// n-dimensional invariant subspace span{u^k : k < n}.
struct ShearReport {
    bool residual_nonzero = false;
    bool divisible = false;    // every coefficient vanishes at lambda = n
    bool kills_module = false;  // zero on span{u^k : k < n} at lambda = n
    std::string residual;
};
ShearReport shear_at_symbolic_lambda(const Catalog& cat, const std::string& family, long n);

}  // namespace lambdalie
