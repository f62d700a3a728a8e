#pragma once
// Operators acting on the truncated Verma module C[u] (or C[x, theta]),
// partial-sum traces and the adjoint decomposition of U_lambda.
#include "lambdalie/catalog.hpp"
#include "lambdalie/poly_sum.hpp"
#include "lambdalie/super_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lambdalie {

// Basis u^k, k < cutoff; in the super case x^k at index 2k and x^k theta at 2k+1.
struct VermaBasis {
    std::size_t cutoff = 0;
    bool super = false;

    std::size_t size() const { return super ? 2 * cutoff : cutoff; }
    Format format() const { return super ? Format::alternating(size()) : Format::even(size()); }
    std::string label(std::size_t i) const;
};

// exact matrix of op on the truncated basis; images above the cutoff are dropped
SuperMatrix act(const SuperOp& op, const VermaBasis& b);

// tr(op; D) = sum over the first D basis levels of the diagonal, as a
// polynomial in D; the super version takes even minus odd diagonal entries.
UPoly bernstein_trace(const SuperOp& op, bool super = false);

struct ModuleCasimir {
    long mu = 0;
    ParamScalar lambda;           // lambda used for the realization
    std::optional<ParamScalar> value;  // set when the element acts as a scalar
    ParamScalar expected;         // the catalog formula at mu
};

// the catalog Casimir element built from action matrices on the truncated module
ModuleCasimir casimir_on_module(const Catalog& cat, const std::string& which, long mu, std::size_t cutoff = 12);

struct Component {
    int m = 0;       // L^m (lowest weight -m)
    bool pi = false;  // parity-shifted, lowest vector odd
    int level = 0;   // first filtration level containing it
    std::string lowest;  // a lowest vector
    std::string str() const;
};

struct Decomposition {
    bool super = false;
    int k_max = 0;
    int weight_cutoff = 0;
    std::vector<std::vector<Component>> new_at_level;  // index = level
    // census[k][w + weight_cutoff] = {even dim, odd dim} of weight w in F_k
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> census;

    Json to_json() const;
};

// F_k = span of products of at most k of the sl(2) (osp(1|2)) basis operators
// at symbolic lambda; lowest vectors are the kernel of ad X- (ad nabla-).
Decomposition decompose(const Catalog& cat, int k_max, int weight_cutoff, bool super);

// expected census from the component pattern L^0 + ... + L^{2k} (even) or
// L^0 + ... + L^{2k} + Pi(L^1 + ... + L^{2k-3}) (super)
std::pair<std::size_t, std::size_t> expected_weight_dim(bool super, int k, int w);

}  // namespace lambdalie
