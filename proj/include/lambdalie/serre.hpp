#pragma once
// Contragredient Lie (super)algebras from a Cartan matrix.
#include "lambdalie/structure.hpp"

#include <optional>

namespace lambdalie {

struct SerreAlgebra {
    std::shared_ptr<const StructAlgebra> alg;
    std::vector<std::vector<ParamScalar>> cartan;
    std::vector<int> gen_parity;
    std::vector<std::size_t> e, f, h;  // basis indices of Chevalley generators
    std::vector<std::vector<int>> roots;  // root of each basis vector (zero for Cartan)
    std::vector<ParamPoly> excluded;      // parameter loci where the rank drops
    // principal embedding: X+ = sum a_i e_i, X- = sum f_i
    std::optional<std::vector<ParamScalar>> principal;

    AlgVec vec(std::size_t i) const { return AlgVec::basis(alg, i); }
    AlgVec principal_plus() const;
    AlgVec principal_minus() const;
    // evaluate a formula in e1.., f1.., h1..
    AlgVec eval(const std::string& text, const ScalarEnv& env = {}) const;
};

// [e_i, f_j] = delta_ij h_i, [h_i, e_j] = A_ij e_j, [h_i, f_j] = -A_ij f_j,
// quotient by the maximal ideal meeting the Cartan subalgebra trivially.
// max_height bounds the root heights explored.
SerreAlgebra serre_build(const std::vector<std::vector<ParamScalar>>& cartan, const std::vector<int>& parities,
                         int max_height = 64, bool want_principal = true);

// Solve the principal-embedding conditions: A^T a = 2 (all even) or 1 (all odd).
std::vector<ParamScalar> principal_coefficients(const std::vector<std::vector<ParamScalar>>& cartan,
                                                const std::vector<int>& parities);

// sl(2)-module decomposition of the adjoint action of X+, X-:
// highest weights of the irreducible summands, sorted.
std::vector<int> principal_spectrum(const SerreAlgebra& s);

}  // namespace lambdalie
