#pragma once
// Finite-dimensional algebras given by structure constants, the common
// element type of all realizations, and exact echelon forms.
#include "lambdalie/super_matrix.hpp"
#include "lambdalie/super_op.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lambdalie {

using SparseVec = std::map<std::uint64_t, ParamScalar>;

struct StructAlgebra {
    std::vector<std::string> names;
    std::vector<int> parity;
    // table[i][j] lists [b_i, b_j] as (index, coefficient) pairs
    std::vector<std::vector<std::vector<std::pair<std::size_t, ParamScalar>>>> table;

    std::size_t dim() const { return names.size(); }
    std::size_t count(int p) const;
};

struct AlgVec {
    std::shared_ptr<const StructAlgebra> alg;
    std::vector<ParamScalar> c;

    static AlgVec zero(std::shared_ptr<const StructAlgebra> a);
    static AlgVec basis(std::shared_ptr<const StructAlgebra> a, std::size_t i);
    bool is_zero() const;
    int parity() const;  // -1 when mixed
    std::string str() const;
};

AlgVec operator+(const AlgVec& a, const AlgVec& b);
AlgVec operator*(const ParamScalar& s, const AlgVec& a);
AlgVec bracket(const AlgVec& a, const AlgVec& b);

using Element = std::variant<SuperOp, SuperMatrix, AlgVec>;

Element el_add(const Element& a, const Element& b);
Element el_sub(const Element& a, const Element& b);
Element el_scale(const ParamScalar& s, const Element& a);
Element el_bracket(const Element& a, const Element& b);
Element el_mul(const Element& a, const Element& b);
// s times the unit of the ambient associative algebra; zero only for AlgVec
Element el_scalar_like(const Element& shape, const ParamScalar& s);
bool el_is_zero(const Element& a);
int el_parity(const Element& a);
std::string el_str(const Element& a, bool super_names = false);
Json el_to_json(const Element& a);
Element el_substitute(const Element& a, int var, const ParamScalar& value);
SparseVec el_coords(const Element& a);
const char* el_kind(const Element& a);

// Row echelon form over the coefficient field.  Pivots are normalized to 1;
// non-constant pivot numerators are recorded as excluded parameter loci.
class Echelon {
public:
    // returns true if v was independent of the rows so far
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    std::size_t rank() const { return rows_.size(); }
    const std::vector<ParamPoly>& excluded() const { return excluded_; }
    const std::map<std::uint64_t, SparseVec>& rows() const { return rows_; }

private:
    std::map<std::uint64_t, SparseVec> rows_;  // pivot key -> row
    std::vector<ParamPoly> excluded_;
};

// Solve M a = b exactly; throws std::domain_error when M is singular.
std::vector<ParamScalar> solve_linear(std::vector<std::vector<ParamScalar>> m, std::vector<ParamScalar> b);

}  // namespace lambdalie
