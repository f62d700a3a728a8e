#pragma once
// Square supermatrices over ParamScalar with an explicit parity format.

#include "lambdalie/json_io.hpp"
#include "lambdalie/param_scalar.hpp"

#include <string>
#include <vector>

namespace lambdalie {

struct Format {
    std::vector<int> parities;  // 0 even, 1 odd

    static Format standard(std::size_t evens, std::size_t odds);
    static Format alternating(std::size_t size, int first = 0);
    static Format even(std::size_t size) { return standard(size, 0); }
    std::size_t size() const { return parities.size(); }
    int operator[](std::size_t i) const { return parities[i]; }
    std::size_t count(int p) const;
    bool operator==(const Format& o) const { return parities == o.parities; }
};

class SuperMatrix {
public:
    SuperMatrix() = default;
    explicit SuperMatrix(Format f);
    static SuperMatrix identity(const Format& f);
    // matrix unit E_{ij}, indices from 1
    static SuperMatrix unit(const Format& f, std::size_t i, std::size_t j, const ParamScalar& c = 1);

    const Format& format() const { return fmt_; }
    std::size_t size() const { return fmt_.size(); }
    const ParamScalar& at(std::size_t i, std::size_t j) const { return e_[i * size() + j]; }
    ParamScalar& at(std::size_t i, std::size_t j) { return e_[i * size() + j]; }
    const std::vector<ParamScalar>& entries() const { return e_; }

    bool is_zero() const;
    int entry_parity(std::size_t i, std::size_t j) const { return (fmt_[i] + fmt_[j]) & 1; }
    // 0 or 1 when homogeneous, -1 when mixed (zero counts as even)
    int parity() const;
    SuperMatrix parity_part(int p) const;

    SuperMatrix operator-() const;
    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const ParamScalar& s, const SuperMatrix& a);
    bool operator==(const SuperMatrix& o) const { return fmt_ == o.fmt_ && e_ == o.e_; }

    SuperMatrix substitute(int var, const ParamScalar& value) const;
    // reorder basis by a permutation: new index k holds old index perm[k]
    SuperMatrix permuted(const std::vector<std::size_t>& perm) const;
    // permutation bringing the format to evens-first order (stable)
    std::vector<std::size_t> standard_permutation() const;

    std::string str() const;
    Json to_json() const;
    static SuperMatrix from_json(const Json& j);

private:
    Format fmt_;
    std::vector<ParamScalar> e_;
};

SuperMatrix bracket(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix supertranspose(const SuperMatrix& a);
ParamScalar supertrace(const SuperMatrix& a);
ParamScalar determinant(std::vector<std::vector<ParamScalar>> m);
ParamScalar berezinian(const SuperMatrix& a);
SuperMatrix form_preservation_residual(const SuperMatrix& x, const SuperMatrix& b);

}  // namespace lambdalie
