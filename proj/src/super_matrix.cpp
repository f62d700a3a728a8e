#include "lambdalie/super_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lambdalie {

Format Format::standard(std::size_t evens, std::size_t odds) {
    Format f;
    f.parities.assign(evens, 0);
    f.parities.insert(f.parities.end(), odds, 1);
    return f;
}

Format Format::alternating(std::size_t size, int first) {
    Format f;
    for (std::size_t i = 0; i < size; ++i) f.parities.push_back(int((i + std::size_t(first)) & 1u));
    return f;
}

std::size_t Format::count(int p) const { return std::size_t(std::count(parities.begin(), parities.end(), p)); }

SuperMatrix::SuperMatrix(Format f) : fmt_(std::move(f)), e_(fmt_.size() * fmt_.size()) {}

SuperMatrix SuperMatrix::identity(const Format& f) {
    SuperMatrix m(f);
    for (std::size_t i = 0; i < f.size(); ++i) m.at(i, i) = 1;
    return m;
}

SuperMatrix SuperMatrix::unit(const Format& f, std::size_t i, std::size_t j, const ParamScalar& c) {
    if (i < 1 || j < 1 || i > f.size() || j > f.size())
        throw std::out_of_range("matrix unit E_" + std::to_string(i) + "," + std::to_string(j) + " outside size " +
                                std::to_string(f.size()));
    SuperMatrix m(f);
    m.at(i - 1, j - 1) = c;
    return m;
}

bool SuperMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const ParamScalar& s) { return s.is_zero(); });
}

int SuperMatrix::parity() const {
    int p = -2;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            if (at(i, j).is_zero()) continue;
            int q = entry_parity(i, j);
            if (p == -2)
                p = q;
            else if (p != q)
                return -1;
        }
    return p == -2 ? 0 : p;
}

SuperMatrix SuperMatrix::parity_part(int p) const {
    SuperMatrix r(fmt_);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (entry_parity(i, j) == p) r.at(i, j) = at(i, j);
    return r;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (!(fmt_ == o.fmt_)) throw std::invalid_argument("format mismatch in matrix sum");
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!o.e_[k].is_zero()) e_[k] += o.e_[k];
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (!(fmt_ == o.fmt_)) throw std::invalid_argument("format mismatch in matrix difference");
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!o.e_[k].is_zero()) e_[k] -= o.e_[k];
    return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.fmt_ == b.fmt_)) throw std::invalid_argument("format mismatch in matrix product");
    std::size_t n = a.size();
    SuperMatrix r(a.fmt_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const ParamScalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const ParamScalar& y = b.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

SuperMatrix operator*(const ParamScalar& s, const SuperMatrix& a) {
    SuperMatrix r = a;
    for (auto& x : r.e_)
        if (!x.is_zero()) x = s * x;
    return r;
}

SuperMatrix SuperMatrix::substitute(int var, const ParamScalar& value) const {
    SuperMatrix r = *this;
    for (auto& x : r.e_) x = x.substitute(var, value);
    return r;
}

SuperMatrix SuperMatrix::permuted(const std::vector<std::size_t>& perm) const {
    Format f;
    for (std::size_t k : perm) f.parities.push_back(fmt_[k]);
    SuperMatrix r(f);
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j) r.at(i, j) = at(perm[i], perm[j]);
    return r;
}

std::vector<std::size_t> SuperMatrix::standard_permutation() const {
    std::vector<std::size_t> perm;
    for (int p = 0; p < 2; ++p)
        for (std::size_t i = 0; i < size(); ++i)
            if (fmt_[i] == p) perm.push_back(i);
    return perm;
}

std::string SuperMatrix::str() const {
    std::ostringstream os;
    os << "format [";
    for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << fmt_[i];
    os << "]\n";
    for (std::size_t i = 0; i < size(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < size(); ++j) os << (j ? "  " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

Json SuperMatrix::to_json() const {
    Json rows = Json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < size(); ++j) row.push_back(scalar_to_json(at(i, j)));
        rows.push_back(row);
    }
    return Json{{"format", fmt_.parities}, {"entries", rows}};
}

SuperMatrix SuperMatrix::from_json(const Json& j) {
    Format f;
    f.parities = j.at("format").get<std::vector<int>>();
    SuperMatrix m(f);
    const auto& rows = j.at("entries");
    if (rows.size() != f.size()) throw std::invalid_argument("entries do not match the format size");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (rows[i].size() != f.size()) throw std::invalid_argument("matrix row has wrong length");
        for (std::size_t k = 0; k < f.size(); ++k) m.at(i, k) = scalar_from_json(rows[i][k]);
    }
    return m;
}

SuperMatrix bracket(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix r(a.format());
    for (int p = 0; p < 2; ++p) {
        SuperMatrix ap = a.parity_part(p);
        if (ap.is_zero()) continue;
        for (int q = 0; q < 2; ++q) {
            SuperMatrix bq = b.parity_part(q);
            if (bq.is_zero()) continue;
            if (p && q)
                r += ap * bq + bq * ap;
            else
                r += ap * bq - bq * ap;
        }
    }
    return r;
}

SuperMatrix supertranspose(const SuperMatrix& a) {
    int pa = a.parity();
    if (pa < 0) throw std::invalid_argument("supertranspose needs a parity-homogeneous matrix");
    const Format& f = a.format();
    SuperMatrix r(f);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const ParamScalar& x = a.at(j, i);
            if (x.is_zero()) continue;
            int e = ((f[i] + f[j]) * (f[i] + pa)) & 1;
            r.at(i, j) = e ? -x : x;
        }
    return r;
}

ParamScalar supertrace(const SuperMatrix& a) {
    ParamScalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.format()[i] ? -a.at(i, i) : a.at(i, i);
    return s;
}

// Bareiss elimination; divisions are exact in the coefficient field
ParamScalar determinant(std::vector<std::vector<ParamScalar>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    ParamScalar prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return ParamScalar();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

using Block = std::vector<std::vector<ParamScalar>>;

Block inverse(Block m) {
    std::size_t n = m.size();
    Block inv(n, std::vector<ParamScalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("singular block");
        std::swap(m[c], m[p]);
        std::swap(inv[c], inv[p]);
        ParamScalar piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            ParamScalar f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

ParamScalar berezinian(const SuperMatrix& a) {
    if (a.parity() == 1) throw std::invalid_argument("Berezinian needs an even matrix");
    SuperMatrix s = a.permuted(a.standard_permutation());
    std::size_t ne = s.format().count(0), no = s.format().count(1);
    Block A(ne, std::vector<ParamScalar>(ne)), B(ne, std::vector<ParamScalar>(no)),
        D(no, std::vector<ParamScalar>(ne)), E(no, std::vector<ParamScalar>(no));
    for (std::size_t i = 0; i < ne + no; ++i)
        for (std::size_t j = 0; j < ne + no; ++j) {
            const ParamScalar& x = s.at(i, j);
            if (i < ne && j < ne) A[i][j] = x;
            else if (i < ne) B[i][j - ne] = x;
            else if (j < ne) D[i - ne][j] = x;
            else E[i - ne][j - ne] = x;
        }
    if (no == 0) return determinant(A);
    Block Einv = inverse(E);
    // A - B E^{-1} D
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = 0; j < ne; ++j) {
            ParamScalar acc;
            for (std::size_t k = 0; k < no; ++k) {
                if (B[i][k].is_zero()) continue;
                for (std::size_t l = 0; l < no; ++l)
                    if (!Einv[k][l].is_zero() && !D[l][j].is_zero()) acc += B[i][k] * Einv[k][l] * D[l][j];
            }
            A[i][j] -= acc;
        }
    return determinant(A) / determinant(E);
}

SuperMatrix form_preservation_residual(const SuperMatrix& x, const SuperMatrix& b) {
    if (!(x.format() == b.format())) throw std::invalid_argument("form and matrix have different formats");
    int px = x.parity(), pb = b.parity();
    if (px < 0 || pb < 0) throw std::invalid_argument("form preservation needs homogeneous inputs");
    SuperMatrix bx = b * x;
    return (px && pb) ? supertranspose(x) * b - bx : supertranspose(x) * b + bx;
}

}  // namespace lambdalie
