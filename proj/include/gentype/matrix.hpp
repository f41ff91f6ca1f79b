#ifndef GENTYPE_MATRIX_HPP
#define GENTYPE_MATRIX_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "poly.hpp"

namespace gentype {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over an exact field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_.zero()) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<Vector>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) fail(ErrorKind::SizeMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = f.embed(rows[i][j]);
        }
        return m;
    }

    static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) fail(ErrorKind::SizeMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
        }
        return m;
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) fail(ErrorKind::SizeMismatch, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<FieldElem>& entries() const noexcept { return a_; }

    FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const { return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vector col(std::size_t j) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    bool is_zero() const {
        for (const auto& e : a_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    Matrix lift_to(const Field& g) const {
        Matrix m(g, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = g.embed(a_[k]);
        return m;
    }

    Matrix scaled(const FieldElem& s) const {
        Matrix m = *this;
        for (auto& e : m.a_) e = e * s;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_shape(a, b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + b.a_[k];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_shape(a, b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - b.a_[k];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.f_ != b.f_) fail(ErrorKind::CtxMismatch, "matrix product over different fields");
        if (a.cols_ != b.rows_) fail(ErrorKind::SizeMismatch, "matrix product shape mismatch");
        Matrix m(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const FieldElem& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = m(i, j) + x * b(k, j);
            }
        }
        return m;
    }

    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.size()) fail(ErrorKind::SizeMismatch, "matrix-vector shape mismatch");
        Vector r(a.rows_, a.f_.zero());
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (!v[j].is_zero()) r[i] = r[i] + a(i, j) * v[j];
            }
        }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
            s += "]";
        }
        return s + "]";
    }

private:
    static void check_shape(const Matrix& a, const Matrix& b) {
        if (a.f_ != b.f_) fail(ErrorKind::CtxMismatch, "matrices over different fields");
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::SizeMismatch, "matrix shape mismatch");
    }

    Field f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElem> a_;
};

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline EchelonForm rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        }
        // normalise the pivot row before elimination to keep fractions small
        const FieldElem inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const FieldElem factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) = m(i, j) - factor * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Echelonised basis of the right null space {v : A v = 0}.
inline std::vector<Vector> mat_kernel(const Matrix& a) {
    const auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vector v(a.cols(), a.field().zero());
        v[j] = a.field().one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A x = b; nullopt when inconsistent.
inline std::optional<Vector> mat_solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) fail(ErrorKind::SizeMismatch, "mat_solve right-hand side length");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto e = rref(std::move(aug));
    Vector x(a.cols(), a.field().zero());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

inline std::optional<Matrix> try_inverse(const Matrix& a) {
    if (!a.is_square()) fail(ErrorKind::NotSquare, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = a.field().one();
    }
    const auto e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    }
    return inv;
}

inline Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) fail(ErrorKind::DivisionByZero, "matrix is singular");
    return *inv;
}

inline bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

/// h(A) by Horner evaluation.
inline Matrix mat_eval_poly(const Poly& h, const Matrix& a) {
    if (!a.is_square()) fail(ErrorKind::NotSquare, "polynomial evaluation at a non-square matrix");
    if (!a.field().contains_subfield(h.field())) fail(ErrorKind::CtxMismatch, "mat_eval_poly field mismatch");
    const std::size_t n = a.rows();
    Matrix acc(a.field(), n, n);
    const auto& c = h.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * a;
        const FieldElem ci = a.field().embed(c[i]);
        for (std::size_t k = 0; k < n; ++k) acc(k, k) = acc(k, k) + ci;
    }
    return acc;
}

inline Matrix mat_pow(const Matrix& a, std::size_t e) {
    Matrix r = Matrix::identity(a.field(), a.rows());
    for (std::size_t i = 0; i < e; ++i) r = r * a;
    return r;
}

inline bool is_nilpotent(const Matrix& a) { return mat_pow(a, a.rows()).is_zero(); }

/// Companion matrix of a monic polynomial: ones on the subdiagonal and the
/// negated coefficients in the last column, so that the standard basis vector
/// e_0 is cyclic with Krylov basis e_0, e_1, ..., e_{d-1}.
inline Matrix companion(const Poly& f) {
    if (f.degree() < 1 || !f.is_monic()) fail(ErrorKind::InvalidArgument, "companion needs a monic polynomial of degree >= 1");
    const auto d = static_cast<std::size_t>(f.degree());
    Matrix m(f.field(), d, d);
    for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = f.field().one();
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -f.coeff(i);
    return m;
}

inline Matrix block_diag(const Field& f, const std::vector<Matrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix m(f, n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) fail(ErrorKind::NotSquare, "block_diag needs square blocks");
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = f.embed(b(i, j));
        }
        off += b.rows();
    }
    return m;
}

inline Matrix diagonal(const Field& f, const std::vector<long long>& d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = f.from_int(d[i]);
    return m;
}

/// Row space of the given vectors in reduced echelon form (zero rows dropped).
inline Matrix row_space(const Field& f, std::size_t dim, const std::vector<Vector>& vs) {
    Matrix m(f, vs.size(), dim);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != dim) fail(ErrorKind::SizeMismatch, "vector length mismatch");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
    }
    const auto e = rref(std::move(m));
    Matrix out(f, e.pivots.size(), dim);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) out(i, j) = e.reduced(i, j);
    }
    return out;
}

inline bool same_span(const Field& f, std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b) {
    return row_space(f, dim, a) == row_space(f, dim, b);
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& v) { return os << v.to_string(); }

}  // namespace gentype

#endif  // GENTYPE_MATRIX_HPP
