#include "hopf/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopf {

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(p);
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

bool Matrix::operator==(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix addition shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix subtraction shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix &o) const { return mat_mul(*this, o); }

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// One output row of a product; skips zero multiplicands, which dominates on
// structure-constant matrices (mostly 0/±1 entries).
void mul_row(const Matrix &a, const Matrix &b, Matrix &out, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar &aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const Scalar &bkj = b.at(k, j);
            if (bkj.is_zero()) continue;
            out.at(i, j) += aik * bkj;
        }
    }
}

}  // namespace

Matrix mat_mul_serial(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
    return out;
}

Matrix mat_mul(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul shape mismatch");
#ifdef _OPENMP
    // Row-parallel kernel; only worth the thread overhead on larger products.
    if (a.rows() >= 64 && omp_get_max_threads() > 1) {
        Matrix out(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(a.rows()); ++i)
            mul_row(a, b, out, static_cast<std::size_t>(i));
        return out;
    }
#endif
    return mat_mul_serial(a, b);
}

Matrix mat_inv(const Matrix &a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("mat_inv needs a square matrix");
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Singular("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar d = work.at(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Scalar f = work.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!work.at(col, j).is_zero()) work.at(i, j) -= f * work.at(col, j);
                if (!inv.at(col, j).is_zero()) inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar &aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar &bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return r;
}

Matrix flip(std::size_t d1, std::size_t d2, std::uint32_t p) {
    Matrix r(d1 * d2, d1 * d2, p);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            r.at(j * d1 + i, i * d2 + j) = Scalar::one(p);
    return r;
}

Vec apply(const Matrix &m, const Vec &v) {
    if (m.cols() != v.size()) throw ShapeMismatch("apply shape mismatch");
    Vec out(m.rows());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Scalar &mij = m.at(i, j);
            if (mij.is_zero()) continue;
            out[i] += mij * v[j];
        }
    }
    return out;
}

Vec solve(const Matrix &a, const Vec &rhs) {
    if (a.rows() != a.cols() || a.rows() != rhs.size())
        throw ShapeMismatch("solve shape mismatch");
    const std::size_t n = a.rows();
    Matrix work = a;
    Vec x = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Singular("singular linear system");
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(work.at(pivot, j), work.at(col, j));
            std::swap(x[pivot], x[col]);
        }
        Scalar d = work.at(col, col).inv();
        for (std::size_t j = col; j < n; ++j) work.at(col, j) *= d;
        x[col] *= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Scalar f = work.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < n; ++j)
                if (!work.at(col, j).is_zero()) work.at(i, j) -= f * work.at(col, j);
            if (!x[col].is_zero()) x[i] -= f * x[col];
        }
    }
    return x;
}

std::vector<Vec> nullspace(const Matrix &a) {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix work = a;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;  // current row of the reduced form
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t pivot = r;
        while (pivot < m && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(work.at(pivot, j), work.at(r, j));
        Scalar d = work.at(r, col).inv();
        for (std::size_t j = 0; j < n; ++j) work.at(r, j) *= d;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            Scalar f = work.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!work.at(r, j).is_zero()) work.at(i, j) -= f * work.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n);
        v[free] = Scalar::one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -work.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec vec_add(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_add size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_sub size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar &c, const Vec &a) {
    Vec r = a;
    for (auto &x : r) x *= c;
    return r;
}

Vec kron_vec(const Vec &a, const Vec &b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

bool vec_eq(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool vec_is_zero(const Vec &a) {
    for (const auto &x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool Tensor3::operator==(const Tensor3 &o) const {
    if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

}  // namespace hopf
