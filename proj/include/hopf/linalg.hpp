#pragma once

#include <cstddef>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string &what) : std::runtime_error(what) {}
};

struct Singular : std::runtime_error {
    explicit Singular(const std::string &what) : std::runtime_error(what) {}
};

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p = 0)
        : rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(p)) {}

    static Matrix identity(std::size_t n, std::uint32_t p = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar &at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar &at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Scalar> &entries() { return e_; }
    const std::vector<Scalar> &entries() const { return e_; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;

    bool operator==(const Matrix &o) const;
    bool operator!=(const Matrix &o) const { return !(*this == o); }

    Matrix operator+(const Matrix &o) const;
    Matrix operator-(const Matrix &o) const;
    Matrix operator*(const Matrix &o) const;  // mat_mul

    Matrix transpose() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Serial reference product, kept as the oracle for the parallel kernel.
Matrix mat_mul_serial(const Matrix &a, const Matrix &b);

/// Exact product; row-parallel (OpenMP) above a size threshold, otherwise serial.
Matrix mat_mul(const Matrix &a, const Matrix &b);

/// Exact inverse by fraction-free-ish Gaussian elimination with pivoting.
Matrix mat_inv(const Matrix &a);

/// Kronecker product in the lexicographic (left factor major) basis order.
Matrix kron(const Matrix &a, const Matrix &b);

/// Permutation matrix sending e_i ⊗ e_j to e_j ⊗ e_i (d1·d2 square).
Matrix flip(std::size_t d1, std::size_t d2, std::uint32_t p = 0);

/// Matrix-vector product that skips zero input coordinates (structure-constant
/// data is sparse in practice even though storage is dense).
Vec apply(const Matrix &m, const Vec &v);

/// Solve a·x = rhs exactly (a square); throws Singular.
Vec solve(const Matrix &a, const Vec &rhs);

/// Basis of { x : a·x = 0 } (a need not be square).
std::vector<Vec> nullspace(const Matrix &a);

Vec vec_add(const Vec &a, const Vec &b);
Vec vec_sub(const Vec &a, const Vec &b);
Vec vec_scale(const Scalar &c, const Vec &a);
Vec kron_vec(const Vec &a, const Vec &b);
bool vec_eq(const Vec &a, const Vec &b);
bool vec_is_zero(const Vec &a);

/// Structure-constant carrier: entry(i,j,k) is the coefficient of e_k in e_i·e_j.
class Tensor3 {
public:
    Tensor3() : d1_(0), d2_(0), d3_(0) {}
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, std::uint32_t p = 0)
        : d1_(d1), d2_(d2), d3_(d3), e_(d1 * d2 * d3, Scalar::zero(p)) {}

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t d3() const { return d3_; }

    Scalar &at(std::size_t i, std::size_t j, std::size_t k) {
        return e_[(i * d2_ + j) * d3_ + k];
    }
    const Scalar &at(std::size_t i, std::size_t j, std::size_t k) const {
        return e_[(i * d2_ + j) * d3_ + k];
    }

    std::vector<Scalar> &entries() { return e_; }
    const std::vector<Scalar> &entries() const { return e_; }

    bool operator==(const Tensor3 &o) const;

private:
    std::size_t d1_, d2_, d3_;
    std::vector<Scalar> e_;
};

}  // namespace hopf
