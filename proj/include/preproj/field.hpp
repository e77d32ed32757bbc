#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace preproj {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Arithmetic in F_p. Residues are kept in [0, p).
class PrimeField {
public:
    static constexpr Scalar kDefaultCharacteristic = 1009;

    explicit PrimeField(Scalar p = kDefaultCharacteristic);

    Scalar characteristic() const { return p_; }

    Scalar add(Scalar a, Scalar b) const
    {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const
    {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar inv(Scalar a) const;
    Scalar from_int(long long v) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    Scalar p_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over a prime field. Zero rows or columns are legal.
class Matrix {
public:
    Matrix() = default;
    Matrix(PrimeField f, std::size_t rows, std::size_t cols);

    static Matrix identity(PrimeField f, std::size_t n);
    static Matrix from_rows(PrimeField f, std::size_t cols, const std::vector<Vec>& rows);

    const PrimeField& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const;
    Vec col_vec(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar s) const;
    Vec apply(std::span<const Scalar> v) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    const std::vector<Scalar>& data() const { return data_; }

private:
    PrimeField f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Row space in reduced echelon form.
class Subspace {
public:
    Subspace() = default;
    Subspace(PrimeField f, std::size_t ambient);  // zero subspace

    static Subspace span(PrimeField f, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace from_matrix_rows(const Matrix& m);
    static Subspace full(PrimeField f, std::size_t ambient);

    const PrimeField& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }

    bool contains(std::span<const Scalar> v) const;
    /// v reduced against the echelon basis; zero iff v is contained.
    Vec reduce(std::span<const Scalar> v) const;
    /// Coordinates of a contained vector with respect to the echelon basis.
    std::optional<Vec> coordinates(std::span<const Scalar> v) const;
    /// Columns that are not pivots: a canonical complement.
    std::vector<std::size_t> non_pivots() const;

    bool operator==(const Subspace& o) const;

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Right null space of m (vectors k with m k = 0).
Subspace kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, std::span<const Scalar> b);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, std::span<const Scalar> v);

/// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace preproj
