#include "preproj/field.hpp"

#include <algorithm>
#include <utility>

namespace preproj {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(Scalar p) : p_(p)
{
    if (!is_prime(p) || p >= (1u << 31))
        throw ConfigurationError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const
{
    if (a == 0)
        throw std::domain_error("division by zero in F_p");
    long long t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (t < 0)
        t += p_;
    return static_cast<Scalar>(t);
}

Scalar PrimeField::from_int(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Scalar>(r);
}

Matrix::Matrix(PrimeField f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(PrimeField f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField f, std::size_t cols, const std::vector<Vec>& rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row length differs from column count");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

Vec Matrix::row_vec(std::size_t r) const
{
    auto s = row(r);
    return {s.begin(), s.end()};
}

Vec Matrix::col_vec(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(f_, rows_, o.cols_);
    const std::uint64_t p = f_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = at(r, k);
            if (a == 0)
                continue;
            auto orow = o.row(k);
            for (std::size_t c = 0; c < o.cols_; ++c) {
                acc[c] += a * orow[c];
                if (acc[c] >= (1ull << 62))
                    acc[c] %= p;
            }
        }
        for (std::size_t c = 0; c < o.cols_; ++c)
            out.at(r, c) = static_cast<Scalar>(acc[c] % p);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = f_.add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = f_.sub(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::scaled(Scalar s) const
{
    Matrix out(*this);
    for (auto& x : out.data_)
        x = f_.mul(x, s);
    return out;
}

Vec Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector shape mismatch");
    Vec out(rows_, 0);
    const std::uint64_t p = f_.characteristic();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        auto rr = row(r);
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += static_cast<std::uint64_t>(rr[c]) * v[c];
            if (acc >= (1ull << 62))
                acc %= p;
        }
        out[r] = static_cast<Scalar>(acc % p);
    }
    return out;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& o) const
{
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionMismatch("block out of range");
    Matrix out(f_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            out.at(r, c) = at(r0 + r, c0 + c);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw DimensionMismatch("block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            at(r0 + r, c0 + c) = m.at(r, c);
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack row mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack column mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

Rref rref(Matrix m)
{
    const PrimeField f = m.field();
    const std::uint64_t p = f.characteristic();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t sel = lead;
        while (sel < rows && m.at(sel, c) == 0)
            ++sel;
        if (sel == rows)
            continue;
        if (sel != lead) {
            auto a = m.row(sel), b = m.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = m.row(lead);
        Scalar iv = f.inv(prow[c]);
        if (iv != 1)
            for (std::size_t k = c; k < cols; ++k)
                prow[k] = f.mul(prow[k], iv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead)
                continue;
            auto row = m.row(r);
            Scalar factor = row[c];
            if (factor == 0)
                continue;
            std::uint64_t nf = p - factor;
            for (std::size_t k = c; k < cols; ++k)
                if (prow[k] != 0)
                    row[k] = static_cast<Scalar>((row[k] + nf * prow[k]) % p);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Subspace::Subspace(PrimeField f, std::size_t ambient) : basis_(f, 0, ambient) {}

Subspace Subspace::from_matrix_rows(const Matrix& m)
{
    Rref r = rref(m);
    Subspace s(m.field(), m.cols());
    s.basis_ = r.reduced.block(0, 0, r.rank(), m.cols());
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(PrimeField f, std::size_t ambient, const std::vector<Vec>& vectors)
{
    return from_matrix_rows(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::full(PrimeField f, std::size_t ambient)
{
    return from_matrix_rows(Matrix::identity(f, ambient));
}

Vec Subspace::reduce(std::span<const Scalar> v) const
{
    if (v.size() != ambient_dim())
        throw DimensionMismatch("vector length differs from ambient dimension");
    const PrimeField& f = field();
    Vec out(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = out[pivots_[i]];
        if (c == 0)
            continue;
        Scalar nc = f.neg(c);
        auto row = basis_.row(i);
        for (std::size_t k = pivots_[i]; k < out.size(); ++k)
            if (row[k] != 0)
                out[k] = f.add(out[k], f.mul(nc, row[k]));
    }
    return out;
}

bool Subspace::contains(std::span<const Scalar> v) const
{
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
}

std::optional<Vec> Subspace::coordinates(std::span<const Scalar> v) const
{
    if (!contains(v))
        return std::nullopt;
    Vec coords(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        coords[i] = v[pivots_[i]];
    return coords;
}

std::vector<std::size_t> Subspace::non_pivots() const
{
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (k < pivots_.size() && pivots_[k] == c)
            ++k;
        else
            out.push_back(c);
    }
    return out;
}

bool Subspace::operator==(const Subspace& o) const { return basis_ == o.basis_; }

Subspace kernel_basis(const Matrix& m)
{
    const PrimeField f = m.field();
    const std::size_t n = m.cols();
    Rref r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots)
        is_pivot[c] = true;
    std::vector<Vec> vecs;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.reduced.at(i, free));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(f, n, vecs);
}

std::optional<Vec> solve(const Matrix& a, std::span<const Scalar> b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length differs from row count");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t r = 0; r < a.rows(); ++r)
        aug.at(r, a.cols()) = b[r];
    Rref r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols())
        return std::nullopt;
    Vec x(a.cols(), 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.reduced.at(i, a.cols());
    return x;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace ambient dimensions differ");
    return Subspace::from_matrix_rows(vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace ambient dimensions differ");
    // Zassenhaus: rows [u | u] over [v | 0]; rows whose left half vanishes span u ∩ v.
    const std::size_t n = u.ambient_dim();
    const PrimeField f = u.field();
    Matrix z(f, u.dim() + v.dim(), 2 * n);
    z.set_block(0, 0, u.basis());
    z.set_block(0, n, u.basis());
    z.set_block(u.dim(), 0, v.basis());
    Rref r = rref(std::move(z));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        if (r.pivots[i] < n)
            continue;
        auto row = r.reduced.row(i);
        out.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::span(f, n, out);
}

bool contains(const Subspace& u, std::span<const Scalar> v) { return u.contains(v); }

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    Rref r = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (r.rank() < n || (n > 0 && r.pivots[n - 1] >= n))
        return std::nullopt;
    return r.reduced.block(0, n, n, n);
}

}  // namespace preproj
