#include "preproj/decompose.hpp"

#include <random>

namespace preproj {

namespace {

using u64 = std::uint64_t;

// Integer lift of m, raised to the power e, modulo mod. Entries stay below mod.
std::vector<u64> lifted_power(const Matrix& m, u64 e, u64 mod)
{
    const std::size_t n = m.rows();
    auto mul = [&](const std::vector<u64>& a, const std::vector<u64>& b) {
        std::vector<u64> c(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const u64 aik = a[i * n + k];
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % mod;
            }
        return c;
    };
    std::vector<u64> base(n * n), acc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        acc[i * n + i] = 1 % mod;
        for (std::size_t j = 0; j < n; ++j)
            base[i * n + j] = m.at(i, j) % mod;
    }
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return acc;
}

Scalar generalized_trace(const Matrix& a, int i)
{
    const u64 p = a.field().characteristic();
    u64 pi = 1;
    for (int k = 0; k < i; ++k)
        pi *= p;
    const u64 mod = pi * p;
    auto pw = lifted_power(a, pi, mod);
    u64 tr = 0;
    for (std::size_t k = 0; k < a.rows(); ++k)
        tr = (tr + pw[k * a.rows() + k]) % mod;
    if (tr % pi != 0)
        throw std::logic_error("generalized trace evaluated outside its domain");
    return static_cast<Scalar>(tr / pi);
}

Morphism combination(const EndAlgebra& e, const Vec& coords)
{
    Morphism out = zero_morphism(e.module, e.module);
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0)
            out = add(out, scale(e.basis[k], coords[k]));
    return out;
}

Morphism power_at_least(Morphism f, std::size_t n)
{
    for (std::size_t e = 1; e < n; e *= 2)
        f = compose(f, f);
    return f;
}

Scalar evaluate(const Vec& poly, Scalar x, const PrimeField& f)
{
    Scalar acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

// Fitting decomposition along an eigenvalue of c: returns the two parts if
// both are nonzero.
std::optional<std::pair<ModulePtr, ModulePtr>> fitting_split(const Morphism& c)
{
    const ModulePtr& x = c.source;
    const PrimeField& f = x->field();
    const std::size_t n = x->total_dim();
    Vec poly = minimal_polynomial(c.total());
    if (poly.size() <= 2)
        return std::nullopt;
    for (Scalar lambda = 0; lambda < f.characteristic(); ++lambda) {
        if (evaluate(poly, lambda, f) != 0)
            continue;
        Morphism shifted = add(c, scale(identity_morphism(x), f.neg(lambda)));
        Morphism g = power_at_least(shifted, n);
        if (is_zero(g) || is_isomorphism(g))
            continue;
        return std::make_pair(kernel(g).source, image(g).source);
    }
    return std::nullopt;
}

}  // namespace

Matrix EndAlgebra::total_of(const Vec& coords) const
{
    Matrix m(module->field(), module->total_dim(), module->total_dim());
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0)
            m = m + totals[k].scaled(coords[k]);
    return m;
}

EndAlgebra end_algebra(const ModulePtr& x)
{
    EndAlgebra e;
    e.module = x;
    e.basis = hom_basis(x, x);
    std::vector<Vec> rows;
    for (const auto& b : e.basis) {
        e.totals.push_back(b.total());
        rows.push_back(flatten(b));
    }
    if (e.basis.empty())
        return e;
    Subspace span = Subspace::span(x->field(), rows.front().size(), rows);
    e.product.assign(e.dim(), std::vector<Vec>(e.dim()));
    for (std::size_t i = 0; i < e.dim(); ++i)
        for (std::size_t j = 0; j < e.dim(); ++j) {
            auto c = span.coordinates(flatten(compose(e.basis[i], e.basis[j])));
            if (!c)
                throw std::logic_error("End(x) is not closed under composition");
            e.product[i][j] = std::move(*c);
        }
    return e;
}

Subspace end_radical(const EndAlgebra& e)
{
    const PrimeField& f = e.module->field();
    const std::size_t d = e.dim();
    const std::size_t n = e.module->total_dim();
    const u64 p = f.characteristic();
    int l = 0;
    for (u64 q = p; q <= n; q *= p)
        ++l;
    Subspace current = Subspace::full(f, d);
    for (int i = 0; i <= l && current.dim() > 0; ++i) {
        std::vector<Matrix> elems;
        for (std::size_t k = 0; k < current.dim(); ++k)
            elems.push_back(e.total_of(current.basis_vector(k)));
        Matrix g(f, d, current.dim());
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < current.dim(); ++k)
                g.at(j, k) = generalized_trace(elems[k] * e.totals[j], i);
        Subspace ker = kernel_basis(g);
        std::vector<Vec> next;
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            Vec y = ker.basis_vector(r);
            Vec v(d, 0);
            for (std::size_t k = 0; k < y.size(); ++k)
                if (y[k] != 0) {
                    Vec c = current.basis_vector(k);
                    for (std::size_t t = 0; t < d; ++t)
                        v[t] = f.add(v[t], f.mul(y[k], c[t]));
                }
            next.push_back(std::move(v));
        }
        current = Subspace::span(f, d, next);
    }
    return current;
}

std::size_t semisimple_dim(const Representation& x)
{
    EndAlgebra e = end_algebra(share(x));
    return e.dim() - end_radical(e).dim();
}

bool is_indecomposable(const Representation& x) { return !x.is_zero() && semisimple_dim(x) == 1; }

std::vector<ModulePtr> decompose(const ModulePtr& x)
{
    if (x->is_zero())
        return {};
    EndAlgebra e = end_algebra(x);
    const std::size_t d = e.dim();
    if (d - end_radical(e).dim() == 1)
        return {x};

    auto attempt = [&](const Vec& coords) -> std::optional<std::vector<ModulePtr>> {
        auto parts = fitting_split(combination(e, coords));
        if (!parts)
            return std::nullopt;
        auto out = decompose(parts->first);
        auto rest = decompose(parts->second);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    };
    auto unit = [&](std::size_t k) {
        Vec v(d, 0);
        v[k] = 1;
        return v;
    };
    for (std::size_t k = 0; k < d; ++k)
        if (auto r = attempt(unit(k)))
            return *r;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (auto r = attempt(e.product[i][j]))
                return *r;
            if (j > i) {
                Vec s = unit(i);
                s[j] = 1;
                if (auto r = attempt(s))
                    return *r;
            }
        }
    std::mt19937 rng(20240601);
    const PrimeField& f = x->field();
    for (int round = 0; round < 256; ++round) {
        Vec v(d);
        for (auto& c : v)
            c = static_cast<Scalar>(rng() % f.characteristic());
        if (auto r = attempt(v))
            return *r;
    }
    throw ConfigurationError("a module with End/rad of dimension " + std::to_string(d - end_radical(e).dim()) +
                             " does not split over F_" + std::to_string(f.characteristic()) +
                             "; it is not absolutely indecomposable, try another field characteristic");
}

bool is_isomorphic(const Representation& x, const Representation& y)
{
    if (x.algebra != y.algebra || x.side != y.side || x.dims != y.dims)
        return false;
    if (x.is_zero())
        return true;
    auto xp = share(x);
    auto yp = share(y);
    if (is_indecomposable(x)) {
        for (const auto& h : hom_basis(xp, yp))
            if (is_isomorphism(h))
                return true;
        return false;
    }
    auto xs = decompose(xp);
    auto ys = decompose(yp);
    if (xs.size() != ys.size())
        return false;
    std::vector<bool> used(ys.size(), false);
    for (const auto& a : xs) {
        bool matched = false;
        for (std::size_t k = 0; k < ys.size() && !matched; ++k)
            if (!used[k] && a->dims == ys[k]->dims && is_isomorphic(*a, *ys[k])) {
                used[k] = true;
                matched = true;
            }
        if (!matched)
            return false;
    }
    return true;
}

Vec minimal_polynomial(const Matrix& m)
{
    const PrimeField& f = m.field();
    const std::size_t n = m.rows();
    if (n == 0)
        return {1};
    std::vector<Vec> powers;
    Matrix cur = Matrix::identity(f, n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vec flat = cur.data();
        if (!powers.empty()) {
            Matrix cols = Matrix::from_rows(f, flat.size(), powers).transpose();
            if (auto sol = solve(cols, flat)) {
                Vec poly(k + 1, 0);
                for (std::size_t i = 0; i < k; ++i)
                    poly[i] = f.neg((*sol)[i]);
                poly[k] = 1;
                return poly;
            }
        }
        powers.push_back(std::move(flat));
        cur = cur * m;
    }
    throw std::logic_error("minimal polynomial degree exceeds matrix size");
}

}  // namespace preproj
