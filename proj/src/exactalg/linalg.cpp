#include "quintic/exactalg/linalg.hpp"

#include <utility>

#include "quintic/errors.hpp"

namespace quintic::exactalg {

namespace {

// F_p elimination on raw residues. When `reduce_above` is false only the rows
// below each pivot are cleared (enough for rank).
struct ModElimination {
    std::uint64_t p;
    std::size_t cols;
    std::vector<std::vector<std::uint64_t>> a;
    std::vector<std::size_t> pivots;

    void run(bool reduce_above)
    {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
            std::size_t piv = r;
            while (piv < a.size() && a[piv][c] == 0)
                ++piv;
            if (piv == a.size())
                continue;
            std::swap(a[piv], a[r]);
            std::uint64_t inv = mod_inverse(a[r][c], p);
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = a[r][j] * inv % p;
            for (std::size_t i = reduce_above ? 0 : r + 1; i < a.size(); ++i) {
                if (i == r || a[i][c] == 0)
                    continue;
                std::uint64_t f = a[i][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
            }
            pivots.push_back(c);
            ++r;
        }
    }
};

// Fraction-free elimination over Z after clearing row denominators. Every
// update divides exactly by the previous pivot (Bareiss); the Gauss-Jordan
// variant also clears above the pivot with the same exact division.
struct BareissElimination {
    std::size_t cols;
    std::vector<std::vector<mpz_class>> a;
    std::vector<std::size_t> pivots;

    void run(bool reduce_above)
    {
        mpz_class prev = 1;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
            std::size_t piv = r;
            while (piv < a.size() && sgn(a[piv][c]) == 0)
                ++piv;
            if (piv == a.size())
                continue;
            std::swap(a[piv], a[r]);
            const mpz_class pivot = a[r][c];
            for (std::size_t i = reduce_above ? 0 : r + 1; i < a.size(); ++i) {
                if (i == r)
                    continue;
                const mpz_class f = a[i][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    mpz_class v = pivot * a[i][j] - f * a[r][j];
                    if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
                        throw InvariantViolation("Bareiss step produced an inexact division");
                    mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                }
            }
            prev = pivot;
            pivots.push_back(c);
            ++r;
        }
        a.resize(r);
    }
};

ModElimination to_mod(const DenseMatrix& m)
{
    const std::uint64_t p = m.field().modulus();
    ModElimination e{p, m.cols(), {}, {}};
    e.a.assign(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& x = m(i, j);
            if (x.field() != m.field())
                throw InputError("mixed field tags in matrix");
            e.a[i][j] = x.residue_value();
        }
    return e;
}

BareissElimination to_integer(const DenseMatrix& m)
{
    BareissElimination e{m.cols(), {}, {}};
    e.a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& x = m(i, j);
            if (!x.field().is_rational())
                throw InputError("mixed field tags in matrix");
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
        }
        std::vector<mpz_class> row(m.cols());
        bool nonzero = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).rational();
            row[j] = q.get_num() * (l / q.get_den());
            nonzero = nonzero || sgn(row[j]) != 0;
        }
        if (nonzero)
            e.a.push_back(std::move(row));
    }
    return e;
}

}  // namespace

std::size_t rank(const DenseMatrix& m)
{
    if (m.field().is_prime()) {
        auto e = to_mod(m);
        e.run(false);
        return e.pivots.size();
    }
    auto e = to_integer(m);
    e.run(false);
    return e.pivots.size();
}

Echelon rref(const DenseMatrix& m)
{
    const Field& f = m.field();
    DenseMatrix out(f, 0, m.cols());
    if (f.is_prime()) {
        auto e = to_mod(m);
        e.run(true);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            Vector row;
            row.reserve(m.cols());
            for (auto v : e.a[r])
                row.push_back(Scalar::residue(v, e.p));
            out.append_row(row);
        }
        return {std::move(out), std::move(e.pivots)};
    }
    auto e = to_integer(m);
    e.run(true);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const mpz_class& lead = e.a[r][e.pivots[r]];
        Vector row;
        row.reserve(m.cols());
        for (const auto& v : e.a[r])
            row.emplace_back(mpq_class(v, lead));
        out.append_row(row);
    }
    return {std::move(out), std::move(e.pivots)};
}

SubspaceBasis::SubspaceBasis(Field field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

SubspaceBasis::SubspaceBasis(Echelon e) : basis_(std::move(e.rows)), pivots_(std::move(e.pivots)) {}

SubspaceBasis SubspaceBasis::span(const DenseMatrix& generators)
{
    return SubspaceBasis(rref(generators));
}

SubspaceBasis SubspaceBasis::whole(Field field, std::size_t ambient_dim)
{
    return span(DenseMatrix::identity(field, ambient_dim));
}

bool SubspaceBasis::contains(std::span<const Scalar> v) const
{
    if (v.size() != ambient_dim())
        throw InputError("vector length does not match ambient dimension");
    Vector rest(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
        Scalar c = rest[pivots_[r]];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < rest.size(); ++j)
            rest[j] -= c * basis_(r, j);
    }
    for (const auto& x : rest)
        if (!x.is_zero())
            return false;
    return true;
}

SubspaceBasis kernel(const DenseMatrix& m)
{
    const Field& f = m.field();
    const std::size_t n = m.cols();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    // One basis vector per free column: x_free = 1, pivots solved from RREF.
    DenseMatrix gens(f, 0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(n, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rows(r, free);
        gens.append_row(v);
    }
    return SubspaceBasis::span(gens);
}

SubspaceBasis annihilator(const SubspaceBasis& s)
{
    return kernel(s.basis());
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b)
{
    if (a.field() != b.field())
        throw InputError("mixed field tags in subspace sum");
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("ambient dimension mismatch in subspace sum");
    DenseMatrix g = a.basis();
    g.append_rows(b.basis());
    return SubspaceBasis::span(g);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b)
{
    if (a.field() != b.field())
        throw InputError("mixed field tags in subspace intersection");
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("ambient dimension mismatch in subspace intersection");
    if (a.dim() == 0 || b.dim() == 0)
        return SubspaceBasis(a.field(), a.ambient_dim());
    // b = {v : W v = 0}; a ∩ b = {c A : W A^T c = 0}.
    SubspaceBasis w = annihilator(b);
    if (w.dim() == 0)
        return a;
    DenseMatrix constraint = w.basis() * a.basis().transpose();
    SubspaceBasis coeffs = kernel(constraint);
    if (coeffs.dim() == 0)
        return SubspaceBasis(a.field(), a.ambient_dim());
    return SubspaceBasis::span(coeffs.basis() * a.basis());
}

}  // namespace quintic::exactalg
