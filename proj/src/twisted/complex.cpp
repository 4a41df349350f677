#include "quintic/twisted/complex.hpp"

#include <algorithm>

#include "quintic/errors.hpp"

namespace quintic::twisted {

std::size_t CwComplex::add_vertex(std::string name)
{
    vertices_.push_back(std::move(name));
    return vertices_.size() - 1;
}

std::size_t CwComplex::add_edge(std::string name, std::size_t tail, std::size_t head)
{
    if (tail >= vertices_.size() || head >= vertices_.size())
        throw InputError("edge " + name + " refers to a missing vertex");
    edges_.push_back({std::move(name), tail, head});
    return edges_.size() - 1;
}

std::size_t CwComplex::add_face(std::string name, std::vector<Letter> word)
{
    if (word.empty())
        throw InputError("face " + name + " has an empty attaching word");
    auto start = [&](const Letter& l) { return l.direction > 0 ? edges_[l.edge].tail : edges_[l.edge].head; };
    auto end = [&](const Letter& l) { return l.direction > 0 ? edges_[l.edge].head : edges_[l.edge].tail; };
    for (const auto& l : word)
        if (l.edge >= edges_.size() || (l.direction != 1 && l.direction != -1))
            throw InputError("face " + name + " has an invalid letter");
    for (std::size_t i = 0; i < word.size(); ++i)
        if (end(word[i]) != start(word[(i + 1) % word.size()]))
            throw InputError("attaching word of face " + name + " is not a closed path");
    faces_.push_back({std::move(name), std::move(word)});
    return faces_.size() - 1;
}

std::vector<std::size_t> CwComplex::cell_counts() const
{
    std::vector<std::size_t> out{vertices_.size()};
    if (!edges_.empty() || !faces_.empty())
        out.push_back(edges_.size());
    if (!faces_.empty())
        out.push_back(faces_.size());
    return out;
}

std::size_t CwComplex::vertex_index(const std::string& name) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end())
        throw InputError("unknown vertex " + name);
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t CwComplex::edge_index(const std::string& name) const
{
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.name == name; });
    if (it == edges_.end())
        throw InputError("unknown edge " + name);
    return static_cast<std::size_t>(it - edges_.begin());
}

LocalSystem LocalSystem::trivial(const CwComplex& x, Field field)
{
    return {std::vector<Scalar>(x.edges().size(), Scalar::one(field))};
}

TwistedChainComplex::TwistedChainComplex(Field field, std::vector<std::size_t> ranks, std::vector<DenseMatrix> boundaries)
    : field_(field), ranks_(std::move(ranks)), d_(std::move(boundaries))
{
    if (ranks_.empty())
        throw InputError("chain complex needs at least degree 0");
    if (d_.size() + 1 != ranks_.size())
        throw InputError("chain complex with " + std::to_string(ranks_.size()) + " degrees needs " +
                         std::to_string(ranks_.size() - 1) + " boundary matrices");
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        const auto& m = d_[k - 1];
        if (m.field() != field_)
            throw InputError("boundary matrix over a different field");
        if (m.rows() != ranks_[k - 1] || m.cols() != ranks_[k])
            throw InputError("boundary " + std::to_string(k) + " has shape " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(ranks_[k - 1]) + "x" +
                             std::to_string(ranks_[k]));
    }
    for (std::size_t k = 2; k < ranks_.size(); ++k)
        if (!(d_[k - 2] * d_[k - 1]).is_zero())
            throw InputError("boundary " + std::to_string(k - 1) + " o boundary " + std::to_string(k) + " is not zero");
}

std::size_t TwistedChainComplex::rank(int k) const
{
    return k < 0 || k > top_dim() ? 0 : ranks_[static_cast<std::size_t>(k)];
}

DenseMatrix TwistedChainComplex::boundary(int k) const
{
    if (k >= 1 && k <= top_dim())
        return d_[static_cast<std::size_t>(k - 1)];
    return DenseMatrix(field_, rank(k - 1), rank(k));
}

TwistedChainComplex chain_complex(const CwComplex& x, const LocalSystem& rho)
{
    const auto& edges = x.edges();
    if (rho.monodromy.size() != edges.size())
        throw InputError("local system has " + std::to_string(rho.monodromy.size()) + " scalars for " +
                         std::to_string(edges.size()) + " edges");
    if (edges.empty() && !x.faces().empty())
        throw InputError("faces without edges");
    const Field f = rho.monodromy.empty() ? Field::rationals() : rho.monodromy.front().field();
    for (const auto& s : rho.monodromy)
        if (s.is_zero() || s.field() != f)
            throw InputError("local system scalars must be nonzero and over one field");

    auto ranks = x.cell_counts();
    std::vector<DenseMatrix> d;
    if (ranks.size() > 1) {
        DenseMatrix d1(f, ranks[0], ranks[1]);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            d1(edges[e].head, e) += rho.monodromy[e];
            d1(edges[e].tail, e) -= Scalar::one(f);
        }
        d.push_back(std::move(d1));
    }
    if (ranks.size() > 2) {
        DenseMatrix d2(f, ranks[1], ranks[2]);
        for (std::size_t j = 0; j < x.faces().size(); ++j) {
            Scalar transport = Scalar::one(f);
            for (const auto& l : x.faces()[j].word) {
                const Scalar& r = rho.monodromy[l.edge];
                if (l.direction > 0) {
                    d2(l.edge, j) += transport;
                    transport *= r;
                } else {
                    transport /= r;
                    d2(l.edge, j) -= transport;
                }
            }
            if (!transport.is_one())
                throw InputError("local system does not extend over face " + x.faces()[j].name);
        }
        d.push_back(std::move(d2));
    }
    return TwistedChainComplex(f, std::move(ranks), std::move(d));
}

void check_chain_map(const TwistedChainComplex& src, const TwistedChainComplex& dst, const ChainMap& f)
{
    const int top = std::max(src.top_dim(), dst.top_dim());
    if (f.maps.size() != static_cast<std::size_t>(top) + 1)
        throw InputError("chain map needs one matrix per degree 0.." + std::to_string(top));
    for (int k = 0; k <= top; ++k) {
        const auto& m = f.maps[static_cast<std::size_t>(k)];
        if (m.rows() != dst.rank(k) || m.cols() != src.rank(k) || m.field() != src.field())
            throw InputError("chain map matrix in degree " + std::to_string(k) + " has the wrong shape or field");
    }
    for (int k = 1; k <= top; ++k)
        if (!(dst.boundary(k) * f.maps[static_cast<std::size_t>(k)] ==
              f.maps[static_cast<std::size_t>(k - 1)] * src.boundary(k)))
            throw InputError("map does not commute with the boundary in degree " + std::to_string(k));
}

ChainMap identity_map(const TwistedChainComplex& c)
{
    ChainMap f;
    for (int k = 0; k <= c.top_dim(); ++k)
        f.maps.push_back(DenseMatrix::identity(c.field(), c.rank(k)));
    return f;
}

std::vector<std::size_t> homology(const TwistedChainComplex& c)
{
    std::vector<std::size_t> b;
    for (int k = 0; k <= c.top_dim(); ++k)
        b.push_back(c.rank(k) - exactalg::rank(c.boundary(k)) - exactalg::rank(c.boundary(k + 1)));
    return b;
}

PoincarePoly betti_polynomial(const TwistedChainComplex& c)
{
    PoincarePoly p;
    auto b = homology(c);
    for (std::size_t k = 0; k < b.size(); ++k)
        p.add(static_cast<int>(k), static_cast<long>(b[k]));
    return p;
}

long euler_characteristic(const std::vector<std::size_t>& dims)
{
    long chi = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        chi += (k % 2 ? -1 : 1) * static_cast<long>(dims[k]);
    return chi;
}

namespace {

exactalg::SubspaceBasis cycles(const TwistedChainComplex& c, int k)
{
    if (c.rank(k) == 0)
        return exactalg::SubspaceBasis(c.field(), 0);
    if (k == 0)
        return exactalg::SubspaceBasis::whole(c.field(), c.rank(0));
    return exactalg::kernel(c.boundary(k));
}

exactalg::SubspaceBasis boundaries(const TwistedChainComplex& c, int k)
{
    auto d = c.boundary(k + 1);
    if (d.cols() == 0)
        return exactalg::SubspaceBasis(c.field(), c.rank(k));
    return exactalg::SubspaceBasis::span(d.transpose());
}

// Coefficients x with x * rows = v; throws if v is not in the row span.
Vector solve_in_rows(const DenseMatrix& rows, const Vector& v)
{
    DenseMatrix aug(rows.field(), rows.cols(), rows.rows() + 1);
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j)
            aug(j, i) = rows(i, j);
    for (std::size_t j = 0; j < rows.cols(); ++j)
        aug(j, rows.rows()) = v[j];
    auto e = exactalg::rref(aug);
    Vector x(rows.rows(), Scalar::zero(rows.field()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == rows.rows())
            throw InvariantViolation("image of a cycle is not a cycle");
        x[e.pivots[r]] = e.rows(r, rows.rows());
    }
    return x;
}

}  // namespace

DenseMatrix homology_basis(const TwistedChainComplex& c, int k)
{
    auto z = cycles(c, k);
    auto b = boundaries(c, k);
    DenseMatrix reps(c.field(), 0, c.rank(k));
    auto span = b;
    for (std::size_t i = 0; i < z.dim(); ++i) {
        auto v = z.basis().row(i);
        if (span.contains(v))
            continue;
        reps.append_row(v);
        DenseMatrix gens = span.basis();
        gens.append_row(v);
        span = exactalg::SubspaceBasis::span(gens);
    }
    return reps;
}

std::vector<DenseMatrix> induced_map(const TwistedChainComplex& src, const TwistedChainComplex& dst, const ChainMap& f)
{
    check_chain_map(src, dst, f);
    std::vector<DenseMatrix> out;
    for (int k = 0; k <= std::max(src.top_dim(), dst.top_dim()); ++k) {
        auto hs = homology_basis(src, k);
        auto ht = homology_basis(dst, k);
        DenseMatrix basis = ht;
        basis.append_rows(boundaries(dst, k).basis());
        DenseMatrix m(src.field(), ht.rows(), hs.rows());
        for (std::size_t j = 0; j < hs.rows(); ++j) {
            auto image = f.maps[static_cast<std::size_t>(k)].apply(hs.row(j));
            auto x = solve_in_rows(basis, image);
            for (std::size_t i = 0; i < ht.rows(); ++i)
                m(i, j) = x[i];
        }
        out.push_back(std::move(m));
    }
    return out;
}

TwistedChainComplex tensor(const TwistedChainComplex& a, const TwistedChainComplex& b)
{
    if (a.field() != b.field())
        throw InputError("tensor product of complexes over different fields");
    const Field f = a.field();
    const int top = a.top_dim() + b.top_dim();
    // offset[n][i]: start of the block C_i (x) C_{n-i} inside degree n
    std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i <= n; ++i) {
            offset[static_cast<std::size_t>(n)].push_back(ranks[static_cast<std::size_t>(n)]);
            ranks[static_cast<std::size_t>(n)] += a.rank(i) * b.rank(n - i);
        }
    auto index = [&](int n, int i, std::size_t r, std::size_t s) {
        return offset[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] + r * b.rank(n - i) + s;
    };
    std::vector<DenseMatrix> d;
    for (int n = 1; n <= top; ++n) {
        DenseMatrix m(f, ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
        for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            const auto da = a.boundary(i);
            const auto db = b.boundary(j);
            const Scalar sign(f, i % 2 ? -1L : 1L);
            for (std::size_t r = 0; r < a.rank(i); ++r)
                for (std::size_t s = 0; s < b.rank(j); ++s) {
                    const auto col = index(n, i, r, s);
                    if (i >= 1)
                        for (std::size_t r2 = 0; r2 < a.rank(i - 1); ++r2)
                            if (!da(r2, r).is_zero())
                                m(index(n - 1, i - 1, r2, s), col) += da(r2, r);
                    if (j >= 1)
                        for (std::size_t s2 = 0; s2 < b.rank(j - 1); ++s2)
                            if (!db(s2, s).is_zero())
                                m(index(n - 1, i, r, s2), col) += sign * db(s2, s);
                }
        }
        d.push_back(std::move(m));
    }
    return TwistedChainComplex(f, std::move(ranks), std::move(d));
}

TwistedChainComplex mapping_torus(const TwistedChainComplex& c, const ChainMap& f, const Scalar& edge_twist)
{
    check_chain_map(c, c, f);
    if (edge_twist.field() != c.field() || edge_twist.is_zero())
        throw InputError("edge twist must be a nonzero scalar over the complex's field");
    const Field fld = c.field();
    const int top = c.top_dim() + 1;
    std::vector<std::size_t> ranks;
    for (int k = 0; k <= top; ++k)
        ranks.push_back(c.rank(k) + c.rank(k - 1));
    std::vector<DenseMatrix> d;
    for (int k = 1; k <= top; ++k) {
        DenseMatrix m(fld, ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
        const std::size_t xk = c.rank(k), xk1 = c.rank(k - 1);
        const auto dk = c.boundary(k);
        for (std::size_t r = 0; r < dk.rows(); ++r)
            for (std::size_t s = 0; s < dk.cols(); ++s)
                m(r, s) = dk(r, s);
        // y in C_{k-1}: ((-1)^{k-1} (tau f - 1) y, d y)
        const Scalar sign(fld, (k - 1) % 2 ? -1L : 1L);
        const auto& fk1 = f.maps[static_cast<std::size_t>(k - 1)];
        for (std::size_t r = 0; r < xk1; ++r)
            for (std::size_t s = 0; s < xk1; ++s) {
                Scalar v = edge_twist * fk1(r, s);
                if (r == s)
                    v -= Scalar::one(fld);
                m(r, xk + s) = sign * v;
            }
        const auto dk1 = c.boundary(k - 1);
        for (std::size_t r = 0; r < dk1.rows(); ++r)
            for (std::size_t s = 0; s < dk1.cols(); ++s)
                m(xk1 + r, xk + s) = dk1(r, s);
        d.push_back(std::move(m));
    }
    return TwistedChainComplex(fld, std::move(ranks), std::move(d));
}

}  // namespace quintic::twisted
