#include "quintic/ledger/spectral.hpp"

#include <string>

#include "quintic/errors.hpp"

namespace quintic::ledger {

namespace {

std::string cell(std::pair<int, int> pq)
{
    return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
}

}  // namespace

PoincarePoly column_contribution(const ColumnSpec& c)
{
    if (!c.k_points) {
        if (!c.base.is_zero())
            throw Unsupported("column " + std::to_string(c.index) + " is nondiscrete with a nonzero base");
        return {};
    }
    if (*c.k_points < 1 || c.fiber_dim < 0)
        throw InputError("column " + std::to_string(c.index) + ": bad k or d");
    return c.base.shifted(2 * c.fiber_dim + (*c.k_points - 1));
}

E1Table::E1Table(std::initializer_list<std::pair<const std::pair<int, int>, long>> entries)
{
    for (const auto& [pq, d] : entries)
        add(pq.first, pq.second, d);
}

void E1Table::set(int p, int q, long dim)
{
    if (dim < 0)
        throw InputError("negative dimension at " + cell({p, q}));
    if (dim == 0)
        entries_.erase({p, q});
    else
        entries_[{p, q}] = dim;
}

void E1Table::add(int p, int q, long dim) { set(p, q, this->dim(p, q) + dim); }

long E1Table::dim(int p, int q) const
{
    auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second;
}

PoincarePoly E1Table::column(int p) const
{
    PoincarePoly out;
    for (const auto& [pq, d] : entries_)
        if (pq.first == p)
            out.add(pq.first + pq.second, d);
    return out;
}

void E1Table::add_column(int p, const PoincarePoly& total_degree_poly)
{
    for (const auto& [deg, c] : total_degree_poly.terms())
        add(p, deg - p, c);
}

void DifferentialDecl::validate() const
{
    if (page < 1)
        throw InputError("differential page must be >= 1");
    if (rank < 0)
        throw InputError("differential rank must be >= 0");
    if (target != std::pair{source.first - page, source.second + page - 1})
        throw InputError("d_" + std::to_string(page) + " from " + cell(source) + " cannot land in " + cell(target));
}

E1Table apply_differentials(const E1Table& t, const std::vector<DifferentialDecl>& decls)
{
    E1Table out = t;
    for (const auto& d : decls) {
        d.validate();
        const long s = out.dim(d.source.first, d.source.second);
        const long r = out.dim(d.target.first, d.target.second);
        if (d.rank > std::min(s, r))
            throw InputError("rank " + std::to_string(d.rank) + " exceeds dimensions at " + cell(d.source) + " -> " +
                             cell(d.target));
        out.set(d.source.first, d.source.second, s - d.rank);
        out.set(d.target.first, d.target.second, r - d.rank);
    }
    return out;
}

PoincarePoly totalize(const E1Table& t)
{
    PoincarePoly out;
    for (const auto& [pq, d] : t.entries())
        out.add(pq.first + pq.second, d);
    return out;
}

PoincarePoly alexander_dualize(const PoincarePoly& sigma, int big_d)
{
    const int top = 2 * big_d - 1;
    PoincarePoly out{{0, 1}};
    for (const auto& [deg, c] : sigma.terms()) {
        if (deg <= 0 || deg >= top)
            throw InputError("degree " + std::to_string(deg) + " outside the duality range (0, " + std::to_string(top) + ")");
        out.add(top - deg, c);
    }
    return out;
}

PoincarePoly grassmann_poincare(int k, int n)
{
    if (n < 0 || k < 1 || k > n + 1)
        throw InputError("Grassmannian G_k(C^{n+1}) needs 1 <= k <= n+1");
    // prod_{i=1..k} (1 - q^{n+2-i}) / (1 - q^i), q = t^2, as integer coefficient lists
    std::vector<long> num{1};
    auto times = [](std::vector<long> a, int e, int sign) {
        std::vector<long> r(a.size() + static_cast<std::size_t>(e), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] += a[i];
            r[i + static_cast<std::size_t>(e)] += sign * a[i];
        }
        return r;
    };
    for (int i = 1; i <= k; ++i)
        num = times(num, n + 2 - i, -1);
    for (int i = 1; i <= k; ++i) {
        // exact division by (1 - q^i)
        std::vector<long> quo(num.size() - static_cast<std::size_t>(i), 0);
        for (std::size_t j = 0; j < quo.size(); ++j) {
            quo[j] = num[j];
            num[j + static_cast<std::size_t>(i)] += num[j];
        }
        num = quo;
    }
    PoincarePoly out;
    for (std::size_t j = 0; j < num.size(); ++j) {
        if (num[j] < 0)
            throw InvariantViolation("negative Gaussian binomial coefficient");
        out.add(2 * static_cast<int>(j), num[j]);
    }
    return out;
}

}  // namespace quintic::ledger
