#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quintic/twisted/poincare.hpp"

namespace quintic::ledger {

using twisted::PoincarePoly;

/// One filtration term F_i \ F_{i-1}. k_points is empty for nondiscrete types.
struct ColumnSpec {
    int index;
    std::optional<int> k_points;
    int fiber_dim;
    PoincarePoly base;  // Borel-Moore polynomial of X_i with the sign system
};

/// base shifted by 2 d_i + (k - 1), in total degree p + q.
/// Nondiscrete columns must have a zero base.
PoincarePoly column_contribution(const ColumnSpec& c);

/// Sparse E_{p,q}; only positive dimensions are stored.
class E1Table {
public:
    E1Table() = default;
    E1Table(std::initializer_list<std::pair<const std::pair<int, int>, long>> entries);

    void set(int p, int q, long dim);
    void add(int p, int q, long dim);
    long dim(int p, int q) const;
    bool empty() const { return entries_.empty(); }
    const std::map<std::pair<int, int>, long>& entries() const { return entries_; }

    /// Column p as a polynomial in the total degree p + q.
    PoincarePoly column(int p) const;
    /// Places poly (in total degree) into column p.
    void add_column(int p, const PoincarePoly& total_degree_poly);

    friend bool operator==(const E1Table&, const E1Table&) = default;

private:
    std::map<std::pair<int, int>, long> entries_;
};

/// d_r: E_{p,q} -> E_{p-r,q+r-1} of the given rank.
struct DifferentialDecl {
    std::pair<int, int> source;
    std::pair<int, int> target;
    int page;
    long rank;

    /// Throws InputError unless target = (p - r, q + r - 1), r >= 1, rank >= 0.
    void validate() const;
};

E1Table apply_differentials(const E1Table& t, const std::vector<DifferentialDecl>& decls);
PoincarePoly totalize(const E1Table& t);

/// H^i(complement) from the Borel-Moore polynomial of the discriminant:
/// degree i -> 2D - 1 - i, plus 1 in degree 0.
PoincarePoly alexander_dualize(const PoincarePoly& sigma, int big_d);

/// Poincare polynomial of G_k(C^{n+1}): the Gaussian binomial [n+1 choose k] in t^2.
PoincarePoly grassmann_poincare(int k, int n);

}  // namespace quintic::ledger
