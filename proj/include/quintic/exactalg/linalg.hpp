#pragma once

#include <cstddef>
#include <vector>

#include "quintic/exactalg/matrix.hpp"

namespace quintic::exactalg {

/// Reduced row echelon form: nonzero rows only, leading coefficient 1,
/// pivot columns strictly increasing.
struct Echelon {
    DenseMatrix rows;
    std::vector<std::size_t> pivots;
};

/// Linear subspace of F^n stored as the reduced echelon basis of its span.
/// Two subspaces are equal iff their stored bases are equal.
class SubspaceBasis {
public:
    SubspaceBasis(Field field, std::size_t ambient_dim);

    /// Span of the rows of `generators` (need not be independent).
    static SubspaceBasis span(const DenseMatrix& generators);
    static SubspaceBasis whole(Field field, std::size_t ambient_dim);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const DenseMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Scalar> v) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    explicit SubspaceBasis(Echelon e);

    DenseMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Rank via fraction-free (Bareiss) elimination over Q, plain Gaussian
/// elimination over F_p.
std::size_t rank(const DenseMatrix& m);

Echelon rref(const DenseMatrix& m);

/// Null space {v : m v = 0}, echelonized; dim = cols - rank.
SubspaceBasis kernel(const DenseMatrix& m);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);

/// Vectors w with w.v = 0 for every v in s.
SubspaceBasis annihilator(const SubspaceBasis& s);

}  // namespace quintic::exactalg
