#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quintic/exactalg/linalg.hpp"
#include "quintic/twisted/poincare.hpp"

namespace quintic::twisted {

using exactalg::DenseMatrix;
using exactalg::Field;
using exactalg::Scalar;
using exactalg::Vector;

/// Letter of an attaching word: a 1-cell traversed forward (+1) or backward (-1).
struct Letter {
    std::size_t edge;
    int direction;
};

/// Finite CW complex of dimension <= 2 given by its 1-skeleton graph and the
/// attaching words of its 2-cells.
class CwComplex {
public:
    struct Edge {
        std::string name;
        std::size_t tail, head;
    };
    struct Face {
        std::string name;
        std::vector<Letter> word;
    };

    std::size_t add_vertex(std::string name);
    std::size_t add_edge(std::string name, std::size_t tail, std::size_t head);
    /// The word must be a closed edge path.
    std::size_t add_face(std::string name, std::vector<Letter> word);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    std::vector<std::size_t> cell_counts() const;

    std::size_t vertex_index(const std::string& name) const;
    std::size_t edge_index(const std::string& name) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
};

/// Rank-1 system: a nonzero transport scalar for every 1-cell.
struct LocalSystem {
    std::vector<Scalar> monodromy;

    static LocalSystem trivial(const CwComplex& x, Field field = Field::rationals());
};

/// Chain complex C_0 <- C_1 <- ... with boundary(k): C_k -> C_{k-1} acting on
/// column vectors. Construction checks that consecutive boundaries compose to zero.
class TwistedChainComplex {
public:
    TwistedChainComplex(Field field, std::vector<std::size_t> ranks, std::vector<DenseMatrix> boundaries);

    const Field& field() const { return field_; }
    int top_dim() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int k) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    /// rank(k-1) x rank(k); a zero matrix outside 1..top_dim.
    DenseMatrix boundary(int k) const;

private:
    Field field_;
    std::vector<std::size_t> ranks_;
    std::vector<DenseMatrix> d_;  // d_[k-1] = boundary(k)
};

/// Twisted cellular chains. A 1-cell e has boundary rho(e) head - tail; a
/// forward letter of a 2-cell word after prefix P contributes rho(P) e, a
/// backward one -rho(P) rho(e)^{-1} e. Throws if rho(word) != 1 for some face.
TwistedChainComplex chain_complex(const CwComplex& x, const LocalSystem& rho);

/// Per-degree matrices f_k: C_k -> C'_k (rank'(k) x rank(k)).
struct ChainMap {
    std::vector<DenseMatrix> maps;
};

/// Throws InputError unless f commutes with the boundaries.
void check_chain_map(const TwistedChainComplex& src, const TwistedChainComplex& dst, const ChainMap& f);
ChainMap identity_map(const TwistedChainComplex& c);

std::vector<std::size_t> homology(const TwistedChainComplex& c);
PoincarePoly betti_polynomial(const TwistedChainComplex& c);
long euler_characteristic(const std::vector<std::size_t>& dims);

/// Representatives of a basis of H_k, as rows.
DenseMatrix homology_basis(const TwistedChainComplex& c, int k);

/// Matrices of f on H_k in the bases of homology_basis (dim H_k(dst) x dim H_k(src)).
std::vector<DenseMatrix> induced_map(const TwistedChainComplex& src, const TwistedChainComplex& dst, const ChainMap& f);

/// d(a (x) b) = da (x) b + (-1)^{deg a} a (x) db. Basis of degree n: pairs
/// (i, j) with i + j = n in increasing i, then row-major in (a, b).
TwistedChainComplex tensor(const TwistedChainComplex& a, const TwistedChainComplex& b);

/// C'_k = C_k + C_{k-1}, d'(x, 0) = (dx, 0),
/// d'(0, y) = ((-1)^{|y|} (edge_twist f(y) - y), dy).
TwistedChainComplex mapping_torus(const TwistedChainComplex& c, const ChainMap& f, const Scalar& edge_twist);

}  // namespace quintic::twisted
