#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "quintic/exactalg/scalar.hpp"

namespace quintic::projgeom {

using exactalg::Field;
using exactalg::Scalar;

/// Homogeneous triple, scaled so that its first nonzero entry is 1.
class Triple {
public:
    Triple(Scalar a, Scalar b, Scalar c);

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Scalar, 3>& coords() const { return c_; }
    Field field() const { return c_[0].field(); }

    std::string to_string() const;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend bool operator<(const Triple& a, const Triple& b);

private:
    std::array<Scalar, 3> c_;
};

struct ProjPoint : Triple {
    using Triple::Triple;
};

/// Line {a x + b y + c z = 0}.
struct ProjLine : Triple {
    using Triple::Triple;
};

/// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz, normalized like Triple.
class Conic {
public:
    explicit Conic(std::array<Scalar, 6> coeffs);

    const std::array<Scalar, 6>& coeffs() const { return c_; }
    Field field() const { return c_[0].field(); }

    Scalar evaluate(const ProjPoint& p) const;
    Scalar evaluate(const std::array<Scalar, 3>& v) const;

    /// Twice the polar form: 2 B(u, v), so that C(u + v) = C(u) + 2B(u,v) + C(v).
    Scalar polar2(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) const;

    /// 4 * det of the symmetric 3x3 matrix; zero iff degenerate.
    Scalar discriminant4() const;
    bool degenerate() const { return discriminant4().is_zero(); }

    std::string to_string() const;

    friend bool operator==(const Conic&, const Conic&) = default;

private:
    std::array<Scalar, 6> c_;
};

bool incident(const ProjPoint& pt, const ProjLine& ln);

/// Throws InputError if two of the points coincide.
bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

/// Exactly six distinct points; true iff the 6x6 Veronese determinant vanishes.
bool on_common_conic(std::span<const ProjPoint> pts);

/// True iff the points (any number) lie on at least one conic.
bool lie_on_conic(std::span<const ProjPoint> pts);

/// True iff the conic restricted to the line has a double root. Throws InputError
/// when the line is a component of the conic.
bool tangent(const Conic& c, const ProjLine& ln);

ProjLine line_through(const ProjPoint& a, const ProjPoint& b);
ProjPoint meet(const ProjLine& a, const ProjLine& b);

/// The unique conic through five points; throws InputError if it is not unique.
Conic conic_through(std::span<const ProjPoint> five);

/// Given p on the conic and a direction point r, the other intersection of
/// line(p, r) with the conic; equals p when the line is tangent there.
/// Throws InputError if the line lies in the conic.
ProjPoint second_intersection(const Conic& c, const ProjPoint& p, const ProjPoint& r);

/// Two points spanning the line.
std::array<ProjPoint, 2> points_of(const ProjLine& ln);

std::array<Scalar, 6> veronese(const ProjPoint& p);

/// Maximal collinear subsets with at least three points, as sorted index
/// lists, in lexicographic order.
std::vector<std::vector<std::size_t>> collinear_subsets(std::span<const ProjPoint> pts);

/// Apply an invertible 3x3 matrix (row-major) to a point's coordinates.
ProjPoint transform(const std::array<Scalar, 9>& m, const ProjPoint& p);

}  // namespace quintic::projgeom
