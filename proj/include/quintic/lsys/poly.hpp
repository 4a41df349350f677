#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "quintic/exactalg/matrix.hpp"
#include "quintic/projgeom/geometry.hpp"

namespace quintic::lsys {

using exactalg::Field;
using exactalg::Scalar;
using exactalg::Vector;
using projgeom::ProjPoint;

/// Exponents of x, y, z.
using Exponent = std::array<int, 3>;

/// All exponent triples of total degree d, graded-lex with x > y > z:
/// x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ..., z^d.
std::vector<Exponent> monomial_basis(int d);

/// Position of `e` in monomial_basis(e[0]+e[1]+e[2]).
std::size_t monomial_index(const Exponent& e);

inline std::size_t monomial_count(int d) { return d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2); }

class HomogeneousPoly {
public:
    HomogeneousPoly(Field field, int degree);

    static HomogeneousPoly monomial(Field field, const Exponent& e, Scalar c);
    static HomogeneousPoly from_vector(Field field, int degree, std::span<const Scalar> coords);
    static HomogeneousPoly linear_form(const projgeom::ProjLine& l);
    static HomogeneousPoly quadratic_form(const projgeom::Conic& q);

    const Field& field() const { return field_; }
    int degree() const { return degree_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Exponent& e) const;
    void set(const Exponent& e, Scalar c);

    /// Coordinates in monomial_basis(degree()).
    Vector to_vector() const;

    HomogeneousPoly derivative(int var) const;
    Scalar evaluate(const std::array<Scalar, 3>& v) const;
    Scalar evaluate(const ProjPoint& p) const { return evaluate(p.coords()); }
    HomogeneousPoly pow(int m) const;

    HomogeneousPoly& operator+=(const HomogeneousPoly& o);
    HomogeneousPoly& operator*=(const Scalar& s);
    friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
    friend HomogeneousPoly operator*(HomogeneousPoly a, const Scalar& s) { return a *= s; }

    friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

    std::string to_string() const;

private:
    Field field_;
    int degree_;
    std::map<Exponent, Scalar> terms_;
};

}  // namespace quintic::lsys
