#include "quintic/projgeom/geometry.hpp"

#include <algorithm>
#include <set>

#include "quintic/errors.hpp"
#include "quintic/exactalg/linalg.hpp"

namespace quintic::projgeom {

using exactalg::DenseMatrix;
using exactalg::Vector;

namespace {

template <std::size_t N>
void normalize(std::array<Scalar, N>& c, const char* what)
{
    const Field f = c[0].field();
    for (const auto& x : c)
        if (x.field() != f)
            throw InputError(std::string("mixed field tags in ") + what);
    auto lead = std::find_if(c.begin(), c.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (lead == c.end())
        throw InputError(std::string(what) + " with all coordinates zero");
    Scalar inv = lead->inverse();
    for (auto& x : c)
        x *= inv;
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar det3(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b, const std::array<Scalar, 3>& c)
{
    auto x = cross(b, c);
    return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

}  // namespace

Triple::Triple(Scalar a, Scalar b, Scalar c) : c_{std::move(a), std::move(b), std::move(c)}
{
    normalize(c_, "projective triple");
}

std::string Triple::to_string() const
{
    return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

bool operator<(const Triple& a, const Triple& b)
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (a.c_[i] < b.c_[i])
            return true;
        if (b.c_[i] < a.c_[i])
            return false;
    }
    return false;
}

Conic::Conic(std::array<Scalar, 6> coeffs) : c_(std::move(coeffs))
{
    normalize(c_, "conic");
}

Scalar Conic::evaluate(const std::array<Scalar, 3>& v) const
{
    const auto& [x, y, z] = v;
    return c_[0] * x * x + c_[1] * y * y + c_[2] * z * z + c_[3] * x * y + c_[4] * x * z + c_[5] * y * z;
}

Scalar Conic::evaluate(const ProjPoint& p) const
{
    return evaluate(p.coords());
}

Scalar Conic::polar2(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) const
{
    const Scalar two = Scalar(field(), 2L);
    return two * (c_[0] * u[0] * v[0] + c_[1] * u[1] * v[1] + c_[2] * u[2] * v[2]) +
           c_[3] * (u[0] * v[1] + u[1] * v[0]) + c_[4] * (u[0] * v[2] + u[2] * v[0]) +
           c_[5] * (u[1] * v[2] + u[2] * v[1]);
}

Scalar Conic::discriminant4() const
{
    const auto& [a, b, c, d, e, f] = c_;
    return Scalar(field(), 4L) * a * b * c + d * e * f - a * f * f - b * e * e - c * d * d;
}

std::string Conic::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < 6; ++i)
        s += (i ? ", " : "") + c_[i].to_string();
    return s + "]";
}

bool incident(const ProjPoint& pt, const ProjLine& ln)
{
    if (pt.field() != ln.field())
        throw InputError("point and line over different fields");
    return (pt[0] * ln[0] + pt[1] * ln[1] + pt[2] * ln[2]).is_zero();
}

bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3)
{
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw InputError("collinear() needs three distinct points");
    return det3(p1.coords(), p2.coords(), p3.coords()).is_zero();
}

std::array<Scalar, 6> veronese(const ProjPoint& p)
{
    const auto& [x, y, z] = p.coords();
    return {x * x, y * y, z * z, x * y, x * z, y * z};
}

namespace {

DenseMatrix veronese_matrix(std::span<const ProjPoint> pts)
{
    DenseMatrix m(pts.front().field(), 0, 6);
    for (const auto& p : pts) {
        auto v = veronese(p);
        m.append_row(v);
    }
    return m;
}

}  // namespace

bool on_common_conic(std::span<const ProjPoint> pts)
{
    if (pts.size() != 6)
        throw InputError("on_common_conic() needs exactly six points, got " + std::to_string(pts.size()));
    std::set<ProjPoint> distinct(pts.begin(), pts.end());
    if (distinct.size() != 6)
        throw InputError("on_common_conic() needs six distinct points");
    return exactalg::rank(veronese_matrix(pts)) < 6;
}

bool lie_on_conic(std::span<const ProjPoint> pts)
{
    if (pts.empty())
        return true;
    return exactalg::rank(veronese_matrix(pts)) < 6;
}

std::array<ProjPoint, 2> points_of(const ProjLine& ln)
{
    DenseMatrix m(ln.field(), 0, 3);
    m.append_row(ln.coords());
    auto k = exactalg::kernel(m);
    return {ProjPoint(k.basis()(0, 0), k.basis()(0, 1), k.basis()(0, 2)),
            ProjPoint(k.basis()(1, 0), k.basis()(1, 1), k.basis()(1, 2))};
}

bool tangent(const Conic& c, const ProjLine& ln)
{
    if (c.field() != ln.field())
        throw InputError("conic and line over different fields");
    auto [u, v] = points_of(ln);
    Scalar cu = c.evaluate(u), cv = c.evaluate(v), b2 = c.polar2(u.coords(), v.coords());
    if (cu.is_zero() && cv.is_zero() && b2.is_zero())
        throw InputError("line is a component of the conic; restriction is identically zero");
    return (b2 * b2 - Scalar(c.field(), 4L) * cu * cv).is_zero();
}

ProjLine line_through(const ProjPoint& a, const ProjPoint& b)
{
    if (a == b)
        throw InputError("line_through() needs distinct points");
    auto l = cross(a.coords(), b.coords());
    return ProjLine(l[0], l[1], l[2]);
}

ProjPoint meet(const ProjLine& a, const ProjLine& b)
{
    if (a == b)
        throw InputError("meet() needs distinct lines");
    auto p = cross(a.coords(), b.coords());
    return ProjPoint(p[0], p[1], p[2]);
}

Conic conic_through(std::span<const ProjPoint> five)
{
    if (five.size() != 5)
        throw InputError("conic_through() needs five points");
    auto k = exactalg::kernel(veronese_matrix(five));
    if (k.dim() != 1)
        throw InputError("five points do not determine a unique conic");
    const auto& b = k.basis();
    return Conic({b(0, 0), b(0, 1), b(0, 2), b(0, 3), b(0, 4), b(0, 5)});
}

ProjPoint second_intersection(const Conic& c, const ProjPoint& p, const ProjPoint& r)
{
    if (!c.evaluate(p).is_zero())
        throw InputError("second_intersection(): base point is not on the conic");
    if (p == r)
        throw InputError("second_intersection(): direction point equals base point");
    // C(p + l r) = 2l B(p,r) + l^2 C(r) = 0  =>  l = -2B/C(r); scale by C(r).
    Scalar cr = c.evaluate(r), b2 = c.polar2(p.coords(), r.coords());
    if (cr.is_zero() && b2.is_zero())
        throw InputError("second_intersection(): line lies in the conic");
    if (cr.is_zero())
        return r;
    return ProjPoint(cr * p[0] - b2 * r[0], cr * p[1] - b2 * r[1], cr * p[2] - b2 * r[2]);
}

std::vector<std::vector<std::size_t>> collinear_subsets(std::span<const ProjPoint> pts)
{
    std::set<std::vector<std::size_t>> lines;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> on{i, j};
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j && det3(pts[i].coords(), pts[j].coords(), pts[k].coords()).is_zero())
                    on.push_back(k);
            if (on.size() >= 3) {
                std::sort(on.begin(), on.end());
                lines.insert(on);
            }
        }
    return {lines.begin(), lines.end()};
}

ProjPoint transform(const std::array<Scalar, 9>& m, const ProjPoint& p)
{
    return ProjPoint(m[0] * p[0] + m[1] * p[1] + m[2] * p[2], m[3] * p[0] + m[4] * p[1] + m[5] * p[2],
                     m[6] * p[0] + m[7] * p[1] + m[8] * p[2]);
}

}  // namespace quintic::projgeom
