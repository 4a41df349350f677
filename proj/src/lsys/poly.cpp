#include "quintic/lsys/poly.hpp"

#include "quintic/errors.hpp"

namespace quintic::lsys {

std::vector<Exponent> monomial_basis(int d)
{
    if (d < 0)
        throw InputError("monomial_basis(): negative degree");
    std::vector<Exponent> out;
    out.reserve(monomial_count(d));
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            out.push_back({a, b, d - a - b});
    return out;
}

std::size_t monomial_index(const Exponent& e)
{
    // monomials with x-exponent > a come first: sum_{a' > a} (d - a' + 1)
    const int d = e[0] + e[1] + e[2];
    const int k = d - e[0];
    return static_cast<std::size_t>(k * (k + 1) / 2 + (k - e[1]));
}

HomogeneousPoly::HomogeneousPoly(Field field, int degree) : field_(field), degree_(degree)
{
    if (degree < 0)
        throw InputError("polynomial degree must be nonnegative");
}

HomogeneousPoly HomogeneousPoly::monomial(Field field, const Exponent& e, Scalar c)
{
    HomogeneousPoly p(field, e[0] + e[1] + e[2]);
    p.set(e, std::move(c));
    return p;
}

HomogeneousPoly HomogeneousPoly::from_vector(Field field, int degree, std::span<const Scalar> coords)
{
    HomogeneousPoly p(field, degree);
    auto basis = monomial_basis(degree);
    if (coords.size() != basis.size())
        throw InputError("coordinate vector has " + std::to_string(coords.size()) + " entries, expected " +
                         std::to_string(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        p.set(basis[i], coords[i]);
    return p;
}

HomogeneousPoly HomogeneousPoly::linear_form(const projgeom::ProjLine& l)
{
    HomogeneousPoly p(l.field(), 1);
    p.set({1, 0, 0}, l[0]);
    p.set({0, 1, 0}, l[1]);
    p.set({0, 0, 1}, l[2]);
    return p;
}

HomogeneousPoly HomogeneousPoly::quadratic_form(const projgeom::Conic& q)
{
    static constexpr std::array<Exponent, 6> order{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    HomogeneousPoly p(q.field(), 2);
    for (std::size_t i = 0; i < 6; ++i)
        p.set(order[i], q.coeffs()[i]);
    return p;
}

Scalar HomogeneousPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void HomogeneousPoly::set(const Exponent& e, Scalar c)
{
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
        throw InputError("exponent does not match polynomial degree " + std::to_string(degree_));
    if (c.field() != field_)
        throw InputError("coefficient over " + c.field().to_string() + " in polynomial over " + field_.to_string());
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

Vector HomogeneousPoly::to_vector() const
{
    Vector v(monomial_count(degree_), Scalar::zero(field_));
    for (const auto& [e, c] : terms_)
        v[monomial_index(e)] = c;
    return v;
}

HomogeneousPoly HomogeneousPoly::derivative(int var) const
{
    if (var < 0 || var > 2)
        throw InputError("derivative variable must be 0, 1 or 2");
    if (degree_ == 0)
        return HomogeneousPoly(field_, 0);
    HomogeneousPoly out(field_, degree_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponent f = e;
        --f[var];
        out.set(f, c * Scalar(field_, static_cast<long>(e[var])));
    }
    return out;
}

Scalar HomogeneousPoly::evaluate(const std::array<Scalar, 3>& v) const
{
    std::array<std::vector<Scalar>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        if (v[i].field() != field_)
            throw InputError("evaluation point over a different field");
        powers[i].push_back(Scalar::one(field_));
        for (int k = 1; k <= degree_; ++k)
            powers[i].push_back(powers[i].back() * v[i]);
    }
    Scalar total = Scalar::zero(field_);
    for (const auto& [e, c] : terms_)
        total += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    return total;
}

HomogeneousPoly HomogeneousPoly::pow(int m) const
{
    if (m < 0)
        throw InputError("negative power");
    HomogeneousPoly out = monomial(field_, {0, 0, 0}, Scalar::one(field_));
    for (int i = 0; i < m; ++i)
        out = out * *this;
    return out;
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& o)
{
    if (o.field_ != field_ || o.degree_ != degree_)
        throw InputError("adding polynomials of different degree or field");
    for (const auto& [e, c] : o.terms_)
        set(e, coeff(e) + c);
    return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(const Scalar& s)
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= s;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b)
{
    if (a.field_ != b.field_)
        throw InputError("multiplying polynomials over different fields");
    HomogeneousPoly out(a.field_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            out.set(e, out.coeff(e) + ca * cb);
        }
    return out;
}

std::string HomogeneousPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    static constexpr char names[3] = {'x', 'y', 'z'};
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")";
        for (int i = 0; i < 3; ++i)
            if (e[i] == 1)
                s += std::string("*") + names[i];
            else if (e[i] > 1)
                s += std::string("*") + names[i] + "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace quintic::lsys
