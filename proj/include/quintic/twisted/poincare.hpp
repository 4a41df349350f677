#pragma once

#include <map>
#include <string>
#include <string_view>

namespace quintic::twisted {

/// Polynomial in t with nonnegative integer coefficients; zero terms are not stored.
class PoincarePoly {
public:
    PoincarePoly() = default;
    PoincarePoly(std::initializer_list<std::pair<const int, long>> terms);

    static PoincarePoly monomial(int degree, long coeff = 1);
    /// Parses "1 + t + 2t^3" (also "0", "t^2", "3*t^5").
    static PoincarePoly parse(std::string_view text);

    const std::map<int, long>& terms() const { return terms_; }
    long coeff(int degree) const;
    void add(int degree, long coeff);
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    int min_degree() const;

    PoincarePoly shifted(int by) const;
    /// p(t^2).
    PoincarePoly in_square() const;

    PoincarePoly& operator+=(const PoincarePoly& o);
    friend PoincarePoly operator+(PoincarePoly a, const PoincarePoly& b) { return a += b; }
    friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b);
    friend PoincarePoly operator*(long s, const PoincarePoly& p);
    friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

    /// Ascending: "1 + t + 2t^3"; "0" when empty.
    std::string to_string() const;

private:
    std::map<int, long> terms_;
};

/// t^{2n} p(1/t): Borel-Moore Poincare polynomial of an oriented 2n-manifold
/// from its cohomology (or the converse). Throws if deg p > 2n.
PoincarePoly poincare_dual(const PoincarePoly& p, int complex_dim);

}  // namespace quintic::twisted
