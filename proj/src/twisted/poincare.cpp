#include "quintic/twisted/poincare.hpp"

#include <cctype>
#include <charconv>

#include "quintic/errors.hpp"

namespace quintic::twisted {

PoincarePoly::PoincarePoly(std::initializer_list<std::pair<const int, long>> terms)
{
    for (const auto& [d, c] : terms)
        add(d, c);
}

PoincarePoly PoincarePoly::monomial(int degree, long coeff)
{
    PoincarePoly p;
    p.add(degree, coeff);
    return p;
}

long PoincarePoly::coeff(int degree) const
{
    auto it = terms_.find(degree);
    return it == terms_.end() ? 0 : it->second;
}

void PoincarePoly::add(int degree, long coeff)
{
    if (degree < 0)
        throw InputError("negative degree " + std::to_string(degree) + " in Poincare polynomial");
    long total = this->coeff(degree) + coeff;
    if (total < 0)
        throw InputError("negative coefficient at degree " + std::to_string(degree));
    if (total == 0)
        terms_.erase(degree);
    else
        terms_[degree] = total;
}

int PoincarePoly::max_degree() const
{
    if (terms_.empty())
        throw InputError("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

int PoincarePoly::min_degree() const
{
    if (terms_.empty())
        throw InputError("degree of the zero polynomial");
    return terms_.begin()->first;
}

PoincarePoly PoincarePoly::shifted(int by) const
{
    PoincarePoly out;
    for (const auto& [d, c] : terms_)
        out.add(d + by, c);
    return out;
}

PoincarePoly PoincarePoly::in_square() const
{
    PoincarePoly out;
    for (const auto& [d, c] : terms_)
        out.add(2 * d, c);
    return out;
}

PoincarePoly& PoincarePoly::operator+=(const PoincarePoly& o)
{
    for (const auto& [d, c] : o.terms_)
        add(d, c);
    return *this;
}

PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b)
{
    PoincarePoly out;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_)
            out.add(da + db, ca * cb);
    return out;
}

PoincarePoly operator*(long s, const PoincarePoly& p)
{
    if (s < 0)
        throw InputError("negative scale factor for a Poincare polynomial");
    PoincarePoly out;
    for (const auto& [d, c] : p.terms_)
        out.add(d, s * c);
    return out;
}

std::string PoincarePoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
        if (!s.empty())
            s += " + ";
        if (d == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1)
            s += std::to_string(c);
        s += "t";
        if (d != 1)
            s += "^" + std::to_string(d);
    }
    return s;
}

PoincarePoly PoincarePoly::parse(std::string_view text)
{
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            compact += ch;
    if (compact.empty())
        throw InputError("empty polynomial text");
    PoincarePoly out;
    if (compact == "0")
        return out;
    std::size_t pos = 0;
    auto read_int = [&](long& v) {
        const char* begin = compact.data() + pos;
        auto [end, ec] = std::from_chars(begin, compact.data() + compact.size(), v);
        if (ec != std::errc())
            return false;
        pos += static_cast<std::size_t>(end - begin);
        return true;
    };
    while (pos < compact.size()) {
        long coeff = 1, degree = 0;
        bool has_coeff = read_int(coeff);
        if (pos < compact.size() && compact[pos] == '*')
            ++pos;
        if (pos < compact.size() && compact[pos] == 't') {
            ++pos;
            degree = 1;
            if (pos < compact.size() && compact[pos] == '^') {
                ++pos;
                if (!read_int(degree))
                    throw InputError("bad exponent in polynomial '" + std::string(text) + "'");
            }
        } else if (!has_coeff) {
            throw InputError("cannot parse polynomial '" + std::string(text) + "'");
        }
        out.add(static_cast<int>(degree), coeff);
        if (pos < compact.size()) {
            if (compact[pos] != '+')
                throw InputError("unexpected '" + std::string(1, compact[pos]) + "' in polynomial '" +
                                 std::string(text) + "'");
            ++pos;
        }
    }
    return out;
}

PoincarePoly poincare_dual(const PoincarePoly& p, int complex_dim)
{
    if (complex_dim < 0)
        throw InputError("negative complex dimension");
    PoincarePoly out;
    for (const auto& [d, c] : p.terms()) {
        if (d > 2 * complex_dim)
            throw InputError("degree " + std::to_string(d) + " exceeds real dimension " + std::to_string(2 * complex_dim));
        out.add(2 * complex_dim - d, c);
    }
    return out;
}

}  // namespace quintic::twisted
