#include "quintic/lsys/singular.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "quintic/errors.hpp"

namespace quintic::lsys {

namespace {

using Triple64 = std::array<std::uint64_t, 3>;

struct ModTerm {
    Exponent e;
    std::uint64_t c;
};

struct Gradient {
    std::uint64_t p;
    int degree;  // degree of each partial
    std::array<std::vector<ModTerm>, 3> parts;

    explicit Gradient(const HomogeneousPoly& f) : p(f.field().modulus()), degree(f.degree() - 1)
    {
        for (int v = 0; v < 3; ++v) {
            auto dv = f.derivative(v);
            for (const auto& [e, c] : dv.terms())
                parts[v].push_back({e, c.residue_value()});
        }
    }

    bool vanishes(const Triple64& pt, std::vector<std::uint64_t>& pw) const
    {
        const std::size_t stride = static_cast<std::size_t>(degree) + 1;
        for (int i = 0; i < 3; ++i) {
            pw[i * stride] = 1;
            for (std::size_t k = 1; k < stride; ++k)
                pw[i * stride + k] = pw[i * stride + k - 1] * pt[i] % p;
        }
        for (const auto& part : parts) {
            std::uint64_t s = 0;
            for (const auto& t : part)
                s = (s + t.c * (pw[t.e[0]] * pw[stride + t.e[1]] % p) % p * pw[2 * stride + t.e[2]]) % p;
            if (s != 0)
                return false;
        }
        return true;
    }
};

// Slice s < p holds (1:s:z); slice p holds (0:1:z) and (0:0:1).
void scan_slice(const Gradient& g, std::uint64_t s, std::vector<Triple64>& out)
{
    std::vector<std::uint64_t> pw(3 * (static_cast<std::size_t>(g.degree) + 1));
    const std::uint64_t p = g.p;
    if (s < p) {
        for (std::uint64_t z = 0; z < p; ++z)
            if (g.vanishes({1, s, z}, pw))
                out.push_back({1, s, z});
        return;
    }
    for (std::uint64_t z = 0; z < p; ++z)
        if (g.vanishes({0, 1, z}, pw))
            out.push_back({0, 1, z});
    if (g.vanishes({0, 0, 1}, pw))
        out.push_back({0, 0, 1});
}

std::vector<Triple64> scan(const Gradient& g, Execution exec)
{
    const std::uint64_t p = g.p;
    std::vector<std::vector<Triple64>> slices(p + 1);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long s = 0; s <= static_cast<long long>(p); ++s)
            scan_slice(g, static_cast<std::uint64_t>(s), slices[static_cast<std::size_t>(s)]);
    } else {
        for (std::uint64_t s = 0; s <= p; ++s)
            scan_slice(g, s, slices[s]);
    }
    std::vector<Triple64> all;
    for (auto& s : slices)
        all.insert(all.end(), s.begin(), s.end());
    return all;
}

Triple64 normalized(Triple64 v, std::uint64_t p)
{
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    std::uint64_t inv = exactalg::mod_inverse(*lead, p);
    for (auto& x : v)
        x = x * inv % p;
    return v;
}

Triple64 cross(const Triple64& a, const Triple64& b, std::uint64_t p)
{
    auto sub = [p](std::uint64_t x, std::uint64_t y) { return (x + p - y) % p; };
    return {sub(a[1] * b[2] % p, a[2] * b[1] % p), sub(a[2] * b[0] % p, a[0] * b[2] % p),
            sub(a[0] * b[1] % p, a[1] * b[0] % p)};
}

bool on_line(const Triple64& pt, const Triple64& l, std::uint64_t p)
{
    return (pt[0] * l[0] + pt[1] * l[1] % p + pt[2] * l[2] % p) % p == 0;
}

struct TripleHash {
    std::size_t operator()(const Triple64& t) const
    {
        return std::hash<std::uint64_t>{}(t[0] * 0x9E3779B97F4A7C15ULL ^ t[1] * 0xC2B2AE3D27D4EB4FULL ^ t[2]);
    }
};

ProjPoint to_point(const Triple64& t, std::uint64_t p)
{
    return ProjPoint(Scalar::residue(t[0], p), Scalar::residue(t[1], p), Scalar::residue(t[2], p));
}

// Lines all of whose p+1 points are singular. Each uncovered point is tested
// against every other point, grouping by the joining line.
std::vector<Triple64> line_components(const std::vector<Triple64>& pts, std::uint64_t p)
{
    std::vector<Triple64> found;
    if (pts.size() < p + 1)
        return found;
    std::vector<bool> covered(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (covered[i])
            continue;
        std::unordered_map<Triple64, std::uint64_t, TripleHash> count;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i)
                ++count[normalized(cross(pts[i], pts[j], p), p)];
        std::vector<Triple64> full;
        for (const auto& [l, c] : count)
            if (c + 1 == p + 1)
                full.push_back(l);
        std::sort(full.begin(), full.end());
        for (const auto& l : full) {
            if (std::find(found.begin(), found.end(), l) != found.end())
                continue;
            found.push_back(l);
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (on_line(pts[j], l, p))
                    covered[j] = true;
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

constexpr std::size_t kConicSeedPoints = 15;

std::optional<projgeom::Conic> unique_conic(const std::vector<ProjPoint>& five)
{
    try {
        return projgeom::conic_through(five);
    } catch (const InputError&) {
        return std::nullopt;
    }
}

// Nondegenerate conics all of whose p+1 points are singular, searched among
// conics through five of the first few remaining points.
std::vector<projgeom::Conic> conic_components(std::vector<ProjPoint>& rest, std::uint64_t p)
{
    std::vector<projgeom::Conic> found;
    bool progress = true;
    while (progress && rest.size() >= p + 1) {
        progress = false;
        const std::size_t k = std::min(rest.size(), kConicSeedPoints);
        std::set<std::vector<Scalar>> tried;
        std::array<std::size_t, 5> idx{0, 1, 2, 3, 4};
        for (;;) {
            std::vector<ProjPoint> five;
            for (auto i : idx)
                five.push_back(rest[i]);
            if (auto q = unique_conic(five); q && !q->degenerate()) {
                std::vector<Scalar> key(q->coeffs().begin(), q->coeffs().end());
                if (tried.insert(key).second) {
                    auto on_q = [&](const ProjPoint& x) { return q->evaluate(x).is_zero(); };
                    if (static_cast<std::uint64_t>(std::count_if(rest.begin(), rest.end(), on_q)) == p + 1) {
                        found.push_back(*q);
                        std::erase_if(rest, on_q);
                        progress = true;
                        break;
                    }
                }
            }
            // next 5-combination of 0..k-1
            int j = 4;
            while (j >= 0 && idx[j] == k - 5 + static_cast<std::size_t>(j))
                --j;
            if (j < 0)
                break;
            ++idx[j];
            for (int t = j + 1; t < 5; ++t)
                idx[t] = idx[t - 1] + 1;
        }
    }
    return found;
}

}  // namespace

projgeom::Config SingularSet::to_config() const
{
    projgeom::Config c;
    c.field = field;
    c.points = isolated_points;
    c.lines = line_components;
    c.conics = conic_components;
    c.whole_plane = whole_plane;
    return c;
}

std::vector<ProjPoint> singular_points(const HomogeneousPoly& f, Execution exec)
{
    if (!f.field().is_prime())
        throw InputError("singular point enumeration needs a polynomial over F_p");
    if (f.degree() < 1)
        throw InputError("singular point enumeration needs degree >= 1");
    const std::uint64_t p = f.field().modulus();
    std::vector<ProjPoint> out;
    for (const auto& t : scan(Gradient(f), exec))
        out.push_back(to_point(t, p));
    return out;
}

SingularSet singular_set_bruteforce(const HomogeneousPoly& f, std::uint64_t p, Execution exec)
{
    if (!f.field().is_prime() || f.field().modulus() != p)
        throw InputError("polynomial is over " + f.field().to_string() + ", expected F_" + std::to_string(p));
    if (p < 5)
        throw InputError("brute-force enumeration needs p >= 5");
    if (f.degree() < 1 || static_cast<std::uint64_t>(f.degree()) % p == 0)
        throw InputError("p divides the degree; the Euler relation no longer forces f = 0 at critical points");

    SingularSet out;
    out.field = f.field();
    auto pts = scan(Gradient(f), exec);
    if (pts.size() == p * p + p + 1) {
        out.whole_plane = true;
        return out;
    }
    auto lines = line_components(pts, p);
    std::vector<ProjPoint> rest;
    for (const auto& t : pts)
        if (std::none_of(lines.begin(), lines.end(), [&](const Triple64& l) { return on_line(t, l, p); }))
            rest.push_back(to_point(t, p));
    for (const auto& l : lines)
        out.line_components.emplace_back(Scalar::residue(l[0], p), Scalar::residue(l[1], p), Scalar::residue(l[2], p));
    out.conic_components = conic_components(rest, p);
    out.isolated_points = std::move(rest);
    return out;
}

}  // namespace quintic::lsys
