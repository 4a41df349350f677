#include "quintic/projgeom/sampler.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "quintic/errors.hpp"

namespace quintic::projgeom {

ProjPoint GeometrySource::point()
{
    for (;;) {
        Scalar a = rng_.next(), b = rng_.next(), c = rng_.next();
        if (!a.is_zero() || !b.is_zero() || !c.is_zero())
            return ProjPoint(a, b, c);
    }
}

ProjLine GeometrySource::line()
{
    auto p = point();
    return ProjLine(p[0], p[1], p[2]);
}

ProjPoint GeometrySource::point_on(const ProjLine& l)
{
    auto [u, v] = points_of(l);
    for (;;) {
        Scalar s = rng_.next(), t = rng_.next();
        if (s.is_zero() && t.is_zero())
            continue;
        return ProjPoint(s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]);
    }
}

std::vector<ProjPoint> GeometrySource::points_on(const ProjLine& l, std::size_t k)
{
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(point_on(l));
    return out;
}

ProjPoint GeometrySource::point_on(const Conic& c, const ProjPoint& base)
{
    for (;;) {
        auto r = point();
        if (r == base)
            continue;
        return second_intersection(c, base, r);
    }
}

Conic GeometrySource::conic(std::vector<ProjPoint>* five)
{
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 5; ++i)
        pts.push_back(point());
    if (five)
        *five = pts;
    return conic_through(pts);
}

std::vector<std::size_t> line_profile(std::span<const ProjPoint> pts)
{
    std::vector<std::size_t> sizes;
    for (const auto& l : collinear_subsets(pts))
        sizes.push_back(l.size());
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::vector<std::size_t> expected_line_profile(int type_id)
{
    switch (type_id) {
    case 4: case 5: case 6: case 7: case 8: case 9: case 10:
        return {static_cast<std::size_t>(type_id)};
    case 13: return {4};
    case 14: return {5};
    case 15: return {6};
    case 16: return {7};
    case 19: return {4};
    case 20: return {5};
    case 21: return {6};
    case 23: return {3, 3};
    case 25: return {4, 4};
    case 27: return {4, 3};
    case 28: return {5, 3};
    case 29: return {3};
    case 30: return {4, 4};
    case 34: return {4};
    case 35: return {3, 3};
    case 37: return {4, 4};
    case 38: return {4};
    case 39: return {4, 4, 4};
    case 40: return {4, 4, 4, 4, 4};
    default: return {};
    }
}

namespace {

using Draw = std::function<std::optional<Config>(GeometrySource&)>;

bool distinct(const std::vector<ProjPoint>& pts)
{
    return std::set<ProjPoint>(pts.begin(), pts.end()).size() == pts.size();
}

bool off_line(const std::vector<ProjPoint>& pts, const ProjLine& l)
{
    return std::none_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return incident(p, l); });
}

std::vector<ProjPoint> concat(std::vector<ProjPoint> a, const std::vector<ProjPoint>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Config points_config(Field f, std::vector<ProjPoint> pts)
{
    Config c;
    c.field = f;
    c.points = std::move(pts);
    return c;
}

struct TwoLines {
    ProjLine l1, l2;
    std::vector<ProjPoint> pts;
};

// 3 points on each of two lines; the sampler's profile check rejects a point
// at the intersection.
TwoLines three_plus_three(GeometrySource& g)
{
    auto l1 = g.line(), l2 = g.line();
    if (l1 == l2)
        throw InputError("coincident lines");
    return {l1, l2, concat(g.points_on(l1, 3), g.points_on(l2, 3))};
}

// `count` points on one conic: five random ones and the rest on their conic.
std::pair<Conic, std::vector<ProjPoint>> points_on_conic(GeometrySource& g, std::size_t count)
{
    std::vector<ProjPoint> pts;
    Conic q = g.conic(&pts);
    while (pts.size() < count)
        pts.push_back(g.point_on(q, pts[0]));
    return {q, pts};
}

Draw draw_for(int type_id, Field f)
{
    switch (type_id) {
    case 1: case 2: case 3: case 18:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            std::size_t k = type_id == 18 ? 5 : static_cast<std::size_t>(type_id);
            std::vector<ProjPoint> pts;
            for (std::size_t i = 0; i < k; ++i)
                pts.push_back(g.point());
            return points_config(f, pts);
        };
    case 4: case 5: case 6: case 7: case 8: case 9: case 10:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            return points_config(f, g.points_on(g.line(), static_cast<std::size_t>(type_id)));
        };
    case 11:
        return [f](GeometrySource& g) -> std::optional<Config> {
            Config c = points_config(f, {});
            c.lines.push_back(g.line());
            return c;
        };
    case 12:
        return [f](GeometrySource& g) -> std::optional<Config> {
            std::vector<ProjPoint> pts;
            for (int i = 0; i < 4; ++i)
                pts.push_back(g.point());
            return points_config(f, pts);
        };
    case 13: case 14: case 15: case 16: case 19: case 20: case 21: case 34:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            std::size_t on = 0, off = 0;
            switch (type_id) {
            case 13: on = 4; off = 1; break;
            case 14: on = 5; off = 1; break;
            case 15: on = 6; off = 1; break;
            case 16: on = 7; off = 1; break;
            case 19: on = 4; off = 2; break;
            case 20: on = 5; off = 2; break;
            case 21: on = 6; off = 2; break;
            default: on = 4; off = 3; break;
            }
            auto l = g.line();
            auto pts = g.points_on(l, on);
            std::vector<ProjPoint> rest;
            for (std::size_t i = 0; i < off; ++i)
                rest.push_back(g.point());
            if (!off_line(rest, l))
                return std::nullopt;
            return points_config(f, concat(pts, rest));
        };
    case 17: case 22: case 41:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            std::size_t k = type_id == 17 ? 1 : type_id == 22 ? 2 : 3;
            Config c = points_config(f, {});
            c.lines.push_back(g.line());
            for (std::size_t i = 0; i < k; ++i)
                c.points.push_back(g.point());
            if (!off_line(c.points, c.lines[0]))
                return std::nullopt;
            return c;
        };
    case 23: case 25: case 35: case 37:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            auto [l1, l2, pts] = three_plus_three(g);
            if (type_id == 25 || type_id == 37)
                pts.push_back(meet(l1, l2));
            if (type_id == 35 || type_id == 37) {
                auto extra = g.point();
                if (incident(extra, l1) || incident(extra, l2))
                    return std::nullopt;
                pts.push_back(extra);
            }
            return points_config(f, pts);
        };
    case 24: case 32: case 36:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            auto [q, pts] = points_on_conic(g, type_id == 32 ? 7 : 6);
            if (q.degenerate())
                return std::nullopt;
            if (type_id == 36) {
                auto extra = g.point();
                if (q.evaluate(extra).is_zero())
                    return std::nullopt;
                pts.push_back(extra);
            }
            return points_config(f, pts);
        };
    case 26:
        return [f](GeometrySource& g) -> std::optional<Config> {
            std::vector<ProjPoint> pts;
            for (int i = 0; i < 6; ++i)
                pts.push_back(g.point());
            if (!distinct(pts) || on_common_conic(pts))
                return std::nullopt;
            return points_config(f, pts);
        };
    case 27: case 28: case 30:
        return [f, type_id](GeometrySource& g) -> std::optional<Config> {
            std::size_t a = type_id == 28 ? 5 : 4, b = type_id == 30 ? 4 : 3;
            auto l1 = g.line(), l2 = g.line();
            if (l1 == l2)
                return std::nullopt;
            return points_config(f, concat(g.points_on(l1, a), g.points_on(l2, b)));
        };
    case 29:
        return [f](GeometrySource& g) -> std::optional<Config> {
            auto l1 = g.line(), l2 = g.line();
            if (l1 == l2)
                return std::nullopt;
            Config c = points_config(f, g.points_on(l2, 3));
            c.lines.push_back(l1);
            if (!off_line(c.points, l1))
                return std::nullopt;
            return c;
        };
    case 31:
        return [f](GeometrySource& g) -> std::optional<Config> {
            Config c = points_config(f, {});
            c.lines = {g.line(), g.line()};
            if (c.lines[0] == c.lines[1])
                return std::nullopt;
            return c;
        };
    case 33:
        return [f](GeometrySource& g) -> std::optional<Config> {
            Config c = points_config(f, {});
            c.conics.push_back(g.conic());
            if (c.conics[0].degenerate())
                return std::nullopt;
            return c;
        };
    case 38:
        return [f](GeometrySource& g) -> std::optional<Config> {
            std::vector<ProjPoint> abcd;
            for (int i = 0; i < 4; ++i)
                abcd.push_back(g.point());
            auto l = g.line();
            if (!off_line(abcd, l))
                return std::nullopt;
            std::vector<ProjPoint> on_l;
            for (int k = 0; k < 2; ++k) {
                auto p = g.point_on(l);
                auto five = concat(abcd, {p});
                Conic q = conic_through(five);
                if (tangent(q, l))
                    return std::nullopt;
                auto [u, v] = points_of(l);
                auto dir = u == p ? v : u;
                on_l.push_back(p);
                on_l.push_back(second_intersection(q, p, dir));
            }
            return points_config(f, concat(abcd, on_l));
        };
    case 39:
        return [f](GeometrySource& g) -> std::optional<Config> {
            auto a = g.point(), b = g.point(), c = g.point();
            auto ab = line_through(a, b), bc = line_through(b, c), ca = line_through(c, a);
            auto u = g.points_on(ab, 2), v = g.points_on(bc, 2);
            auto w1 = g.point_on(ca);
            std::vector<ProjPoint> five = concat(concat(u, v), {w1});
            Conic q = conic_through(five);
            for (const auto& vertex : {a, b, c})
                if (q.evaluate(vertex).is_zero())
                    return std::nullopt;
            for (const auto& side : {ab, bc, ca})
                if (tangent(q, side))
                    return std::nullopt;
            auto [s, t] = points_of(ca);
            auto w2 = second_intersection(q, w1, s == w1 ? t : s);
            return points_config(f, concat({a, b, c}, concat(five, {w2})));
        };
    case 40:
        return [f](GeometrySource& g) -> std::optional<Config> {
            std::vector<ProjLine> ls;
            for (int i = 0; i < 5; ++i)
                ls.push_back(g.line());
            std::vector<ProjPoint> pts;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    pts.push_back(meet(ls[i], ls[j]));
            return points_config(f, pts);
        };
    case 42:
        return [f](GeometrySource&) -> std::optional<Config> {
            Config c = points_config(f, {});
            c.whole_plane = true;
            return c;
        };
    default:
        throw InputError("type_id out of range 1..42: " + std::to_string(type_id));
    }
}

Config run_sampler(int type_id, const Draw& draw, const std::vector<std::size_t>& profile, Field field,
                   std::uint64_t seed, int max_attempts)
{
    if (field.is_prime() && field.modulus() < 5)
        throw FieldTooSmall("sampling needs p >= 5, got " + field.to_string());
    GeometrySource g(field, splitmix64(seed ^ (static_cast<std::uint64_t>(type_id) << 32)));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::optional<Config> c;
        try {
            c = draw(g);
        } catch (const InputError&) {
            // degenerate draw (coincident points, non-unique conic, ...)
            continue;
        }
        if (!c || !distinct(c->points))
            continue;
        if (line_profile(c->points) != profile)
            continue;
        c->type_id = type_id;
        c->validate();
        return *c;
    }
    throw FieldTooSmall("no generic configuration of type " + std::to_string(type_id) + " over " +
                        field.to_string() + " after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace

Config sample_generic(int type_id, Field field, std::uint64_t seed, int max_attempts)
{
    return run_sampler(type_id, draw_for(type_id, field), expected_line_profile(type_id), field, seed, max_attempts);
}

Config sample_type12_with_collinear_triple(Field field, std::uint64_t seed, int max_attempts)
{
    Draw draw = [field](GeometrySource& g) -> std::optional<Config> {
        auto l = g.line();
        auto pts = g.points_on(l, 3);
        auto extra = g.point();
        if (incident(extra, l))
            return std::nullopt;
        pts.push_back(extra);
        return points_config(field, pts);
    };
    return run_sampler(12, draw, {3}, field, seed ^ 0x5a5a5a5aULL, max_attempts);
}

std::vector<ProjPoint> sample_generic_points(std::size_t k, Field field, std::uint64_t seed, int max_attempts)
{
    GeometrySource g(field, splitmix64(seed));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<ProjPoint> pts;
        for (std::size_t i = 0; i < k; ++i)
            pts.push_back(g.point());
        if (!distinct(pts) || !line_profile(pts).empty())
            continue;
        bool six_on_conic = false;
        if (k >= 6) {
            // every 6-subset must be off conics
            std::vector<int> mask(k, 0);
            std::fill(mask.end() - 6, mask.end(), 1);
            do {
                std::vector<ProjPoint> six;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask[i])
                        six.push_back(pts[i]);
                six_on_conic = on_common_conic(six);
            } while (!six_on_conic && std::next_permutation(mask.begin(), mask.end()));
        }
        if (!six_on_conic)
            return pts;
    }
    throw FieldTooSmall("no " + std::to_string(k) + " generic points over " + field.to_string());
}

}  // namespace quintic::projgeom
