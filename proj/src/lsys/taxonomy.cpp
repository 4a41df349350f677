#include "quintic/lsys/taxonomy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "quintic/errors.hpp"

namespace quintic::lsys {

using projgeom::ProjPoint;

const std::vector<ConfigTypeRecord>& taxonomy()
{
    static const std::vector<ConfigTypeRecord> table{
        {1, 1, 18, "one point"},
        {2, 2, 15, "2 points"},
        {3, 3, 12, "3 points"},
        {4, 4, 11, "4 points on a line"},
        {5, 5, 10, "5 points on a line"},
        {6, 6, 10, "6 points on a line"},
        {7, 7, 10, "7 points on a line"},
        {8, 8, 10, "8 points on a line"},
        {9, 9, 10, "9 points on a line"},
        {10, 10, 10, "10 points on a line"},
        {11, std::nullopt, 10, "a line"},
        {12, 4, 9, "4 points not on a line (three may be collinear)"},
        {13, 5, 8, "4 points on a line + a point off the line"},
        {14, 6, 7, "5 points on a line + a point off the line"},
        {15, 7, 7, "6 points on a line + a point off the line"},
        {16, 8, 7, "7 points on a line + a point off the line"},
        {17, std::nullopt, 7, "a line + a point off the line"},
        {18, 5, 6, "5 points, no 4 on a line"},
        {19, 6, 5, "4 points on a line + 2 points off the line"},
        {20, 7, 4, "5 points on a line + 2 points off the line"},
        {21, 8, 4, "6 points on a line + 2 points off the line"},
        {22, std::nullopt, 4, "a line + 2 points off the line"},
        {23, 6, 4, "3 points on each of two lines, intersection point excluded"},
        {24, 6, 4, "6 points on a nondegenerate conic"},
        {25, 7, 4, "type 23 + the intersection point of the lines"},
        {26, 6, 3, "6 points on no conic, no 4 on a line"},
        {27, 7, 3, "4 points on a line + 3 on another line, intersection point excluded"},
        {28, 8, 3, "5 points on a line l1 + 3 points on another line off l1"},
        {29, std::nullopt, 3, "a line + 3 points of another line, intersection point excluded"},
        {30, 8, 3, "4 points on a line + 4 on another line, intersection point excluded"},
        {31, std::nullopt, 3, "two lines"},
        {32, 7, 3, "7 points on a nondegenerate conic"},
        {33, std::nullopt, 3, "a nondegenerate conic"},
        {34, 7, 2, "4 points on a line + 3 generic points off it"},
        {35, 7, 1, "type 23 + a point off both lines"},
        {36, 7, 1, "6 points on a nondegenerate conic + a point off it"},
        {37, 8, 1, "type 35 + the intersection point of the lines"},
        {38, 8, 1, "4 generic points A,B,C,D + the 4 points where a line meets two conics through A,B,C,D"},
        {39, 9, 1, "3 generic points A,B,C + the 6 points where AB, BC, AC meet a conic"},
        {40, 10, 1, "the 10 intersection points of 5 generic lines"},
        {41, std::nullopt, 1, "a line + 3 generic points off it"},
        {42, std::nullopt, 0, "the whole plane"},
    };
    return table;
}

const ConfigTypeRecord& type_record(int type_id)
{
    if (type_id < 1 || type_id > projgeom::kTypeCount)
        throw InputError("type id " + std::to_string(type_id) + " outside 1.." + std::to_string(projgeom::kTypeCount));
    return taxonomy()[static_cast<std::size_t>(type_id - 1)];
}

std::vector<int> finite_types()
{
    std::vector<int> out;
    for (const auto& r : taxonomy())
        if (r.k_points)
            out.push_back(r.type_id);
    return out;
}

namespace {

using Index = std::vector<std::size_t>;

struct Incidence {
    std::vector<ProjPoint> pts;
    std::vector<Index> lines;  // maximal collinear subsets, >= 3 points
    std::size_t n = 0;
    std::size_t m = 0;  // size of the largest collinear subset (0 if none)

    explicit Incidence(std::vector<ProjPoint> p) : pts(std::move(p)), n(pts.size())
    {
        lines = projgeom::collinear_subsets(pts);
        for (const auto& l : lines)
            m = std::max(m, l.size());
    }

    std::vector<ProjPoint> select(const Index& idx) const
    {
        std::vector<ProjPoint> out;
        for (auto i : idx)
            out.push_back(pts[i]);
        return out;
    }

    Index complement(const Index& idx) const
    {
        Index out;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(idx.begin(), idx.end(), i))
                out.push_back(i);
        return out;
    }

    bool collinear(const Index& idx) const
    {
        if (idx.size() < 3)
            return true;
        for (std::size_t k = 2; k < idx.size(); ++k)
            if (!projgeom::collinear(pts[idx[0]], pts[idx[1]], pts[idx[k]]))
                return false;
        return true;
    }

    bool no_three_collinear(const Index& idx) const
    {
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                for (std::size_t c = b + 1; c < idx.size(); ++c)
                    if (projgeom::collinear(pts[idx[a]], pts[idx[b]], pts[idx[c]]))
                        return false;
        return true;
    }

    bool on_conic(const Index& idx) const { return projgeom::lie_on_conic(select(idx)); }

    std::vector<const Index*> lines_of_size(std::size_t k) const
    {
        std::vector<const Index*> out;
        for (const auto& l : lines)
            if (l.size() == k)
                out.push_back(&l);
        return out;
    }
};

Index intersection(const Index& a, const Index& b)
{
    Index out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Index merged(const Index& a, const Index& b)
{
    Index out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool two_disjoint_triples(const Incidence& s)
{
    auto triples = s.lines_of_size(3);
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j)
            if (intersection(*triples[i], *triples[j]).empty())
                return true;
    return false;
}

// Two 4-lines meeting in a point of the set; returns the union (7 points).
std::vector<Index> crossing_four_lines(const Incidence& s)
{
    std::vector<Index> out;
    auto quads = s.lines_of_size(4);
    for (std::size_t i = 0; i < quads.size(); ++i)
        for (std::size_t j = i + 1; j < quads.size(); ++j)
            if (intersection(*quads[i], *quads[j]).size() == 1)
                out.push_back(merged(*quads[i], *quads[j]));
    return out;
}

bool type_27(const Incidence& s)
{
    for (const auto* l : s.lines_of_size(4)) {
        Index rest = s.complement(*l);
        if (!s.collinear(rest))
            continue;
        auto line = projgeom::line_through(s.pts[rest[0]], s.pts[rest[1]]);
        if (std::none_of(l->begin(), l->end(), [&](std::size_t i) { return projgeom::incident(s.pts[i], line); }))
            return true;
    }
    return false;
}

bool type_36(const Incidence& s)
{
    for (std::size_t out = 0; out < s.n; ++out) {
        Index six = s.complement({out});
        if (!s.no_three_collinear(six) || !s.on_conic(six))
            continue;
        Index all(s.n);
        std::iota(all.begin(), all.end(), 0);
        if (!s.on_conic(all))
            return true;
    }
    return false;
}

bool type_38(const Incidence& s)
{
    for (const auto* l : s.lines_of_size(4)) {
        Index abcd = s.complement(*l);
        if (!s.no_three_collinear(abcd))
            continue;
        const Index& e = *l;
        static constexpr std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& p : pairings) {
            Index q1 = abcd, q2 = abcd;
            q1.push_back(e[p[0]]);
            q1.push_back(e[p[1]]);
            q2.push_back(e[p[2]]);
            q2.push_back(e[p[3]]);
            if (s.on_conic(q1) && s.on_conic(q2))
                return true;
        }
    }
    return false;
}

bool type_39(const Incidence& s)
{
    auto quads = s.lines_of_size(4);
    for (std::size_t i = 0; i < quads.size(); ++i)
        for (std::size_t j = i + 1; j < quads.size(); ++j)
            for (std::size_t k = j + 1; k < quads.size(); ++k) {
                auto ab = intersection(*quads[i], *quads[j]);
                auto bc = intersection(*quads[j], *quads[k]);
                auto ca = intersection(*quads[k], *quads[i]);
                if (ab.size() != 1 || bc.size() != 1 || ca.size() != 1)
                    continue;
                Index vertices{ab[0], bc[0], ca[0]};
                std::sort(vertices.begin(), vertices.end());
                if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
                    continue;
                Index cover = merged(merged(*quads[i], *quads[j]), *quads[k]);
                if (cover.size() != s.n)
                    continue;
                if (s.on_conic(s.complement(vertices)))
                    return true;
            }
    return false;
}

bool type_40(const Incidence& s)
{
    auto quads = s.lines_of_size(4);
    if (quads.size() != 5 || s.lines.size() != 5)
        return false;
    std::vector<int> count(s.n, 0);
    for (const auto* l : quads)
        for (auto i : *l)
            ++count[i];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
}

std::vector<int> finite_matches(const Incidence& s)
{
    const std::size_t n = s.n, m = s.m;
    std::vector<int> out;
    auto add = [&](int t, bool ok) {
        if (ok)
            out.push_back(t);
    };
    Index all(n);
    std::iota(all.begin(), all.end(), 0);

    add(1, n == 1);
    add(2, n == 2);
    add(3, n == 3);
    for (std::size_t k = 4; k <= 10; ++k)
        add(static_cast<int>(k), n == k && m == k);
    add(12, n == 4 && m < 4);
    add(13, n == 5 && m == 4);
    add(14, n == 6 && m == 5);
    add(15, n == 7 && m == 6);
    add(16, n == 8 && m == 7);
    add(18, n == 5 && m < 4);
    add(19, n == 6 && m == 4);
    add(20, n == 7 && m == 5);
    add(21, n == 8 && m == 6);
    add(23, n == 6 && m == 3 && two_disjoint_triples(s));
    add(24, n == 6 && m < 3 && s.on_conic(all));
    add(25, n == 7 && m == 4 && !crossing_four_lines(s).empty());
    add(26, n == 6 && m <= 3 && !s.on_conic(all));
    add(27, n == 7 && m == 4 && type_27(s));
    add(28, n == 8 && m == 5 && [&] {
        for (const auto* l : s.lines_of_size(5))
            if (s.collinear(s.complement(*l)))
                return true;
        return false;
    }());
    add(30, n == 8 && m == 4 && [&] {
        auto quads = s.lines_of_size(4);
        for (std::size_t i = 0; i < quads.size(); ++i)
            for (std::size_t j = i + 1; j < quads.size(); ++j)
                if (intersection(*quads[i], *quads[j]).empty())
                    return true;
        return false;
    }());
    add(32, n == 7 && m < 3 && s.on_conic(all));
    add(34, n == 7 && m == 4 && [&] {
        for (const auto* l : s.lines_of_size(4))
            if (!s.collinear(s.complement(*l)))
                return true;
        return false;
    }());
    add(35, n == 7 && m == 3 && two_disjoint_triples(s));
    add(36, n == 7 && type_36(s));
    add(37, n == 8 && m == 4 && !crossing_four_lines(s).empty());
    add(38, n == 8 && m == 4 && type_38(s));
    add(39, n == 9 && m == 4 && type_39(s));
    add(40, n == 10 && m == 4 && type_40(s));
    return out;
}

std::vector<int> component_matches(const Config& k, const std::vector<ProjPoint>& free_points)
{
    if (k.whole_plane)
        return {42};
    const std::size_t n = free_points.size();
    std::vector<int> out;
    if (k.conics.empty() && k.lines.size() == 1) {
        if (n == 0)
            out.push_back(11);
        else if (n == 1)
            out.push_back(17);
        else if (n == 2)
            out.push_back(22);
        else if (n == 3)
            out.push_back(projgeom::collinear(free_points[0], free_points[1], free_points[2]) ? 29 : 41);
    }
    if (k.conics.empty() && k.lines.size() == 2 && n == 0)
        out.push_back(31);
    if (k.lines.empty() && k.conics.size() == 1 && n == 0 && !k.conics[0].degenerate())
        out.push_back(33);
    return out;
}

}  // namespace

std::vector<int> matching_types(const Config& k)
{
    k.validate();
    std::vector<ProjPoint> free_points;
    for (const auto& p : k.points) {
        bool absorbed = std::any_of(k.lines.begin(), k.lines.end(), [&](const auto& l) { return projgeom::incident(p, l); }) ||
                        std::any_of(k.conics.begin(), k.conics.end(), [&](const auto& q) { return q.evaluate(p).is_zero(); });
        if (!absorbed)
            free_points.push_back(p);
    }
    if (!k.finite())
        return component_matches(k, free_points);
    if (free_points.empty())
        return {};
    return finite_matches(Incidence(free_points));
}

std::optional<int> classify(const Config& k)
{
    auto m = matching_types(k);
    if (m.empty())
        return std::nullopt;
    if (m.size() > 1) {
        std::string list;
        for (int t : m)
            list += (list.empty() ? "" : ", ") + std::to_string(t);
        throw InvariantViolation("configuration matches several types: " + list);
    }
    return m.front();
}

ConditionReport check_conditions(const std::vector<Config>& samples)
{
    ConditionReport report;
    for (const auto& k : samples) {
        if (!k.type_id)
            throw InputError("check_conditions() needs samples with a type id");
        if (!k.finite())
            continue;
        const int t = *k.type_id;
        const std::string tag = "type " + std::to_string(t) + ": ";
        ++report.configs;
        auto own = matching_types(k);
        if (own != std::vector<int>{t})
            report.violations.push_back(tag + "sample does not classify uniquely to its own type");
        const std::size_t n = k.points.size();
        if (n >= 20)
            throw InputError("check_conditions() enumerates subsets; at most 19 points supported");
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            Config sub;
            sub.field = k.field;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u)
                    sub.points.push_back(k.points[i]);
            ++report.subsets;
            auto m = matching_types(sub);
            if (m.size() > 1)
                report.violations.push_back(tag + "subset " + std::to_string(mask) + " matches several types");
            else if (m.size() == 1 && m[0] >= t)
                report.violations.push_back(tag + "subset " + std::to_string(mask) + " classifies to type " +
                                            std::to_string(m[0]));
        }
    }
    return report;
}

}  // namespace quintic::lsys
