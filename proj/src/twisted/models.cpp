#include "quintic/twisted/models.hpp"

#include <algorithm>
#include <random>

#include "quintic/errors.hpp"

namespace quintic::twisted {

namespace {

const Field QQ = Field::rationals();

Scalar q(long v) { return Scalar(QQ, v); }

}  // namespace

CwComplex figure_eight()
{
    CwComplex x;
    auto v = x.add_vertex("v");
    x.add_edge("b", v, v);
    x.add_edge("c", v, v);
    return x;
}

CwComplex circle()
{
    CwComplex x;
    auto v = x.add_vertex("v");
    x.add_edge("e", v, v);
    return x;
}

ChainMap swap_loops(const TwistedChainComplex& fig8)
{
    if (fig8.ranks() != std::vector<std::size_t>{1, 2})
        throw InputError("swap_loops() expects the figure-eight complex");
    return {{DenseMatrix::from_ints(fig8.field(), 1, {{1}}), DenseMatrix::from_ints(fig8.field(), 2, {{0, 1}, {1, 0}})}};
}

PropBSystem prop_b_system(int index)
{
    switch (index) {
    case 1: return {1, -1};
    case 2: return {-1, 1};
    case 3: return {-1, -1};
    default: throw InputError("Prop B systems are numbered 1..3");
    }
}

Model prop_b_model(int index)
{
    const auto [sign, twist] = prop_b_system(index);
    auto fiber = chain_complex(figure_eight(), LocalSystem{{q(sign), q(sign)}});
    auto f = swap_loops(fiber);
    auto torus = mapping_torus(fiber, f, q(twist));
    // (x, 0) -> (x, 0), (0, y) -> (0, -twist f(y)); a chain map because (twist f)^2 = 1
    ChainMap g;
    for (int k = 0; k <= torus.top_dim(); ++k) {
        DenseMatrix m(QQ, torus.rank(k), torus.rank(k));
        const std::size_t xk = fiber.rank(k);
        for (std::size_t i = 0; i < xk; ++i)
            m(i, i) = q(1);
        if (k >= 1)
            for (std::size_t r = 0; r < fiber.rank(k - 1); ++r)
                for (std::size_t s = 0; s < fiber.rank(k - 1); ++s)
                    m(xk + r, xk + s) = q(-twist) * f.maps[static_cast<std::size_t>(k - 1)](r, s);
        g.maps.push_back(std::move(m));
    }
    check_chain_map(torus, torus, g);
    return {"prop-b-a" + std::to_string(index), std::move(torus), std::move(g), 2};
}

Model prop_c_model()
{
    auto fiber = chain_complex(figure_eight(), LocalSystem{{q(-1), q(-1)}});
    auto f = swap_loops(fiber);
    return {"prop-c", std::move(fiber), std::move(f), 1};
}

std::vector<std::string> builtin_model_names()
{
    return {"prop-b-a1", "prop-b-a2", "prop-b-a3", "prop-c"};
}

Model builtin_model(const std::string& name)
{
    if (name == "prop-c")
        return prop_c_model();
    for (int i = 1; i <= 3; ++i)
        if (name == "prop-b-a" + std::to_string(i))
            return prop_b_model(i);
    throw InputError("unknown model '" + name + "'");
}

RandomModel random_model(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    static const std::vector<mpq_class> values{1, -1, 1, -1, 2, mpq_class(-1, 2), 3};

    CwComplex x;
    const std::size_t nv = 1 + pick(3);
    std::vector<std::size_t> tree_edge(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        x.add_vertex("v" + std::to_string(v));
        if (v > 0)
            tree_edge[v] = x.add_edge("t" + std::to_string(v), pick(v), v);
    }
    const std::size_t extra = 1 + pick(3);
    for (std::size_t e = 0; e < extra; ++e)
        x.add_edge("e" + std::to_string(e), pick(nv), pick(nv));

    LocalSystem rho;
    for (std::size_t e = 0; e < x.edges().size(); ++e)
        rho.monodromy.emplace_back(QQ, values[pick(values.size())]);

    // closed walk at v0: a random walk, then back along the tree
    auto loop = [&] {
        std::vector<Letter> w;
        std::size_t at = 0;
        const std::size_t len = 1 + pick(4);
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Letter> options;
            for (std::size_t e = 0; e < x.edges().size(); ++e) {
                if (x.edges()[e].tail == at)
                    options.push_back({e, 1});
                if (x.edges()[e].head == at)
                    options.push_back({e, -1});
            }
            auto l = options[pick(options.size())];
            w.push_back(l);
            at = l.direction > 0 ? x.edges()[l.edge].head : x.edges()[l.edge].tail;
        }
        while (at != 0) {
            const auto& t = x.edges()[tree_edge[at]];
            w.push_back({tree_edge[at], -1});
            at = t.tail;
        }
        return w;
    };
    auto transport = [&](const std::vector<Letter>& w) {
        Scalar s = q(1);
        for (const auto& l : w)
            s = l.direction > 0 ? s * rho.monodromy[l.edge] : s / rho.monodromy[l.edge];
        return s;
    };
    auto inverse = [](std::vector<Letter> w) {
        std::reverse(w.begin(), w.end());
        for (auto& l : w)
            l.direction = -l.direction;
        return w;
    };

    const std::size_t faces = pick(3);
    for (std::size_t j = 0; j < faces; ++j) {
        auto w = loop();
        const Scalar t = transport(w);
        if (t == q(-1)) {
            auto twice = w;
            twice.insert(twice.end(), w.begin(), w.end());
            w = twice;
        } else if (!t.is_one()) {
            // commutator w u w^-1 u^-1 has trivial transport
            auto u = loop();
            std::vector<Letter> c = w;
            c.insert(c.end(), u.begin(), u.end());
            auto wi = inverse(w), ui = inverse(u);
            c.insert(c.end(), wi.begin(), wi.end());
            c.insert(c.end(), ui.begin(), ui.end());
            w = c;
        }
        x.add_face("f" + std::to_string(j), w);
    }
    return {std::move(x), std::move(rho)};
}

}  // namespace quintic::twisted
