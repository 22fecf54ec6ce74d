#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgcorr/diagram.hpp"

#include <numeric>
#include <random>

using namespace lgcorr;

namespace {

GroupElement identity(const WeightSystem& ws)
{
    return GroupElement(std::vector<Rat>(ws.nvars(), Rat(0)));
}

} // namespace

TEST_CASE("cubic fourfold diagram")
{
    WeightSystem ws({1, 1, 1, 1, 1, 1}, 3);
    Diagram d = build_diagram(ws, identity(ws));
    CHECK(d.ray_total() == 3);
    CHECK(d.dot_total() == 6);
    CHECK(d.dot_total() - d.ray_total() == -kappa(ws));
    CHECK(d.empty_rays() == 2);
    CHECK(d.internal_dots() - d.empty_rays() == 3);
}

TEST_CASE("degree 8 diagram with non-gorenstein rays")
{
    WeightSystem ws({2, 3, 4, 4}, 8);
    Diagram d = build_diagram(ws, identity(ws));
    CHECK(d.ray_total() == 10);
    CHECK(d.dot_total() == 15);
    long red_rays = 0, red_dots = 0;
    for (const auto& r : d.rays) red_rays += r.non_gorenstein;
    for (const auto& dot : d.dots) red_dots += dot.non_gorenstein;
    CHECK(red_rays == 2);
    CHECK(red_dots == 2);
    CHECK(d.internal_dots() - d.empty_rays() == 5);
}

TEST_CASE("degree 6 quotient cosets each balance by one")
{
    WeightSystem ws({1, 3, 3}, 6,
                    std::vector<std::vector<long>>{{6, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    GroupElement g(std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
    SymmetryGroup G = close_group(ws, {g});
    for (const auto& rep : coset_decomposition(ws, G)) {
        Diagram d = build_diagram(ws, rep);
        CHECK(d.internal_dots() - d.empty_rays() == 1);
        CHECK(d.extremal_dots() == d.nonempty_rays());
    }
}

TEST_CASE("rendering is deterministic and count-stable")
{
    WeightSystem ws({1, 1, 1, 1, 1, 1}, 3);
    Diagram d = build_diagram(ws, identity(ws));
    std::string text = render(d, RenderFormat::Text);
    CHECK(text == render(d, RenderFormat::Text));
    CHECK(text.find("rays=3") != std::string::npos);
    CHECK(text.find("dots=6") != std::string::npos);

    WeightSystem w8({2, 3, 4, 4}, 8);
    std::string svg = render(build_diagram(w8, identity(w8)), RenderFormat::Svg);
    CHECK(svg == render(build_diagram(w8, identity(w8)), RenderFormat::Svg));
    // two flagged rays drawn in red
    size_t pos = 0;
    int red_lines = 0;
    while ((pos = svg.find("stroke=\"#cc0000\"", pos)) != std::string::npos) {
        ++red_lines;
        pos += 1;
    }
    CHECK(red_lines == 2);
}

TEST_CASE("fuzz: D - R equals weight sum minus degree, empty rays count narrow sectors")
{
    std::mt19937 rng(99);
    int done = 0;
    while (done < 60) {
        int n = 2 + static_cast<int>(rng() % 4);
        long d = 2 + static_cast<long>(rng() % 23);
        std::vector<long> w(n);
        for (auto& x : w) x = 1 + static_cast<long>(rng() % 6);
        if (std::accumulate(w.begin(), w.end(), 0L,
                            [](long a, long b) { return std::gcd(a, b); }) != 1)
            continue;
        ++done;
        WeightSystem ws(w, d);
        // random coset representative with phases in (1/lcm(d, w_j)) Z
        std::vector<Rat> ph(n);
        long L = d;
        for (long x : w) L = std::lcm(L, x);
        for (auto& p : ph) p = Rat(static_cast<long>(rng() % L), L);
        GroupElement g(ph);

        Diagram dg = build_diagram(ws, g);
        CHECK(dg.dot_total() - dg.ray_total() == ws.weight_sum() - d);
        CHECK(dg.extremal_dots() == dg.nonempty_rays());

        long narrow = 0;
        for (long m = 0; m < d; ++m)
            if (twist(ws, g, Rat(m, d)).fixed_count() == 0) ++narrow;
        CHECK(dg.empty_rays() == narrow);
    }
}
