#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <gridtds/closed_forms.hpp>
#include <gridtds/errors.hpp>
#include <gridtds/exact_solver.hpp>

using namespace gridtds;

namespace {

GridGraph without(const GridGraph & g, std::initializer_list<Edge> edges)
{
    return remove_edges(g, std::span<const Edge>(edges.begin(), edges.size()));
}

VertexSet cells(const GridSpec & s, std::initializer_list<Vertex> vs)
{
    return make_vertex_set(s, std::span<const Vertex>(vs.begin(), vs.size()));
}

} // namespace

// Values below were produced by a separate Python brute force and frozen here.
TEST_CASE("frozen oracle values")
{
    CHECK(gamma_bruteforce(build_grid({2, 2})).value == 2);
    CHECK(gamma_bruteforce(build_grid({3, 3})).value == 3);
    CHECK(gamma_t_dp(build_grid({5, 5})).value == 9);
    CHECK(gamma_t_dp(build_grid({4, 3})).value == 4);
    CHECK(gamma_t_dp(build_grid({7, 2})).value == 6);

    auto g53 = build_grid({5, 3});
    auto req = cells(g53.spec(), {{5, 1}});
    CHECK(gamma_t_dp(g53, req).value == 6);
    CHECK(gamma_t_bruteforce(g53, req).value == 6);

    auto cut = without(build_grid({6, 2}), {Edge::horizontal(5, 1)});
    CHECK(gamma_t_dp(cut).value == 5);
    CHECK(gamma_t_bruteforce(cut).value == 5);
}

TEST_CASE("undefined instances")
{
    CHECK_FALSE(gamma_t_dp(build_grid({1, 1})).defined());
    CHECK_FALSE(gamma_t_bruteforce(build_grid({1, 1})).defined());
    CHECK(gamma_bruteforce(build_grid({1, 1})).value == 1);

    auto iso = without(build_grid({2, 2}), {Edge::horizontal(1, 1), Edge::vertical(1, 1)});
    CHECK_FALSE(gamma_t_dp(iso).defined());
    CHECK_FALSE(gamma_t_dp_value(iso).has_value());

    // Deleting one end of P_2 leaves an isolated vertex.
    const Vertex v{1, 1};
    CHECK_FALSE(gamma_t_dp(delete_vertices(build_grid({1, 2}), std::span<const Vertex>(&v, 1))).defined());
}

TEST_CASE("witness is the lexicographically least minimum set")
{
    auto g = build_grid({7, 2});
    auto r = gamma_t_dp(g);
    REQUIRE(r.witness);
    CHECK(to_vertices(g.spec(), *r.witness) == std::vector<Vertex>{{1, 1}, {1, 2}, {3, 1}, {3, 2}, {6, 1}, {6, 2}});

    for (int n = 1; n <= 6; ++n)
        for (int m = 1; n * m <= 18; ++m) {
            auto h = build_grid({n, m});
            auto all = enumerate_min_tds(h, 1u << 20);
            auto w = gamma_t_dp(h);
            CHECK(all.gamma_t == w.value);
            if (w.witness) {
                REQUIRE_FALSE(all.sets.empty());
                CHECK(*w.witness == all.sets.front());
            }
        }
}

TEST_CASE("dp agrees with brute force on every small grid")
{
    for (int n = 1; n <= 20; ++n)
        for (int m = 1; n * m <= 20; ++m) {
            auto g = build_grid({n, m});
            auto dp = gamma_t_dp(g);
            auto bf = gamma_t_bruteforce(g);
            CHECK_MESSAGE(dp.value == bf.value, n << "x" << m);
            if (dp.witness) {
                CHECK(is_total_dominating(g, *dp.witness));
                CHECK(static_cast<int>(dp.witness->size()) == *dp.value);
            }
        }
}

TEST_CASE("dp agrees with brute force after random removals and deletions")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dn(2, 6), dm(2, 4);
        auto g = build_grid({dn(rng), dm(rng)});
        auto edges = g.present_edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        edges.resize(std::min<std::size_t>(edges.size(), trial % 4));
        g = remove_edges(g, edges);
        if (trial % 3 == 0) {
            auto live = to_vertices(g.spec(), g.live_set());
            const Vertex v = live[rng() % live.size()];
            g = delete_vertices(g, std::span<const Vertex>(&v, 1));
        }
        auto dp = gamma_t_dp(g);
        CHECK(dp.value == gamma_t_bruteforce(g).value);
        CHECK(dp.value == gamma_t_dp_value(g));
        if (dp.witness)
            CHECK(is_total_dominating(g, *dp.witness));
    }
}

TEST_CASE("constrained dp matches constrained brute force")
{
    for (int n = 2; n <= 6; ++n) {
        auto g = build_grid({n, 3});
        for (std::size_t c = 0; c < g.spec().vertex_count(); c += 2) {
            VertexSet req(g.spec().vertex_count());
            req.insert(c);
            auto dp = gamma_t_dp(g, req);
            CHECK(dp.value == gamma_t_bruteforce(g, req).value);
            REQUIRE(dp.witness);
            CHECK(req.is_subset_of(*dp.witness));
        }
    }
    auto g = build_grid({3, 3});
    const Vertex v{2, 2};
    auto h = delete_vertices(g, std::span<const Vertex>(&v, 1));
    CHECK_THROWS_AS(gamma_t_dp(h, cells(g.spec(), {{2, 2}})), InvalidInput);
}

TEST_CASE("tall grids run the dp on the transpose")
{
    for (int m = 13; m <= 20; ++m) {
        auto g = build_grid({2, m});
        auto r = gamma_t_dp(g);
        CHECK(r.value == gamma_t_formula(2, m).value);
        REQUIRE(r.witness);
        CHECK(is_total_dominating(g, *r.witness));
        CHECK(*r.witness == *gamma_t_dp(transpose(transpose(g))).witness);
    }
    // The witness is still lex-least in the original orientation.
    auto g = build_grid({3, 13});
    auto r = gamma_t_dp(g);
    auto w = to_vertices(g.spec(), *r.witness);
    CHECK(r.value == gamma_t_dp(transpose(g)).value);
    CHECK(is_total_dominating(g, *r.witness));
}

TEST_CASE("size caps")
{
    CHECK_THROWS_AS(gamma_t_dp(build_grid({13, 13})), TooLarge);
    CHECK_THROWS_AS(gamma_t_bruteforce(build_grid({5, 5})  /* 25 > 24 */, SolverLimits{}), TooLarge);
    CHECK_THROWS_AS(gamma_bruteforce(build_grid({5, 5})), TooLarge);
    CHECK_THROWS_AS(enumerate_min_tds(build_grid({7, 3}), 10), TooLarge);
    SolverLimits tiny;
    tiny.dp_table_budget_bytes = 16;
    CHECK_THROWS_AS(gamma_t_dp(build_grid({6, 4}), tiny), TooLarge);
    CHECK(gamma_t_dp_value(build_grid({6, 4}), tiny) == 8);
}

TEST_CASE("enumeration")
{
    auto all = enumerate_min_tds(build_grid({2, 2}), 100);
    CHECK(all.gamma_t == 2);
    CHECK(all.sets.size() == 4);
    for (std::size_t k = 1; k < all.sets.size(); ++k)
        CHECK(lex_less(all.sets[k - 1], all.sets[k]));
    auto some = enumerate_min_tds(build_grid({2, 2}), 3);
    CHECK(some.truncated);
    CHECK(some.sets.size() == 3);
}

TEST_CASE("push_down gives a total dominating set of the shorter grid")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 3; n * m <= 20; ++n) {
            auto g = build_grid({n, m});
            auto all = enumerate_min_tds(g, 1u << 20);
            for (const auto & d : all.sets)
                for (int i = 2; i <= n - 1; ++i) {
                    auto r = push_down(g, d, i);
                    CHECK(r.universe() == GridSpec{i, m}.vertex_count());
                    CHECK(is_total_dominating(build_grid({i, m}), r));
                    std::size_t prefix = 0;
                    for (auto v : to_vertices(g.spec(), d))
                        prefix += v.i <= i + 1 ? 1 : 0;
                    CHECK(r.size() <= prefix);
                }
        }

    auto g = build_grid({4, 2});
    auto d = *gamma_t_dp(g).witness;
    CHECK_THROWS_AS(push_down(g, d, 1), InvalidInput);
    CHECK_THROWS_AS(push_down(g, d, 4), InvalidInput);
    CHECK_THROWS_AS(push_down(g, VertexSet(8), 2), InvalidInput);
}

TEST_CASE("sandwich and monotonicity on small grids")
{
    for (int n = 1; n <= 16; ++n)
        for (int m = 1; n * m <= 16; ++m) {
            auto g = build_grid({n, m});
            auto gt = gamma_t_bruteforce(g);
            if (!gt.defined())
                continue;
            auto gd = *gamma_bruteforce(g).value;
            CHECK(gd <= *gt.value);
            CHECK(*gt.value <= 2 * gd);
            for (const auto & e : g.present_edges()) {
                auto v = gamma_t_dp_value(remove_edges(g, std::span<const Edge>(&e, 1)));
                if (v)
                    CHECK(*v >= *gt.value);
            }
        }
}
