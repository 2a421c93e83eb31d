#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gridtds/bondage_engine.hpp>
#include <gridtds/closed_forms.hpp>
#include <gridtds/errors.hpp>
#include <gridtds/exact_solver.hpp>

using namespace gridtds;

TEST_CASE("gamma_t formula values")
{
    CHECK(gamma_t_formula(7, 2) == FormulaValue::exact(6));
    CHECK(gamma_t_formula(1, 3) == FormulaValue::exact(2));
    CHECK(gamma_t_formula(9, 3) == FormulaValue::exact(9));
    CHECK(gamma_t_formula(9, 4) == FormulaValue::exact(12));
    CHECK(gamma_t_formula(5, 4) == FormulaValue::exact(8));
    CHECK(gamma_t_formula(4, 9) == FormulaValue::exact(12));
    CHECK(gamma_t_formula(6, 6).kind == FormulaKind::Unknown);
    // Reached only through transposition.
    CHECK(gamma_t_formula(2, 1) == FormulaValue::exact(2));
}

TEST_CASE("gamma_t formula matches the dp wherever it is exact")
{
    for (int n = 1; n <= 16; ++n)
        for (int m = 1; m <= 6; ++m) {
            auto f = gamma_t_formula(n, m);
            if (f.kind == FormulaKind::Exact)
                CHECK_MESSAGE(f.value == gamma_t_dp_value(build_grid({n, m})), n << "x" << m);
        }
}

TEST_CASE("bondage formula kinds")
{
    CHECK(bondage_formula(2, 1).kind == FormulaKind::Unknown);
    CHECK(bondage_formula(1, 6) == FormulaValue::exact(2));
    CHECK(bondage_formula(4, 2) == FormulaValue::exact(3));
    CHECK(bondage_formula(5, 2) == FormulaValue::exact(2));
    CHECK(bondage_formula(6, 2) == FormulaValue::exact(1));
    CHECK(bondage_formula(3, 10) == FormulaValue::exact(1));
    CHECK(bondage_formula(16, 4) == FormulaValue::exact(1));
    CHECK(bondage_formula(9, 4) == FormulaValue::exact(2));
    CHECK(bondage_formula(6, 4) == FormulaValue::exact(2));
    CHECK(bondage_formula(7, 4) == FormulaValue::upper_bound(3));
    CHECK(bondage_formula(8, 4) == FormulaValue::upper_bound(4));
    CHECK(bondage_formula(10, 4) == FormulaValue::upper_bound(4));
    CHECK(bondage_formula(5, 5).kind == FormulaKind::Unknown);
    CHECK(to_string(FormulaKind::UpperBound) == "upper_bound");
}

TEST_CASE("four-row constructions are minimum total dominating sets")
{
    for (int n : {4, 9, 14, 19, 24})
        for (auto id : {ConstructionId::FourRowPairs, ConstructionId::FourRowPairsAlt, ConstructionId::FourRowBlocks, ConstructionId::FourRowBlocksAlt}) {
            REQUIRE(construction_admissible(id, n));
            auto d = construct(id, n);
            CHECK(is_total_dominating(build_grid({n, 4}), d));
            CHECK(static_cast<int>(d.size()) == (6 * n + 8) / 5);
        }
    CHECK_FALSE(construction_admissible(ConstructionId::FourRowPairs, 5));
    CHECK_THROWS_AS(construct(ConstructionId::FourRowBlocks, 6), InvalidInput);
}

TEST_CASE("layout of the n = 9 four-row sets")
{
    auto row = [](const VertexSet & d, int j) {
        std::string s;
        for (int i = 1; i <= 9; ++i)
            s += d.contains(cell_index({9, 4}, {i, j})) ? '*' : 'o';
        return s;
    };
    auto a = construct(ConstructionId::FourRowPairs, 9);
    CHECK(row(a, 4) == "oo**ooo**");
    CHECK(row(a, 3) == "*oooo*ooo");
    CHECK(row(a, 2) == "*oooo*ooo");
    CHECK(row(a, 1) == "oo**ooo**");
    auto b = construct(ConstructionId::FourRowBlocks, 9);
    CHECK(row(b, 4) == "o**oo*oo*");
    CHECK(row(b, 1) == "*oo*oo**o");
}

TEST_CASE("two-row constructions dominate the cut grid")
{
    const ConstructionId ids[] = {ConstructionId::TwoRowVerticalCut, ConstructionId::TwoRowHorizontalCut, ConstructionId::TwoRowHorizontalCutSplit, ConstructionId::TwoRowDoubleVerticalCut};
    int admissible = 0;
    for (auto id : ids)
        for (int n = 2; n <= 20; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    const ConstructionParams p{i, j};
                    if (!construction_admissible(id, n, p))
                        continue;
                    ++admissible;
                    auto g = remove_edges(build_grid({n, 2}), construction_removed_edges(id, n, p));
                    auto d = construct(id, n, p);
                    CHECK(is_total_dominating(g, d));
                    CHECK(static_cast<int>(d.size()) == *gamma_t_formula(n, 2).value);
                }
    CHECK(admissible > 100);
}

TEST_CASE("witness edges raise gamma_t and match the formula size")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 16; ++n) {
            auto w = witness_edges(n, m);
            if (!w)
                continue;
            auto f = bondage_formula(n, m);
            REQUIRE(f.value);
            CHECK_MESSAGE(verify_witness(build_grid({n, m}), *w), n << "x" << m);
            CHECK(static_cast<int>(w->size()) == *f.value);
            CHECK(std::is_sorted(w->begin(), w->end()));
        }
    // Both orientations are covered.
    auto t = witness_edges(3, 6);
    REQUIRE(t);
    CHECK(verify_witness(build_grid({3, 6}), *t));

    CHECK(witness_edges(6, 3) == std::vector<Edge>{Edge::horizontal(5, 2)});
    CHECK(witness_edges(5, 4)->size() == 4);
    CHECK(witness_edges(8, 4)->size() == 4);
    CHECK_FALSE(witness_edges(6, 4).has_value());
    CHECK_FALSE(witness_edges(5, 5).has_value());
}
