#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopes/oracle.hpp"
#include "hopes/skeleton.hpp"

#include <cmath>
#include <random>

using namespace hopes;

namespace {

PointCloud random_cloud(std::mt19937& rng, int n, int dim = 2)
{
    std::uniform_real_distribution<double> coord(0, 1);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (auto& c : p)
            c = coord(rng);
    return PointCloud::from_points(pts);
}

double total_weight(const WeightedComplex& W, const SimplicialComplex& S)
{
    double s = 0;
    for (const Face& f : S.all_faces())
        s += W.weight(f);
    return s;
}

// Naive oracle: filter the full enumeration through the predicates with no
// pruning at all. Ground truth for the pruned searches.
double naive_min(const WeightedComplex& W, double alpha, int d, const Field& F,
                 bool forest)
{
    SimplicialComplex Q = W.reduced(alpha);
    double best = 1e300;
    enumerate_spanning_subcomplexes(Q, d, SearchBudget{18},
        [&](const SimplicialComplex& S) {
            bool ok = forest ? (is_forest(S, d, F) && is_spanning(S, Q, d) &&
                                is_fitting(S, Q, d - 1, F))
                             : (is_spanning(S, Q, d) && is_fitting(S, Q, d, F));
            if (ok)
                best = std::min(best, total_weight(W, S));
        });
    return best;
}

}  // namespace

TEST_CASE("enumeration counts")
{
    SimplicialComplex t2 = full_simplex(4).skeleton(2);
    CHECK(enumerate_spanning_subcomplexes(t2, 2, SearchBudget{22}).size() == 16);

    SimplicialComplex graph = full_simplex(3, 1);
    CHECK(enumerate_spanning_subcomplexes(graph, 1, SearchBudget{22}).size() ==
          8);

    SimplicialComplex no_top = full_simplex(3, 1).skeleton(0);
    CHECK(enumerate_spanning_subcomplexes(no_top, 1, SearchBudget{22}).size() ==
          1);

    CHECK_THROWS_AS(
        enumerate_spanning_subcomplexes(full_simplex(5).skeleton(1), 1,
                                        SearchBudget{5}),
        BudgetExceeded);
}

TEST_CASE("minimal fitting forest")
{
    Field F = Field::prime(2);

    SUBCASE("equilateral triangle at half the side")
    {
        PointCloud cloud = PointCloud::from_points(
            {{0, 0}, {1, 0}, {0.5, std::sqrt(3) / 2}});
        WeightedComplex W = vr_weights(cloud, 2);
        OracleResult r = min_fitting_forest(W, 0.5, 1, F);
        REQUIRE(r.feasible);
        CHECK(r.weight == doctest::Approx(1.0));
        CHECK(r.witness.face_count(1) == 2);
    }

    SUBCASE("no cycles forces every edge")
    {
        // Path-like weights: only 2 edges exist below alpha.
        PointCloud cloud = PointCloud::from_points({{0, 0}, {1, 0}, {2, 0}});
        WeightedComplex W = vr_weights(cloud, 2);
        OracleResult r = min_fitting_forest(W, 0.5, 1, F);
        REQUIRE(r.feasible);
        CHECK(r.witness.face_count(1) == 2);
        CHECK(r.weight == doctest::Approx(1.0));
    }

    SUBCASE("unit square with diagonals present")
    {
        WeightedComplex W = vr_weights(
            PointCloud::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2);
        OracleResult r = min_fitting_forest(W, std::sqrt(2) / 2, 1, F);
        REQUIRE(r.feasible);
        CHECK(r.weight == doctest::Approx(1.5));
        CHECK(r.weight ==
              doctest::Approx(naive_min(W, std::sqrt(2) / 2, 1, F, true)));
    }

    SUBCASE("dimension zero")
    {
        WeightedComplex W = vr_weights(
            PointCloud::from_points({{0, 0}, {1, 0}}), 1);
        OracleResult r = min_fitting_forest(W, 1.0, 0, F);
        CHECK(r.feasible);
        CHECK(r.weight == 0);
    }
}

TEST_CASE("minimal fitting subcomplex")
{
    Field F = Field::prime(2);
    WeightedComplex W = vr_weights(
        PointCloud::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2);

    SUBCASE("below the diagonals the square itself is forced")
    {
        OracleResult r = min_fitting_subcomplex(W, 0.6, 1, F);
        REQUIRE(r.feasible);
        CHECK(r.weight == doctest::Approx(2.0));
        CHECK(r.witness.face_count(1) == 4);
    }

    SUBCASE("at the top the reduced skeleton weight is matched")
    {
        LabeledSkeleton H = build_hopes(W, 1, F);
        OracleResult r = min_fitting_subcomplex(W, 1.0, 1, F);
        REQUIRE(r.feasible);
        CHECK(r.weight == doctest::Approx(H.reduced_weight(1.0)));
        CHECK(r.weight == doctest::Approx(naive_min(W, 1.0, 1, F, false)));
    }

    SUBCASE("a tree is its own minimum")
    {
        PointCloud cloud = PointCloud::from_points({{0, 0}, {1, 0}, {2, 0}});
        WeightedComplex Wt = vr_weights(cloud, 2);
        OracleResult r = min_fitting_subcomplex(Wt, 0.5, 1, F);
        REQUIRE(r.feasible);
        CHECK(r.witness == Wt.reduced(0.5));
    }
}

TEST_CASE("pruned searches agree with the naive enumeration")
{
    std::mt19937 rng(61);
    for (const Field& F : {Field::prime(2), Field::rationals()}) {
        for (int round = 0; round < 5; ++round) {
            WeightedComplex W = vr_weights(random_cloud(rng, 5), 2);
            std::vector<double> cv = W.critical_values();
            double alpha = cv[1 + round % (cv.size() - 1)];
            for (int d = 1; d <= 1; ++d) {
                OracleResult f = min_fitting_forest(W, alpha, d, F);
                OracleResult s = min_fitting_subcomplex(W, alpha, d, F);
                REQUIRE(f.feasible);
                REQUIRE(s.feasible);
                CHECK(f.weight ==
                      doctest::Approx(naive_min(W, alpha, d, F, true)));
                CHECK(s.weight ==
                      doctest::Approx(naive_min(W, alpha, d, F, false)));
            }
        }
    }
}

TEST_CASE("witnesses satisfy the predicates when rechecked")
{
    std::mt19937 rng(62);
    Field F = Field::prime(3);
    WeightedComplex W = vr_weights(random_cloud(rng, 5, 3), 3);
    for (int d = 1; d <= 2; ++d) {
        for (double alpha : W.critical_values()) {
            SimplicialComplex Q = W.reduced(alpha);
            OracleResult f = min_fitting_forest(W, alpha, d, F);
            REQUIRE(f.feasible);
            if (d >= 1) {
                CHECK(is_forest(f.witness, d, F));
                CHECK(is_spanning(f.witness, Q, d));
                CHECK(is_fitting(f.witness, Q, d - 1, F));
            }
            OracleResult s = min_fitting_subcomplex(W, alpha, d, F);
            REQUIRE(s.feasible);
            CHECK(is_spanning(s.witness, Q, d));
            CHECK(is_fitting(s.witness, Q, d, F));
        }
    }
}

TEST_CASE("theorem equalities on random instances")
{
    std::mt19937 rng(63);
    Field F = Field::prime(2);
    for (int round = 0; round < 3; ++round) {
        WeightedComplex W = vr_weights(random_cloud(rng, 5, 3), 3);
        for (int d = 1; d <= 2; ++d) {
            SpanningTree T = minimal_spanning_tree(W, d, F);
            LabeledSkeleton H = build_hopes(W, d, F);
            for (double alpha : W.critical_values()) {
                OracleResult f = min_fitting_forest(W, alpha, d, F);
                OracleResult s = min_fitting_subcomplex(W, alpha, d, F);
                CHECK(T.reduced_weight(alpha) ==
                      doctest::Approx(f.weight).epsilon(1e-12));
                CHECK(H.reduced_weight(alpha) ==
                      doctest::Approx(s.weight).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("budget limits the searches")
{
    std::mt19937 rng(64);
    WeightedComplex W = vr_weights(random_cloud(rng, 6), 2);
    Field F = Field::prime(2);
    double top = W.max_weight();
    CHECK_THROWS_AS(min_fitting_forest(W, top, 1, F, SearchBudget{5}),
                    BudgetExceeded);
    CHECK_THROWS_AS(min_fitting_subcomplex(W, top, 1, F, SearchBudget{5}),
                    BudgetExceeded);
}
