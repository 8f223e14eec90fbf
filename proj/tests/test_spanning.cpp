#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopes/homology.hpp"
#include "hopes/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
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

// Classic Kruskal on the complete graph, independent union-find.
double kruskal_weight(const PointCloud& cloud)
{
    int n = static_cast<int>(cloud.size());
    struct E {
        double w;
        int a, b;
    };
    std::vector<E> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({cloud.distance(i, j) / 2, i, j});
    std::sort(edges.begin(), edges.end(),
              [](const E& x, const E& y) { return x.w < y.w; });
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    double total = 0;
    for (const E& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
            parent[ra] = rb;
            total += e.w;
        }
    }
    return total;
}

long long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("dimension zero gives the empty tree")
{
    std::mt19937 rng(41);
    WeightedComplex W = vr_weights(random_cloud(rng, 4), 1);
    SpanningTree T = minimal_spanning_tree(W, 0, Field::prime(2));
    CHECK(T.complex().face_count() == 0);
    CHECK(T.total_weight() == 0);
}

TEST_CASE("equilateral triangle keeps the two lexicographically first edges")
{
    PointCloud cloud = PointCloud::from_points(
        {{0, 0}, {1, 0}, {0.5, std::sqrt(3) / 2}});
    WeightedComplex W = vr_weights(cloud, 2);
    SpanningTree T = minimal_spanning_tree(W, 1, Field::prime(2));
    CHECK(T.complex().faces(1) == std::vector<Face>{{0, 1}, {0, 2}});
    CHECK(T.total_weight() == doctest::Approx(1.0));
}

TEST_CASE("four generic points in R3, d = 2")
{
    PointCloud cloud = PointCloud::from_points(
        {{0, 0, 0}, {1.1, 0, 0}, {0.2, 1.3, 0}, {0.3, 0.4, 1.7}});
    WeightedComplex W = vr_weights(cloud, 3);
    Field F = Field::prime(2);
    SpanningTree T = minimal_spanning_tree(W, 2, F);
    CHECK(T.complex().face_count(2) == 3);
    CHECK(is_tree(T.complex(), 2, F));
    CHECK(is_spanning(T.complex(), W.complex(), 2));

    // Exhaustive: among all 3-triangle subsets that are 2-trees, the
    // greedy output is the cheapest.
    const auto& tris = W.complex().faces(2);
    REQUIRE(tris.size() == 4);
    double best = 1e300;
    for (std::size_t skip = 0; skip < 4; ++skip) {
        ComplexBuilder b(4);
        SimplicialComplex lower = W.complex().skeleton(1);
        for (const Face& f : lower.all_faces())
            b.add_face(f);
        double w = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) {
                b.add_face(tris[i]);
                w += W.weight(tris[i]);
            }
        SimplicialComplex S = b.build();
        if (is_tree(S, 2, F))
            best = std::min(best, w);
    }
    double got = 0;
    for (const Face& t : T.complex().faces(2))
        got += W.weight(t);
    CHECK(got == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("spanning tree face counts follow the binomial formula")
{
    std::mt19937 rng(42);
    Field F = Field::prime(2);
    for (int n = 3; n <= 6; ++n) {
        for (int d = 1; d <= 2; ++d) {
            if (d > n - 1)
                continue;
            WeightedComplex W = vr_weights(random_cloud(rng, n, 3), d + 1);
            SpanningTree T = minimal_spanning_tree(W, d, F);
            CHECK(T.complex().face_count(d) ==
                  static_cast<std::size_t>(binom(n - 1, d)));
        }
    }
}

TEST_CASE("incomplete weighted complexes are rejected")
{
    ComplexBuilder b(3);
    b.add_face({0, 1});
    b.add_face({1, 2});
    std::map<Face, double> w;
    w[{0}] = w[{1}] = w[{2}] = 0;
    w[{0, 1}] = w[{1, 2}] = 1;
    WeightedComplex W(b.build(), w);
    CHECK_THROWS_AS(minimal_spanning_tree(W, 1, Field::prime(2)),
                    std::invalid_argument);
}

TEST_CASE("reductions of the tree")
{
    PointCloud cloud = PointCloud::from_points(
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    WeightedComplex W = vr_weights(cloud, 2);
    SpanningTree T = minimal_spanning_tree(W, 1, Field::prime(2));

    CHECK(T.reduced(-1).face_count() == 0);
    CHECK(T.reduced(W.max_weight()) == T.complex());

    SimplicialComplex half = T.reduced(0.5);
    CHECK(half.face_count(0) == 4);
    CHECK(half.face_count(1) == 3);
    CHECK(T.reduced_weight(0.5) == doctest::Approx(1.5));
}

TEST_CASE("kruskal cross-check on random clouds")
{
    std::mt19937 rng(43);
    Field F = Field::rationals();
    for (int round = 0; round < 100; ++round) {
        PointCloud cloud = random_cloud(rng, 3 + round % 6);
        WeightedComplex W = vr_weights(cloud, 2);
        SpanningTree T = minimal_spanning_tree(W, 1, F);
        CHECK(T.total_weight() ==
              doctest::Approx(kruskal_weight(cloud)).epsilon(1e-9));
    }
}

TEST_CASE("per-alpha reduced trees are fitting spanning forests")
{
    std::mt19937 rng(44);
    for (const Field& F : {Field::prime(2), Field::prime(3),
                           Field::rationals()}) {
        WeightedComplex W = vr_weights(random_cloud(rng, 5, 3), 3);
        for (int d = 1; d <= 2; ++d) {
            SpanningTree T = minimal_spanning_tree(W, d, F);
            for (double alpha : W.critical_values()) {
                SimplicialComplex Ta = T.reduced(alpha);
                SimplicialComplex Q = W.reduced(alpha);
                CHECK(is_forest(Ta, d, F));
                CHECK(is_spanning(Ta, Q, d));
                CHECK(is_fitting(Ta, Q, d - 1, F));
            }
        }
    }
}

TEST_CASE("maximality: any outside d-face closes a cycle")
{
    std::mt19937 rng(45);
    Field F = Field::prime(2);
    WeightedComplex W = vr_weights(random_cloud(rng, 5, 3), 3);
    for (int d = 1; d <= 2; ++d) {
        SpanningTree T = minimal_spanning_tree(W, d, F);
        for (const Face& f : W.complex().faces(d)) {
            if (T.complex().contains(f))
                continue;
            ComplexBuilder b(5);
            for (const Face& g : T.complex().all_faces())
                b.add_face(g);
            b.add_face(f);
            CHECK_FALSE(is_forest(b.build(), d, F));
        }
    }
}

TEST_CASE("tie orders change the tree but not its weight profile")
{
    // A unit square has a genuine tie among the four side edges.
    PointCloud cloud = PointCloud::from_points(
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    WeightedComplex W = vr_weights(cloud, 2);
    Field F = Field::prime(2);

    SpanningTree base = minimal_spanning_tree(W, 1, F);
    std::mt19937 rng(46);
    std::vector<Face> order = W.complex().faces(1);
    bool some_tree_differs = false;
    for (int round = 0; round < 10; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        SpanningTree T = minimal_spanning_tree(W, 1, F, &order);
        CHECK(T.total_weight() == doctest::Approx(base.total_weight()));
        for (double alpha : W.critical_values())
            CHECK(T.reduced_weight(alpha) ==
                  doctest::Approx(base.reduced_weight(alpha)));
        some_tree_differs =
            some_tree_differs || !(T.complex() == base.complex());
    }
    CHECK(some_tree_differs);
}
