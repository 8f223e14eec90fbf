#include "hopes/filtration.hpp"

#include "hopes/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hopes {

PointCloud PointCloud::from_points(std::vector<std::vector<double>> points)
{
    if (points.empty())
        throw std::invalid_argument("point cloud must be non-empty");
    std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("points must share the ambient dimension");
    PointCloud c;
    c.n_ = points.size();
    c.points_ = std::move(points);
    return c;
}

PointCloud PointCloud::from_distances(std::vector<std::vector<double>> matrix)
{
    std::size_t n = matrix.size();
    if (n == 0)
        throw std::invalid_argument("point cloud must be non-empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n)
            throw std::invalid_argument("distance matrix must be square");
        if (matrix[i][i] != 0.0)
            throw std::invalid_argument("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (matrix[i][j] < 0 || matrix[i][j] != matrix[j][i])
                throw std::invalid_argument(
                    "distance matrix must be symmetric and non-negative");
        }
    }
    PointCloud c;
    c.n_ = n;
    c.dist_ = std::move(matrix);
    return c;
}

double PointCloud::distance(std::size_t i, std::size_t j) const
{
    if (!dist_.empty())
        return dist_[i][j];
    double s = 0;
    for (std::size_t k = 0; k < points_[i].size(); ++k) {
        double d = points_[i][k] - points_[j][k];
        s += d * d;
    }
    return std::sqrt(s);
}

WeightedComplex::WeightedComplex(SimplicialComplex complex,
                                 std::vector<std::vector<double>> weights,
                                 double epsilon)
    : complex_(std::move(complex)), weights_(std::move(weights)), epsilon_(epsilon)
{
    if (epsilon_ <= 0)
        throw std::invalid_argument("epsilon must be positive");
    if (static_cast<int>(weights_.size()) != complex_.dim() + 1)
        throw std::invalid_argument("weights shape does not match the complex");
    for (int k = 0; k <= complex_.dim(); ++k)
        if (weights_[k].size() != complex_.face_count(k))
            throw std::invalid_argument("weights shape does not match the complex");
    snap_and_validate();
}

WeightedComplex::WeightedComplex(SimplicialComplex complex,
                                 const std::map<Face, double>& weights,
                                 double epsilon)
    : complex_(std::move(complex)), epsilon_(epsilon)
{
    if (epsilon_ <= 0)
        throw std::invalid_argument("epsilon must be positive");
    weights_.resize(complex_.dim() + 1);
    for (int k = 0; k <= complex_.dim(); ++k) {
        for (const Face& f : complex_.faces(k)) {
            auto it = weights.find(f);
            if (it == weights.end())
                throw std::invalid_argument("missing weight for a face");
            weights_[k].push_back(it->second);
        }
    }
    snap_and_validate();
}

void WeightedComplex::snap_and_validate()
{
    // Group values whose consecutive gaps are at most epsilon and replace
    // each by the smallest value of its group. Afterwards equal-within-eps
    // weights are exactly equal.
    std::vector<double> values;
    for (const auto& level : weights_)
        values.insert(values.end(), level.begin(), level.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<double> rep(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && values[i] - values[i - 1] <= epsilon_)
            rep[i] = rep[i - 1];
        else
            rep[i] = values[i];
    }
    auto snap = [&](double v) {
        auto it = std::lower_bound(values.begin(), values.end(), v);
        return rep[it - values.begin()];
    };
    for (auto& level : weights_)
        for (auto& w : level)
            w = snap(w);

    for (const auto& level : weights_)
        for (double w : level)
            if (w < 0)
                throw std::invalid_argument("weights must be non-negative");

    // Monotonicity: every facet weighs no more than the face.
    for (int k = 1; k <= complex_.dim(); ++k) {
        const auto& fs = complex_.faces(k);
        for (std::size_t idx = 0; idx < fs.size(); ++idx) {
            const Face& f = fs[idx];
            Face sub(f.size() - 1);
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != omit)
                        sub[j++] = f[i];
                long si = complex_.face_index(sub);
                if (si < 0)
                    throw std::invalid_argument("complex not downward closed");
                if (weights_[k - 1][si] > weights_[k][idx])
                    throw std::invalid_argument("weighting is not monotone");
            }
        }
    }
}

double WeightedComplex::weight(const Face& f) const
{
    long idx = complex_.face_index(f);
    if (idx < 0)
        throw std::invalid_argument("face not in the weighted complex");
    return weights_[face_dim(f)][idx];
}

double WeightedComplex::max_weight() const
{
    double m = 0;
    for (const auto& level : weights_)
        for (double w : level)
            m = std::max(m, w);
    return m;
}

double WeightedComplex::total_weight() const
{
    double s = 0;
    for (const auto& level : weights_)
        for (double w : level)
            s += w;
    return s;
}

std::vector<double> WeightedComplex::critical_values() const
{
    std::set<double> vals;
    for (const auto& level : weights_)
        vals.insert(level.begin(), level.end());
    return {vals.begin(), vals.end()};
}

SimplicialComplex WeightedComplex::reduced(double alpha) const
{
    ComplexBuilder builder(complex_.vertex_count());
    for (int k = 0; k <= complex_.dim(); ++k) {
        const auto& fs = complex_.faces(k);
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (weights_[k][i] <= alpha)
                builder.add_face(fs[i]);
    }
    return builder.build();
}

WeightedComplex vr_weights(const PointCloud& cloud, int max_dim, double epsilon)
{
    if (max_dim < 1)
        throw std::invalid_argument("max_dim must be at least 1");
    int n = static_cast<int>(cloud.size());
    SimplicialComplex complex = full_simplex(n, max_dim);

    std::vector<std::vector<double>> weights(complex.dim() + 1);
    for (int k = 0; k <= complex.dim(); ++k) {
        for (const Face& f : complex.faces(k)) {
            double w = 0;
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = a + 1; b < f.size(); ++b)
                    w = std::max(w, cloud.distance(f[a], f[b]));
            weights[k].push_back(w / 2.0);
        }
    }
    return WeightedComplex(std::move(complex), std::move(weights), epsilon);
}

namespace {

// Exact minimal enclosing balls: squared radii and centers are rationals
// (the inputs, being doubles, are rational), so the boundary test in the
// Welzl recursion is deterministic.
struct ExactBall {
    bool valid = false;
    std::vector<Rational> center;
    Rational r2 = 0;
};

Rational sq_dist(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

bool ball_contains(const ExactBall& b, const std::vector<Rational>& p)
{
    return b.valid && sq_dist(b.center, p) <= b.r2;
}

// Smallest ball with all support points on its boundary (circumball of
// the support set's affine hull).
ExactBall ball_of_support(const std::vector<std::vector<Rational>>& support)
{
    ExactBall b;
    if (support.empty())
        return b;
    std::size_t m = support.size() - 1;
    if (m == 0) {
        b.valid = true;
        b.center = support[0];
        b.r2 = 0;
        return b;
    }
    // Solve sum_j lambda_j (2 u_i . u_j) = u_i . u_i, u_i = q_i - q_0.
    std::size_t dim = support[0].size();
    std::vector<std::vector<Rational>> u(m, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            u[i][k] = support[i + 1][k] - support[0][k];

    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Rational dot = 0;
            for (std::size_t k = 0; k < dim; ++k)
                dot += u[i][k] * u[j][k];
            aug[i][j] = 2 * dot;
        }
        Rational dot = 0;
        for (std::size_t k = 0; k < dim; ++k)
            dot += u[i][k] * u[i][k];
        aug[i][m] = dot;
    }

    // Gaussian elimination; a singular system means an affinely dependent
    // support set, which the recursion never produces for points in
    // general position. Report no ball in that case.
    for (std::size_t col = 0, row = 0; col < m; ++col, ++row) {
        std::size_t pivot = m;
        for (std::size_t i = row; i < m; ++i)
            if (aug[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == m)
            return b;
        std::swap(aug[row], aug[pivot]);
        Rational inv = Rational(1) / aug[row][col];
        for (auto& v : aug[row])
            v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == 0)
                continue;
            Rational f = aug[i][col];
            for (std::size_t j = col; j <= m; ++j)
                aug[i][j] -= f * aug[row][j];
        }
    }

    b.valid = true;
    b.center = support[0];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < dim; ++k)
            b.center[k] += aug[j][m] * u[j][k];
    b.r2 = sq_dist(b.center, support[0]);
    return b;
}

ExactBall welzl(std::vector<std::vector<Rational>>& points, std::size_t count,
                std::vector<std::vector<Rational>>& support, std::size_t dim)
{
    if (count == 0 || support.size() == dim + 1)
        return ball_of_support(support);
    const auto& p = points[count - 1];
    ExactBall b = welzl(points, count - 1, support, dim);
    if (ball_contains(b, p))
        return b;
    support.push_back(p);
    b = welzl(points, count - 1, support, dim);
    support.pop_back();
    return b;
}

ExactBall min_ball(const std::vector<std::vector<double>>& pts)
{
    if (pts.empty())
        throw std::invalid_argument("minimal enclosing ball of an empty set");
    std::size_t dim = pts[0].size();
    std::vector<std::vector<Rational>> rp(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        rp[i].reserve(dim);
        for (double c : pts[i])
            rp[i].push_back(Rational(c));
    }
    std::vector<std::vector<Rational>> support;
    return welzl(rp, rp.size(), support, dim);
}

}  // namespace

double min_enclosing_ball_radius(const std::vector<std::vector<double>>& points)
{
    ExactBall b = min_ball(points);
    if (!b.valid)
        throw std::runtime_error("degenerate minimal enclosing ball instance");
    return std::sqrt(static_cast<double>(b.r2));
}

WeightedComplex cech_weights(const PointCloud& cloud, int max_dim, double epsilon)
{
    if (!cloud.has_coordinates())
        throw std::invalid_argument(
            "cech weighting needs coordinates, not just distances");
    if (max_dim < 1)
        throw std::invalid_argument("max_dim must be at least 1");

    int n = static_cast<int>(cloud.size());
    SimplicialComplex complex = full_simplex(n, max_dim);
    std::vector<std::vector<double>> weights(complex.dim() + 1);
    for (int k = 0; k <= complex.dim(); ++k) {
        for (const Face& f : complex.faces(k)) {
            if (k == 0) {
                weights[0].push_back(0.0);
                continue;
            }
            std::vector<std::vector<double>> pts;
            pts.reserve(f.size());
            for (Vertex v : f)
                pts.push_back(cloud.points()[v]);
            weights[k].push_back(min_enclosing_ball_radius(pts));
        }
    }
    return WeightedComplex(std::move(complex), std::move(weights), epsilon);
}

WeightedComplex complete_to_simplex(const WeightedComplex& W, int target_dim,
                                    double margin)
{
    int n = W.ambient_vertex_count();
    SimplicialComplex target = full_simplex(n, target_dim);
    double mx = W.max_weight();
    double fill = (mx > 0) ? mx * (1.0 + margin) : margin;

    std::map<Face, double> weights;
    for (int k = 0; k <= target.dim(); ++k) {
        for (const Face& f : target.faces(k)) {
            if (W.complex().contains(f))
                weights[f] = W.weight(f);
            else
                weights[f] = fill;
        }
    }
    return WeightedComplex(std::move(target), weights, W.epsilon());
}

}  // namespace hopes
