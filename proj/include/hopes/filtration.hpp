/**
 * Point clouds and weighted complexes: Vietoris-Rips and Cech weightings,
 * reduction at a scale, critical values, completion to a simplex.
 */

#ifndef HOPES_FILTRATION_HPP
#define HOPES_FILTRATION_HPP

#include "hopes/complex.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hopes {

constexpr double kDefaultEpsilon = 1e-9;

/** A finite metric space: explicit coordinates or a distance matrix. */
class PointCloud {
public:
    static PointCloud from_points(std::vector<std::vector<double>> points);
    static PointCloud from_distances(std::vector<std::vector<double>> matrix);

    std::size_t size() const { return n_; }
    bool has_coordinates() const { return !points_.empty(); }
    const std::vector<std::vector<double>>& points() const { return points_; }
    double distance(std::size_t i, std::size_t j) const;

private:
    PointCloud() = default;
    std::size_t n_ = 0;
    std::vector<std::vector<double>> points_;
    std::vector<std::vector<double>> dist_;
};

/**
 * A simplicial complex with a monotone non-negative weighting. Weights
 * within epsilon of each other are snapped to a common representative at
 * construction time, so scale comparisons afterwards are exact.
 */
class WeightedComplex {
public:
    WeightedComplex(SimplicialComplex complex, std::vector<std::vector<double>> weights,
                    double epsilon = kDefaultEpsilon);
    WeightedComplex(SimplicialComplex complex, const std::map<Face, double>& weights,
                    double epsilon = kDefaultEpsilon);

    const SimplicialComplex& complex() const { return complex_; }
    int ambient_vertex_count() const { return complex_.vertex_count(); }
    double epsilon() const { return epsilon_; }

    double weight(const Face& f) const;
    double weight(int k, std::size_t index) const { return weights_[k][index]; }
    double max_weight() const;
    double total_weight() const;

    // Distinct weight values after epsilon-grouping, ascending.
    std::vector<double> critical_values() const;

    // Subcomplex of faces with weight <= alpha.
    SimplicialComplex reduced(double alpha) const;

private:
    void snap_and_validate();

    SimplicialComplex complex_;
    std::vector<std::vector<double>> weights_;   // aligned with complex faces
    double epsilon_;
};

// weight(A) = half the largest pairwise distance within A; vertices get 0.
// All faces of the full simplex up to dimension max_dim are included.
WeightedComplex vr_weights(const PointCloud& cloud, int max_dim,
                           double epsilon = kDefaultEpsilon);

// weight(A) = radius of the minimal enclosing ball of A. Requires
// coordinates; computed by exact Welzl recursion on squared radii.
WeightedComplex cech_weights(const PointCloud& cloud, int max_dim,
                             double epsilon = kDefaultEpsilon);

// Radius of the minimal enclosing ball of a set of points in R^N.
double min_enclosing_ball_radius(const std::vector<std::vector<double>>& points);

// Adds every face of the full simplex up to target_dim that is missing,
// with weight max * (1 + margin) (or just margin when all weights are 0).
WeightedComplex complete_to_simplex(const WeightedComplex& W, int target_dim,
                                    double margin = 0.1);

}  // namespace hopes

#endif  // HOPES_FILTRATION_HPP
