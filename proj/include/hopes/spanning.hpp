/**
 * Minimal spanning d-trees of a weighted simplex: greedy construction over
 * ascending weight classes with an incremental boundary-rank test, plus
 * reductions at any scale.
 */

#ifndef HOPES_SPANNING_HPP
#define HOPES_SPANNING_HPP

#include "hopes/algebra.hpp"
#include "hopes/filtration.hpp"

#include <map>

namespace hopes {

/** A minimal spanning d-tree with per-face weights. */
class SpanningTree {
public:
    SpanningTree(int d, SimplicialComplex faces, std::map<Face, double> weights);

    int d() const { return d_; }
    const SimplicialComplex& complex() const { return faces_; }
    double weight(const Face& f) const;
    double total_weight() const;

    // Faces of the tree with weight <= alpha.
    SimplicialComplex reduced(double alpha) const;
    double reduced_weight(double alpha) const;

private:
    int d_;
    SimplicialComplex faces_;
    std::map<Face, double> weights_;
};

/**
 * Runs the greedy weight-class sweep: at each distinct weight all faces of
 * dimension < d enter, then candidate d-faces in tie order, each kept iff
 * its boundary column is independent of the accepted ones (beta_d stays 0).
 * W must contain every face of the full simplex up to dimension d. The
 * default tie order is lexicographic; passing a permutation of the d-faces
 * exercises the freedom the weight classes leave.
 */
SpanningTree minimal_spanning_tree(const WeightedComplex& W, int d,
                                   const Field& F,
                                   const std::vector<Face>* tie_order = nullptr);

}  // namespace hopes

#endif  // HOPES_SPANNING_HPP
