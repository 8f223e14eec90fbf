/**
 * File formats: point-cloud and distance-matrix CSV, complex and weighted
 * complex JSON, spanning-tree and skeleton JSON, diagram CSV.
 */

#ifndef HOPES_IO_HPP
#define HOPES_IO_HPP

#include "hopes/filtration.hpp"
#include "hopes/homology.hpp"
#include "hopes/skeleton.hpp"
#include "hopes/spanning.hpp"

#include <iosfwd>
#include <string>

namespace hopes {

// One point per row, comma-separated coordinates.
PointCloud load_point_cloud_csv(std::istream& in);
// Square symmetric matrix with zero diagonal.
PointCloud load_distance_matrix_csv(std::istream& in);

// {"vertices": n, "faces": [[0,1,2], ...]}; strict mode rejects inputs
// that are not downward closed instead of completing them.
SimplicialComplex load_complex_json(std::istream& in, bool strict = false);
void save_complex_json(std::ostream& out, const SimplicialComplex& X);

// {"vertices": n, "faces": [{"v": [0,1], "w": 0.5}, ...]}
WeightedComplex load_weighted_complex_json(std::istream& in,
                                           double epsilon = kDefaultEpsilon);
void save_weighted_complex_json(std::ostream& out, const WeightedComplex& W);

// Faces with weights plus the tie-order seed used to build the tree.
void save_tree_json(std::ostream& out, const SpanningTree& T,
                    unsigned long tie_order_seed);

// {"d": d, "faces": [{"v": [...], "l": .., "r": .., "kind": ".."}]},
// with "inf" for infinite right labels.
void save_skeleton_json(std::ostream& out, const LabeledSkeleton& H);
LabeledSkeleton load_skeleton_json(std::istream& in);

// CSV rows dim,birth,death with "inf" for infinity.
void save_diagram_csv(std::ostream& out, const PersistenceDiagram& D);

}  // namespace hopes

#endif  // HOPES_IO_HPP
