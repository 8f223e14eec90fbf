/**
 * The homologically persistent d-skeleton: critical faces, death times via
 * the elder rule, labeled skeleton assembly, reduced skeletons, and the
 * correspondence with persistence diagrams.
 */

#ifndef HOPES_SKELETON_HPP
#define HOPES_SKELETON_HPP

#include "hopes/homology.hpp"
#include "hopes/spanning.hpp"

#include <functional>
#include <optional>

namespace hopes {

struct Label {
    double l;   // left label (birth)
    double r;   // right label (death), kInfinity allowed

    bool operator==(const Label& o) const { return l == o.l && r == o.r; }
};

enum class FaceKind { mst, critical };

struct LabeledFace {
    Face face;
    Label label;
    FaceKind kind;
};

/** HoPeS: every face carries a label (l, r) with 0 <= l < r. */
class LabeledSkeleton {
public:
    LabeledSkeleton(int d, int vertex_count, std::vector<LabeledFace> faces);

    int d() const { return d_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<LabeledFace>& faces() const { return faces_; }
    std::vector<LabeledFace> critical() const;

    // Faces with l <= alpha < r; a simplicial complex by label monotonicity.
    SimplicialComplex reduced(double alpha) const;
    // Total weight of the reduced skeleton; face weights are left labels.
    double reduced_weight(double alpha) const;

private:
    int d_;
    int vertex_count_;
    std::vector<LabeledFace> faces_;
};

// All d-faces of W outside T with their births (= weights), ordered by
// (birth, lexicographic). This order is the deterministic tie order used
// by the elder rule.
std::vector<std::pair<Face, double>> critical_faces(const WeightedComplex& W,
                                                    const SpanningTree& T, int d);

// A leading-set chooser maps the kernel-coefficient equations (rows =
// kernel basis vectors, columns = living critical faces) and the faces'
// weights to the set of faces declared dead. The default is the greedy
// max-weight basis; tests inject alternatives to probe the freedom the
// elder rule leaves.
using LeadingSetChooser = std::function<std::vector<std::size_t>(
    const FieldMatrix&, const std::vector<double>&)>;

// The death sweep: walks the critical values; at each scale the kernel of
// H_d((MST u Crit, MST) -> (Q, MST)) determines which living critical
// faces die, the elder rule picking the max-weight valid set. For d >= 1
// every critical face dies by w(P); for d = 0 one survivor keeps infinity.
std::map<Face, double> assign_deaths(const WeightedComplex& W,
                                     const SpanningTree& T, int d,
                                     const Field& F,
                                     const LeadingSetChooser& chooser = {});

// Union-find specialization of the d = 0 sweep: components merge as edges
// arrive; within a merge the survivor is the lighter living vertex, ties
// to the higher index, matching the greedy kernel path exactly.
std::map<Face, double> assign_deaths_dim0(const WeightedComplex& W);

LabeledSkeleton build_hopes(const WeightedComplex& W, int d, const Field& F,
                            const std::vector<Face>* tie_order = nullptr);

struct CorrespondenceReport {
    bool matched = false;
    std::string detail;   // offending face or dot when not matched
};

// Checks that the multiset of critical-face labels equals the multiset of
// finite positive-persistence dots of the diagram, births equal to face
// weights.
CorrespondenceReport diagram_correspondence(const LabeledSkeleton& H,
                                            const PersistenceDiagram& D);

}  // namespace hopes

#endif  // HOPES_SKELETON_HPP
