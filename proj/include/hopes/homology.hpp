/**
 * Boundary matrices, Betti numbers, forest/tree/fitting classification,
 * fitting-forest extraction, relative kernels for death times, and
 * persistence diagrams.
 */

#ifndef HOPES_HOMOLOGY_HPP
#define HOPES_HOMOLOGY_HPP

#include "hopes/algebra.hpp"
#include "hopes/complex.hpp"
#include "hopes/filtration.hpp"

#include <limits>

namespace hopes {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/**
 * Matrix of the boundary map from k-chains to (k-1)-chains of X, with both
 * chain bases in the canonical lexicographic face order. The entry for the
 * (k-1)-face obtained by omitting the i-th vertex of a k-face is (-1)^i.
 * Out-of-range k yields a matrix with zero rows or columns.
 */
FieldMatrix boundary_matrix(const SimplicialComplex& X, int k, const Field& F);

// dim C_k - rank d_k - rank d_{k+1}; zero for k < 0.
std::size_t betti(const SimplicialComplex& X, int k, const Field& F);

// A d-forest has trivial d-homology.
bool is_forest(const SimplicialComplex& S, int d, const Field& F);

// A d-tree is a d-forest that is additionally point-like in dimension d-1:
// for d = 1 exactly one connected component, for d >= 2 trivial H_{d-1},
// and for d = 0 the empty complex.
bool is_tree(const SimplicialComplex& S, int d, const Field& F);

// True iff the inclusion S into X induces homology isomorphisms in every
// dimension i <= k. Requires S to be a subcomplex of X.
bool is_fitting(const SimplicialComplex& S, const SimplicialComplex& X, int k,
                const Field& F);

// Rank of the map H_i(S) -> H_i(X) induced by inclusion.
std::size_t induced_map_rank(const SimplicialComplex& S,
                             const SimplicialComplex& X, int i, const Field& F);

// Deletes beta_d(S) leading d-faces of a cycle basis of S, producing a
// d-spanning d-forest in S that preserves H_{d-1}.
SimplicialComplex extract_fitting_forest(const SimplicialComplex& S, int d,
                                         const Field& F);

/**
 * Basis of the kernel of H_d((T u Crit, T) -> (Q, T)) in the coordinates
 * of the relative classes of the critical faces. Rows are indexed by the
 * given crit order; columns are the basis vectors. Preconditions: T is a
 * subcomplex of Q, each crit face is a d-face of Q outside T, and its
 * boundary lies in T.
 */
FieldMatrix relative_kernel(const std::vector<Face>& crit,
                            const SimplicialComplex& T,
                            const SimplicialComplex& Q, int d, const Field& F);

struct DiagramDot {
    double birth;
    double death;   // kInfinity for essential classes

    bool operator==(const DiagramDot& o) const
    {
        return birth == o.birth && death == o.death;
    }
};

struct PersistenceDiagram {
    int dim = 0;
    std::vector<DiagramDot> dots;   // sorted by (birth, death)
};

// Sublevel persistence of the weight filtration in dimension d; faces are
// ordered by (weight, dimension, lexicographic). Zero-persistence dots are
// dropped; for d = 0 exactly one dot is essential.
PersistenceDiagram persistence_diagram(const WeightedComplex& W, int d,
                                       const Field& F);

}  // namespace hopes

#endif  // HOPES_HOMOLOGY_HPP
