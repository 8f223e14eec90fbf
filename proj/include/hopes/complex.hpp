/**
 * Finite abstract simplicial complexes: faces as sorted vertex sets,
 * skeleta, Euler characteristics, spanning predicates and canonical
 * star-tree constructions.
 */

#ifndef HOPES_COMPLEX_HPP
#define HOPES_COMPLEX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopes {

using Vertex = int;

// A face is a strictly increasing, non-empty list of vertex ids.
// Dimension = size - 1.
using Face = std::vector<Vertex>;

// Sorts, deduplicates and validates a vertex list.
Face make_face(std::vector<Vertex> vertices);

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

/**
 * An immutable finite simplicial complex on a fixed ambient vertex set
 * {0..n-1}. Faces are stored per dimension in lexicographic order, which
 * is the canonical chain-basis order used by the boundary matrices.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    int vertex_count() const { return vertex_count_; }
    int dim() const { return static_cast<int>(faces_.size()) - 1; }

    // Faces of dimension k, lexicographically sorted. Empty vector if none.
    const std::vector<Face>& faces(int k) const;

    std::size_t face_count() const;
    std::size_t face_count(int k) const;
    std::vector<Face> all_faces() const;

    bool contains(const Face& f) const;
    // Index of f within faces(dim f), or -1 when absent.
    long face_index(const Face& f) const;

    SimplicialComplex skeleton(int k) const;
    bool contains_complex(const SimplicialComplex& sub) const;

    bool operator==(const SimplicialComplex& other) const
    {
        return faces_ == other.faces_;
    }

private:
    friend class ComplexBuilder;
    int vertex_count_ = 0;
    std::vector<std::vector<Face>> faces_;   // faces_[k] sorted lex
    static const std::vector<Face> empty_;
};

/**
 * Builds a complex from arbitrary face lists. By default missing subfaces
 * are inserted automatically (downward closure); in strict mode a missing
 * subface is an error instead.
 */
class ComplexBuilder {
public:
    explicit ComplexBuilder(int n_vertices, bool strict = false);

    void add_face(const Face& f);
    SimplicialComplex build();

private:
    int vertex_count_;
    bool strict_;
    std::vector<std::vector<Face>> faces_;   // unsorted, possibly duplicated
};

// Complex of all 2^n - 1 non-empty subsets of {0..n-1}. When max_dim >= 0,
// only faces of dimension <= max_dim are generated.
SimplicialComplex full_simplex(int n_vertices, int max_dim = -1);

// Sum over k of (-1)^k (# k-faces).
long long euler_characteristic(const SimplicialComplex& X);

// True iff the (k-1)-skeleton of S equals the (k-1)-skeleton of X.
// Requires S to be a subcomplex of X.
bool is_spanning(const SimplicialComplex& S, const SimplicialComplex& X, int k);

// For k = 0 the empty complex; otherwise the (k-1)-skeleton of the full
// simplex on n+1 vertices together with all k-faces containing the apex.
// The result is a spanning k-tree of the n-simplex.
SimplicialComplex star_tree(int n, int k, Vertex apex);

}  // namespace hopes

#endif  // HOPES_COMPLEX_HPP
