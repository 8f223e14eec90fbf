#include "hopes/spanning.hpp"

#include "hopes/homology.hpp"

#include <algorithm>

namespace hopes {

SpanningTree::SpanningTree(int d, SimplicialComplex faces,
                           std::map<Face, double> weights)
    : d_(d), faces_(std::move(faces)), weights_(std::move(weights))
{
}

double SpanningTree::weight(const Face& f) const
{
    auto it = weights_.find(f);
    if (it == weights_.end())
        throw std::invalid_argument("face not in the spanning tree");
    return it->second;
}

double SpanningTree::total_weight() const
{
    double s = 0;
    for (const auto& [face, w] : weights_)
        s += w;
    return s;
}

SimplicialComplex SpanningTree::reduced(double alpha) const
{
    ComplexBuilder builder(faces_.vertex_count());
    for (const auto& [face, w] : weights_)
        if (w <= alpha)
            builder.add_face(face);
    return builder.build();
}

double SpanningTree::reduced_weight(double alpha) const
{
    double s = 0;
    for (const auto& [face, w] : weights_)
        if (w <= alpha)
            s += w;
    return s;
}

SpanningTree minimal_spanning_tree(const WeightedComplex& W, int d,
                                   const Field& F,
                                   const std::vector<Face>* tie_order)
{
    if (d < 0)
        throw std::invalid_argument("dimension must be non-negative");
    const SimplicialComplex& X = W.complex();
    int n = X.vertex_count();

    // The sweep needs the full simplex through dimension d.
    for (int k = 0; k <= std::min(d, n - 1); ++k) {
        std::size_t expected = 1;
        for (int i = 0; i < k + 1; ++i)
            expected = expected * (n - i) / (i + 1);
        if (X.face_count(k) != expected)
            throw std::invalid_argument(
                "weighted complex is not complete through dimension d");
    }

    std::map<Face, double> accepted;
    if (d == 0)
        return SpanningTree(0, SimplicialComplex(), std::move(accepted));

    // Candidate d-faces per weight class, in tie order (default lex).
    std::vector<Face> candidates;
    if (tie_order) {
        candidates = *tie_order;
        if (candidates.size() != X.face_count(d))
            throw std::invalid_argument("tie order must list every d-face once");
    } else {
        candidates = X.faces(d);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Face& a, const Face& b) {
                         return W.weight(a) < W.weight(b);
                     });

    // Boundary columns live in the (d-1)-chain space of the full skeleton.
    ColumnSpan span(F, X.face_count(d - 1));
    for (const Face& f : candidates) {
        std::vector<Rational> col(X.face_count(d - 1), Rational(0));
        Face sub(f.size() - 1);
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != omit)
                    sub[t++] = f[i];
            col[X.face_index(sub)] = F.from_int((omit % 2 == 0) ? 1 : -1);
        }
        if (span.add(std::move(col)))
            accepted[f] = W.weight(f);
    }

    ComplexBuilder builder(n);
    for (int k = 0; k < d; ++k)
        for (const Face& f : X.faces(k))
            builder.add_face(f);
    for (const auto& [face, w] : accepted)
        builder.add_face(face);
    for (int k = 0; k < d; ++k)
        for (const Face& f : X.faces(k))
            accepted[f] = W.weight(f);
    return SpanningTree(d, builder.build(), std::move(accepted));
}

}  // namespace hopes
