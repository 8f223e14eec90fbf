#include "hopes/homology.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace hopes {

FieldMatrix boundary_matrix(const SimplicialComplex& X, int k, const Field& F)
{
    std::size_t rows = (k >= 1) ? X.face_count(k - 1) : 0;
    std::size_t cols = (k >= 0) ? X.face_count(k) : 0;
    FieldMatrix M(F, rows, cols);
    if (k < 1)
        return M;

    const auto& faces = X.faces(k);
    for (std::size_t j = 0; j < faces.size(); ++j) {
        const Face& f = faces[j];
        Face sub(f.size() - 1);
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != omit)
                    sub[t++] = f[i];
            long row = X.face_index(sub);
            if (row < 0)
                throw std::logic_error("complex not downward closed");
            M.set(static_cast<std::size_t>(row), j, (omit % 2 == 0) ? 1 : -1);
        }
    }
    return M;
}

std::size_t betti(const SimplicialComplex& X, int k, const Field& F)
{
    if (k < 0)
        return 0;
    std::size_t chains = X.face_count(k);
    std::size_t rk = rank(boundary_matrix(X, k, F));
    std::size_t rk1 = rank(boundary_matrix(X, k + 1, F));
    return chains - rk - rk1;
}

bool is_forest(const SimplicialComplex& S, int d, const Field& F)
{
    if (S.dim() > d)
        throw std::invalid_argument("is_forest: dim S exceeds d");
    return betti(S, d, F) == 0;
}

bool is_tree(const SimplicialComplex& S, int d, const Field& F)
{
    if (!is_forest(S, d, F))
        return false;
    if (d == 0)
        return S.face_count() == 0;
    if (d == 1)
        return betti(S, 0, F) == 1;
    return betti(S, d - 1, F) == 0;
}

std::size_t induced_map_rank(const SimplicialComplex& S,
                             const SimplicialComplex& X, int i, const Field& F)
{
    if (i < 0)
        return 0;
    // Cycle generators of S embedded into the chain basis of X, reduced
    // modulo boundaries of X: dim((Z_i(S) + B_i(X)) / B_i(X)).
    FieldMatrix cycles_S = kernel_basis(boundary_matrix(S, i, F));
    FieldMatrix bnd_X = boundary_matrix(X, i + 1, F);

    FieldMatrix embedded(F, X.face_count(i), cycles_S.cols());
    const auto& s_faces = S.faces(i);
    for (std::size_t r = 0; r < s_faces.size(); ++r) {
        long xr = X.face_index(s_faces[r]);
        if (xr < 0)
            throw std::invalid_argument("S is not a subcomplex of X");
        for (std::size_t c = 0; c < cycles_S.cols(); ++c)
            embedded.set(static_cast<std::size_t>(xr), c, cycles_S.at(r, c));
    }
    return rank(bnd_X.hstack(embedded)) - rank(bnd_X);
}

bool is_fitting(const SimplicialComplex& S, const SimplicialComplex& X, int k,
                const Field& F)
{
    if (!X.contains_complex(S))
        throw std::invalid_argument("is_fitting: S is not a subcomplex of X");
    for (int i = 0; i <= k; ++i) {
        std::size_t bs = betti(S, i, F);
        if (bs != betti(X, i, F))
            return false;
        if (induced_map_rank(S, X, i, F) != bs)
            return false;
    }
    return true;
}

SimplicialComplex extract_fitting_forest(const SimplicialComplex& S, int d,
                                         const Field& F)
{
    if (S.dim() > d)
        throw std::invalid_argument("extract_fitting_forest: dim S exceeds d");
    // Leading d-faces of a cycle basis, found as pivot columns of the
    // cycle-coefficient matrix (rows = cycles, columns = d-faces).
    FieldMatrix cycles = kernel_basis(boundary_matrix(S, d, F));
    std::vector<std::size_t> leading = pivot_columns(cycles.transposed());

    std::vector<bool> drop(S.face_count(d), false);
    for (std::size_t j : leading)
        drop[j] = true;

    ComplexBuilder builder(S.vertex_count());
    for (int k = 0; k < d; ++k)
        for (const Face& f : S.faces(k))
            builder.add_face(f);
    const auto& top = S.faces(d);
    for (std::size_t j = 0; j < top.size(); ++j)
        if (!drop[j])
            builder.add_face(top[j]);
    return builder.build();
}

FieldMatrix relative_kernel(const std::vector<Face>& crit,
                            const SimplicialComplex& T,
                            const SimplicialComplex& Q, int d, const Field& F)
{
    if (!Q.contains_complex(T))
        throw std::invalid_argument("relative_kernel: T is not a subcomplex of Q");
    for (const Face& K : crit) {
        if (face_dim(K) != d || !Q.contains(K) || T.contains(K))
            throw std::invalid_argument(
                "relative_kernel: crit faces must be d-faces of Q outside T");
        if (d == 0)
            continue;   // vertices have no boundary faces to check
        Face sub(K.size() - 1);
        for (std::size_t omit = 0; omit < K.size(); ++omit) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < K.size(); ++i)
                if (i != omit)
                    sub[t++] = K[i];
            if (!T.contains(sub))
                throw std::invalid_argument(
                    "relative_kernel: crit face boundary must lie in T");
        }
    }

    // c lies in ker(f) iff sum_i c_i K_i is a (d+1)-boundary of Q modulo
    // d-chains of T. Solve A y + K c = 0 and project onto the c-block.
    std::size_t nd = Q.face_count(d);
    FieldMatrix bnd = boundary_matrix(Q, d + 1, F);

    FieldMatrix t_ind(F, nd, T.face_count(d));
    const auto& t_faces = T.faces(d);
    for (std::size_t j = 0; j < t_faces.size(); ++j)
        t_ind.set(static_cast<std::size_t>(Q.face_index(t_faces[j])), j, 1);

    FieldMatrix k_ind(F, nd, crit.size());
    for (std::size_t j = 0; j < crit.size(); ++j)
        k_ind.set(static_cast<std::size_t>(Q.face_index(crit[j])), j, 1);

    FieldMatrix M = bnd.hstack(t_ind).hstack(k_ind);
    FieldMatrix N = kernel_basis(M);

    std::size_t offset = bnd.cols() + t_ind.cols();
    FieldMatrix proj(F, crit.size(), N.cols());
    for (std::size_t i = 0; i < crit.size(); ++i)
        for (std::size_t j = 0; j < N.cols(); ++j)
            proj.set(i, j, N.at(offset + i, j));

    std::vector<std::size_t> keep = independent_columns(proj);
    FieldMatrix out(F, crit.size(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (std::size_t i = 0; i < crit.size(); ++i)
            out.set(i, j, proj.at(i, keep[j]));
    return out;
}

PersistenceDiagram persistence_diagram(const WeightedComplex& W, int d,
                                       const Field& F)
{
    const SimplicialComplex& X = W.complex();

    struct Entry {
        double weight;
        int dim;
        std::size_t index;   // within X.faces(dim)
    };
    std::vector<Entry> order;
    for (int k = 0; k <= X.dim(); ++k)
        for (std::size_t i = 0; i < X.face_count(k); ++i)
            order.push_back({W.weight(k, i), k, i});
    std::sort(order.begin(), order.end(), [&](const Entry& a, const Entry& b) {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return X.faces(a.dim)[a.index] < X.faces(b.dim)[b.index];
    });

    // Position of each face in the filtration order.
    std::vector<std::map<Face, std::size_t>> pos(X.dim() + 1);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i].dim][X.faces(order[i].dim)[order[i].index]] = i;

    // Standard left-to-right column reduction on sparse columns.
    using Column = std::map<std::size_t, Rational>;
    std::vector<Column> cols(order.size());
    std::vector<long> pivot_owner(order.size(), -1);
    std::vector<long> death_of(order.size(), -1);   // creator -> killing column

    for (std::size_t j = 0; j < order.size(); ++j) {
        const Entry& e = order[j];
        const Face& f = X.faces(e.dim)[e.index];
        Column col;
        if (e.dim >= 1) {
            Face sub(f.size() - 1);
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != omit)
                        sub[t++] = f[i];
                col[pos[e.dim - 1][sub]] = F.from_int((omit % 2 == 0) ? 1 : -1);
            }
        }
        while (!col.empty()) {
            std::size_t low = col.rbegin()->first;
            long owner = pivot_owner[low];
            if (owner < 0) {
                pivot_owner[low] = static_cast<long>(j);
                death_of[low] = static_cast<long>(j);
                break;
            }
            const Column& other = cols[owner];
            Rational factor = F.mul(col.rbegin()->second,
                                    F.inv(other.rbegin()->second));
            for (const auto& [row, val] : other) {
                Rational v = F.sub(col.count(row) ? col[row] : Rational(0),
                                   F.mul(factor, val));
                if (v == 0)
                    col.erase(row);
                else
                    col[row] = v;
            }
        }
        cols[j] = std::move(col);
    }

    PersistenceDiagram diagram;
    diagram.dim = d;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i].dim != d)
            continue;
        if (!cols[i].empty())
            continue;   // not a creator
        double birth = order[i].weight;
        double death = (death_of[i] >= 0) ? order[death_of[i]].weight : kInfinity;
        if (birth == death)
            continue;
        diagram.dots.push_back({birth, death});
    }
    std::sort(diagram.dots.begin(), diagram.dots.end(),
              [](const DiagramDot& a, const DiagramDot& b) {
                  return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
              });
    return diagram;
}

}  // namespace hopes
