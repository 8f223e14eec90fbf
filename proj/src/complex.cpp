#include "hopes/complex.hpp"

#include <algorithm>
#include <set>

namespace hopes {

const std::vector<Face> SimplicialComplex::empty_;

Face make_face(std::vector<Vertex> vertices)
{
    if (vertices.empty())
        throw std::invalid_argument("face must be non-empty");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (Vertex v : vertices) {
        if (v < 0)
            throw std::invalid_argument("vertex ids must be non-negative");
    }
    return vertices;
}

const std::vector<Face>& SimplicialComplex::faces(int k) const
{
    if (k < 0 || k >= static_cast<int>(faces_.size()))
        return empty_;
    return faces_[k];
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t n = 0;
    for (const auto& fs : faces_)
        n += fs.size();
    return n;
}

std::size_t SimplicialComplex::face_count(int k) const
{
    return faces(k).size();
}

std::vector<Face> SimplicialComplex::all_faces() const
{
    std::vector<Face> out;
    out.reserve(face_count());
    for (const auto& fs : faces_)
        out.insert(out.end(), fs.begin(), fs.end());
    return out;
}

bool SimplicialComplex::contains(const Face& f) const
{
    return face_index(f) >= 0;
}

long SimplicialComplex::face_index(const Face& f) const
{
    const auto& fs = faces(face_dim(f));
    auto it = std::lower_bound(fs.begin(), fs.end(), f);
    if (it == fs.end() || *it != f)
        return -1;
    return static_cast<long>(it - fs.begin());
}

SimplicialComplex SimplicialComplex::skeleton(int k) const
{
    SimplicialComplex out;
    out.vertex_count_ = vertex_count_;
    if (k < 0)
        return out;
    int top = std::min(k, dim());
    for (int i = 0; i <= top; ++i)
        out.faces_.push_back(faces_[i]);
    return out;
}

bool SimplicialComplex::contains_complex(const SimplicialComplex& sub) const
{
    if (sub.dim() > dim())
        return false;
    for (int k = 0; k <= sub.dim(); ++k) {
        const auto& mine = faces(k);
        const auto& theirs = sub.faces(k);
        if (!std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end()))
            return false;
    }
    return true;
}

ComplexBuilder::ComplexBuilder(int n_vertices, bool strict)
    : vertex_count_(n_vertices), strict_(strict)
{
    if (n_vertices < 0)
        throw std::invalid_argument("vertex count must be non-negative");
}

void ComplexBuilder::add_face(const Face& raw)
{
    Face f = make_face(raw);
    if (!f.empty() && f.back() >= vertex_count_)
        throw std::invalid_argument("vertex id out of range");
    int k = face_dim(f);
    if (k >= static_cast<int>(faces_.size()))
        faces_.resize(k + 1);
    faces_[k].push_back(f);
}

SimplicialComplex ComplexBuilder::build()
{
    // Collect faces per dimension, then close downward from the top.
    std::vector<std::set<Face>> closed(faces_.size());
    for (std::size_t k = 0; k < faces_.size(); ++k)
        closed[k].insert(faces_[k].begin(), faces_[k].end());

    for (int k = static_cast<int>(closed.size()) - 1; k >= 1; --k) {
        for (const Face& f : closed[k]) {
            Face sub(f.size() - 1);
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                std::size_t j = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != omit)
                        sub[j++] = f[i];
                if (!closed[k - 1].count(sub)) {
                    if (strict_)
                        throw std::invalid_argument(
                            "complex not downward closed: missing subface");
                    closed[k - 1].insert(sub);
                }
            }
        }
    }

    SimplicialComplex out;
    out.vertex_count_ = vertex_count_;
    for (auto& fs : closed)
        out.faces_.emplace_back(fs.begin(), fs.end());
    while (!out.faces_.empty() && out.faces_.back().empty())
        out.faces_.pop_back();
    return out;
}

SimplicialComplex full_simplex(int n_vertices, int max_dim)
{
    if (n_vertices < 1)
        throw std::invalid_argument("full_simplex requires at least one vertex");
    int top = (max_dim < 0) ? n_vertices - 1 : std::min(max_dim, n_vertices - 1);

    ComplexBuilder builder(n_vertices);
    // Enumerate subsets of size <= top+1 recursively.
    Face current;
    auto rec = [&](auto&& self, int next) -> void {
        if (!current.empty())
            builder.add_face(current);
        if (static_cast<int>(current.size()) == top + 1)
            return;
        for (int v = next; v < n_vertices; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return builder.build();
}

long long euler_characteristic(const SimplicialComplex& X)
{
    long long chi = 0;
    for (int k = 0; k <= X.dim(); ++k) {
        long long c = static_cast<long long>(X.face_count(k));
        chi += (k % 2 == 0) ? c : -c;
    }
    return chi;
}

bool is_spanning(const SimplicialComplex& S, const SimplicialComplex& X, int k)
{
    if (!X.contains_complex(S))
        throw std::invalid_argument("is_spanning: S is not a subcomplex of X");
    for (int i = 0; i <= k - 1; ++i) {
        if (S.faces(i) != X.faces(i))
            return false;
    }
    return true;
}

SimplicialComplex star_tree(int n, int k, Vertex apex)
{
    if (apex < 0 || apex > n)
        throw std::invalid_argument("star_tree: apex out of range");
    if (k < 0 || k > n)
        throw std::invalid_argument("star_tree: k out of range");

    ComplexBuilder builder(n + 1);
    if (k == 0)
        return builder.build();

    SimplicialComplex lower = full_simplex(n + 1, k - 1);
    for (const Face& f : lower.all_faces())
        builder.add_face(f);
    SimplicialComplex top = full_simplex(n + 1, k);
    for (const Face& f : top.faces(k)) {
        if (std::binary_search(f.begin(), f.end(), apex))
            builder.add_face(f);
    }
    return builder.build();
}

}  // namespace hopes
