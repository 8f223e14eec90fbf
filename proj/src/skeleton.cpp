#include "hopes/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopes {

LabeledSkeleton::LabeledSkeleton(int d, int vertex_count,
                                 std::vector<LabeledFace> faces)
    : d_(d), vertex_count_(vertex_count), faces_(std::move(faces))
{
    for (const auto& lf : faces_) {
        if (!(lf.label.l >= 0 && lf.label.l < lf.label.r))
            throw std::invalid_argument("label must satisfy 0 <= l < r");
    }
    std::sort(faces_.begin(), faces_.end(),
              [](const LabeledFace& a, const LabeledFace& b) {
                  if (a.face.size() != b.face.size())
                      return a.face.size() < b.face.size();
                  return a.face < b.face;
              });
}

std::vector<LabeledFace> LabeledSkeleton::critical() const
{
    std::vector<LabeledFace> out;
    for (const auto& lf : faces_)
        if (lf.kind == FaceKind::critical)
            out.push_back(lf);
    return out;
}

SimplicialComplex LabeledSkeleton::reduced(double alpha) const
{
    ComplexBuilder builder(vertex_count_, /*strict=*/true);
    for (const auto& lf : faces_)
        if (lf.label.l <= alpha && alpha < lf.label.r)
            builder.add_face(lf.face);
    return builder.build();
}

double LabeledSkeleton::reduced_weight(double alpha) const
{
    double s = 0;
    for (const auto& lf : faces_)
        if (lf.label.l <= alpha && alpha < lf.label.r)
            s += lf.label.l;
    return s;
}

std::vector<std::pair<Face, double>> critical_faces(const WeightedComplex& W,
                                                    const SpanningTree& T, int d)
{
    std::vector<std::pair<Face, double>> out;
    for (const Face& f : W.complex().faces(d))
        if (!T.complex().contains(f))
            out.emplace_back(f, W.weight(f));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                         return a.second < b.second;
                     });
    return out;
}

std::map<Face, double> assign_deaths(const WeightedComplex& W,
                                     const SpanningTree& T, int d,
                                     const Field& F,
                                     const LeadingSetChooser& chooser)
{
    auto crits = critical_faces(W, T, d);

    std::map<Face, double> death;
    for (double alpha : W.critical_values()) {
        std::vector<Face> living;
        std::vector<double> living_weights;
        for (const auto& [face, birth] : crits) {
            if (birth <= alpha && !death.count(face)) {
                living.push_back(face);
                living_weights.push_back(birth);
            }
        }
        if (living.empty())
            continue;

        SimplicialComplex Q = W.reduced(alpha);
        SimplicialComplex Ta = T.reduced(alpha);
        FieldMatrix kernel = relative_kernel(living, Ta, Q, d, F);
        if (kernel.cols() == 0)
            continue;

        FieldMatrix equations = kernel.transposed();
        std::vector<std::size_t> dying =
            chooser ? chooser(equations, living_weights)
                    : leading_set(equations, living_weights);
        if (dying.size() != equations.rows() ||
            !leading_set_feasible(equations, dying))
            throw std::invalid_argument("invalid leading-set choice");
        for (std::size_t i : dying)
            death[living[i]] = alpha;
    }

    std::size_t survivors = crits.size() - death.size();
    if (d >= 1 && survivors != 0)
        throw std::logic_error("critical faces survived the full sweep");
    if (d == 0 && survivors != 1 && !crits.empty())
        throw std::logic_error("expected a single essential vertex");

    for (const auto& [face, birth] : crits)
        if (!death.count(face))
            death[face] = kInfinity;
    return death;
}

std::map<Face, double> assign_deaths_dim0(const WeightedComplex& W)
{
    const SimplicialComplex& X = W.complex();
    int n = X.vertex_count();

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };

    struct Edge {
        double w;
        int a, b;
    };
    std::vector<Edge> edges;
    for (const Face& e : X.faces(1))
        edges.push_back({W.weight(e), e[0], e[1]});
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return x.w < y.w; });

    std::map<Face, double> death;
    std::vector<bool> alive(n, true);
    std::size_t next = 0;
    for (double alpha : W.critical_values()) {
        std::vector<int> touched;
        while (next < edges.size() && edges[next].w <= alpha) {
            int ra = find(edges[next].a), rb = find(edges[next].b);
            if (ra != rb) {
                parent[ra] = rb;
                touched.push_back(rb);
            }
            ++next;
        }
        // Within each merged component all living vertices but one die;
        // the survivor is the lightest, ties to the higher index.
        std::map<int, std::vector<int>> comps;
        for (int v = 0; v < n; ++v)
            if (alive[v] && W.weight(Face{v}) <= alpha)
                comps[find(v)].push_back(v);
        for (auto& [root, members] : comps) {
            if (members.size() < 2)
                continue;
            int survivor = members[0];
            for (int v : members) {
                double wv = W.weight(Face{v});
                double ws = W.weight(Face{survivor});
                if (wv < ws || (wv == ws && v > survivor))
                    survivor = v;
            }
            for (int v : members) {
                if (v == survivor)
                    continue;
                alive[v] = false;
                death[Face{v}] = alpha;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (alive[v])
            death[Face{v}] = kInfinity;
    return death;
}

LabeledSkeleton build_hopes(const WeightedComplex& W, int d, const Field& F,
                            const std::vector<Face>* tie_order)
{
    SpanningTree T = minimal_spanning_tree(W, d, F, tie_order);
    std::map<Face, double> death = (d == 0 && !tie_order)
                                       ? assign_deaths_dim0(W)
                                       : assign_deaths(W, T, d, F);

    std::vector<LabeledFace> faces;
    for (int k = 0; k <= T.complex().dim(); ++k)
        for (const Face& f : T.complex().faces(k))
            faces.push_back({f, {T.weight(f), kInfinity}, FaceKind::mst});
    for (const auto& [face, birth] : critical_faces(W, T, d)) {
        double dth = death.at(face);
        if (birth < dth)
            faces.push_back({face, {birth, dth}, FaceKind::critical});
    }
    return LabeledSkeleton(d, W.ambient_vertex_count(), std::move(faces));
}

CorrespondenceReport diagram_correspondence(const LabeledSkeleton& H,
                                            const PersistenceDiagram& D)
{
    // Labels of critical faces vs positive-persistence dots. For d >= 1
    // both multisets are finite; for d = 0 the essential vertex matches
    // the essential dot.
    std::vector<std::pair<double, double>> labels;
    for (const auto& lf : H.critical())
        labels.emplace_back(lf.label.l, lf.label.r);
    std::vector<std::pair<double, double>> dots;
    for (const auto& dot : D.dots)
        if (dot.birth < dot.death)
            dots.emplace_back(dot.birth, dot.death);
    std::sort(labels.begin(), labels.end());
    std::sort(dots.begin(), dots.end());

    CorrespondenceReport report;
    if (labels.size() != dots.size()) {
        std::ostringstream os;
        os << "multiset sizes differ: " << labels.size() << " labels vs "
           << dots.size() << " dots";
        report.detail = os.str();
        return report;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != dots[i]) {
            std::ostringstream os;
            os << "mismatch at entry " << i << ": label (" << labels[i].first
               << ", " << labels[i].second << ") vs dot (" << dots[i].first
               << ", " << dots[i].second << ")";
            report.detail = os.str();
            return report;
        }
    }
    report.matched = true;
    return report;
}

}  // namespace hopes
