#include "hopes/oracle.hpp"

#include <algorithm>

namespace hopes {

namespace {

std::vector<Rational> boundary_column(const SimplicialComplex& Q, const Face& f,
                                      const Field& F)
{
    int d = face_dim(f);
    std::vector<Rational> col(Q.face_count(d - 1), Rational(0));
    if (d == 0)
        return col;
    Face sub(f.size() - 1);
    for (std::size_t omit = 0; omit < f.size(); ++omit) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (i != omit)
                sub[t++] = f[i];
        col[Q.face_index(sub)] = F.from_int((omit % 2 == 0) ? 1 : -1);
    }
    return col;
}

SimplicialComplex assemble(const SimplicialComplex& Q, int d,
                           const std::vector<Face>& top,
                           const std::vector<bool>& chosen)
{
    ComplexBuilder builder(Q.vertex_count());
    for (int k = 0; k < d; ++k)
        for (const Face& f : Q.faces(k))
            builder.add_face(f);
    for (std::size_t i = 0; i < top.size(); ++i)
        if (chosen[i])
            builder.add_face(top[i]);
    return builder.build();
}

double lower_weight(const WeightedComplex& W, const SimplicialComplex& Q, int d)
{
    double s = 0;
    for (int k = 0; k < d; ++k)
        for (const Face& f : Q.faces(k))
            s += W.weight(f);
    return s;
}

struct SortedFaces {
    std::vector<Face> faces;
    std::vector<double> weights;
};

SortedFaces sorted_d_faces(const WeightedComplex& W, const SimplicialComplex& Q,
                           int d)
{
    SortedFaces out;
    out.faces = Q.faces(d);
    std::stable_sort(out.faces.begin(), out.faces.end(),
                     [&](const Face& a, const Face& b) {
                         return W.weight(a) < W.weight(b);
                     });
    for (const Face& f : out.faces)
        out.weights.push_back(W.weight(f));
    return out;
}

}  // namespace

void enumerate_spanning_subcomplexes(
    const SimplicialComplex& Q, int d, const SearchBudget& budget,
    const std::function<void(const SimplicialComplex&)>& fn)
{
    const auto& top = Q.faces(d);
    if (top.size() > budget.max_d_faces)
        throw BudgetExceeded("too many candidate d-faces for enumeration");

    std::vector<bool> chosen(top.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == top.size()) {
            fn(assemble(Q, d, top, chosen));
            return;
        }
        chosen[i] = false;
        self(self, i + 1);
        chosen[i] = true;
        self(self, i + 1);
        chosen[i] = false;
    };
    rec(rec, 0);
}

std::vector<SimplicialComplex> enumerate_spanning_subcomplexes(
    const SimplicialComplex& Q, int d, const SearchBudget& budget)
{
    std::vector<SimplicialComplex> out;
    enumerate_spanning_subcomplexes(Q, d, budget,
                                    [&](const SimplicialComplex& S) {
                                        out.push_back(S);
                                    });
    return out;
}

OracleResult min_fitting_forest(const WeightedComplex& W, double alpha, int d,
                                const Field& F, const SearchBudget& budget)
{
    SimplicialComplex Q = W.reduced(alpha);
    OracleResult best;

    if (d == 0) {
        // The empty complex is the only 0-forest and is trivially
        // (-1)-fitting and 0-spanning.
        best.feasible = true;
        best.weight = 0;
        return best;
    }

    SortedFaces top = sorted_d_faces(W, Q, d);
    if (top.faces.size() > budget.max_d_faces)
        throw BudgetExceeded("too many candidate d-faces for enumeration");

    double base = lower_weight(W, Q, d);

    // A forest's d-face boundary columns are independent, so dependent
    // columns prune whole subtrees. The number of kept faces is pinned by
    // beta_{d-1}: each independent column lowers it by one.
    std::size_t cd1 = Q.face_count(d - 1);
    std::size_t rk_lower = rank(boundary_matrix(Q, d - 1, F));
    std::size_t beta_no_top = cd1 - rk_lower;   // beta_{d-1} with no d-faces
    std::size_t beta_target = betti(Q, d - 1, F);
    if (beta_no_top < beta_target)
        throw std::logic_error("inconsistent Betti bookkeeping");
    std::size_t need = beta_no_top - beta_target;

    ColumnSpan span(F, cd1);
    std::vector<bool> chosen(top.faces.size(), false);
    double current = 0;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        std::size_t have = span.size();
        if (have + (top.faces.size() - i) < need)
            return;   // cannot reach the required rank any more
        if (have == need || i == top.faces.size()) {
            if (have != need)
                return;
            if (best.feasible && current >= best.weight - base)
                return;
            SimplicialComplex S = assemble(Q, d, top.faces, chosen);
            if (is_fitting(S, Q, d - 1, F)) {
                best.feasible = true;
                best.weight = base + current;
                best.witness = std::move(S);
            }
            return;
        }
        // Exclude first: cheap sets are reached sooner.
        self(self, i + 1);
        if (best.feasible && current + top.weights[i] >= best.weight - base)
            return;
        if (span.add(boundary_column(Q, top.faces[i], F))) {
            chosen[i] = true;
            current += top.weights[i];
            self(self, i + 1);
            current -= top.weights[i];
            chosen[i] = false;
            span.pop();
        }
    };
    rec(rec, 0);
    return best;
}

OracleResult min_fitting_subcomplex(const WeightedComplex& W, double alpha,
                                    int d, const Field& F,
                                    const SearchBudget& budget)
{
    SimplicialComplex Q = W.reduced(alpha);
    OracleResult best;

    SortedFaces top = sorted_d_faces(W, Q, d);
    if (top.faces.size() > budget.max_d_faces)
        throw BudgetExceeded("too many candidate d-faces for enumeration");

    double base = lower_weight(W, Q, d);

    std::size_t cd1 = (d >= 1) ? Q.face_count(d - 1) : 0;
    std::size_t rk_lower = (d >= 1) ? rank(boundary_matrix(Q, d - 1, F)) : 0;
    std::size_t beta_lower_no_top = cd1 - rk_lower;
    std::size_t beta_d_target = betti(Q, d, F);
    std::size_t beta_d1_target = (d >= 1) ? betti(Q, d - 1, F) : 0;

    ColumnSpan span(F, cd1);
    std::vector<bool> chosen(top.faces.size(), false);
    std::vector<bool> in_span(top.faces.size(), false);
    double current = 0;
    std::size_t picked = 0;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == top.faces.size()) {
            // Necessary rank conditions before the full fitting check.
            std::size_t beta_d = picked - span.size();
            if (beta_d != beta_d_target)
                return;
            if (d >= 1 && beta_lower_no_top - span.size() != beta_d1_target)
                return;
            if (best.feasible && current >= best.weight - base)
                return;
            SimplicialComplex S = assemble(Q, d, top.faces, chosen);
            if (is_fitting(S, Q, d, F)) {
                best.feasible = true;
                best.weight = base + current;
                best.witness = std::move(S);
            }
            return;
        }
        self(self, i + 1);
        if (best.feasible && current + top.weights[i] >= best.weight - base)
            return;
        chosen[i] = true;
        ++picked;
        current += top.weights[i];
        in_span[i] = span.add(boundary_column(Q, top.faces[i], F));
        self(self, i + 1);
        if (in_span[i])
            span.pop();
        in_span[i] = false;
        current -= top.weights[i];
        --picked;
        chosen[i] = false;
    };
    rec(rec, 0);
    return best;
}

}  // namespace hopes
