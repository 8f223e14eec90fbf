/**
 * Brute-force ground truth: exhaustive search over spanning subcomplexes
 * to independently verify the optimality theorems at desk scale.
 */

#ifndef HOPES_ORACLE_HPP
#define HOPES_ORACLE_HPP

#include "hopes/homology.hpp"

#include <functional>

namespace hopes {

struct SearchBudget {
    std::size_t max_d_faces = 22;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Yields skeleton(Q, d-1) union T for every subset T of Q's d-faces.
void enumerate_spanning_subcomplexes(
    const SimplicialComplex& Q, int d, const SearchBudget& budget,
    const std::function<void(const SimplicialComplex&)>& fn);

std::vector<SimplicialComplex> enumerate_spanning_subcomplexes(
    const SimplicialComplex& Q, int d, const SearchBudget& budget);

struct OracleResult {
    double weight = 0;
    SimplicialComplex witness;
    bool feasible = false;
};

// Minimum total weight over all (d-1)-fitting d-spanning d-forests in
// Q_alpha = W.reduced(alpha), with one witness. Weights of lower faces are
// included in the total, so the result is directly comparable with the
// reduced spanning tree.
OracleResult min_fitting_forest(const WeightedComplex& W, double alpha, int d,
                                const Field& F, const SearchBudget& budget = {});

// Minimum total weight over all d-fitting d-spanning d-subcomplexes.
OracleResult min_fitting_subcomplex(const WeightedComplex& W, double alpha,
                                    int d, const Field& F,
                                    const SearchBudget& budget = {});

}  // namespace hopes

#endif  // HOPES_ORACLE_HPP
