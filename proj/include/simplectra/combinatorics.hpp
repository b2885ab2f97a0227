#pragma once

#include <Eigen/Dense>
#include <vector>

#include "simplectra/complex.hpp"

namespace simplectra::comb {

// Number of j-cells with exactly one vertex in each of the j+1 pairwise
// disjoint sets.
long long count_rainbow(const SimplicialComplex& X, int j,
                        const std::vector<std::vector<int>>& sets);

// Number of length-2 paths s - t - r with s in S, t in T, r in R (edges of
// the 1-skeleton). S,T and T,R must be disjoint; S and R may meet
// (backtracking s = r counts).
long long count_paths(const SimplicialComplex& X, const std::vector<int>& S,
                      const std::vector<int>& T, const std::vector<int>& R);

// Number of j-galleries over windows B_0..B_l (l >= j): sequences of j-cells
// tau_0..tau_{l-j}, where tau_t has exactly one vertex in each of
// B_t..B_{t+j}, and consecutive cells intersect in a (j-1)-cell. Every window
// span B_t..B_{t+j} must be pairwise disjoint; non-adjacent windows may meet.
long long count_galleries(const SimplicialComplex& X, int j,
                          const std::vector<std::vector<int>>& sets);

// Indicator 1-form of the cut (A,B): +1 on canonical edges from A to B,
// -1 on canonical edges from B to A, 0 elsewhere. A,B disjoint.
Eigen::VectorXd indicator_form(const SimplicialComplex& X,
                               const std::vector<int>& A, const std::vector<int>& B);

// Spectral count of 2-galleries < (A^2 + k1 A) 1_AB, 1_CD > on an edge-regular
// tripartite complex; requires the placement A+D, B, C in three distinct
// blocks of the canonical proper 3-coloring, all four sets pairwise disjoint
// and nonempty. Equals count_galleries(X, 2, {A,B,C,D}) by the counting
// identity.
double spectral_gallery_count(const SimplicialComplex& X,
                              const std::vector<int>& A, const std::vector<int>& B,
                              const std::vector<int>& C, const std::vector<int>& D);

// Shared validation helper: all ids in range, no duplicates inside a set.
void validate_vertex_sets(const SimplicialComplex& X,
                          const std::vector<std::vector<int>>& sets,
                          bool require_nonempty);

} // namespace simplectra::comb
