#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplectra/complex.hpp"

namespace simplectra::bounds {

using json = nlohmann::ordered_json;

// Relative tolerance for holds-flags: an inequality "lhs >= rhs" holds when
// lhs >= rhs - 1e-9 * max(1, |rhs|); "lhs <= rhs" symmetrically.
inline constexpr double kHoldsTol = 1e-9;

struct InequalityReport {
    double lhs = 0;
    double rhs = 0;
    std::string relation; // "lhs>=rhs" or "lhs<=rhs"
    bool holds = false;
    json details;         // named intermediate quantities

    json to_json() const;
};

// Cheeger-type bound for triangle complexes: for a partition of the vertices
// into nonempty A,B,C,
//   |T(A,B,C)| n^2 / (|A||B||C|)  >=  lambda1 (k0 - mu0 (1 + 10 n^3 / (9|A||B||C|)))
// with k0 the regular vertex degree, mu0 = max |lambda - k0| over ALL
// nontrivial Delta_0^+ eigenvalues (colored included), lambda1 = min
// nontrivial Delta_1^+ eigenvalue. Negative rhs is reported as-is (vacuous).
InequalityReport cheeger_check(const SimplicialComplex& X, const std::vector<int>& A,
                               const std::vector<int>& B, const std::vector<int>& C);

// Spectra-dependent inputs of cheeger_check, computed once for batch sweeps.
struct CheegerContext {
    double k0 = 0, mu0 = 0, lambda1 = 0;
    long long n = 0;
};
CheegerContext cheeger_context(const SimplicialComplex& X);
InequalityReport cheeger_check_with(const SimplicialComplex& X, const CheegerContext& ctx,
                                    const std::vector<int>& A, const std::vector<int>& B,
                                    const std::vector<int>& C);

// Minimum of the cheeger lhs over all 3-partitions with every block of size
// >= theta*n. Exhaustive (restricted-growth enumeration); n <= 15. The
// argmin is the lexicographically first minimizer.
struct HThetaResult {
    double value = 0;
    std::vector<std::vector<int>> argmin;
    long long partitions_checked = 0;

    json to_json() const;
};
HThetaResult h_theta(const SimplicialComplex& X, double theta);

// General-dimension Cheeger bound (d = dim X, sets A_0..A_d partition the
// vertices):
//   |F(A_0..A_d)| n^d / prod|A_i|
//     >= K lambda_{d-1} (1 - mu_{d-2}/k_{d-2} - C_d E n^{d+1} / prod|A_i|)
// with K = k_0...k_{d-2}, E = sum_{i<=d-2} mu_i/k_i, mu_i over ALL nontrivial
// Delta_i^+ values. C_2 = 10/9 recovers the triangle-complex bound exactly.
// Only d = 2 is asserted (details.asserted); d >= 3 reports slack.
InequalityReport cheeger_general_check(const SimplicialComplex& X,
                                       const std::vector<std::vector<int>>& sets,
                                       double Cd = 1.0);

// Mixing bound for 2-galleries on an edge-regular tripartite complex with the
// placement A+D | B | C in three distinct blocks (all disjoint, nonempty):
//   | F2(A,B,C,D) - 27 k0 k1^2 abcd / (2 n^3) |  <=  rhs(mu0, mu1, sizes)
// where mu0 excludes the 3k0/2 cluster and mu1 is the two-cluster radius
// around {k1, 2k1} excluding 3k1.
InequalityReport mixing_check(const SimplicialComplex& X, const std::vector<int>& A,
                              const std::vector<int>& B, const std::vector<int>& C,
                              const std::vector<int>& D);

// Colored (c-partite) expander mixing on the 1-skeleton: for A inside block i
// and B inside block j, i != j,
//   | E(A,B) - c k |A||B| / ((c-1) n) |  <=  mu sqrt(|A||B|)
// with mu excluding the colored cluster c k/(c-1). The coloring must satisfy
// the c-colored k-regular structure (no same-class neighbors, exactly k/(c-1)
// neighbors in each other class).
InequalityReport colored_mixing_check(const SimplicialComplex& X,
                                      const std::vector<int>& coloring,
                                      const std::vector<int>& A, const std::vector<int>& B);

// Minimal number of colors with no monochromatic triangle, exhaustive with
// symmetry pruning; n <= 15.
struct WeakChromaticResult {
    int chi = 0;
    std::vector<int> witness;

    json to_json() const;
};
WeakChromaticResult weak_chromatic(const SimplicialComplex& X);

// All partitions of {0..n-1} into exactly 3 nonempty blocks, lexicographic
// restricted-growth order. Desk scale (n <= 15 enforced by callers).
std::vector<std::vector<std::vector<int>>> three_partitions(int n);

} // namespace simplectra::bounds
