#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include <json.hpp>

#include "simplectra/complex.hpp"

namespace simplectra::hodge {

using json = nlohmann::ordered_json;

// Desk-scale cap for dense symmetric eigendecompositions.
inline constexpr int kDenseEigCap = 5000;

// Boundary matrix of dimension i, 1 <= i <= dim X.
// Rows: (i-1)-cells, cols: i-cells; entry (tau, sigma) = (-1)^p when
// sigma = tau + {v} with v at 0-based position p of sigma.
Eigen::MatrixXd boundary_matrix(const SimplicialComplex& X, int i);

enum class LaplacianKind { Up, Down, Full };

// Delta_i^+ = B_{i+1} B_{i+1}^T,  Delta_i^- = B_i^T B_i (zero for i = 0),
// Full = sum. Defined for 0 <= i <= dim X.
Eigen::MatrixXd laplacian(const SimplicialComplex& X, int i, LaplacianKind kind);

// Orthonormal basis (columns) of the numerical kernel of M, via SVD with
// singular-value threshold 1e-8 * sigma_max.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& M);
// Orthonormal basis (columns) of the row space of M (= im M^T), same threshold.
Eigen::MatrixXd rowspace_basis(const Eigen::MatrixXd& M);

// Sorted eigenvalues of a symmetric matrix (dense; cap kDenseEigCap).
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& A);

struct SpectrumReport {
    int dim = 0;
    // Full Spec Delta_i^+, binned into (value, multiplicity), ascending.
    std::vector<std::pair<double, int>> eigenvalues;
    std::vector<double> trivial;    // spectrum on im(delta_i) = B^i
    std::vector<double> nontrivial; // spectrum on ker(boundary_i) = Z_i
    std::vector<double> colored;    // nontrivial values matching 3k0/2 (i=0) or 3k1 (i=1)
    int betti = 0;                  // dim ker(Delta_i^+ + Delta_i^-), unreduced
    std::optional<double> k;        // regular i-cell degree, if defined and regular
    std::optional<double> mu;       // max |lambda - k| over non-colored nontrivial

    json to_json() const;
};

// Full eigendecomposition of Delta_i^+ plus the trivial/nontrivial split.
// The nontrivial part is the compression of Delta_i^+ onto an orthonormal
// basis of the numerical kernel of the boundary map (at i = 0, of the
// all-ones row, so constants are the trivial part) -- not eigenvalue
// filtering. 0 <= i <= dim X.
SpectrumReport spectrum_report(const SimplicialComplex& X, int i);

// Betti number b_i = dim ker Delta_i (unreduced homology ranks).
int betti_number(const SimplicialComplex& X, int i);

struct GarlandReport {
    int j = 0;
    double lo = 0, hi = 0;          // [(j+1)*lambda - j*K, (j+1)*Lambda - j*k]
    double lambda_min = 0, lambda_max = 0; // min/max over usable links
    int deg_min = 0, deg_max = 0;   // k, K = min/max degree of j-cells
    bool holds = false;             // Spec Delta_j^+|Z_j inside the interval
    bool disconnected_link = false; // some usable link has b0 > 1
    int links_used = 0;
    std::vector<double> spectrum;   // Spec Delta_j^+|Z_j, ascending
    Cell witness_min, witness_max;  // links attaining lambda_min / lambda_max

    json to_json() const;
};

// Local-to-global bound from the links of (j-1)-cells, 1 <= j <= dim X.
// Links with empty nontrivial spectrum are skipped; no usable link (or empty
// X^{j-1}) raises not_applicable_error.
GarlandReport garland_check(const SimplicialComplex& X, int j);

// Signed edge adjacency: A(e,e') = sum over triangles t containing both of
// -[e:t][e':t]; equivalently +1 per shared triangle when e,e' share an origin
// or a terminus, -1 when one's terminus is the other's origin (canonical
// orientations). D = diag(edge degrees). Invariant: Delta_1^+ = D - A.
struct EdgeAdjacency {
    Eigen::MatrixXd A;
    Eigen::VectorXd D;
};
EdgeAdjacency edge_adjacency(const SimplicialComplex& X);

struct DeviationReport {
    double norm_D = 0;              // || k0 * P_{B^1} - Delta_1^- ||
    std::optional<double> norm_Dp;  // tripartite only: with the (k0/2) P_{<xi,xi~>} correction
    double mu0 = 0;                 // includes colored values (norm_D bound)
    double mu0_noncolored = 0;      // excludes colored values (norm_Dp bound)
    bool holds_D = false;           // norm_D  <= mu0 + tol
    std::optional<bool> holds_Dp;   // norm_Dp <= mu0_noncolored + tol

    json to_json() const;
};

// Projector-deviation operators on 1-forms; requires dim X = 2 and vertex-
// regularity. The complex form xi is built from the canonical 3-coloring when
// one exists (phases 1, omega, omega-bar by color pair, omega = e^{2 pi i/3}).
DeviationReport deviation_norms(const SimplicialComplex& X);

} // namespace simplectra::hodge
