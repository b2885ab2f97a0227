#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>

#include <json.hpp>

namespace simplectra::satake {

using json = nlohmann::ordered_json;
using cd = std::complex<double>;

// Point (z1,z2,z3) on the unit-determinant torus (z1 z2 z3 = 1), plus the
// residue prime power q >= 2.
struct SatakeParams {
    cd z1, z2, z3;
    int q = 2;

    double k0() const { return 2.0 * (q * q + q + 1); }
    double k1() const { return q + 1.0; }
    // z~ = sum of z_i + 1/z_i.
    cd ztilde() const;
};

// Validates q >= 2 and |z1 z2 z3 - 1| <= 1e-9.
SatakeParams make_params(cd z1, cd z2, cd z3, int q);

// The 4 operator models at the Satake point, exactly as printed, plus their
// Laplacian composites:
//   delta1: 3x1, bdry1: 1x3, delta2: 2x3, bdry2: 3x2;
//   lap0_up = bdry1*delta1 (scalar), lap1_down = delta1*bdry1,
//   lap1_up = bdry2*delta2, lap2_down = delta2*bdry2.
// The lap* members hold the printed closed forms; composite_residual()
// measures the distance to the actual products.
struct SatakeMatrices {
    Eigen::Vector3cd delta1;
    Eigen::RowVector3cd bdry1;
    Eigen::Matrix<cd, 2, 3> delta2;
    Eigen::Matrix<cd, 3, 2> bdry2;
    cd lap0_up;
    Eigen::Matrix3cd lap1_down;
    Eigen::Matrix3cd lap1_up;
    Eigen::Matrix2cd lap2_down;
};
SatakeMatrices build_matrices(const SatakeParams& p);

// Max absolute entry over all composite identities:
// bdry1*delta1 - lap0_up, delta1*bdry1 - lap1_down, bdry2*delta2 - lap1_up,
// delta2*bdry2 - lap2_down, and the chain condition delta2*delta1 = 0.
double composite_residual(const SatakeParams& p);
// Max absolute entry of delta2 * delta1 (must vanish identically).
double chain_residual(const SatakeParams& p);

// Closed-form eigenvalues: lamK = k0 - q*z~ (vertex), and the edge pair
// lamE+- = 3k1/2 +- sqrt((3k1/2)^2 - lamK), principal branch.
struct ClosedForms {
    cd lamK;
    cd lamE_plus, lamE_minus;
    bool nonreal = false; // |Im lamE| above tolerance
};
ClosedForms closed_form_eigenvalues(const SatakeParams& p);

// Predicted spectra of the four models: {lamK}, {lamK,0,0}, {0,lamE-,lamE+},
// {lamE-,lamE+}. Verifies them against dense eigensolves (best permutation
// matching); returns the maximum absolute deviation.
double closed_form_deviation(const SatakeParams& p);

enum class RepKind { A, B, C, D, E, F, Steinberg, Outside };

struct TypeInfo {
    RepKind kind = RepKind::Outside;
    std::string name;              // "a".."f", "steinberg", "outside"
    std::optional<cd> c;           // families b, c, d
    std::optional<double> a;       // family b exponent, 0 < a < 1/2
    int omega_sign = 0;            // family f: +1 for e^{2pi i/3}, -1 conj
};

// Classifies against the unitary list, tolerance 1e-9, precedence
// e > f > steinberg > c > d > a > b; the families c/d/e/f/steinberg are
// matched in the documented coordinate order, a/b up to the stated shape.
TypeInfo classify_type(const SatakeParams& p);

// Exact per-type closed forms (types c/d/e/f/steinberg); nullopt otherwise.
std::optional<ClosedForms> type_exact_values(const TypeInfo& t, int q);

// Interval membership for classified type (a) (lamK in [k0-6q, k0+3q],
// lamE+- in I+-) and type (c)/(d) (lamE- in I = [k1-2sqrt(q), k1+2sqrt(q)]).
// Other types: precondition_error.
struct MembershipReport {
    std::string type;
    bool in_intervals = false;
    json details;
};
MembershipReport verify_interval_membership(const SatakeParams& p);

// Spectral strips for residue degree q.
struct Strips {
    double I_lo, I_hi;       // [k1 - 2 sqrt q, k1 + 2 sqrt q]
    double Im_lo, Im_hi;     // I- = [3k1/2 - sqrt((k1/2)^2 + 8q), k1 + 1]
    double Ip_lo, Ip_hi;     // I+ = [2k1 - 1, 3k1/2 + sqrt((k1/2)^2 + 8q)]
};
Strips strips(double q);

// Multiplicity bookkeeping for a Ramanujan quotient on n vertices:
// vertex strata [k0-6q, k0+3q] x N_a and {3k0/2} x N_f; edge strata I x N_c,
// I- x N_a, I+ x N_a, {3k1} x N_e; N_stn copies of the Steinberg rep
// (the proper Euler characteristic, supplied by the caller).
struct SpectralPrediction {
    long long n = 0;
    int q = 2;
    bool tripartite = false;
    long long Na = 0, Nc = 0, Ne = 0, Nf = 0, Nstn = 0;
    Strips bands;
    bool identities_ok = false; // n = Na+Ne+Nf and n*k0/2 = 3Na+Nc+Ne+Nf

    json to_json() const;
};
SpectralPrediction predicted_spectrum(long long n, int q, bool tripartite, long long euler);

// Pure formula evaluation for reporting (no complex required):
//   cheeger_rhs          = (q+1-2sqrt q)(2q^2+2q+2 - 6q(1+10/(9 theta^3)))
//   thm13_rhs            = (65 q^3.5 theta + 244 q^2.5) theta n     (needs n)
//   chromatic_lb         = cbrt(q)/30
//   simplified_mixing_rhs= theta(9theta+4mu0/k0)(k1 mu0 + k0 mu1)k1 n (needs n;
//                          mu0 = 6q, mu1 = 2 sqrt q; assumes mu1 <= k1)
//   main_term            = 27 q^4 abcd / n^3                (needs n and sizes)
json ramanujan_formulas(int q, double theta, std::optional<long long> n,
                        const std::vector<long long>& sizes);

} // namespace simplectra::satake
