#include "simplectra/satake.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "simplectra/errors.hpp"

namespace simplectra::satake {

namespace {

constexpr double kClsTol = 1e-9; // classification tolerance

bool near(cd a, cd b, double tol = kClsTol) { return std::abs(a - b) <= tol; }

// best-permutation matching of computed against expected eigenvalues
double match_deviation(std::vector<cd> computed, const std::vector<cd>& expected) {
    std::sort(computed.begin(), computed.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0;
        for (size_t i = 0; i < expected.size(); ++i)
            worst = std::max(worst,
                             std::abs(computed[i] - expected[i]) /
                                 std::max(1.0, std::abs(expected[i])));
        best = std::min(best, worst);
    } while (std::next_permutation(computed.begin(), computed.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    }));
    return best;
}

template <typename M>
std::vector<cd> complex_eigen(const M& A) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
    if (es.info() != Eigen::Success)
        throw numeric_error("complex eigendecomposition failed to converge");
    std::vector<cd> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

} // namespace

cd SatakeParams::ztilde() const {
    return z1 + 1.0 / z1 + z2 + 1.0 / z2 + z3 + 1.0 / z3;
}

SatakeParams make_params(cd z1, cd z2, cd z3, int q) {
    if (q < 2) throw input_error("satake: q must be a prime power >= 2");
    if (std::abs(z1 * z2 * z3 - 1.0) > 1e-9)
        throw input_error("satake: (z1,z2,z3) must satisfy z1*z2*z3 = 1");
    if (std::abs(z1) == 0.0 || std::abs(z2) == 0.0 || std::abs(z3) == 0.0)
        throw input_error("satake: torus coordinates must be nonzero");
    return SatakeParams{z1, z2, z3, q};
}

SatakeMatrices build_matrices(const SatakeParams& p) {
    const double q = p.q;
    const cd z1 = p.z1, z2 = p.z2, z3 = p.z3;
    SatakeMatrices m;
    m.delta1 << q * z3 - 1.0, z2 - 1.0, z1 / q - 1.0;
    m.bdry1 << q / z3 - 1.0, q / z2 - q, q / z1 - q * q;
    m.delta2 << 1.0, q * z3, q * z2 * z3,
                1.0, z1 * z3, q * z3;
    m.bdry2 << 1.0, q,
               1.0 / z3, z2,
               z1 / q, 1.0 / z3;
    // printed closed forms of the Laplacian composites
    m.lap0_up = p.k0() - q * p.ztilde();
    m.lap1_down = m.delta1 * m.bdry1; // rank-one outer product, as printed
    m.lap1_up << q + 1.0, q / z2 + q * z3, q * q * z3 + q / z1,
                 z2 + 1.0 / z3, q + 1.0, q / z1 + q * z2,
                 z1 / q + 1.0 / z3, 1.0 / z2 + z1, q + 1.0;
    m.lap2_down << q + 2.0, q / z1 + q * z2 + q,
                   1.0 / z2 + z1 + 1.0, 2.0 * q + 1.0;
    return m;
}

double chain_residual(const SatakeParams& p) {
    const SatakeMatrices m = build_matrices(p);
    const Eigen::Vector2cd chain = m.delta2 * m.delta1;
    return chain.cwiseAbs().maxCoeff();
}

double composite_residual(const SatakeParams& p) {
    const SatakeMatrices m = build_matrices(p);
    double worst = 0;
    worst = std::max(worst, std::abs((m.bdry1 * m.delta1)(0, 0) - m.lap0_up));
    worst = std::max(worst,
                     (m.delta1 * m.bdry1 - m.lap1_down).cwiseAbs().maxCoeff());
    worst = std::max(worst, (m.bdry2 * m.delta2 - m.lap1_up).cwiseAbs().maxCoeff());
    worst = std::max(worst, (m.delta2 * m.bdry2 - m.lap2_down).cwiseAbs().maxCoeff());
    worst = std::max(worst, chain_residual(p));
    return worst;
}

ClosedForms closed_form_eigenvalues(const SatakeParams& p) {
    ClosedForms cf;
    cf.lamK = p.k0() - static_cast<double>(p.q) * p.ztilde();
    const double half = 1.5 * p.k1();
    const cd rad = half * half - cf.lamK;
    // For a conjugate pair rad is real negative and the principal sqrt sits on
    // its branch cut, where the +/- labels would follow the sign of a rounding
    // error; collapse a numerically-real rad first so that lamE_plus is always
    // the root with the larger real part, upper half-plane on ties.
    cd root;
    if (std::abs(rad.imag()) <= 1e-12 * std::max(1.0, std::abs(rad.real())))
        root = rad.real() >= 0.0 ? cd(std::sqrt(rad.real()), 0.0)
                                 : cd(0.0, std::sqrt(-rad.real()));
    else
        root = std::sqrt(rad); // principal branch: Re(root) > 0
    cf.lamE_plus = half + root;
    cf.lamE_minus = half - root;
    cf.nonreal = std::abs(cf.lamE_plus.imag()) > 1e-9 || std::abs(cf.lamE_minus.imag()) > 1e-9;
    return cf;
}

double closed_form_deviation(const SatakeParams& p) {
    const SatakeMatrices m = build_matrices(p);
    const ClosedForms cf = closed_form_eigenvalues(p);
    double worst = 0;
    worst = std::max(worst, std::abs(m.lap0_up - cf.lamK) / std::max(1.0, std::abs(cf.lamK)));
    worst = std::max(worst, match_deviation(complex_eigen(Eigen::MatrixXcd(m.lap1_down)),
                                            {cf.lamK, 0.0, 0.0}));
    worst = std::max(worst, match_deviation(complex_eigen(Eigen::MatrixXcd(m.lap1_up)),
                                            {0.0, cf.lamE_minus, cf.lamE_plus}));
    worst = std::max(worst, match_deviation(complex_eigen(Eigen::MatrixXcd(m.lap2_down)),
                                            {cf.lamE_minus, cf.lamE_plus}));
    return worst;
}

TypeInfo classify_type(const SatakeParams& p) {
    const double q = p.q;
    const double rq = std::sqrt(q);
    const cd z1 = p.z1, z2 = p.z2, z3 = p.z3;
    TypeInfo t;

    // (e): (q, 1, 1/q)
    if (near(z1, q) && near(z2, 1.0) && near(z3, 1.0 / q)) {
        t.kind = RepKind::E;
        t.name = "e";
        return t;
    }
    // (f): (wq, w, w/q), w = e^{+-2pi i/3}
    for (int sgn : {+1, -1}) {
        const cd w = std::polar(1.0, sgn * 2.0 * M_PI / 3.0);
        if (near(z1, w * q) && near(z2, w) && near(z3, w / q)) {
            t.kind = RepKind::F;
            t.name = "f";
            t.omega_sign = sgn;
            return t;
        }
    }
    // Steinberg: (1/q, 1, q)
    if (near(z1, 1.0 / q) && near(z2, 1.0) && near(z3, q)) {
        t.kind = RepKind::Steinberg;
        t.name = "steinberg";
        return t;
    }
    // (c): (c/sqrt q, c sqrt q, 1/c^2), |c| = 1
    {
        const cd c = z1 * rq; // candidate from the first coordinate
        if (std::abs(std::abs(c) - 1.0) <= kClsTol && near(z2, c * rq) &&
            near(z3, 1.0 / (c * c))) {
            t.kind = RepKind::C;
            t.name = "c";
            t.c = c;
            return t;
        }
    }
    // (d): (c sqrt q, c/sqrt q, 1/c^2), |c| = 1
    {
        const cd c = z1 / rq;
        if (std::abs(std::abs(c) - 1.0) <= kClsTol && near(z2, c / rq) &&
            near(z3, 1.0 / (c * c))) {
            t.kind = RepKind::D;
            t.name = "d";
            t.c = c;
            return t;
        }
    }
    // (a): all on the unit circle
    if (std::abs(std::abs(z1) - 1.0) <= kClsTol && std::abs(std::abs(z2) - 1.0) <= kClsTol &&
        std::abs(std::abs(z3) - 1.0) <= kClsTol) {
        t.kind = RepKind::A;
        t.name = "a";
        return t;
    }
    // (b): (1/c^2, c q^a, c q^{-a}), |c| = 1, 0 < a < 1/2
    {
        const double r = std::abs(z2);
        if (r > 1.0 + kClsTol && std::abs(std::abs(z1) - 1.0) <= kClsTol) {
            const double a = std::log(r) / std::log(q);
            if (a > 0 && a < 0.5) {
                const cd c = z2 / std::pow(q, a);
                if (std::abs(std::abs(c) - 1.0) <= kClsTol && near(z1, 1.0 / (c * c)) &&
                    near(z3, c * std::pow(q, -a))) {
                    t.kind = RepKind::B;
                    t.name = "b";
                    t.c = c;
                    t.a = a;
                    return t;
                }
            }
        }
    }
    t.kind = RepKind::Outside;
    t.name = "outside";
    return t;
}

std::optional<ClosedForms> type_exact_values(const TypeInfo& t, int q) {
    const double k0 = 2.0 * (q * q + q + 1);
    const double k1 = q + 1.0;
    ClosedForms cf;
    switch (t.kind) {
        case RepKind::E:
        case RepKind::Steinberg:
            cf.lamK = 0.0;
            cf.lamE_plus = 3.0 * k1;
            cf.lamE_minus = 0.0;
            cf.nonreal = false;
            return cf;
        case RepKind::F: {
            cf.lamK = 1.5 * k0;
            const double im = std::sqrt(3.0) * (q - 1.0) / 2.0;
            cf.lamE_plus = cd(1.5 * k1, im);
            cf.lamE_minus = cd(1.5 * k1, -im);
            cf.nonreal = im > 1e-9;
            return cf;
        }
        case RepKind::C:
        case RepKind::D: {
            // lamE- = k1 - 2 sqrt(q) Re(c); Vieta gives the partner and lamK
            const double lm = k1 - 2.0 * std::sqrt(static_cast<double>(q)) * t.c->real();
            cf.lamE_minus = lm;
            cf.lamE_plus = 3.0 * k1 - lm;
            cf.lamK = cf.lamE_plus * cf.lamE_minus;
            cf.nonreal = false;
            return cf;
        }
        default:
            return std::nullopt;
    }
}

Strips strips(double q) {
    const double k1 = q + 1.0;
    const double root = std::sqrt((k1 / 2.0) * (k1 / 2.0) + 8.0 * q);
    Strips s;
    s.I_lo = k1 - 2.0 * std::sqrt(q);
    s.I_hi = k1 + 2.0 * std::sqrt(q);
    s.Im_lo = 1.5 * k1 - root;
    s.Im_hi = k1 + 1.0;
    s.Ip_lo = 2.0 * k1 - 1.0;
    s.Ip_hi = 1.5 * k1 + root;
    return s;
}

MembershipReport verify_interval_membership(const SatakeParams& p) {
    const TypeInfo t = classify_type(p);
    const ClosedForms cf = closed_form_eigenvalues(p);
    const Strips s = strips(p.q);
    const double k0 = p.k0();
    const double q = p.q;
    const double tol = 1e-9 * std::max(1.0, k0);

    MembershipReport rep;
    rep.type = t.name;
    if (t.kind == RepKind::A) {
        const double lamK = cf.lamK.real();
        const bool k_ok = std::abs(cf.lamK.imag()) <= tol && lamK >= k0 - 6 * q - tol &&
                          lamK <= k0 + 3 * q + tol;
        const double lm = cf.lamE_minus.real(), lp = cf.lamE_plus.real();
        const bool e_ok = !cf.nonreal && lm >= s.Im_lo - tol && lm <= s.Im_hi + tol &&
                          lp >= s.Ip_lo - tol && lp <= s.Ip_hi + tol;
        rep.in_intervals = k_ok && e_ok;
        rep.details = json{{"lambdaK", lamK},
                           {"lambdaK_window", json::array({k0 - 6 * q, k0 + 3 * q})},
                           {"lambdaE_minus", lm},
                           {"Iminus", json::array({s.Im_lo, s.Im_hi})},
                           {"lambdaE_plus", lp},
                           {"Iplus", json::array({s.Ip_lo, s.Ip_hi})}};
        return rep;
    }
    if (t.kind == RepKind::C || t.kind == RepKind::D) {
        const auto exact = type_exact_values(t, p.q);
        const double lm = exact->lamE_minus.real();
        rep.in_intervals = lm >= s.I_lo - tol && lm <= s.I_hi + tol;
        rep.details = json{{"lambdaE_minus", lm}, {"I", json::array({s.I_lo, s.I_hi})}};
        return rep;
    }
    throw precondition_error("verify_interval_membership: defined for types (a), (c), (d); got " +
                             t.name);
}

SpectralPrediction predicted_spectrum(long long n, int q, bool tripartite, long long euler) {
    if (q < 2) throw input_error("predicted_spectrum: q must be >= 2");
    if (n < 1) throw input_error("predicted_spectrum: n must be positive");
    SpectralPrediction sp;
    sp.n = n;
    sp.q = q;
    sp.tripartite = tripartite;
    const long long qq = q;
    if (tripartite) {
        sp.Na = n - 3;
        sp.Nc = n * (qq * qq + qq - 2) + 6;
        sp.Ne = 1;
        sp.Nf = 2;
    } else {
        sp.Na = n - 1;
        sp.Nc = n * (qq * qq + qq - 2) + 2;
        sp.Ne = 1;
        sp.Nf = 0;
    }
    sp.Nstn = euler;
    sp.bands = strips(q);
    const long long k0_half = qq * qq + qq + 1; // k0/2
    sp.identities_ok =
        (sp.Na + sp.Ne + sp.Nf == n) && (3 * sp.Na + sp.Nc + sp.Ne + sp.Nf == n * k0_half);
    return sp;
}

json SpectralPrediction::to_json() const {
    const double k0 = 2.0 * (q * q + q + 1);
    json j;
    j["n"] = n;
    j["q"] = q;
    j["tripartite"] = tripartite;
    j["N_a"] = Na;
    j["N_c"] = Nc;
    j["N_e"] = Ne;
    j["N_f"] = Nf;
    j["N_steinberg"] = Nstn;
    j["identities_ok"] = identities_ok;
    json vertex = json::array();
    vertex.push_back(json{{"interval", json::array({k0 - 6.0 * q, k0 + 3.0 * q})}, {"count", Na}});
    if (Nf > 0) vertex.push_back(json{{"point", 1.5 * k0}, {"count", Nf}});
    j["vertex_strata"] = vertex;
    json edge = json::array();
    edge.push_back(json{{"interval", json::array({bands.I_lo, bands.I_hi})}, {"count", Nc}});
    edge.push_back(json{{"interval", json::array({bands.Im_lo, bands.Im_hi})}, {"count", Na}});
    edge.push_back(json{{"interval", json::array({bands.Ip_lo, bands.Ip_hi})}, {"count", Na}});
    edge.push_back(json{{"point", 3.0 * (q + 1.0)}, {"count", Ne}});
    j["edge_strata"] = edge;
    return j;
}

json ramanujan_formulas(int q, double theta, std::optional<long long> n,
                        const std::vector<long long>& sizes) {
    if (q < 2) throw input_error("ramanujan_formulas: q must be >= 2");
    if (!(theta > 0) || theta > 1.0 / 3.0 + 1e-12)
        throw input_error("ramanujan_formulas: need 0 < theta <= 1/3");
    const double rq = std::sqrt(static_cast<double>(q));
    const double k0 = 2.0 * (q * q + q + 1);
    const double k1 = q + 1.0;
    const double mu0 = 6.0 * q;
    const double mu1 = 2.0 * rq;

    json out;
    out["q"] = q;
    out["theta"] = theta;
    out["cheeger_rhs"] =
        (q + 1.0 - 2.0 * rq) * (k0 - mu0 * (1.0 + 10.0 / (9.0 * theta * theta * theta)));
    out["chromatic_lb"] = std::cbrt(static_cast<double>(q)) / 30.0;
    if (n) {
        out["n"] = *n;
        out["thm13_rhs"] =
            (65.0 * std::pow(q, 3.5) * theta + 244.0 * std::pow(q, 2.5)) * theta *
            static_cast<double>(*n);
        out["simplified_mixing_rhs"] = theta * (9.0 * theta + 4.0 * mu0 / k0) *
                                       (k1 * mu0 + k0 * mu1) * k1 * static_cast<double>(*n);
        if (!sizes.empty()) {
            if (sizes.size() != 4)
                throw input_error("ramanujan_formulas: sizes must be four values (a,b,c,d)");
            double abcd = 1.0;
            for (long long s : sizes) abcd *= static_cast<double>(s);
            const double nn = static_cast<double>(*n);
            out["sizes"] = sizes;
            out["main_term"] = 27.0 * std::pow(static_cast<double>(q), 4.0) * abcd / (nn * nn * nn);
        }
    }
    return out;
}

} // namespace simplectra::satake
