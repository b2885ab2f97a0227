#include "simplectra/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

#include "simplectra/errors.hpp"

namespace simplectra::hodge {

namespace {

constexpr double kSvdRelTol = 1e-8;   // numerical-kernel singular-value cutoff
constexpr double kZeroRelTol = 1e-7;  // eigenvalue-is-zero cutoff (Betti counts)
constexpr double kBinRelTol = 1e-6;   // multiplicity binning for reports

void check_dense_cap(Eigen::Index rows) {
    if (rows > kDenseEigCap)
        throw resource_cap_error("dense eigendecomposition cap exceeded: " +
                                 std::to_string(rows) + " > " + std::to_string(kDenseEigCap));
}

Eigen::MatrixXd ones_row(int n) { return Eigen::MatrixXd::Ones(1, n); }

std::vector<double> to_sorted_vector(const Eigen::VectorXd& v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end());
    return out;
}

// Eigenvalues of the compression U^T A U for an orthonormal-column U.
std::vector<double> compressed_spectrum(const Eigen::MatrixXd& A, const Eigen::MatrixXd& U) {
    if (U.cols() == 0) return {};
    const Eigen::MatrixXd C = U.transpose() * A * U;
    return to_sorted_vector(symmetric_eigenvalues(0.5 * (C + C.transpose())));
}

} // namespace

Eigen::MatrixXd boundary_matrix(const SimplicialComplex& X, int i) {
    if (i < 1 || i > X.dim())
        throw input_error("boundary_matrix: need 1 <= i <= dim X (i=" + std::to_string(i) + ")");
    const auto& lo = X.cells(i - 1);
    const auto& hi = X.cells(i);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lo.size()),
                                              static_cast<Eigen::Index>(hi.size()));
    Cell face(static_cast<size_t>(i));
    for (int col = 0; col < static_cast<int>(hi.size()); ++col) {
        const Cell& c = hi[col];
        for (size_t drop = 0; drop < c.size(); ++drop) {
            size_t w = 0;
            for (size_t p = 0; p < c.size(); ++p)
                if (p != drop) face[w++] = c[p];
            B(X.index_of(face), col) = (drop % 2 == 0) ? 1.0 : -1.0;
        }
    }
    return B;
}

Eigen::MatrixXd laplacian(const SimplicialComplex& X, int i, LaplacianKind kind) {
    if (i < 0 || i > X.dim())
        throw input_error("laplacian: need 0 <= i <= dim X (i=" + std::to_string(i) + ")");
    const Eigen::Index m = X.cell_count(i);
    Eigen::MatrixXd up = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd down = Eigen::MatrixXd::Zero(m, m);
    if (i < X.dim()) {
        const Eigen::MatrixXd B = boundary_matrix(X, i + 1);
        up = B * B.transpose();
    }
    if (i >= 1) {
        const Eigen::MatrixXd B = boundary_matrix(X, i);
        down = B.transpose() * B;
    }
    switch (kind) {
        case LaplacianKind::Up: return up;
        case LaplacianKind::Down: return down;
        case LaplacianKind::Full: return up + down;
    }
    throw input_error("laplacian: unknown kind");
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& M) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double tol = kSvdRelTol * smax;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > tol && smax > 0) ++rank;
    return svd.matrixV().rightCols(M.cols() - rank);
}

Eigen::MatrixXd rowspace_basis(const Eigen::MatrixXd& M) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double tol = kSvdRelTol * smax;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > tol && smax > 0) ++rank;
    return svd.matrixV().leftCols(rank);
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& A) {
    check_dense_cap(A.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numeric_error("symmetric eigendecomposition failed to converge (" +
                            std::to_string(A.rows()) + "x" + std::to_string(A.cols()) + ")");
    return es.eigenvalues();
}

int betti_number(const SimplicialComplex& X, int i) {
    const Eigen::MatrixXd full = laplacian(X, i, LaplacianKind::Full);
    const Eigen::VectorXd ev = symmetric_eigenvalues(full);
    const double lmax = ev.size() ? std::max(0.0, ev(ev.size() - 1)) : 0.0;
    const double tol = kZeroRelTol * std::max(1.0, lmax);
    int zeros = 0;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (std::abs(ev(k)) < tol) ++zeros;
    return zeros;
}

SpectrumReport spectrum_report(const SimplicialComplex& X, int i) {
    if (i < 0 || i > X.dim())
        throw input_error("spectrum_report: need 0 <= i <= dim X (i=" + std::to_string(i) + ")");
    SpectrumReport rep;
    rep.dim = i;

    const Eigen::MatrixXd up = laplacian(X, i, LaplacianKind::Up);
    const Eigen::VectorXd full = symmetric_eigenvalues(up);
    const double lmax = full.size() ? std::max(0.0, full(full.size() - 1)) : 0.0;

    // binned (value, multiplicity)
    const double bin_tol = kBinRelTol * std::max(1.0, lmax);
    std::vector<double> sorted = to_sorted_vector(full);
    for (size_t a = 0; a < sorted.size();) {
        size_t b = a + 1;
        while (b < sorted.size() && sorted[b] - sorted[b - 1] <= bin_tol) ++b;
        const double mean = std::accumulate(sorted.begin() + a, sorted.begin() + b, 0.0) /
                            static_cast<double>(b - a);
        rep.eigenvalues.emplace_back(mean, static_cast<int>(b - a));
        a = b;
    }

    // trivial/nontrivial split: compress onto im(delta_i) and ker(boundary_i);
    // at i = 0 the boundary is the all-ones row, so constants are trivial.
    const Eigen::MatrixXd B = (i == 0) ? ones_row(X.n()) : boundary_matrix(X, i);
    rep.nontrivial = compressed_spectrum(up, kernel_basis(B));
    rep.trivial = compressed_spectrum(up, rowspace_basis(B));

    // regular degree at this dimension (defined for i < dim)
    std::optional<double> k;
    if (i < X.dim()) {
        const DegreeProfile prof = degree_profile(X, i);
        if (prof.regular) k = static_cast<double>(prof.k_min);
    }
    rep.k = k;

    // colored flags: 3k0/2 at i=0, 3k1 at i=1
    if (k && i <= 1) {
        const double target = (i == 0) ? 1.5 * *k : 3.0 * *k;
        const double ctol = 1e-6 * std::max(*k, 1.0);
        for (double lam : rep.nontrivial)
            if (std::abs(lam - target) <= ctol) rep.colored.push_back(lam);
    }
    if (k) {
        double mu = 0;
        size_t ci = 0;
        for (double lam : rep.nontrivial) {
            if (ci < rep.colored.size() && lam == rep.colored[ci]) {
                ++ci; // skip colored values (both lists ascending)
                continue;
            }
            mu = std::max(mu, std::abs(lam - *k));
        }
        rep.mu = mu;
    }

    rep.betti = betti_number(X, i);
    return rep;
}

json SpectrumReport::to_json() const {
    json j;
    j["dim"] = dim;
    json evs = json::array();
    for (const auto& [v, m] : eigenvalues) evs.push_back(json{{"value", v}, {"mult", m}});
    j["eigenvalues"] = evs;
    j["trivial"] = trivial;
    j["nontrivial"] = nontrivial;
    j["colored"] = colored;
    j["betti"] = betti;
    j["k"] = k ? json(*k) : json(nullptr);
    j["mu"] = mu ? json(*mu) : json(nullptr);
    return j;
}

namespace {

int component_count(const SimplicialComplex& X) {
    std::vector<int> parent(X.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Cell& e : X.cells(1)) parent[find(e[0])] = find(e[1]);
    int comps = 0;
    for (int v = 0; v < X.n(); ++v)
        if (find(v) == v) ++comps;
    return comps;
}

} // namespace

GarlandReport garland_check(const SimplicialComplex& X, int j) {
    if (j < 1 || j > X.dim())
        throw input_error("garland_check: need 1 <= j <= dim X (j=" + std::to_string(j) + ")");
    const auto& bases = X.cells(j - 1);
    if (bases.empty()) throw not_applicable_error("garland_check: no cells to take links of");

    GarlandReport rep;
    rep.j = j;
    bool first = true;
    for (const Cell& sigma : bases) {
        const LinkResult lk = link(X, sigma);
        if (lk.complex.empty()) continue;
        const SpectrumReport lrep = spectrum_report(lk.complex, 0);
        if (lrep.nontrivial.empty()) continue;
        ++rep.links_used;
        const double lo = lrep.nontrivial.front();
        const double hi = lrep.nontrivial.back();
        if (first || lo < rep.lambda_min) {
            rep.lambda_min = lo;
            rep.witness_min = sigma;
        }
        if (first || hi > rep.lambda_max) {
            rep.lambda_max = hi;
            rep.witness_max = sigma;
        }
        first = false;
        if (component_count(lk.complex) > 1) rep.disconnected_link = true;
    }
    if (rep.links_used == 0)
        throw not_applicable_error("garland_check: no link carries a nontrivial spectrum");

    if (j == X.dim()) {
        rep.deg_min = rep.deg_max = 0; // top cells have no cofaces
    } else {
        const DegreeProfile prof = degree_profile(X, j);
        rep.deg_min = prof.k_min;
        rep.deg_max = prof.k_max;
    }
    rep.lo = (j + 1) * rep.lambda_min - j * rep.deg_max;
    rep.hi = (j + 1) * rep.lambda_max - j * rep.deg_min;

    rep.spectrum = spectrum_report(X, j).nontrivial;
    const double cushion =
        1e-9 * std::max({1.0, std::abs(rep.lo), std::abs(rep.hi)});
    rep.holds = true;
    for (double lam : rep.spectrum)
        if (lam < rep.lo - cushion || lam > rep.hi + cushion) rep.holds = false;
    return rep;
}

json GarlandReport::to_json() const {
    json r;
    r["j"] = j;
    r["interval"] = json::array({lo, hi});
    r["lambda_min"] = lambda_min;
    r["lambda_max"] = lambda_max;
    r["k_min"] = deg_min;
    r["k_max"] = deg_max;
    r["holds"] = holds;
    r["disconnected_link"] = disconnected_link;
    r["links_used"] = links_used;
    r["spectrum"] = spectrum;
    r["witness_min"] = witness_min;
    r["witness_max"] = witness_max;
    return r;
}

EdgeAdjacency edge_adjacency(const SimplicialComplex& X) {
    const Eigen::Index m = X.cell_count(1);
    EdgeAdjacency out;
    out.A = Eigen::MatrixXd::Zero(m, m);
    out.D = Eigen::VectorXd::Zero(m);
    for (Eigen::Index e = 0; e < m; ++e)
        out.D(e) = (X.dim() >= 2) ? X.degree(1, static_cast<int>(e)) : 0;
    for (const Cell& t : X.cells(2)) {
        const int ab = X.index_of({t[0], t[1]});
        const int ac = X.index_of({t[0], t[2]});
        const int bc = X.index_of({t[1], t[2]});
        // shared origin (a) or terminus (c): +1; terminus-to-origin (b): -1
        out.A(ab, ac) += 1;
        out.A(ac, ab) += 1;
        out.A(ac, bc) += 1;
        out.A(bc, ac) += 1;
        out.A(ab, bc) -= 1;
        out.A(bc, ab) -= 1;
    }
    return out;
}

DeviationReport deviation_norms(const SimplicialComplex& X) {
    if (X.dim() != 2)
        throw precondition_error("deviation_norms: defined for 2-dimensional complexes");
    const DegreeProfile prof = degree_profile(X, 0);
    if (!prof.regular)
        throw precondition_error(
            "deviation_norms: the coboundary-deviation bound requires a vertex-regular complex");
    const double k0 = prof.k_min;

    const Eigen::MatrixXd B1 = boundary_matrix(X, 1);
    const Eigen::MatrixXd R = rowspace_basis(B1); // orthonormal basis of im(delta_1)
    const Eigen::MatrixXd P = R * R.transpose();
    const Eigen::MatrixXd down = B1.transpose() * B1;
    const Eigen::MatrixXd Dmat = k0 * P - down;

    DeviationReport rep;
    {
        const Eigen::VectorXd ev = symmetric_eigenvalues(Dmat);
        rep.norm_D = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    }

    const SpectrumReport srep = spectrum_report(X, 0);
    rep.mu0_noncolored = srep.mu.value_or(0.0);
    rep.mu0 = rep.mu0_noncolored;
    for (double c : srep.colored) rep.mu0 = std::max(rep.mu0, std::abs(c - k0));

    const double tol = 1e-9 * std::max(1.0, k0);
    rep.holds_D = rep.norm_D <= rep.mu0 + tol;

    const auto coloring = find_proper_coloring(X, 3);
    if (coloring) {
        const Eigen::Index m = X.cell_count(1);
        const double s = std::sqrt(2.0 / (k0 * X.n()));
        const std::complex<double> omega = std::polar(1.0, 2.0 * M_PI / 3.0);
        // phase by ordered color pair: (0,1)->+1, (1,2)->+w, (2,0)->+w~,
        // reversed pairs negated.
        auto phase = [&](int cu, int cv) -> std::complex<double> {
            if (cu == 0 && cv == 1) return {1.0, 0.0};
            if (cu == 1 && cv == 0) return {-1.0, 0.0};
            if (cu == 1 && cv == 2) return omega;
            if (cu == 2 && cv == 1) return -omega;
            if (cu == 2 && cv == 0) return std::conj(omega);
            if (cu == 0 && cv == 2) return -std::conj(omega);
            throw precondition_error("deviation_norms: edge inside a color class");
        };
        Eigen::VectorXcd xi(m);
        for (Eigen::Index e = 0; e < m; ++e) {
            const Cell& edge = X.cells(1)[static_cast<int>(e)];
            xi(e) = s * phase(coloring->colors[edge[0]], coloring->colors[edge[1]]);
        }
        Eigen::MatrixXcd span(m, 2);
        span.col(0) = xi;
        span.col(1) = xi.conjugate();
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(span);
        qr.setThreshold(1e-10);
        const Eigen::Index rank = qr.rank();
        const Eigen::MatrixXcd Q =
            Eigen::MatrixXcd(qr.householderQ()).leftCols(rank);
        const Eigen::MatrixXcd P2 = Q * Q.adjoint();
        Eigen::MatrixXcd Dp = k0 * P.cast<std::complex<double>>() + (k0 / 2.0) * P2 -
                              down.cast<std::complex<double>>();
        check_dense_cap(Dp.rows());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Dp, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw numeric_error("deviation_norms: Hermitian eigendecomposition failed");
        const Eigen::VectorXd ev = es.eigenvalues();
        rep.norm_Dp = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
        rep.holds_Dp = *rep.norm_Dp <= rep.mu0_noncolored + tol;
    }
    return rep;
}

json DeviationReport::to_json() const {
    json j;
    j["norm_D"] = norm_D;
    j["norm_Dprime"] = norm_Dp ? json(*norm_Dp) : json(nullptr);
    j["mu0"] = mu0;
    j["mu0_noncolored"] = mu0_noncolored;
    j["holds_D"] = holds_D;
    j["holds_Dprime"] = holds_Dp ? json(*holds_Dp) : json(nullptr);
    return j;
}

} // namespace simplectra::hodge
