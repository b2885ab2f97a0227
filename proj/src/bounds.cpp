#include "simplectra/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "simplectra/combinatorics.hpp"
#include "simplectra/errors.hpp"
#include "simplectra/hodge.hpp"

namespace simplectra::bounds {

namespace {

constexpr int kPartitionCap = 15; // exhaustive 3-partition / coloring cap

bool holds_ge(double lhs, double rhs) { return lhs >= rhs - kHoldsTol * std::max(1.0, std::abs(rhs)); }
bool holds_le(double lhs, double rhs) { return lhs <= rhs + kHoldsTol * std::max(1.0, std::abs(rhs)); }

void check_partition(const SimplicialComplex& X, const std::vector<std::vector<int>>& sets) {
    comb::validate_vertex_sets(X, sets, true);
    std::vector<int> owner(X.n(), -1);
    long long covered = 0;
    for (size_t s = 0; s < sets.size(); ++s)
        for (int v : sets[s]) {
            if (owner[v] != -1)
                throw precondition_error("partition blocks overlap at vertex " + std::to_string(v));
            owner[v] = static_cast<int>(s);
            ++covered;
        }
    if (covered != X.n())
        throw precondition_error("the blocks must partition all " + std::to_string(X.n()) +
                                 " vertices");
}

double regular_degree(const SimplicialComplex& X, int i, const char* what) {
    const DegreeProfile prof = degree_profile(X, i);
    if (!prof.regular)
        throw precondition_error(std::string(what) + ": requires regular degrees at dimension " +
                                 std::to_string(i) + " (min " + std::to_string(prof.k_min) +
                                 ", max " + std::to_string(prof.k_max) + ")");
    return prof.k_min;
}

// max |lambda - k| over ALL nontrivial values (colored included)
double mu_all(const std::vector<double>& nontrivial, double k) {
    double mu = 0;
    for (double lam : nontrivial) mu = std::max(mu, std::abs(lam - k));
    return mu;
}

} // namespace

json InequalityReport::to_json() const {
    json j;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["relation"] = relation;
    j["holds"] = holds;
    j["details"] = details;
    return j;
}

CheegerContext cheeger_context(const SimplicialComplex& X) {
    if (X.dim() < 1)
        throw precondition_error("cheeger_check: requires a complex with edges");
    CheegerContext ctx;
    ctx.n = X.n();
    ctx.k0 = regular_degree(X, 0, "cheeger_check");
    const hodge::SpectrumReport r0 = hodge::spectrum_report(X, 0);
    ctx.mu0 = mu_all(r0.nontrivial, ctx.k0);
    const hodge::SpectrumReport r1 = hodge::spectrum_report(X, 1);
    // Z_1 = 0 can only happen for degenerate regular graphs (perfect
    // matchings); the bound is then vacuous with lambda1 = 0.
    ctx.lambda1 = r1.nontrivial.empty() ? 0.0 : r1.nontrivial.front();
    return ctx;
}

InequalityReport cheeger_check_with(const SimplicialComplex& X, const CheegerContext& ctx,
                                    const std::vector<int>& A, const std::vector<int>& B,
                                    const std::vector<int>& C) {
    check_partition(X, {A, B, C});
    const double n = static_cast<double>(ctx.n);
    const double a = static_cast<double>(A.size());
    const double b = static_cast<double>(B.size());
    const double c = static_cast<double>(C.size());
    const long long T = (X.dim() >= 2) ? comb::count_rainbow(X, 2, {A, B, C}) : 0;

    InequalityReport rep;
    rep.lhs = static_cast<double>(T) * n * n / (a * b * c);
    rep.rhs = ctx.lambda1 * (ctx.k0 - ctx.mu0 * (1.0 + 10.0 * n * n * n / (9.0 * a * b * c)));
    rep.relation = "lhs>=rhs";
    rep.holds = holds_ge(rep.lhs, rep.rhs);
    rep.details = json{{"T", T},           {"n", ctx.n},   {"k0", ctx.k0},
                       {"mu0", ctx.mu0},   {"lambda1", ctx.lambda1},
                       {"sizes", json::array({A.size(), B.size(), C.size()})}};
    return rep;
}

InequalityReport cheeger_check(const SimplicialComplex& X, const std::vector<int>& A,
                               const std::vector<int>& B, const std::vector<int>& C) {
    return cheeger_check_with(X, cheeger_context(X), A, B, C);
}

std::vector<std::vector<std::vector<int>>> three_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(n, 0);
    // restricted growth strings over alphabet {0,1,2}
    auto emit = [&]() {
        int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
        if (blocks != 3) return;
        std::vector<std::vector<int>> part(3);
        for (int v = 0; v < n; ++v) part[rgs[v]].push_back(v);
        out.push_back(std::move(part));
    };
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            emit();
            return;
        }
        const int top = std::min(used, 2);
        for (int c = 0; c <= top; ++c) {
            rgs[v] = c;
            rec(v + 1, std::max(used, c + 1));
        }
    };
    if (n >= 3) rec(1, 1); // vertex 0 is pinned to block 0
    return out;
}

HThetaResult h_theta(const SimplicialComplex& X, double theta) {
    if (theta < 0 || theta > 1.0 / 3.0 + 1e-12)
        throw precondition_error("h_theta: need 0 <= theta <= 1/3");
    if (X.n() > kPartitionCap)
        throw resource_cap_error("h_theta: exhaustive search capped at n <= " +
                                 std::to_string(kPartitionCap));
    const CheegerContext ctx = cheeger_context(X);
    const double floor_size = theta * X.n();

    HThetaResult best;
    bool found = false;
    for (const auto& part : three_partitions(X.n())) {
        const double a = static_cast<double>(part[0].size());
        const double b = static_cast<double>(part[1].size());
        const double c = static_cast<double>(part[2].size());
        if (a + 1e-9 < floor_size || b + 1e-9 < floor_size || c + 1e-9 < floor_size) continue;
        ++best.partitions_checked;
        const long long T = (X.dim() >= 2) ? comb::count_rainbow(X, 2, part) : 0;
        const double value =
            static_cast<double>(T) * X.n() * X.n() / (a * b * c);
        if (!found || value < best.value) { // strict improvement => lex-first argmin
            best.value = value;
            best.argmin = part;
            found = true;
        }
    }
    if (!found)
        throw precondition_error("h_theta: no 3-partition satisfies the block-size floor theta*n");
    return best;
}

json HThetaResult::to_json() const {
    json j;
    j["value"] = value;
    j["argmin"] = argmin;
    j["partitions_checked"] = partitions_checked;
    return j;
}

InequalityReport cheeger_general_check(const SimplicialComplex& X,
                                       const std::vector<std::vector<int>>& sets, double Cd) {
    const int d = static_cast<int>(sets.size()) - 1;
    if (d < 2) throw precondition_error("cheeger_general_check: need at least 3 blocks (d >= 2)");
    if (d > X.dim())
        throw precondition_error("cheeger_general_check: d = " + std::to_string(d) +
                                 " exceeds dim X = " + std::to_string(X.dim()));
    check_partition(X, sets);

    std::vector<double> ks, mus;
    double K = 1.0, E = 0.0;
    for (int i = 0; i <= d - 2; ++i) {
        const double ki = regular_degree(X, i, "cheeger_general_check");
        const hodge::SpectrumReport ri = hodge::spectrum_report(X, i);
        const double mui = mu_all(ri.nontrivial, ki);
        ks.push_back(ki);
        mus.push_back(mui);
        K *= ki;
        E += mui / ki;
    }
    const hodge::SpectrumReport rtop = hodge::spectrum_report(X, d - 1);
    const double lambda = rtop.nontrivial.empty() ? 0.0 : rtop.nontrivial.front();

    const double n = static_cast<double>(X.n());
    double prod = 1.0;
    for (const auto& s : sets) prod *= static_cast<double>(s.size());
    const long long F = comb::count_rainbow(X, d, sets);

    InequalityReport rep;
    rep.lhs = static_cast<double>(F) * std::pow(n, d) / prod;
    rep.rhs = K * lambda *
              (1.0 - mus.back() / ks.back() - Cd * E * std::pow(n, d + 1) / prod);
    rep.relation = "lhs>=rhs";
    rep.holds = holds_ge(rep.lhs, rep.rhs);
    rep.details = json{{"d", d},
                       {"F", F},
                       {"K", K},
                       {"lambda_top", lambda},
                       {"k", ks},
                       {"mu", mus},
                       {"Cd", Cd},
                       {"asserted", d == 2}};
    return rep;
}

namespace {

// two-cluster concentration radius around {k1, 2k1}, excluding the 3k1 cluster
double mu1_two_cluster(const std::vector<double>& nontrivial, double k1) {
    const double ctol = 1e-6 * std::max(k1, 1.0);
    double mu = 0;
    for (double lam : nontrivial) {
        if (std::abs(lam - 3.0 * k1) <= ctol) continue;
        mu = std::max(mu, std::min(std::abs(lam - k1), std::abs(lam - 2.0 * k1)));
    }
    return mu;
}

} // namespace

InequalityReport mixing_check(const SimplicialComplex& X, const std::vector<int>& A,
                              const std::vector<int>& B, const std::vector<int>& C,
                              const std::vector<int>& D) {
    if (X.dim() != 2) throw precondition_error("mixing_check: requires a 2-dimensional complex");
    comb::validate_vertex_sets(X, {A, B, C, D}, true);
    {
        std::vector<int> all;
        for (const auto* S : {&A, &B, &C, &D}) all.insert(all.end(), S->begin(), S->end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw precondition_error("mixing_check: A,B,C,D must be pairwise disjoint");
    }
    const double k0 = regular_degree(X, 0, "mixing_check");
    const double k1 = regular_degree(X, 1, "mixing_check");

    const auto coloring = find_proper_coloring(X, 3);
    if (!coloring) throw precondition_error("mixing_check: complex is not tripartite");
    auto block_of = [&](const std::vector<int>& S, const char* name) {
        const int blk = coloring->colors[S[0]];
        for (int v : S)
            if (coloring->colors[v] != blk)
                throw precondition_error(std::string("mixing_check: set ") + name +
                                         " straddles blocks");
        return blk;
    };
    std::vector<int> AD = A;
    AD.insert(AD.end(), D.begin(), D.end());
    const int bAD = block_of(AD, "A+D");
    const int bB = block_of(B, "B");
    const int bC = block_of(C, "C");
    if (bAD == bB || bAD == bC || bB == bC)
        throw precondition_error("mixing_check: A+D, B, C must occupy three distinct blocks");

    const hodge::SpectrumReport r0 = hodge::spectrum_report(X, 0);
    const hodge::SpectrumReport r1 = hodge::spectrum_report(X, 1);
    const double mu0 = r0.mu.value_or(0.0); // colored 3k0/2 cluster excluded
    const double mu1 = mu1_two_cluster(r1.nontrivial, k1);

    const double n = static_cast<double>(X.n());
    const double a = static_cast<double>(A.size());
    const double b = static_cast<double>(B.size());
    const double c = static_cast<double>(C.size());
    const double d = static_cast<double>(D.size());
    const long long F2 = comb::count_galleries(X, 2, {A, B, C, D});
    const double main_term = 27.0 * k0 * k1 * k1 * a * b * c * d / (2.0 * n * n * n);

    const double sab = std::sqrt(a * b), scd = std::sqrt(c * d);
    const double term1 = (6.0 * mu0 * k1 * k1 * std::sqrt(a * b * c * d) / (k0 * n)) *
                         (3.0 * k0 * (sab + scd) / (2.0 * n) + mu0);
    const double term2 = (2.0 * k1 * k1 * mu0 / k0 + (k1 + mu1) * mu1) *
                         std::pow(a * b * c * d, 0.25) *
                         std::sqrt((3.0 * k0 * sab / (2.0 * n) + mu0) *
                                   (3.0 * k0 * scd / (2.0 * n) + mu0));

    InequalityReport rep;
    rep.lhs = std::abs(static_cast<double>(F2) - main_term);
    rep.rhs = term1 + term2;
    rep.relation = "lhs<=rhs";
    rep.holds = holds_le(rep.lhs, rep.rhs);
    rep.details = json{{"F2", F2},
                       {"main_term", main_term},
                       {"k0", k0},
                       {"k1", k1},
                       {"mu0", mu0},
                       {"mu1", mu1},
                       {"sizes", json::array({A.size(), B.size(), C.size(), D.size()})}};
    return rep;
}

InequalityReport colored_mixing_check(const SimplicialComplex& X, const std::vector<int>& coloring,
                                      const std::vector<int>& A, const std::vector<int>& B) {
    if (static_cast<int>(coloring.size()) != X.n())
        throw input_error("colored_mixing_check: coloring must assign every vertex a class");
    const int c = coloring.empty() ? 0 : 1 + *std::max_element(coloring.begin(), coloring.end());
    if (c < 2) throw precondition_error("colored_mixing_check: need at least 2 classes");
    for (int col : coloring)
        if (col < 0) throw input_error("colored_mixing_check: negative class id");

    // c-colored k-regular structure: no same-class neighbors, exactly
    // k/(c-1) neighbors in each other class.
    const long long m_edges = X.cell_count(1);
    if (m_edges == 0) throw precondition_error("colored_mixing_check: the 1-skeleton has no edges");
    int r = -1;
    for (int v = 0; v < X.n(); ++v) {
        std::vector<int> per_class(c, 0);
        for (int u : X.neighbors()[v]) {
            if (coloring[u] == coloring[v])
                throw precondition_error("colored_mixing_check: edge inside class " +
                                         std::to_string(coloring[v]));
            ++per_class[coloring[u]];
        }
        for (int j = 0; j < c; ++j) {
            if (j == coloring[v]) continue;
            if (r < 0) r = per_class[j];
            if (per_class[j] != r)
                throw precondition_error(
                    "colored_mixing_check: not c-colored k-regular (vertex " + std::to_string(v) +
                    " has " + std::to_string(per_class[j]) + " neighbors in class " +
                    std::to_string(j) + ", expected " + std::to_string(r) + ")");
        }
    }
    const double k = static_cast<double>(r) * (c - 1);

    comb::validate_vertex_sets(X, {A, B}, true);
    auto class_of = [&](const std::vector<int>& S, const char* name) {
        const int cls = coloring[S[0]];
        for (int v : S)
            if (coloring[v] != cls)
                throw precondition_error(std::string("colored_mixing_check: set ") + name +
                                         " straddles classes");
        return cls;
    };
    const int ca = class_of(A, "A");
    const int cb = class_of(B, "B");
    if (ca == cb)
        throw precondition_error(
            "colored_mixing_check: A and B must lie in distinct classes (the bound requires i != j)");

    long long E = 0;
    for (int u : A)
        for (int v : B)
            if (X.adjacent(u, v)) ++E;

    const hodge::SpectrumReport r0 = hodge::spectrum_report(X, 0);
    const double colored_value = static_cast<double>(c) / (c - 1) * k;
    const double ctol = 1e-6 * std::max(k, 1.0);
    double mu = 0;
    for (double lam : r0.nontrivial) {
        if (std::abs(lam - colored_value) <= ctol) continue;
        mu = std::max(mu, std::abs(lam - k));
    }

    const double n = static_cast<double>(X.n());
    const double a = static_cast<double>(A.size());
    const double b = static_cast<double>(B.size());

    InequalityReport rep;
    rep.lhs = std::abs(static_cast<double>(E) - c * k * a * b / ((c - 1) * n));
    rep.rhs = mu * std::sqrt(a * b);
    rep.relation = "lhs<=rhs";
    rep.holds = holds_le(rep.lhs, rep.rhs);
    rep.details = json{{"E", E},
                       {"c", c},
                       {"k", k},
                       {"mu", mu},
                       {"main_term", c * k * a * b / ((c - 1) * n)},
                       {"classes", json::array({ca, cb})}};
    return rep;
}

namespace {

bool chromatic_backtrack(const SimplicialComplex& X, int chi, std::vector<int>& colors, int v,
                         int used) {
    if (v == X.n()) return true;
    // triangles whose maximum vertex is v are fully colored once v is
    const int top = std::min(used, chi - 1);
    for (int col = 0; col <= top; ++col) {
        colors[v] = col;
        bool ok = true;
        for (const Cell& t : X.cells(2)) {
            if (t[2] != v) continue;
            if (colors[t[0]] == col && colors[t[1]] == col) {
                ok = false;
                break;
            }
        }
        if (ok && chromatic_backtrack(X, chi, colors, v + 1, std::max(used, col + 1))) return true;
        colors[v] = -1;
    }
    return false;
}

} // namespace

WeakChromaticResult weak_chromatic(const SimplicialComplex& X) {
    if (X.n() > kPartitionCap)
        throw resource_cap_error("weak_chromatic: exhaustive search capped at n <= " +
                                 std::to_string(kPartitionCap));
    for (int chi = 1; chi <= X.n(); ++chi) {
        std::vector<int> colors(X.n(), -1);
        if (chromatic_backtrack(X, chi, colors, 0, 1)) {
            // colors[0] is pinned to 0 by used=1; witness is lex-first
            return WeakChromaticResult{chi, std::move(colors)};
        }
    }
    throw numeric_error("weak_chromatic: internal search failure"); // unreachable: n colors always work
}

json WeakChromaticResult::to_json() const {
    json j;
    j["chi"] = chi;
    j["witness"] = witness;
    return j;
}

} // namespace simplectra::bounds
