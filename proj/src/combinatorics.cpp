#include "simplectra/combinatorics.hpp"

#include <algorithm>
#include <map>

#include "simplectra/errors.hpp"
#include "simplectra/hodge.hpp"

namespace simplectra::comb {

namespace {

std::vector<char> membership(const SimplicialComplex& X, const std::vector<int>& S) {
    std::vector<char> in(X.n(), 0);
    for (int v : S) in[v] = 1;
    return in;
}

void check_window_disjoint(const std::vector<std::vector<int>>& sets, int lo, int hi, int n) {
    std::vector<int> owner(n, -1);
    for (int s = lo; s <= hi; ++s)
        for (int v : sets[s]) {
            if (owner[v] != -1 && owner[v] != s)
                throw precondition_error("window sets B" + std::to_string(owner[v]) + " and B" +
                                         std::to_string(s) + " share vertex " + std::to_string(v));
            owner[v] = s;
        }
}

} // namespace

void validate_vertex_sets(const SimplicialComplex& X,
                          const std::vector<std::vector<int>>& sets, bool require_nonempty) {
    for (size_t s = 0; s < sets.size(); ++s) {
        if (require_nonempty && sets[s].empty())
            throw precondition_error("set #" + std::to_string(s) + " is empty");
        std::vector<int> copy = sets[s];
        std::sort(copy.begin(), copy.end());
        if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
            throw input_error("set #" + std::to_string(s) + " repeats a vertex");
        for (int v : copy)
            if (v < 0 || v >= X.n())
                throw input_error("set #" + std::to_string(s) + ": vertex id " +
                                  std::to_string(v) + " out of range");
    }
}

long long count_rainbow(const SimplicialComplex& X, int j,
                        const std::vector<std::vector<int>>& sets) {
    if (j < 0 || j > X.dim())
        throw input_error("count_rainbow: need 0 <= j <= dim X (j=" + std::to_string(j) + ")");
    if (static_cast<int>(sets.size()) != j + 1)
        throw input_error("count_rainbow: expected " + std::to_string(j + 1) + " sets, got " +
                          std::to_string(sets.size()));
    validate_vertex_sets(X, sets, false);
    check_window_disjoint(sets, 0, j, X.n());

    std::vector<int> owner(X.n(), -1);
    for (int s = 0; s <= j; ++s)
        for (int v : sets[s]) owner[v] = s;

    long long count = 0;
    std::vector<char> hit(static_cast<size_t>(j) + 1);
    for (const Cell& c : X.cells(j)) {
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (int v : c) {
            const int s = owner[v];
            if (s < 0 || hit[s]) {
                ok = false;
                break;
            }
            hit[s] = 1;
        }
        if (ok) ++count;
    }
    return count;
}

long long count_paths(const SimplicialComplex& X, const std::vector<int>& S,
                      const std::vector<int>& T, const std::vector<int>& R) {
    validate_vertex_sets(X, {S, T, R}, false);
    check_window_disjoint({S, T}, 0, 1, X.n());
    check_window_disjoint({T, R}, 0, 1, X.n());
    const auto inS = membership(X, S);
    const auto inR = membership(X, R);
    long long total = 0;
    for (int t : T) {
        long long left = 0, right = 0;
        for (int u : X.neighbors()[t]) {
            if (inS[u]) ++left;
            if (inR[u]) ++right;
        }
        total += left * right;
    }
    return total;
}

long long count_galleries(const SimplicialComplex& X, int j,
                          const std::vector<std::vector<int>>& sets) {
    if (j < 1 || j > X.dim())
        throw input_error("count_galleries: need 1 <= j <= dim X (j=" + std::to_string(j) + ")");
    const int ell = static_cast<int>(sets.size()) - 1;
    if (ell < j)
        throw input_error("count_galleries: need at least " + std::to_string(j + 1) + " windows");
    validate_vertex_sets(X, sets, false);
    const int steps = ell - j + 1; // number of cells in a gallery
    for (int t = 0; t < steps; ++t) check_window_disjoint(sets, t, t + j, X.n());

    // owner_at[t][v] = window index within span t..t+j containing v, else -1
    std::vector<std::vector<int>> owner_at(steps, std::vector<int>(X.n(), -1));
    for (int t = 0; t < steps; ++t)
        for (int s = t; s <= t + j; ++s)
            for (int v : sets[s]) owner_at[t][v] = s;

    const auto& cells = X.cells(j);
    const int m = static_cast<int>(cells.size());

    // assign[t][cell] = per-window vertex assignment (window t..t+j order),
    // empty if the cell does not match span t.
    auto assign_at = [&](int t, const Cell& c) -> std::vector<int> {
        std::vector<int> by_window(static_cast<size_t>(j) + 1, -1);
        for (int v : c) {
            const int s = owner_at[t][v];
            if (s < 0 || by_window[s - t] != -1) return {};
            by_window[s - t] = v;
        }
        return by_window; // all windows hit exactly once (j+1 vertices)
    };

    // DP over gallery steps; carry key = vertices in the j shared windows.
    std::vector<long long> ways(m, 0), prev(m, 0);
    std::vector<std::vector<int>> cur_assign(m), prev_assign(m);
    for (int c = 0; c < m; ++c) {
        cur_assign[c] = assign_at(0, cells[c]);
        ways[c] = cur_assign[c].empty() ? 0 : 1;
    }
    for (int t = 1; t < steps; ++t) {
        std::swap(prev, ways);
        std::swap(prev_assign, cur_assign);
        // total incoming weight per carry (vertices at windows t..t+j-1)
        std::map<std::vector<int>, long long> face_total;
        for (int c = 0; c < m; ++c) {
            if (prev[c] == 0) continue;
            std::vector<int> carry(prev_assign[c].begin() + 1, prev_assign[c].end());
            face_total[carry] += prev[c];
        }
        for (int c = 0; c < m; ++c) {
            cur_assign[c] = assign_at(t, cells[c]);
            ways[c] = 0;
            if (cur_assign[c].empty()) continue;
            std::vector<int> carry(cur_assign[c].begin(), cur_assign[c].end() - 1);
            auto it = face_total.find(carry);
            long long total = (it == face_total.end()) ? 0 : it->second;
            // consecutive cells must differ; a cell matching both spans has
            // the same carry in both, so subtract its own incoming weight
            if (!prev_assign[c].empty()) total -= prev[c];
            ways[c] = total;
        }
    }
    long long result = 0;
    for (int c = 0; c < m; ++c) result += ways[c];
    return result;
}

Eigen::VectorXd indicator_form(const SimplicialComplex& X, const std::vector<int>& A,
                               const std::vector<int>& B) {
    validate_vertex_sets(X, {A, B}, false);
    check_window_disjoint({A, B}, 0, 1, X.n());
    const auto inA = membership(X, A);
    const auto inB = membership(X, B);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(X.cell_count(1));
    const auto& edges = X.cells(1);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const int u = edges[e][0], v = edges[e][1]; // canonical: u < v
        if (inA[u] && inB[v]) f(e) = 1.0;
        else if (inB[u] && inA[v]) f(e) = -1.0;
    }
    return f;
}

double spectral_gallery_count(const SimplicialComplex& X, const std::vector<int>& A,
                              const std::vector<int>& B, const std::vector<int>& C,
                              const std::vector<int>& D) {
    if (X.dim() != 2)
        throw precondition_error("spectral_gallery_count: requires a 2-dimensional complex");
    validate_vertex_sets(X, {A, B, C, D}, true);
    const DegreeProfile eprof = degree_profile(X, 1);
    if (!eprof.regular)
        throw precondition_error("spectral_gallery_count: requires an edge-regular complex");
    const double k1 = eprof.k_min;

    const auto coloring = find_proper_coloring(X, 3);
    if (!coloring)
        throw precondition_error("spectral_gallery_count: complex is not tripartite");
    auto block_of = [&](const std::vector<int>& S, const char* name) {
        int blk = coloring->colors[S[0]];
        for (int v : S)
            if (coloring->colors[v] != blk)
                throw precondition_error(std::string("spectral_gallery_count: set ") + name +
                                         " straddles blocks of the 3-coloring");
        return blk;
    };
    // placement: A+D in one block, B and C in the two others
    std::vector<int> AD = A;
    AD.insert(AD.end(), D.begin(), D.end());
    {
        std::vector<int> copy = AD;
        std::sort(copy.begin(), copy.end());
        if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
            throw precondition_error("spectral_gallery_count: A and D must be disjoint");
    }
    const int bAD = block_of(AD, "A+D");
    const int bB = block_of(B, "B");
    const int bC = block_of(C, "C");
    if (bAD == bB || bAD == bC || bB == bC)
        throw precondition_error(
            "spectral_gallery_count: A+D, B, C must occupy three distinct blocks");
    for (const auto* S : {&B, &C})
        for (int v : *S)
            for (int w : AD)
                if (v == w)
                    throw precondition_error("spectral_gallery_count: sets must be pairwise disjoint");

    const hodge::EdgeAdjacency adj = hodge::edge_adjacency(X);
    const Eigen::VectorXd x = indicator_form(X, A, B);
    const Eigen::VectorXd y = indicator_form(X, C, D);
    const Eigen::VectorXd Ax = adj.A * x;
    // <(A^2 + k1 A) x, y>
    return y.dot(adj.A * Ax) + k1 * y.dot(Ax);
}

} // namespace simplectra::comb
