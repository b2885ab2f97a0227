#include "simplectra/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "simplectra/errors.hpp"

namespace simplectra {

namespace {

std::string cell_str(const Cell& c) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << '}';
    return os.str();
}

} // namespace

std::string cell_to_string(const Cell& c) { return cell_str(c); }

int SimplicialComplex::dim() const {
    for (int i = kMaxDim; i >= 0; --i)
        if (!cells_[i].empty()) return i;
    return -1;
}

const std::vector<Cell>& SimplicialComplex::cells(int i) const {
    static const std::vector<Cell> kEmpty;
    if (i < 0 || i > kMaxDim) return kEmpty;
    return cells_[i];
}

long long SimplicialComplex::cell_count(int i) const {
    if (i < 0 || i > kMaxDim) return 0;
    return static_cast<long long>(cells_[i].size());
}

int SimplicialComplex::index_of(const Cell& c) const {
    int i = static_cast<int>(c.size()) - 1;
    if (i < 0 || i > kMaxDim)
        throw input_error("cell " + cell_str(c) + " has unsupported dimension");
    auto it = index_[i].find(c);
    if (it == index_[i].end())
        throw input_error("cell " + cell_str(c) + " is not in the complex");
    return it->second;
}

bool SimplicialComplex::has_cell(const Cell& c) const {
    int i = static_cast<int>(c.size()) - 1;
    if (i < 0 || i > kMaxDim) return false;
    return index_[i].count(c) > 0;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int i = 0; i <= kMaxDim; ++i)
        chi += (i % 2 == 0 ? 1 : -1) * cell_count(i);
    return chi;
}

bool SimplicialComplex::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw input_error("vertex id out of range");
    return adj_[u][v];
}

int SimplicialComplex::degree(int i, int cell_idx) const {
    if (i < 0 || i > kMaxDim || cell_idx < 0 ||
        cell_idx >= static_cast<int>(cells_[i].size()))
        throw input_error("degree: cell index out of range");
    return static_cast<int>(cofaces_[i][cell_idx].size());
}

void SimplicialComplex::finalize() {
    for (int i = 0; i <= kMaxDim; ++i) {
        index_[i].clear();
        for (int idx = 0; idx < static_cast<int>(cells_[i].size()); ++idx) {
            const Cell& c = cells_[i][idx];
            if (static_cast<int>(c.size()) != i + 1)
                throw input_error("internal: cell of wrong dimension");
            for (size_t p = 0; p + 1 < c.size(); ++p)
                if (c[p] >= c[p + 1]) throw input_error("cell " + cell_str(c) + " is not strictly increasing");
            if (!c.empty() && (c.front() < 0 || c.back() >= n_))
                throw input_error("cell " + cell_str(c) + " has a vertex id outside 0.." + std::to_string(n_ - 1));
            if (!index_[i].emplace(c, idx).second)
                throw input_error("duplicate cell " + cell_str(c));
        }
    }
    // downward closure
    for (int i = 1; i <= kMaxDim; ++i) {
        for (const Cell& c : cells_[i]) {
            Cell face(c.size() - 1);
            for (size_t drop = 0; drop < c.size(); ++drop) {
                size_t w = 0;
                for (size_t p = 0; p < c.size(); ++p)
                    if (p != drop) face[w++] = c[p];
                if (!index_[i - 1].count(face))
                    throw input_error("closure violation: face " + cell_str(face) +
                                      " of " + cell_str(c) + " is missing");
            }
        }
    }
    if (static_cast<int>(cells_[0].size()) != n_)
        throw input_error("internal: vertex cells must be exactly the singletons");

    adj_.assign(n_, std::vector<bool>(n_, false));
    nbr_.assign(n_, {});
    for (const Cell& e : cells_[1]) {
        adj_[e[0]][e[1]] = adj_[e[1]][e[0]] = true;
        nbr_[e[0]].push_back(e[1]);
        nbr_[e[1]].push_back(e[0]);
    }
    for (auto& v : nbr_) std::sort(v.begin(), v.end());

    for (int i = 0; i <= kMaxDim; ++i) {
        cofaces_[i].assign(cells_[i].size(), {});
        if (i + 1 > kMaxDim) continue;
        for (int idx = 0; idx < static_cast<int>(cells_[i + 1].size()); ++idx) {
            const Cell& c = cells_[i + 1][idx];
            Cell face(c.size() - 1);
            for (size_t drop = 0; drop < c.size(); ++drop) {
                size_t w = 0;
                for (size_t p = 0; p < c.size(); ++p)
                    if (p != drop) face[w++] = c[p];
                cofaces_[i][index_[i].at(face)].push_back(idx);
            }
        }
    }
}

SimplicialComplex SimplicialComplex::from_closed_cells(
    std::array<std::vector<Cell>, kMaxDim + 1> cells, int n) {
    SimplicialComplex X;
    X.n_ = n;
    X.cells_ = std::move(cells);
    for (auto& lst : X.cells_) std::sort(lst.begin(), lst.end());
    X.finalize();
    return X;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(const std::vector<Cell>& faces, int n) {
    if (n <= 0) throw input_error("empty complex rejected: vertex count must be positive");
    std::array<std::set<Cell>, kMaxDim + 1> closed;
    for (int v = 0; v < n; ++v) closed[0].insert({v});

    for (const Cell& raw : faces) {
        if (raw.empty()) throw input_error("malformed face: empty tuple");
        if (raw.size() > static_cast<size_t>(kMaxDim + 1))
            throw input_error("malformed face " + cell_str(raw) + ": dimension above the cap of " +
                              std::to_string(kMaxDim));
        Cell f = raw;
        std::sort(f.begin(), f.end());
        for (size_t p = 0; p + 1 < f.size(); ++p)
            if (f[p] == f[p + 1])
                throw input_error("malformed face " + cell_str(raw) + ": duplicate vertex");
        if (f.front() < 0 || f.back() >= n)
            throw input_error("face " + cell_str(raw) + ": vertex id out of range 0.." +
                              std::to_string(n - 1));
        // insert the full closure of f: all non-empty subsets
        const size_t sz = f.size();
        for (unsigned mask = 1; mask < (1u << sz); ++mask) {
            Cell sub;
            for (size_t p = 0; p < sz; ++p)
                if (mask & (1u << p)) sub.push_back(f[p]);
            closed[sub.size() - 1].insert(sub);
        }
    }

    std::array<std::vector<Cell>, kMaxDim + 1> lists;
    for (int i = 0; i <= kMaxDim; ++i) lists[i].assign(closed[i].begin(), closed[i].end());
    return from_closed_cells(std::move(lists), n);
}

SimplicialComplex clique_complex(const std::vector<std::pair<int, int>>& edges, int n, int max_dim) {
    if (n <= 0) throw input_error("empty complex rejected: vertex count must be positive");
    if (max_dim < 0 || max_dim > kMaxDim)
        throw input_error("clique_complex: max_dim must be in 0.." + std::to_string(kMaxDim));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge vertex id out of range");
        if (u == v) throw input_error("malformed edge: self-loop at vertex " + std::to_string(u));
        adj[u][v] = adj[v][u] = true;
    }

    std::array<std::vector<Cell>, kMaxDim + 1> lists;
    for (int v = 0; v < n; ++v) lists[0].push_back({v});
    if (max_dim >= 1)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v]) lists[1].push_back({u, v});
    if (max_dim >= 2)
        for (const Cell& e : lists[1])
            for (int w = e[1] + 1; w < n; ++w)
                if (adj[e[0]][w] && adj[e[1]][w]) lists[2].push_back({e[0], e[1], w});
    if (max_dim >= 3)
        for (const Cell& t : lists[2])
            for (int w = t[2] + 1; w < n; ++w)
                if (adj[t[0]][w] && adj[t[1]][w] && adj[t[2]][w])
                    lists[3].push_back({t[0], t[1], t[2], w});
    return SimplicialComplex::from_closed_cells(std::move(lists), n);
}

LinkResult link(const SimplicialComplex& X, const Cell& sigma) {
    if (!X.has_cell(sigma))
        throw input_error("link: cell " + cell_to_string(sigma) + " is not in the complex");

    // Link vertices: v with sigma+{v} in X.
    std::vector<int> verts;
    for (int v = 0; v < X.n(); ++v) {
        if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
        Cell c = sigma;
        c.push_back(v);
        std::sort(c.begin(), c.end());
        if (X.has_cell(c)) verts.push_back(v);
    }
    std::vector<int> old_to_new(X.n(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) old_to_new[verts[i]] = i;

    std::array<std::vector<Cell>, kMaxDim + 1> lists;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) lists[0].push_back({i});
    const int s = static_cast<int>(sigma.size());
    for (int td = 1; td + s <= kMaxDim + 1 && td <= kMaxDim; ++td) {
        for (const Cell& tau : X.cells(td)) {
            bool ok = true;
            for (int v : tau)
                if (old_to_new[v] < 0 || std::binary_search(sigma.begin(), sigma.end(), v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Cell joined = sigma;
            joined.insert(joined.end(), tau.begin(), tau.end());
            std::sort(joined.begin(), joined.end());
            if (!X.has_cell(joined)) continue;
            Cell relabeled(tau.size());
            for (size_t p = 0; p < tau.size(); ++p) relabeled[p] = old_to_new[tau[p]];
            std::sort(relabeled.begin(), relabeled.end());
            lists[td].push_back(relabeled);
        }
    }
    LinkResult res;
    res.vertex_map = verts;
    res.complex = SimplicialComplex::from_closed_cells(std::move(lists),
                                                       static_cast<int>(verts.size()));
    return res;
}

DegreeProfile degree_profile(const SimplicialComplex& X, int i) {
    if (i < 0 || i >= X.dim())
        throw input_error("degree_profile: need 0 <= i < dim X (i=" + std::to_string(i) +
                          ", dim=" + std::to_string(X.dim()) + ")");
    DegreeProfile prof;
    const auto count = X.cell_count(i);
    prof.degree.resize(count);
    for (int idx = 0; idx < count; ++idx) prof.degree[idx] = X.degree(i, idx);
    auto [mn, mx] = std::minmax_element(prof.degree.begin(), prof.degree.end());
    prof.k_min = *mn;
    prof.k_max = *mx;
    prof.regular = (prof.k_min == prof.k_max);
    return prof;
}

namespace {

bool color_backtrack(const SimplicialComplex& X, int c, int d, std::vector<int>& colors, int v) {
    if (v == X.n()) return true;
    for (int col = 0; col < c; ++col) {
        bool ok = true;
        // no top-dimension cell may repeat a color
        for (const Cell& cell : X.cells(d)) {
            if (!std::binary_search(cell.begin(), cell.end(), v)) continue;
            for (int u : cell)
                if (u != v && u < v && colors[u] == col) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok) continue;
        colors[v] = col;
        if (color_backtrack(X, c, d, colors, v + 1)) return true;
        colors[v] = -1;
    }
    return false;
}

} // namespace

std::optional<VertexColoring> find_proper_coloring(const SimplicialComplex& X, int c) {
    if (c < 1) throw input_error("find_proper_coloring: need c >= 1");
    const int d = X.dim();
    std::vector<int> colors(X.n(), -1);
    if (!color_backtrack(X, c, d, colors, 0)) return std::nullopt;
    return VertexColoring{std::move(colors), c};
}

namespace {

// incidence sign [e:t]: (-1)^p where p is the position of the vertex of t
// missing from e.
int incidence_sign(const Cell& t, const Cell& e) {
    for (size_t p = 0; p < t.size(); ++p) {
        if (!std::binary_search(e.begin(), e.end(), t[p])) return (p % 2 == 0) ? 1 : -1;
    }
    throw input_error("internal: e is not a facet of t");
}

struct ParityDSU {
    std::vector<int> parent, rank_, parity; // parity relative to parent
    explicit ParityDSU(int n) : parent(n), rank_(n, 0), parity(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, int> find(int x) { // (root, parity to root)
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        parity[x] ^= p;
        return {r, parity[x]};
    }
    // enforce parity(a) xor parity(b) == rel; false on conflict
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        if (rank_[ra] < rank_[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ rel;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }
};

} // namespace

std::optional<Disorientation> find_disorientation(const SimplicialComplex& X) {
    if (X.dim() != 2)
        throw precondition_error("find_disorientation: defined for 2-dimensional complexes only");
    const auto& tris = X.cells(2);
    const int m = static_cast<int>(tris.size());
    ParityDSU dsu(m);
    for (int eidx = 0; eidx < X.cell_count(1); ++eidx) {
        const Cell& e = X.cells(1)[eidx];
        std::vector<int> around;
        for (int t = 0; t < m; ++t) {
            const Cell& tri = tris[t];
            if (std::includes(tri.begin(), tri.end(), e.begin(), e.end())) around.push_back(t);
        }
        if (around.size() < 2) continue;
        const int s0 = incidence_sign(tris[around[0]], e);
        for (size_t i = 1; i < around.size(); ++i) {
            const int si = incidence_sign(tris[around[i]], e);
            // Same induced orientation on e: sign(t0)*[e:t0] = sign(ti)*[e:ti],
            // i.e. sign(t0)*sign(ti) = [e:t0]*[e:ti]; parity differs iff that
            // product is -1.
            const int rel = (s0 * si == 1) ? 0 : 1;
            if (!dsu.unite(around[0], around[i], rel)) return std::nullopt;
        }
    }
    // Deterministic witness: the lex-first triangle of each component gets +1.
    Disorientation dis;
    dis.signs.assign(m, 0);
    for (int t = 0; t < m; ++t) {
        auto [root, par] = dsu.find(t);
        // components are visited in lex order of triangles, so the first
        // triangle seen for a root defines the component's reference parity
        if (dis.signs[t] != 0) continue;
        // find reference parity of the first member of this component
        int ref = -1;
        for (int u = 0; u <= t; ++u) {
            auto [ru, pu] = dsu.find(u);
            if (ru == root) {
                ref = pu;
                break;
            }
        }
        for (int u = 0; u < m; ++u) {
            auto [ru, pu] = dsu.find(u);
            if (ru == root) dis.signs[u] = (pu == ref) ? 1 : -1;
        }
    }
    return dis;
}

} // namespace simplectra
