#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace simplectra {

// A cell is a strictly increasing tuple of vertex ids.
using Cell = std::vector<int>;

inline constexpr int kMaxDim = 3; // cells up to tetrahedra

// Finite simplicial complex of dimension <= 3.
//
// cells[i] holds the i-cells in lexicographic order; cell_index[i] maps a
// cell back to its position. Downward closure and cells[0] = all singletons
// are construction invariants. The canonical orientation of every cell is
// its increasing vertex order; all boundary signs derive from it.
class SimplicialComplex {
public:
    // Builds the smallest downward-closed complex containing `faces` on
    // vertex set {0..n-1}. Vertices not covered by any face stay isolated.
    static SimplicialComplex from_maximal_faces(const std::vector<Cell>& faces, int n);

    // Internal/unchecked-from-closed constructor used by link(); accepts n=0.
    static SimplicialComplex from_closed_cells(std::array<std::vector<Cell>, kMaxDim + 1> cells, int n);

    int n() const { return n_; }
    // Dimension: largest i with a nonempty cell list; -1 for the empty complex.
    int dim() const;
    bool empty() const { return n_ == 0; }

    const std::vector<Cell>& cells(int i) const;
    long long cell_count(int i) const;
    // index of a cell among cells(i); throws input_error if absent.
    int index_of(const Cell& c) const;
    bool has_cell(const Cell& c) const;

    // Alternating sum of cell counts (= alternating sum of Betti numbers).
    long long euler_characteristic() const;

    // Vertex adjacency in the 1-skeleton.
    bool adjacent(int u, int v) const;
    const std::vector<std::vector<int>>& neighbors() const { return nbr_; }

    // Degree of an i-cell = number of (i+1)-cells containing it.
    int degree(int i, int cell_idx) const;

private:
    int n_ = 0;
    std::array<std::vector<Cell>, kMaxDim + 1> cells_;
    std::array<std::map<Cell, int>, kMaxDim + 1> index_;
    std::vector<std::vector<int>> nbr_;       // sorted neighbor lists
    std::vector<std::vector<bool>> adj_;      // dense adjacency
    // cofaces_[i][cell] = indices of (i+1)-cells containing the i-cell
    std::array<std::vector<std::vector<int>>, kMaxDim + 1> cofaces_;

    void finalize(); // build indices, adjacency, cofaces; validate invariants
    friend SimplicialComplex clique_complex(const std::vector<std::pair<int, int>>&, int, int);
};

// Flag complex of a simple graph: every (k+1)-clique, k <= max_dim, is a cell.
SimplicialComplex clique_complex(const std::vector<std::pair<int, int>>& edges, int n, int max_dim);

// Link of sigma: complex on the vertices v with sigma+{v} in X; tau is a cell
// of lk(sigma) iff tau is disjoint from sigma and sigma+tau is a cell of X.
// Vertices are relabeled 0..m-1; vertex_map[new_id] = old_id.
struct LinkResult {
    SimplicialComplex complex; // may be empty (link of a maximal cell)
    std::vector<int> vertex_map;
};
LinkResult link(const SimplicialComplex& X, const Cell& sigma);

// Degrees of all i-cells, 0 <= i < dim X.
struct DegreeProfile {
    std::vector<int> degree;
    int k_min = 0;
    int k_max = 0;
    bool regular = false;
};
DegreeProfile degree_profile(const SimplicialComplex& X, int i);

// Proper coloring: no top-dimension cell repeats a color.
struct VertexColoring {
    std::vector<int> colors; // per vertex, in {0..c-1}
    int c = 0;
};
// Lexicographic backtracking (vertex order 0..n-1, ascending colors);
// deterministic first-found witness, or nullopt.
std::optional<VertexColoring> find_proper_coloring(const SimplicialComplex& X, int c);

// Orientation of each triangle relative to canonical, such that any two
// triangles sharing an edge induce the SAME orientation on that edge.
struct Disorientation {
    std::vector<int> signs; // per 2-cell, +1/-1
};
// Union-find with parity on the triangle adjacency graph; requires dim X = 2.
std::optional<Disorientation> find_disorientation(const SimplicialComplex& X);

// Formatting helper: "{0,1,2}".
std::string cell_to_string(const Cell& c);

} // namespace simplectra
