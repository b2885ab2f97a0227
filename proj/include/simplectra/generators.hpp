#pragma once

#include <cstdint>
#include <string>

#include "simplectra/complex.hpp"

namespace simplectra::gen {

// Complete tripartite triangle complex T(m,m,m): 3m vertices, vertex v in
// block v mod 3, all cross edges, all m^3 rainbow triangles. m = 2 is the
// octahedron with blocks {0,3},{1,4},{2,5}.
SimplicialComplex complete_tripartite(int m);

// Linial-Meshulam style random 2-complex: complete graph skeleton on n
// vertices, each triangle kept independently with probability p.
SimplicialComplex linial_meshulam(int n, double p, std::uint64_t seed);

// G(n,p) graph, then its clique complex up to dimension 3.
SimplicialComplex clique_gnp(int n, double p, std::uint64_t seed);

// Fixed, named complexes.
SimplicialComplex octahedron();           // = complete_tripartite(2)
SimplicialComplex single_triangle();
SimplicialComplex hollow_triangle();
SimplicialComplex tetrahedron_boundary(); // 4 triangles on 4 vertices
SimplicialComplex pentachoron_boundary(); // 5 tetrahedra on 5 vertices
SimplicialComplex csaszar_torus();        // 7-vertex torus, betti (1,2,1)

// Spec strings: "complete-tripartite(m)", "linial-meshulam(n,p,seed)",
// "clique-gnp(n,p,seed)", or a named id (octahedron, tetrahedron-boundary,
// pentachoron-boundary, hollow-triangle, single-triangle, csaszar-torus).
// In the parameterized forms a trailing seed argument may be omitted and
// supplied separately (CLI --seed).
SimplicialComplex generate(const std::string& spec, std::uint64_t default_seed = 0);

} // namespace simplectra::gen
