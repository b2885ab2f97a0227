#pragma once

#include <string>
#include <vector>

#include "simplectra/complex.hpp"

namespace simplectra {

// ".cplx" text format:
//   - "#" starts a comment (to end of line), blank lines ignored
//   - first non-comment line:  n <vertex-count>
//   - every subsequent line:   one maximal face as space-separated vertex ids
// Parsing is whitespace-tolerant; serialization is canonical (maximal faces,
// each sorted ascending, listed in lexicographic order).
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex parse_complex(const std::string& path);

std::string serialize_complex_text(const SimplicialComplex& X);
void serialize_complex(const SimplicialComplex& X, const std::string& path);

// The maximal cells (cells with no proper coface), lex-sorted per dimension,
// dimensions ascending.
std::vector<Cell> maximal_faces(const SimplicialComplex& X);

// "0,1,2" -> {0,1,2}; used by the CLI --sets parser.
std::vector<int> parse_vertex_list(const std::string& text);
// "0,1;2;3,4" -> three sets.
std::vector<std::vector<int>> parse_vertex_sets(const std::string& text);

} // namespace simplectra
