#include "simplectra/generators.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "simplectra/errors.hpp"
#include "simplectra/rng.hpp"

namespace simplectra::gen {

SimplicialComplex complete_tripartite(int m) {
    if (m < 1) throw input_error("complete-tripartite: need m >= 1");
    std::vector<Cell> faces;
    // vertex v sits in block v mod 3
    for (int a = 0; a < 3 * m; a += 3)
        for (int b = 1; b < 3 * m; b += 3)
            for (int c = 2; c < 3 * m; c += 3) {
                Cell t{a, b, c};
                std::sort(t.begin(), t.end());
                faces.push_back(std::move(t));
            }
    return SimplicialComplex::from_maximal_faces(faces, 3 * m);
}

SimplicialComplex linial_meshulam(int n, double p, std::uint64_t seed) {
    if (n < 3) throw input_error("linial-meshulam: need n >= 3");
    if (p < 0.0 || p > 1.0) throw input_error("linial-meshulam: need 0 <= p <= 1");
    SplitMix64 rng(seed);
    std::vector<Cell> faces;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) faces.push_back({i, j}); // complete 1-skeleton
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (rng.uniform01() < p) faces.push_back({i, j, k});
    return SimplicialComplex::from_maximal_faces(faces, n);
}

SimplicialComplex clique_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw input_error("clique-gnp: need n >= 1");
    if (p < 0.0 || p > 1.0) throw input_error("clique-gnp: need 0 <= p <= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.emplace_back(i, j);
    return clique_complex(edges, n, kMaxDim);
}

SimplicialComplex octahedron() {
    // antipodal pairs {0,3}, {1,4}, {2,5}
    return SimplicialComplex::from_maximal_faces({{0, 1, 2},
                                                  {0, 1, 5},
                                                  {0, 2, 4},
                                                  {0, 4, 5},
                                                  {1, 2, 3},
                                                  {1, 3, 5},
                                                  {2, 3, 4},
                                                  {3, 4, 5}},
                                                 6);
}

SimplicialComplex single_triangle() {
    return SimplicialComplex::from_maximal_faces({{0, 1, 2}}, 3);
}

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_maximal_faces({{0, 1}, {0, 2}, {1, 2}}, 3);
}

SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_maximal_faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4);
}

SimplicialComplex pentachoron_boundary() {
    std::vector<Cell> faces;
    for (int skip = 0; skip < 5; ++skip) {
        Cell t;
        for (int v = 0; v < 5; ++v)
            if (v != skip) t.push_back(v);
        faces.push_back(std::move(t));
    }
    return SimplicialComplex::from_maximal_faces(faces, 5);
}

SimplicialComplex csaszar_torus() {
    std::vector<Cell> faces;
    for (int i = 0; i < 7; ++i) {
        Cell t1{i, (i + 1) % 7, (i + 3) % 7};
        Cell t2{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        faces.push_back(std::move(t1));
        faces.push_back(std::move(t2));
    }
    return SimplicialComplex::from_maximal_faces(faces, 7);
}

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_args(const std::string& body) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    const std::string last = strip(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    return out;
}

int parse_int_arg(const std::string& s, const std::string& spec) {
    try {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw input_error("generator spec '" + spec + "': bad integer argument '" + s + "'");
    }
}

double parse_double_arg(const std::string& s, const std::string& spec) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw input_error("generator spec '" + spec + "': bad numeric argument '" + s + "'");
    }
}

std::uint64_t parse_seed_arg(const std::string& s, const std::string& spec) {
    try {
        size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw input_error("generator spec '" + spec + "': bad seed argument '" + s + "'");
    }
}

} // namespace

SimplicialComplex generate(const std::string& spec, std::uint64_t default_seed) {
    const std::string s = strip(spec);
    const size_t open = s.find('(');
    if (open == std::string::npos) {
        if (s == "octahedron") return octahedron();
        if (s == "single-triangle") return single_triangle();
        if (s == "hollow-triangle") return hollow_triangle();
        if (s == "tetrahedron-boundary") return tetrahedron_boundary();
        if (s == "pentachoron-boundary") return pentachoron_boundary();
        if (s == "csaszar-torus") return csaszar_torus();
        throw input_error("unknown generator '" + s + "'");
    }
    if (s.back() != ')')
        throw input_error("generator spec '" + s + "': missing closing parenthesis");
    const std::string name = strip(s.substr(0, open));
    const auto args = split_args(s.substr(open + 1, s.size() - open - 2));

    if (name == "complete-tripartite") {
        if (args.size() != 1)
            throw input_error("generator spec '" + s + "': complete-tripartite takes one argument");
        return complete_tripartite(parse_int_arg(args[0], s));
    }
    if (name == "linial-meshulam" || name == "clique-gnp") {
        if (args.size() != 2 && args.size() != 3)
            throw input_error("generator spec '" + s + "': expected (n, p) or (n, p, seed)");
        const int n = parse_int_arg(args[0], s);
        const double p = parse_double_arg(args[1], s);
        const std::uint64_t seed = args.size() == 3 ? parse_seed_arg(args[2], s) : default_seed;
        return name == "linial-meshulam" ? linial_meshulam(n, p, seed) : clique_gnp(n, p, seed);
    }
    throw input_error("unknown generator '" + name + "'");
}

} // namespace simplectra::gen
