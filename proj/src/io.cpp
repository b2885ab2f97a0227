#include "simplectra/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "simplectra/errors.hpp"

namespace simplectra {

namespace {

// strip "#..." comments, return trimmed remainder
std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = (pos == std::string::npos) ? line : line.substr(0, pos);
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long long parse_int_token(const std::string& tok, int line_no) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw input_error("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    }
    if (used != tok.size())
        throw input_error("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    return v;
}

} // namespace

SimplicialComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_n = false;
    int n = 0;
    std::vector<Cell> faces;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (body.empty()) continue;
        std::istringstream toks(body);
        std::string tok;
        if (!have_n) {
            toks >> tok;
            if (tok != "n")
                throw input_error("line " + std::to_string(line_no) +
                                  ": expected header 'n <count>', got '" + tok + "'");
            if (!(toks >> tok))
                throw input_error("line " + std::to_string(line_no) + ": missing vertex count");
            const long long nn = parse_int_token(tok, line_no);
            if (nn <= 0 || nn > 100000)
                throw input_error("line " + std::to_string(line_no) + ": vertex count out of range");
            n = static_cast<int>(nn);
            if (toks >> tok)
                throw input_error("line " + std::to_string(line_no) + ": trailing tokens after header");
            have_n = true;
            continue;
        }
        Cell face;
        while (toks >> tok) {
            const long long v = parse_int_token(tok, line_no);
            if (v < 0 || v >= n)
                throw input_error("line " + std::to_string(line_no) + ": vertex id " +
                                  std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
            face.push_back(static_cast<int>(v));
        }
        Cell sorted = face;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("line " + std::to_string(line_no) + ": malformed face " +
                              cell_to_string(face) + " (duplicate vertex)");
        if (face.size() > static_cast<size_t>(kMaxDim + 1))
            throw input_error("line " + std::to_string(line_no) + ": face has " +
                              std::to_string(face.size()) + " vertices, dimension cap is " +
                              std::to_string(kMaxDim));
        faces.push_back(std::move(face));
    }
    if (!have_n) throw input_error("missing 'n <count>' header");
    return SimplicialComplex::from_maximal_faces(faces, n);
}

SimplicialComplex parse_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex_text(buf.str());
}

std::vector<Cell> maximal_faces(const SimplicialComplex& X) {
    std::vector<Cell> out;
    for (int i = 0; i <= kMaxDim; ++i) {
        for (int idx = 0; idx < X.cell_count(i); ++idx) {
            if (i == kMaxDim || X.degree(i, idx) == 0) out.push_back(X.cells(i)[idx]);
        }
    }
    return out;
}

std::string serialize_complex_text(const SimplicialComplex& X) {
    std::ostringstream os;
    os << "n " << X.n() << "\n";
    for (const Cell& f : maximal_faces(X)) {
        for (size_t p = 0; p < f.size(); ++p) {
            if (p) os << ' ';
            os << f[p];
        }
        os << "\n";
    }
    return os.str();
}

void serialize_complex(const SimplicialComplex& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << serialize_complex_text(X);
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = tok.find_last_not_of(" \t");
        out.push_back(static_cast<int>(parse_int_token(tok.substr(b, e - b + 1), 0)));
    }
    return out;
}

std::vector<std::vector<int>> parse_vertex_sets(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ';')) out.push_back(parse_vertex_list(part));
    if (out.empty()) throw input_error("--sets: no sets given");
    return out;
}

} // namespace simplectra
