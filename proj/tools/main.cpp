// simplectra command-line interface.
//
// Subcommands: spectrum, cheeger, mixing, gallery, satake, chromatic,
// check-all. All machine output is JSON with an embedded run manifest.
// Exit codes: 0 success, 1 a checked inequality/identity failed to hold,
// 2 bad input or violated precondition, 3 desk-scale resource cap.

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplectra/bounds.hpp"
#include "simplectra/checkall.hpp"
#include "simplectra/combinatorics.hpp"
#include "simplectra/complex.hpp"
#include "simplectra/errors.hpp"
#include "simplectra/generators.hpp"
#include "simplectra/hodge.hpp"
#include "simplectra/io.hpp"
#include "simplectra/satake.hpp"

namespace {

using json = nlohmann::ordered_json;
using cd = std::complex<double>;
using namespace simplectra;

struct ComplexSource {
    std::string input;    // .cplx path
    std::string generate; // generator spec string
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "path to a .cplx complex file");
        cmd->add_option("--generate", generate,
                        "generator spec, e.g. complete-tripartite(3) or octahedron");
        cmd->add_option("--seed", seed, "seed for randomized generators (default 0)");
    }

    SimplicialComplex load() const {
        if (input.empty() == generate.empty())
            throw input_error("exactly one of --input and --generate is required");
        return input.empty() ? gen::generate(generate, seed) : parse_complex(input);
    }
};

struct OutputSink {
    std::string path;
    bool json_mode = false;

    void attach(CLI::App* cmd, bool with_json_flag = true) {
        cmd->add_option("-o,--output", path, "write output to a file instead of stdout");
        if (with_json_flag) cmd->add_flag("--json", json_mode, "emit JSON");
    }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw input_error("cannot open output file '" + path + "'");
            out << text;
            if (text.empty() || text.back() != '\n') out << '\n';
        }
    }

    void write_json(const json& doc) const { write(doc.dump(2)); }
};

// Numbers that are exactly integral print as integers (12, not 12.0), so the
// type-exact Satake values round-trip verbatim.
json number_json(double x) {
    if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9.0e15)
        return json(static_cast<long long>(x));
    return json(x);
}

json complex_json(cd z) {
    constexpr double tol = 1e-9;
    if (std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z.real())))
        return number_json(z.real());
    json j;
    j["re"] = number_json(z.real());
    j["im"] = number_json(z.imag());
    return j;
}

void emit_error(const char* kind, const std::string& message) {
    json err;
    err["error"] = json{{"kind", kind}, {"message", message}};
    std::cerr << err.dump(2) << '\n';
}

std::vector<std::vector<int>> require_sets(const std::string& sets, size_t count,
                                           const char* what) {
    if (sets.empty()) throw input_error(std::string(what) + ": --sets is required");
    auto parsed = parse_vertex_sets(sets);
    if (count != 0 && parsed.size() != count)
        throw input_error(std::string(what) + ": --sets must list exactly " +
                          std::to_string(count) + " blocks separated by ';'");
    return parsed;
}

cd parse_complex_arg(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    try {
        size_t pos = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return cd(re, 0.0);
        }
        const std::string re_s = text.substr(0, comma), im_s = text.substr(comma + 1);
        const double re = std::stod(re_s, &pos);
        if (pos != re_s.size()) throw std::invalid_argument(text);
        const double im = std::stod(im_s, &pos);
        if (pos != im_s.size()) throw std::invalid_argument(text);
        return cd(re, im);
    } catch (const std::exception&) {
        throw input_error(std::string(what) + ": expected 're' or 're,im', got '" + text + "'");
    }
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const ComplexSource& src, const OutputSink& sink, int dim, bool csv) {
    const SimplicialComplex X = src.load();
    const auto report = hodge::spectrum_report(X, dim);

    if (csv) {
        std::string out = "value,multiplicity\n";
        for (const auto& [v, m] : report.eigenvalues)
            out += json(v).dump() + "," + std::to_string(m) + "\n";
        sink.write(out);
        return 0;
    }
    if (sink.json_mode) {
        json doc;
        doc["manifest"] = shell::run_manifest(src.seed);
        doc["spectrum"] = report.to_json();
        sink.write_json(doc);
        return 0;
    }
    std::string out = "Delta_" + std::to_string(dim) + "^+ spectrum (n=" + std::to_string(X.n()) +
                      ", dim=" + std::to_string(X.dim()) + ")\n";
    out += "eigenvalues:";
    for (const auto& [v, m] : report.eigenvalues)
        out += " " + json(v).dump() + "x" + std::to_string(m);
    out += "\nnontrivial:";
    for (double v : report.nontrivial) out += " " + json(v).dump();
    out += "\ncolored:";
    for (double v : report.colored) out += " " + json(v).dump();
    out += "\nbetti: " + std::to_string(report.betti);
    if (report.k) out += "\nk: " + json(*report.k).dump();
    if (report.mu) out += "\nmu: " + json(*report.mu).dump();
    sink.write(out);
    return 0;
}

// ----------------------------------------------------------------- cheeger

int cmd_cheeger(const ComplexSource& src, const OutputSink& sink, const std::string& sets,
                bool all_partitions, double theta) {
    const SimplicialComplex X = src.load();
    json doc;
    doc["manifest"] = shell::run_manifest(src.seed);

    if (all_partitions) {
        const auto res = bounds::h_theta(X, theta);
        doc["theta"] = theta;
        doc["h_theta"] = res.to_json();
        sink.write_json(doc);
        return 0;
    }
    const auto blocks = require_sets(sets, 3, "cheeger");
    const auto rep = bounds::cheeger_check(X, blocks[0], blocks[1], blocks[2]);
    doc["cheeger"] = rep.to_json();
    sink.write_json(doc);
    return rep.holds ? 0 : 1;
}

// ------------------------------------------------------------------ mixing

int cmd_mixing(const ComplexSource& src, const OutputSink& sink, const std::string& sets,
               bool colored) {
    const SimplicialComplex X = src.load();
    json doc;
    doc["manifest"] = shell::run_manifest(src.seed);

    bounds::InequalityReport rep;
    if (colored) {
        const auto blocks = require_sets(sets, 2, "mixing --colored");
        const auto coloring = find_proper_coloring(X, 3);
        if (!coloring)
            throw precondition_error("mixing --colored: complex has no proper 3-coloring");
        rep = bounds::colored_mixing_check(X, coloring->colors, blocks[0], blocks[1]);
        doc["colored_mixing"] = rep.to_json();
    } else {
        const auto blocks = require_sets(sets, 4, "mixing");
        rep = bounds::mixing_check(X, blocks[0], blocks[1], blocks[2], blocks[3]);
        doc["mixing"] = rep.to_json();
    }
    sink.write_json(doc);
    return rep.holds ? 0 : 1;
}

// ----------------------------------------------------------------- gallery

int cmd_gallery(const ComplexSource& src, const OutputSink& sink, const std::string& sets, int j,
                bool spectral) {
    const SimplicialComplex X = src.load();
    const auto blocks = require_sets(sets, 0, "gallery");
    const long long count = comb::count_galleries(X, j, blocks);

    json doc;
    doc["manifest"] = shell::run_manifest(src.seed);
    doc["j"] = j;
    doc["windows"] = static_cast<int>(blocks.size());
    doc["galleries"] = count;
    bool ok = true;
    if (spectral) {
        if (j != 2 || blocks.size() != 4)
            throw precondition_error("gallery --spectral: needs j = 2 and exactly 4 windows");
        const double s = comb::spectral_gallery_count(X, blocks[0], blocks[1], blocks[2],
                                                      blocks[3]);
        doc["spectral"] = s;
        ok = std::abs(s - static_cast<double>(count)) <=
             1e-6 * std::max(1.0, std::abs(static_cast<double>(count)));
        doc["identity_holds"] = ok;
    }
    sink.write_json(doc);
    return ok ? 0 : 1;
}

// ------------------------------------------------------------------ satake

satake::SatakeParams params_from_flags(int q, const std::string& pattern, const std::string& z_arg,
                                       const std::string& c_arg, const std::string& omega_arg) {
    if (!z_arg.empty()) {
        std::vector<cd> zs;
        std::string cur;
        for (char ch : z_arg + ";") {
            if (ch == ';') {
                if (!cur.empty()) zs.push_back(parse_complex_arg(cur, "satake --z"));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (zs.size() != 3)
            throw input_error("satake --z: expected three components 're,im;re,im;re,im'");
        return satake::make_params(zs[0], zs[1], zs[2], q);
    }
    const double sq = std::sqrt(static_cast<double>(q));
    cd c(1.0, 0.0);
    if (!c_arg.empty()) c = parse_complex_arg(c_arg, "satake --c");
    if (pattern == "trivial" || pattern == "e")
        return satake::make_params(cd(q), cd(1), cd(1.0 / q), q);
    if (pattern == "steinberg")
        return satake::make_params(cd(1.0 / q), cd(1), cd(q), q);
    if (pattern == "f") {
        const double sign = (omega_arg == "-") ? -1.0 : 1.0;
        const cd om = std::polar(1.0, sign * 2.0 * M_PI / 3.0);
        return satake::make_params(om * static_cast<double>(q), om, om / static_cast<double>(q),
                                   q);
    }
    if (pattern == "c")
        return satake::make_params(c / sq, c * sq, 1.0 / (c * c), q);
    if (pattern == "d")
        return satake::make_params(c * sq, c / sq, 1.0 / (c * c), q);
    throw input_error("satake: unknown --pattern '" + pattern +
                      "' (trivial|e|steinberg|f|c|d, or use --z)");
}

int cmd_satake(const OutputSink& sink, int q, const std::string& pattern, const std::string& z_arg,
               const std::string& c_arg, const std::string& omega_arg) {
    if (pattern.empty() && z_arg.empty())
        throw input_error("satake: one of --pattern or --z is required");
    const auto p = params_from_flags(q, pattern, z_arg, c_arg, omega_arg);
    const auto info = satake::classify_type(p);

    // Prefer the per-type exact eigenvalues when the point lies on one of the
    // closed-form families; fall back to the generic formulas.
    satake::ClosedForms cf;
    if (const auto exact = satake::type_exact_values(info, q))
        cf = *exact;
    else
        cf = satake::closed_form_eigenvalues(p);

    json doc;
    doc["manifest"] = shell::run_manifest(0);
    doc["q"] = q;
    doc["z"] = json::array({complex_json(p.z1), complex_json(p.z2), complex_json(p.z3)});
    doc["type"] = info.name;
    doc["lambdaK"] = complex_json(cf.lamK);
    doc["lambdaE_plus"] = complex_json(cf.lamE_plus);
    doc["lambdaE_minus"] = complex_json(cf.lamE_minus);
    doc["nonreal"] = cf.nonreal;
    doc["k0"] = number_json(p.k0());
    doc["k1"] = number_json(p.k1());
    doc["chain_residual"] = satake::chain_residual(p);
    doc["composite_residual"] = satake::composite_residual(p);
    doc["eigenvalue_deviation"] = satake::closed_form_deviation(p);
    if (info.kind == satake::RepKind::A || info.kind == satake::RepKind::C ||
        info.kind == satake::RepKind::D) {
        const auto mem = satake::verify_interval_membership(p);
        doc["membership"] = mem.details;
        doc["in_intervals"] = mem.in_intervals;
    }
    const auto st = satake::strips(q);
    doc["strips"] = json{{"I", json::array({st.I_lo, st.I_hi})},
                         {"I_minus", json::array({st.Im_lo, st.Im_hi})},
                         {"I_plus", json::array({st.Ip_lo, st.Ip_hi})}};
    sink.write_json(doc);
    return 0;
}

// --------------------------------------------------------------- chromatic

int cmd_chromatic(const ComplexSource& src, const OutputSink& sink) {
    const SimplicialComplex X = src.load();
    const auto res = bounds::weak_chromatic(X);
    json doc;
    doc["manifest"] = shell::run_manifest(src.seed);
    doc["chromatic"] = res.to_json();
    sink.write_json(doc);
    return 0;
}

// --------------------------------------------------------------- check-all

int cmd_check_all(const OutputSink& sink, const std::string& corpus, std::uint64_t seed) {
    const auto res = shell::run_check_all(corpus, seed);
    sink.write_json(res.document);
    return res.all_hold ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hodge spectra, expansion bounds, and gallery counting for simplicial complexes"};
    app.require_subcommand(1);

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "Hodge Laplacian spectrum report");
    ComplexSource sp_src;
    OutputSink sp_sink;
    int sp_dim = 0;
    bool sp_csv = false;
    sp_src.attach(sp);
    sp_sink.attach(sp);
    sp->add_option("--dim", sp_dim, "cell dimension i of Delta_i^+")->required();
    sp->add_flag("--csv", sp_csv, "emit eigenvalues as CSV (value,multiplicity)");

    // cheeger
    auto* ch = app.add_subcommand("cheeger", "triangle-complex Cheeger inequality");
    ComplexSource ch_src;
    OutputSink ch_sink;
    std::string ch_sets;
    bool ch_all = false;
    double ch_theta = 1.0 / 3.0;
    ch_src.attach(ch);
    ch_sink.attach(ch);
    ch->add_option("--sets", ch_sets, "three blocks 'a,b;c,d;e,f' partitioning the vertices");
    ch->add_flag("--all-partitions", ch_all, "sweep all 3-partitions with blocks >= theta*n");
    ch->add_option("--theta", ch_theta, "block-size floor for --all-partitions (default 1/3)");

    // mixing
    auto* mx = app.add_subcommand("mixing", "gallery / colored expander mixing bounds");
    ComplexSource mx_src;
    OutputSink mx_sink;
    std::string mx_sets;
    bool mx_colored = false;
    mx_src.attach(mx);
    mx_sink.attach(mx);
    mx->add_option("--sets", mx_sets, "four blocks A;B;C;D (or A;B with --colored)");
    mx->add_flag("--colored", mx_colored, "colored mixing on the 1-skeleton (two blocks)");

    // gallery
    auto* ga = app.add_subcommand("gallery", "count j-galleries over vertex windows");
    ComplexSource ga_src;
    OutputSink ga_sink;
    std::string ga_sets;
    int ga_dim = 2;
    bool ga_spectral = false;
    ga_src.attach(ga);
    ga_sink.attach(ga);
    ga->add_option("--sets", ga_sets, "window blocks B0;B1;...;Bl");
    ga->add_option("--dim", ga_dim, "gallery dimension j (default 2)");
    ga->add_flag("--spectral", ga_spectral,
                 "also evaluate the spectral counting form and compare (j=2, 4 windows)");

    // satake
    auto* sa = app.add_subcommand("satake", "Satake-parameter eigenvalue formulas");
    OutputSink sa_sink;
    int sa_q = 2;
    std::string sa_pattern, sa_z, sa_c, sa_omega = "+";
    sa_sink.attach(sa, /*with_json_flag=*/false);
    sa->add_option("--q", sa_q, "residue prime power q >= 2")->required();
    sa->add_option("--pattern", sa_pattern, "trivial|e|steinberg|f|c|d");
    sa->add_option("--z", sa_z, "explicit parameters 're,im;re,im;re,im'");
    sa->add_option("--c", sa_c, "unit-circle parameter 're,im' for patterns c/d");
    sa->add_option("--omega", sa_omega, "'+' or '-' cube-root branch for pattern f");

    // chromatic
    auto* cr = app.add_subcommand("chromatic", "weak chromatic number (no monochromatic triangle)");
    ComplexSource cr_src;
    OutputSink cr_sink;
    cr_src.attach(cr);
    cr_sink.attach(cr);

    // check-all
    auto* ca = app.add_subcommand("check-all", "run the full invariant battery over a corpus");
    OutputSink ca_sink;
    std::string ca_corpus = "default";
    std::uint64_t ca_seed = 0;
    ca_sink.attach(ca, /*with_json_flag=*/false);
    ca->add_option("--corpus", ca_corpus, "corpus name (default: default)");
    ca->add_option("--seed", ca_seed, "seed for the randomized draws (default 0)");

    CLI11_PARSE(app, argc, argv);

    const auto guarded = [](const std::function<int()>& f) {
        try {
            return f();
        } catch (const resource_cap_error& e) {
            emit_error("resource_cap", e.what());
            return 3;
        } catch (const input_error& e) {
            emit_error("input", e.what());
            return 2;
        } catch (const precondition_error& e) {
            emit_error("precondition", e.what());
            return 2;
        } catch (const not_applicable_error& e) {
            emit_error("not_applicable", e.what());
            return 2;
        } catch (const numeric_error& e) {
            emit_error("numeric", e.what());
            return 2;
        } catch (const error& e) {
            emit_error("error", e.what());
            return 2;
        } catch (const std::exception& e) {
            emit_error("internal", e.what());
            return 2;
        }
    };

    if (sp->parsed())
        return guarded([&] { return cmd_spectrum(sp_src, sp_sink, sp_dim, sp_csv); });
    if (ch->parsed())
        return guarded([&] { return cmd_cheeger(ch_src, ch_sink, ch_sets, ch_all, ch_theta); });
    if (mx->parsed())
        return guarded([&] { return cmd_mixing(mx_src, mx_sink, mx_sets, mx_colored); });
    if (ga->parsed())
        return guarded([&] { return cmd_gallery(ga_src, ga_sink, ga_sets, ga_dim, ga_spectral); });
    if (sa->parsed())
        return guarded([&] { return cmd_satake(sa_sink, sa_q, sa_pattern, sa_z, sa_c, sa_omega); });
    if (cr->parsed()) return guarded([&] { return cmd_chromatic(cr_src, cr_sink); });
    if (ca->parsed()) return guarded([&] { return cmd_check_all(ca_sink, ca_corpus, ca_seed); });
    return 0;
}
