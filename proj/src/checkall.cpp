#include "simplectra/checkall.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "simplectra/bounds.hpp"
#include "simplectra/combinatorics.hpp"
#include "simplectra/complex.hpp"
#include "simplectra/errors.hpp"
#include "simplectra/generators.hpp"
#include "simplectra/hodge.hpp"
#include "simplectra/rng.hpp"
#include "simplectra/satake.hpp"

namespace simplectra::shell {

namespace {

using cd = std::complex<double>;

struct Tally {
    int run = 0;
    std::vector<std::string> failed;

    void check(const std::string& name, bool ok) {
        ++run;
        if (!ok) failed.push_back(name);
    }
};

// deterministic partial Fisher-Yates draw: `size` elements of `pool`, sorted
std::vector<int> draw_subset(SplitMix64& rng, std::vector<int> pool, size_t size) {
    for (size_t i = 0; i < size; ++i) {
        const size_t j = i + static_cast<size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

json member_report(const std::string& name, const SimplicialComplex& X, Tally& tally) {
    json mj;
    mj["name"] = name;
    mj["n"] = X.n();
    mj["dim"] = X.dim();
    {
        json counts = json::array();
        for (int i = 0; i <= X.dim(); ++i) counts.push_back(X.cell_count(i));
        mj["cells"] = counts;
    }
    mj["euler"] = X.euler_characteristic();

    std::vector<hodge::SpectrumReport> reports;
    long long alt = 0;
    json spectra = json::array();
    json betti = json::array();
    for (int i = 0; i <= X.dim(); ++i) {
        reports.push_back(hodge::spectrum_report(X, i));
        spectra.push_back(reports.back().to_json());
        betti.push_back(reports.back().betti);
        alt += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(reports.back().betti);
    }
    mj["betti"] = betti;
    mj["spectra"] = spectra;
    tally.check(name + "/euler-poincare", alt == X.euler_characteristic());

    // b_i must equal the kernel multiplicity inside the nontrivial block (i >= 1)
    for (int i = 1; i <= X.dim(); ++i) {
        const auto& r = reports[i];
        double lam_max = 0;
        for (const auto& [v, m] : r.eigenvalues) lam_max = std::max(lam_max, v);
        const double ztol = 1e-7 * std::max(1.0, lam_max);
        const long long zeros =
            std::count_if(r.nontrivial.begin(), r.nontrivial.end(),
                          [&](double v) { return std::abs(v) <= ztol; });
        tally.check(name + "/betti-kernel-" + std::to_string(i), zeros == r.betti);
    }

    json garland = json::array();
    for (int j = 1; j <= X.dim(); ++j) {
        try {
            const auto g = hodge::garland_check(X, j);
            garland.push_back(g.to_json());
            tally.check(name + "/garland-" + std::to_string(j), g.holds);
        } catch (const not_applicable_error& e) {
            garland.push_back(json{{"j", j}, {"not_applicable", true}, {"message", e.what()}});
        }
    }
    mj["garland"] = garland;

    const auto coloring = find_proper_coloring(X, 3);
    mj["tripartite"] = coloring.has_value();
    mj["chromatic"] = bounds::weak_chromatic(X).chi;

    if (X.dim() == 2) {
        const auto dis = find_disorientation(X);
        mj["disorientable"] = dis.has_value();
        const auto p1 = degree_profile(X, 1);
        if (p1.regular) {
            const double target = 3.0 * p1.k_min;
            bool in_spec = false;
            for (const auto& [v, m] : reports[1].eigenvalues)
                if (std::abs(v - target) <= 1e-6 * std::max(1.0, target)) in_spec = true;
            tally.check(name + "/disorientation-spectral", dis.has_value() == in_spec);
        }
        if (degree_profile(X, 0).regular) {
            const auto dev = hodge::deviation_norms(X);
            mj["deviation"] = dev.to_json();
            tally.check(name + "/deviation-D", dev.holds_D);
            if (dev.holds_Dp) tally.check(name + "/deviation-Dprime", *dev.holds_Dp);
        }
    }

    if (X.dim() >= 1 && X.n() >= 3 && degree_profile(X, 0).regular) {
        std::vector<std::vector<int>> mod3(3);
        for (int v = 0; v < X.n(); ++v) mod3[v % 3].push_back(v);
        const auto rep = bounds::cheeger_check(X, mod3[0], mod3[1], mod3[2]);
        mj["cheeger_mod3"] = rep.to_json();
        tally.check(name + "/cheeger-mod3", rep.holds);

        try {
            mj["h_theta_third"] = bounds::h_theta(X, 1.0 / 3.0).to_json();
        } catch (const precondition_error&) {
            mj["h_theta_third"] = json{{"infeasible", true}};
        }
    }
    return mj;
}

json tripartite_draws(const std::string& name, const SimplicialComplex& X, std::uint64_t seed,
                      Tally& tally) {
    json out;
    out["name"] = name;
    const auto coloring = find_proper_coloring(X, 3);
    std::vector<std::vector<int>> block(3);
    for (int v = 0; v < X.n(); ++v) block[coloring->colors[v]].push_back(v);
    const int m = static_cast<int>(block[0].size());

    // colored mixing on singletons is exact: E = main term, mu = 0
    {
        const auto rep = bounds::colored_mixing_check(X, coloring->colors, {block[0][0]},
                                                      {block[1][0]});
        out["colored_singleton"] = rep.to_json();
        tally.check(name + "/colored-mixing", rep.holds);
    }

    SplitMix64 rng(seed);
    json draws = json::array();
    for (int t = 0; t < 5; ++t) {
        const int sA = 1 + static_cast<int>(rng.below(m - 1));
        const int sD = 1 + static_cast<int>(rng.below(m - sA));
        auto AD = draw_subset(rng, block[0], sA + sD);
        std::vector<int> A(AD.begin(), AD.begin() + sA);
        std::vector<int> D(AD.begin() + sA, AD.end());
        const auto B = draw_subset(rng, block[1], 1 + rng.below(m));
        const auto C = draw_subset(rng, block[2], 1 + rng.below(m));

        const auto rep = bounds::mixing_check(X, A, B, C, D);
        const long long F2 = comb::count_galleries(X, 2, {A, B, C, D});
        const double spectral = comb::spectral_gallery_count(X, A, B, C, D);
        const bool identity =
            std::abs(spectral - static_cast<double>(F2)) <=
            1e-6 * std::max(1.0, std::abs(static_cast<double>(F2)));

        json dj;
        dj["A"] = A;
        dj["B"] = B;
        dj["C"] = C;
        dj["D"] = D;
        dj["galleries"] = F2;
        dj["spectral"] = spectral;
        dj["mixing"] = rep.to_json();
        draws.push_back(dj);
        tally.check(name + "/gallery-identity-" + std::to_string(t), identity);
        tally.check(name + "/mixing-draw-" + std::to_string(t), rep.holds);
    }
    out["draws"] = draws;
    return out;
}

json satake_battery(Tally& tally) {
    json out = json::array();
    const cd omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    for (int q : {2, 3}) {
        const double sq = std::sqrt(static_cast<double>(q));
        struct Case {
            const char* pattern;
            cd z1, z2, z3;
            satake::RepKind kind;
        };
        const cd c_cd = std::polar(1.0, 0.3);
        const cd c_b = std::polar(1.0, 0.4);
        const double a_b = 0.25;
        const std::vector<Case> cases = {
            {"trivial", cd(q), cd(1), cd(1.0 / q), satake::RepKind::E},
            {"steinberg", cd(1.0 / q), cd(1), cd(q), satake::RepKind::Steinberg},
            {"f", omega * static_cast<double>(q), omega, omega / static_cast<double>(q),
             satake::RepKind::F},
            {"c", c_cd / sq, c_cd * sq, 1.0 / (c_cd * c_cd), satake::RepKind::C},
            {"d", c_cd * sq, c_cd / sq, 1.0 / (c_cd * c_cd), satake::RepKind::D},
            {"a", std::polar(1.0, 0.7), std::polar(1.0, 1.1), std::polar(1.0, -1.8),
             satake::RepKind::A},
            {"b", 1.0 / (c_b * c_b), c_b * std::pow(q, a_b), c_b * std::pow(q, -a_b),
             satake::RepKind::B},
        };
        for (const auto& cs : cases) {
            const auto p = satake::make_params(cs.z1, cs.z2, cs.z3, q);
            const double resid = satake::composite_residual(p);
            const double dev = satake::closed_form_deviation(p);
            const auto info = satake::classify_type(p);
            const std::string tag =
                std::string("satake/q") + std::to_string(q) + "-" + cs.pattern;
            tally.check(tag + "/residual", resid <= 1e-12);
            tally.check(tag + "/eigenvalues", dev <= 1e-9);
            tally.check(tag + "/classify", info.kind == cs.kind);

            json cj;
            cj["q"] = q;
            cj["pattern"] = cs.pattern;
            cj["residual"] = resid;
            cj["deviation"] = dev;
            cj["classified"] = info.name;
            if (info.kind == satake::RepKind::A || info.kind == satake::RepKind::C ||
                info.kind == satake::RepKind::D) {
                const auto mem = satake::verify_interval_membership(p);
                cj["membership"] = mem.details;
                tally.check(tag + "/membership", mem.in_intervals);
            }
            out.push_back(cj);
        }
    }
    return out;
}

json prediction_battery(Tally& tally) {
    struct Case {
        long long n;
        int q;
        bool tri;
    };
    const std::vector<Case> cases = {{10, 2, false}, {6, 2, true}, {9, 2, true}, {20, 3, false}};
    json out = json::array();
    for (const auto& cs : cases) {
        const auto pred = satake::predicted_spectrum(cs.n, cs.q, cs.tri, 1);
        out.push_back(pred.to_json());
        tally.check("prediction/n" + std::to_string(cs.n) + "-q" + std::to_string(cs.q) +
                        (cs.tri ? "-tri" : "-nontri"),
                    pred.identities_ok);
    }
    return out;
}

} // namespace

json run_manifest(std::uint64_t seed, const std::string& corpus) {
    json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["rng"] = kRngAlgorithm;
    m["seed"] = seed;
    if (!corpus.empty()) m["corpus"] = corpus;
    return m;
}

CheckAllResult run_check_all(const std::string& corpus, std::uint64_t seed) {
    if (corpus != "default")
        throw input_error("unknown corpus '" + corpus + "' (available: default)");

    Tally tally;
    json doc;
    doc["manifest"] = run_manifest(seed, corpus);

    const std::vector<std::string> names = {
        "octahedron",          "single-triangle",      "hollow-triangle",
        "tetrahedron-boundary", "pentachoron-boundary", "csaszar-torus",
        "complete-tripartite(3)", "complete-tripartite(4)"};
    json members = json::array();
    std::vector<SimplicialComplex> complexes;
    for (const auto& nm : names) {
        complexes.push_back(gen::generate(nm, seed));
        members.push_back(member_report(nm, complexes.back(), tally));
    }
    doc["members"] = members;

    json tri = json::array();
    const std::vector<size_t> tri_idx = {0, 6, 7}; // octahedron, T333, T444
    for (size_t pos = 0; pos < tri_idx.size(); ++pos) {
        const size_t i = tri_idx[pos];
        tri.push_back(tripartite_draws(names[i], complexes[i], seed + 101 * (pos + 1), tally));
    }
    doc["tripartite"] = tri;

    json sat;
    sat["battery"] = satake_battery(tally);
    sat["predictions"] = prediction_battery(tally);
    {
        json formulas = json::array();
        for (int q : {2, 3, 4})
            formulas.push_back(json{{"q", q},
                                    {"theta", 1.0 / 3.0},
                                    {"values", satake::ramanujan_formulas(q, 1.0 / 3.0, 1, {})}});
        sat["formulas"] = formulas;
    }
    doc["satake"] = sat;

    json summary;
    summary["checks_run"] = tally.run;
    summary["checks_failed"] = static_cast<int>(tally.failed.size());
    summary["failed"] = tally.failed;
    summary["all_hold"] = tally.failed.empty();
    doc["summary"] = summary;

    CheckAllResult res;
    res.document = std::move(doc);
    res.all_hold = tally.failed.empty();
    res.checks_run = tally.run;
    res.checks_failed = static_cast<int>(tally.failed.size());
    return res;
}

} // namespace simplectra::shell
