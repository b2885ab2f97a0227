#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "simplectra/errors.hpp"
#include "simplectra/satake.hpp"

using namespace simplectra;
using satake::cd;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

satake::SatakeParams params_e(int q) {
    return satake::make_params(cd(q, 0), cd(1, 0), cd(1.0 / q, 0), q);
}

bool approx(cd a, cd b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(satake::make_params(cd(1, 0), cd(1, 0), cd(1, 0), 1), input_error);
    CHECK_THROWS_AS(satake::make_params(cd(2, 0), cd(1, 0), cd(1, 0), 2), input_error);
    CHECK_THROWS_AS(satake::make_params(cd(0, 0), cd(1, 0), cd(1, 0), 2), input_error);
    auto p = satake::make_params(cd(1, 0), cd(1, 0), cd(1, 0), 2);
    CHECK(p.k0() == doctest::Approx(14.0));
    CHECK(p.k1() == doctest::Approx(3.0));
    CHECK(approx(p.ztilde(), cd(6, 0)));
}

TEST_CASE("operator models at z = (1,1,1), q = 2, exact printed entries") {
    auto p = satake::make_params(cd(1, 0), cd(1, 0), cd(1, 0), 2);
    auto M = satake::build_matrices(p);
    CHECK(approx(M.delta1(0), cd(1, 0), 0));
    CHECK(approx(M.delta1(1), cd(0, 0), 0));
    CHECK(approx(M.delta1(2), cd(-0.5, 0), 0));
    CHECK(approx(M.bdry1(0), cd(1, 0), 0));
    CHECK(approx(M.bdry1(1), cd(0, 0), 0));
    CHECK(approx(M.bdry1(2), cd(-2, 0), 0));
    CHECK(approx(M.delta2(0, 0), cd(1, 0), 0));
    CHECK(approx(M.delta2(0, 1), cd(2, 0), 0));
    CHECK(approx(M.delta2(0, 2), cd(2, 0), 0));
    CHECK(approx(M.delta2(1, 0), cd(1, 0), 0));
    CHECK(approx(M.delta2(1, 1), cd(1, 0), 0));
    CHECK(approx(M.delta2(1, 2), cd(2, 0), 0));
    CHECK(approx(M.bdry2(0, 0), cd(1, 0), 0));
    CHECK(approx(M.bdry2(0, 1), cd(2, 0), 0));
    CHECK(approx(M.bdry2(1, 0), cd(1, 0), 0));
    CHECK(approx(M.bdry2(1, 1), cd(1, 0), 0));
    CHECK(approx(M.bdry2(2, 0), cd(0.5, 0), 0));
    CHECK(approx(M.bdry2(2, 1), cd(1, 0), 0));
    CHECK(approx(M.lap0_up, cd(2, 0), 1e-12)); // k0 - q*ztilde = 14 - 12

    CHECK(satake::chain_residual(p) <= 1e-12);
    CHECK(satake::composite_residual(p) <= 1e-12);
    CHECK(satake::closed_form_deviation(p) <= 1e-9);
}

TEST_CASE("composite identities on assorted torus points") {
    std::vector<cd> z1s = {std::polar(1.0, 0.3), std::polar(1.0, 1.9), cd(1, 0)};
    std::vector<cd> z2s = {std::polar(1.0, -0.8), std::polar(1.0, 2.4), std::polar(1.0, 0.5)};
    for (int q : {2, 3, 5})
        for (auto z1 : z1s)
            for (auto z2 : z2s) {
                auto p = satake::make_params(z1, z2, 1.0 / (z1 * z2), q);
                CHECK(satake::chain_residual(p) <= 1e-12);
                CHECK(satake::composite_residual(p) <= 1e-12);
                CHECK(satake::closed_form_deviation(p) <= 1e-9);
                // lamE+ + lamE- = 3 k1, lamE+ * lamE- = lamK
                auto cf = satake::closed_form_eigenvalues(p);
                CHECK(approx(cf.lamE_plus + cf.lamE_minus, cd(3 * p.k1(), 0), 1e-9));
                CHECK(approx(cf.lamE_plus * cf.lamE_minus, cf.lamK, 1e-8));
            }
}

TEST_CASE("closed forms at frozen points") {
    // Trivial representation (type e): lamK = 0, edge pair {0, 3k1}.
    auto cf = satake::closed_form_eigenvalues(params_e(3));
    CHECK(approx(cf.lamK, cd(0, 0), 1e-12));
    CHECK(approx(cf.lamE_plus, cd(12, 0), 1e-9));
    CHECK(approx(cf.lamE_minus, cd(0, 0), 1e-9));
    CHECK_FALSE(cf.nonreal);

    // Generic unitary point (type a), frozen decimals.
    auto pa = satake::make_params(std::polar(1.0, 0.7), std::polar(1.0, 1.1),
                                  std::polar(1.0, -1.8), 2);
    auto ca = satake::closed_form_eigenvalues(pa);
    CHECK(ca.lamK.real() == doctest::Approx(10.03505514).epsilon(1e-8));
    CHECK(std::abs(ca.lamK.imag()) <= 1e-9);
    CHECK(ca.lamE_plus.real() == doctest::Approx(7.696082736).epsilon(1e-8));
    CHECK(ca.lamE_minus.real() == doctest::Approx(1.303917264).epsilon(1e-8));
    CHECK_FALSE(ca.nonreal);

    // Type f: nonreal edge pair.
    auto pf = satake::make_params(kOmega * 5.0, kOmega, kOmega / 5.0, 5);
    auto cf5 = satake::closed_form_eigenvalues(pf);
    CHECK(cf5.lamK.real() == doctest::Approx(93.0)); // 3 k0 / 2
    CHECK(cf5.nonreal);
    CHECK(cf5.lamE_plus.real() == doctest::Approx(9.0));
    CHECK(cf5.lamE_plus.imag() == doctest::Approx(3.464101615).epsilon(1e-8));
    CHECK(cf5.lamE_minus.imag() == doctest::Approx(-3.464101615).epsilon(1e-8));
}

TEST_CASE("classification, all families") {
    CHECK(satake::classify_type(params_e(3)).name == "e");
    CHECK(satake::classify_type(params_e(5)).name == "e");

    auto stn = satake::make_params(cd(1.0 / 3, 0), cd(1, 0), cd(3, 0), 3);
    CHECK(satake::classify_type(stn).name == "steinberg");

    for (int sgn : {+1, -1}) {
        cd w = sgn > 0 ? kOmega : std::conj(kOmega);
        auto pf = satake::make_params(w * 2.0, w, w / 2.0, 2);
        auto t = satake::classify_type(pf);
        CHECK(t.name == "f");
        CHECK(t.omega_sign == sgn);
    }

    const cd c = std::polar(1.0, 0.3);
    const double rq = std::sqrt(4.0);
    auto pc = satake::make_params(c / rq, c * rq, 1.0 / (c * c), 4);
    auto tc = satake::classify_type(pc);
    CHECK(tc.name == "c");
    REQUIRE(tc.c.has_value());
    CHECK(approx(*tc.c, c, 1e-9));

    auto pd = satake::make_params(c * rq, c / rq, 1.0 / (c * c), 4);
    auto td = satake::classify_type(pd);
    CHECK(td.name == "d");
    REQUIRE(td.c.has_value());
    CHECK(approx(*td.c, c, 1e-9));

    auto pa = satake::make_params(std::polar(1.0, 0.7), std::polar(1.0, 1.1),
                                  std::polar(1.0, -1.8), 2);
    CHECK(satake::classify_type(pa).name == "a");

    const cd cb = std::polar(1.0, 0.4);
    const double qa = std::pow(3.0, 0.25);
    auto pb = satake::make_params(1.0 / (cb * cb), cb * qa, cb / qa, 3);
    auto tb = satake::classify_type(pb);
    CHECK(tb.name == "b");
    REQUIRE(tb.a.has_value());
    CHECK(*tb.a == doctest::Approx(0.25).epsilon(1e-8));

    // A point on no unitary family.
    auto px = satake::make_params(cd(2, 0), cd(1, 0), cd(0.5, 0), 3);
    CHECK(satake::classify_type(px).name == "outside");

    // Precedence: (q,1,1/q) fits the c/d shapes formally but must be "e".
    CHECK(satake::classify_type(params_e(2)).kind == satake::RepKind::E);
}

TEST_CASE("type-exact values") {
    auto te = satake::type_exact_values(satake::classify_type(params_e(3)), 3);
    REQUIRE(te.has_value());
    CHECK(te->lamK == cd(0, 0));
    CHECK(te->lamE_plus == cd(12, 0));
    CHECK(te->lamE_minus == cd(0, 0));

    auto stn = satake::make_params(cd(0.25, 0), cd(1, 0), cd(4, 0), 4);
    auto ts = satake::type_exact_values(satake::classify_type(stn), 4);
    REQUIRE(ts.has_value());
    CHECK(ts->lamK == cd(0, 0));
    CHECK(ts->lamE_plus == cd(15, 0));

    // Type c with c = 1, q = 4: lamE- = k1 - 2 sqrt(q) = 1 exactly.
    auto pc = satake::make_params(cd(0.5, 0), cd(2, 0), cd(1, 0), 4);
    auto info = satake::classify_type(pc);
    CHECK(info.name == "c");
    auto tc = satake::type_exact_values(info, 4);
    REQUIRE(tc.has_value());
    CHECK(tc->lamE_minus.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tc->lamE_plus.real() == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(tc->lamK.real() == doctest::Approx(14.0).epsilon(1e-12));

    // Frozen type-c decimals: c = 0.6 + 0.8i, q = 4.
    auto pc2 = satake::make_params(cd(0.6, 0.8) / 2.0, cd(0.6, 0.8) * 2.0,
                                   1.0 / (cd(0.6, 0.8) * cd(0.6, 0.8)), 4);
    auto tc2 = satake::type_exact_values(satake::classify_type(pc2), 4);
    REQUIRE(tc2.has_value());
    CHECK(tc2->lamE_minus.real() == doctest::Approx(2.6).epsilon(1e-9));
    CHECK(tc2->lamE_plus.real() == doctest::Approx(12.4).epsilon(1e-9));
    CHECK(tc2->lamK.real() == doctest::Approx(32.24).epsilon(1e-9));

    // Type f: exact forms with the documented imaginary part.
    auto pf = satake::make_params(kOmega * 5.0, kOmega, kOmega / 5.0, 5);
    auto tf = satake::type_exact_values(satake::classify_type(pf), 5);
    REQUIRE(tf.has_value());
    CHECK(tf->lamK.real() == doctest::Approx(93.0));
    CHECK(tf->nonreal);

    // Families a and b have no exact form.
    auto pa = satake::make_params(std::polar(1.0, 0.7), std::polar(1.0, 1.1),
                                  std::polar(1.0, -1.8), 2);
    CHECK_FALSE(satake::type_exact_values(satake::classify_type(pa), 2).has_value());
}

TEST_CASE("closed forms match type-exact values where both exist") {
    for (int q : {2, 3, 4, 5}) {
        auto pe = params_e(q);
        auto cf = satake::closed_form_eigenvalues(pe);
        auto te = satake::type_exact_values(satake::classify_type(pe), q);
        REQUIRE(te.has_value());
        CHECK(approx(cf.lamK, te->lamK, 1e-9 * std::max(1.0, pe.k0())));
        CHECK(approx(cf.lamE_plus, te->lamE_plus, 1e-9 * std::max(1.0, 3 * pe.k1())));
        CHECK(approx(cf.lamE_minus, te->lamE_minus, 1e-9 * std::max(1.0, 3 * pe.k1())));
    }
}

TEST_CASE("interval membership") {
    auto pa = satake::make_params(std::polar(1.0, 0.7), std::polar(1.0, 1.1),
                                  std::polar(1.0, -1.8), 2);
    auto ma = satake::verify_interval_membership(pa);
    CHECK(ma.type == "a");
    CHECK(ma.in_intervals);

    // Type c with c = 1 lands exactly on the bottom edge of I.
    auto pc = satake::make_params(cd(0.5, 0), cd(2, 0), cd(1, 0), 4);
    auto mc = satake::verify_interval_membership(pc);
    CHECK(mc.type == "c");
    CHECK(mc.in_intervals);

    auto pd = satake::make_params(cd(2, 0), cd(0.5, 0), cd(1, 0), 4);
    auto md = satake::verify_interval_membership(pd);
    CHECK(md.type == "d");
    CHECK(md.in_intervals);

    // Families without a membership statement are preconditions violations.
    CHECK_THROWS_AS(satake::verify_interval_membership(params_e(3)), precondition_error);
    auto pf = satake::make_params(kOmega * 2.0, kOmega, kOmega / 2.0, 2);
    CHECK_THROWS_AS(satake::verify_interval_membership(pf), precondition_error);
}

TEST_CASE("strips, frozen decimals") {
    auto s2 = satake::strips(2);
    CHECK(s2.I_lo == doctest::Approx(0.1715728753).epsilon(1e-8));
    CHECK(s2.I_hi == doctest::Approx(5.828427125).epsilon(1e-8));
    CHECK(s2.Im_lo == doctest::Approx(0.2279981273).epsilon(1e-8));
    CHECK(s2.Im_hi == doctest::Approx(4.0));
    CHECK(s2.Ip_lo == doctest::Approx(5.0));
    CHECK(s2.Ip_hi == doctest::Approx(8.772001873).epsilon(1e-8));

    auto s3 = satake::strips(3);
    CHECK(s3.Im_lo == doctest::Approx(0.7084973779).epsilon(1e-8));
    CHECK(s3.Im_hi == doctest::Approx(5.0));
    CHECK(s3.Ip_lo == doctest::Approx(7.0));
    CHECK(s3.Ip_hi == doctest::Approx(11.29150262).epsilon(1e-8));
    CHECK(s3.I_lo == doctest::Approx(0.5358983849).epsilon(1e-8));
    CHECK(s3.I_hi == doctest::Approx(7.464101615).epsilon(1e-8));

    auto s4 = satake::strips(4);
    CHECK(s4.I_lo == doctest::Approx(1.0));
    CHECK(s4.I_hi == doctest::Approx(9.0));
    CHECK(s4.Im_lo == doctest::Approx(1.315341562).epsilon(1e-8));
    CHECK(s4.Ip_hi == doctest::Approx(13.68465844).epsilon(1e-8));

    auto s25 = satake::strips(25);
    CHECK(s25.I_lo == doctest::Approx(16.0));
    CHECK(s25.I_hi == doctest::Approx(36.0));
    CHECK(s25.Im_lo == doctest::Approx(19.79062729).epsilon(1e-8));
    CHECK(s25.Im_hi == doctest::Approx(27.0));
    CHECK(s25.Ip_lo == doctest::Approx(51.0));
    CHECK(s25.Ip_hi == doctest::Approx(58.20937271).epsilon(1e-8));
}

TEST_CASE("predicted spectrum, frozen multiplicities") {
    auto p1 = satake::predicted_spectrum(10, 2, false, 1);
    CHECK(p1.Na == 9);
    CHECK(p1.Nc == 42);
    CHECK(p1.Ne == 1);
    CHECK(p1.Nf == 0);
    CHECK(p1.Nstn == 1);
    CHECK(p1.identities_ok);

    auto p2 = satake::predicted_spectrum(6, 2, true, 1);
    CHECK(p2.Na == 3);
    CHECK(p2.Nc == 30);
    CHECK(p2.Ne == 1);
    CHECK(p2.Nf == 2);
    CHECK(p2.identities_ok);

    auto p3 = satake::predicted_spectrum(20, 3, false, 1);
    CHECK(p3.Na == 19);
    CHECK(p3.Nc == 202);
    CHECK(p3.identities_ok);

    auto p4 = satake::predicted_spectrum(9, 2, true, 1);
    CHECK(p4.Na == 6);
    CHECK(p4.Nc == 42);
    CHECK(p4.Nf == 2);
    CHECK(p4.identities_ok);

    // Steinberg multiplicity is the caller-supplied Euler characteristic.
    CHECK(satake::predicted_spectrum(10, 2, false, 5).Nstn == 5);

    auto j = p2.to_json();
    for (const char* key : {"n", "q", "tripartite", "N_a", "N_c", "N_e", "N_f", "N_steinberg",
                            "identities_ok", "vertex_strata", "edge_strata"})
        CHECK(j.contains(key));

    CHECK_THROWS_AS(satake::predicted_spectrum(0, 2, false, 1), input_error);
    CHECK_THROWS_AS(satake::predicted_spectrum(10, 1, false, 1), input_error);
}

TEST_CASE("formula sheet, frozen decimals") {
    auto f2 = satake::ramanujan_formulas(2, 1.0 / 3.0, 1, {});
    CHECK(f2["cheeger_rhs"].get<double>() == doctest::Approx(-61.42308934).epsilon(1e-8));
    CHECK(f2["thm13_rhs"].get<double>() == doctest::Approx(541.8009292).epsilon(1e-8));
    CHECK(f2["chromatic_lb"].get<double>() == doctest::Approx(0.04199736833).epsilon(1e-8));

    auto f3 = satake::ramanujan_formulas(3, 1.0 / 3.0, 1, {});
    CHECK(f3["cheeger_rhs"].get<double>() == doctest::Approx(-285.0979407).epsilon(1e-8));
    CHECK(f3["thm13_rhs"].get<double>() == doctest::Approx(1605.611099).epsilon(1e-8));
    CHECK(f3["chromatic_lb"].get<double>() == doctest::Approx(0.04807498568).epsilon(1e-8));

    auto f4 = satake::ramanujan_formulas(4, 1.0 / 3.0, 1, {});
    CHECK(f4["cheeger_rhs"].get<double>() == doctest::Approx(-702.0).epsilon(1e-8));
    CHECK(f4["thm13_rhs"].get<double>() == doctest::Approx(3527.111111).epsilon(1e-8));
    CHECK(f4["chromatic_lb"].get<double>() == doctest::Approx(0.0529133684).epsilon(1e-8));

    auto fm = satake::ramanujan_formulas(2, 1.0 / 3.0, 6, {1, 2, 2, 1});
    CHECK(fm["main_term"].get<double>() == doctest::Approx(8.0));
    CHECK(fm.contains("simplified_mixing_rhs"));

    // thm13_rhs is linear in n.
    auto fn = satake::ramanujan_formulas(2, 1.0 / 3.0, 10, {});
    CHECK(fn["thm13_rhs"].get<double>() ==
          doctest::Approx(10.0 * f2["thm13_rhs"].get<double>()).epsilon(1e-10));

    // No n: the n-dependent entries are absent.
    auto f0 = satake::ramanujan_formulas(2, 0.25, std::nullopt, {});
    CHECK_FALSE(f0.contains("thm13_rhs"));
    CHECK_FALSE(f0.contains("main_term"));

    CHECK_THROWS_AS(satake::ramanujan_formulas(1, 1.0 / 3.0, std::nullopt, {}), input_error);
    CHECK_THROWS_AS(satake::ramanujan_formulas(2, 0.0, std::nullopt, {}), input_error);
    CHECK_THROWS_AS(satake::ramanujan_formulas(2, 0.5, std::nullopt, {}), input_error);
    CHECK_THROWS_AS(satake::ramanujan_formulas(2, 1.0 / 3.0, 6, {1, 2}), input_error);
}
