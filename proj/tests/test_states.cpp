#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace entconc;

static StateFamilyParams fam(double e1, double e2, double phi = 0.0, double gamma = 1.0) {
    StateFamilyParams p;
    p.eps1 = e1;
    p.eps2 = e2;
    p.phi = phi;
    p.gamma = gamma;
    return p;
}

TEST_CASE("pure VV/HH family") {
    DensityMatrix bell = pure_vv_hh(fam(1, 1));
    for (int i : {0, 3})
        for (int j : {0, 3}) REQUIRE(bell(i, j).real() == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(bell(1, 1) == Complex(0.0));

    DensityMatrix vv = pure_vv_hh(fam(1, 0));
    REQUIRE(vv(0, 0).real() == Catch::Approx(1.0).margin(1e-12));

    DensityMatrix lop = pure_vv_hh(fam(1, 0.1));
    REQUIRE(lop(0, 0).real() == Catch::Approx(0.990099009900990).margin(1e-12));
    REQUIRE(lop(3, 3).real() == Catch::Approx(0.009900990099010).margin(1e-12));
    REQUIRE(lop(0, 3).real() == Catch::Approx(0.099009900990099).margin(1e-12));

    REQUIRE_THROWS_AS(pure_vv_hh(fam(0, 0)), ValidationError);
}

TEST_CASE("pure VH/HV family") {
    DensityMatrix psi = pure_vh_hv(fam(1, 1));
    for (int i : {1, 2})
        for (int j : {1, 2}) REQUIRE(psi(i, j).real() == Catch::Approx(0.5).margin(1e-12));

    DensityMatrix hv = pure_vh_hv(fam(0, 1));
    REQUIRE(hv(2, 2).real() == Catch::Approx(1.0).margin(1e-12));

    DensityMatrix lop = pure_vh_hv(fam(1, 0.1));
    REQUIRE(lop(1, 1).real() == Catch::Approx(0.990099009900990).margin(1e-12));
    REQUIRE(lop(2, 2).real() == Catch::Approx(0.009900990099010).margin(1e-12));
}

TEST_CASE("phase lands on the coherence only") {
    const double phi = 0.8;
    DensityMatrix flat = pure_vv_hh(fam(1, 0.3));
    DensityMatrix turned = pure_vv_hh(fam(1, 0.3, phi));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            REQUIRE(std::abs(turned(r, c)) == Catch::Approx(std::abs(flat(r, c))).margin(1e-12));
    REQUIRE(std::arg(turned(0, 3)) == Catch::Approx(-phi).margin(1e-12));

    StateFamilyParams p = fam(0, 0, 0.25);
    p.eps1 = Complex(0.6, 0.3);
    p.eps2 = Complex(-0.2, 0.7);
    DensityMatrix rho = pure_vv_hh(p);
    const double n2 = 1.0 / (std::norm(p.eps1) + std::norm(p.eps2));
    const Complex expect = n2 * p.eps1 * std::conj(p.eps2) * std::polar(1.0, -p.phi);
    REQUIRE(std::abs(rho(0, 3) - expect) < 1e-12);
}

TEST_CASE("gamma mixture") {
    StateFamilyParams p = fam(1, 0.1, 0, 0.30);
    DensityMatrix rho = mixed_family(p);
    REQUIRE(rho(0, 0).real() == Catch::Approx(0.297029702970297).margin(1e-12));
    REQUIRE(rho(0, 3).real() == Catch::Approx(0.029702970297030).margin(1e-12));
    REQUIRE(rho(1, 1).real() == Catch::Approx(0.35).margin(1e-12));
    REQUIRE(rho(1, 2).real() == Catch::Approx(0.35).margin(1e-12));
    REQUIRE(rho(2, 2).real() == Catch::Approx(0.35).margin(1e-12));
    REQUIRE(rho(3, 3).real() == Catch::Approx(0.002970297029703).margin(1e-12));

    DensityMatrix pureLimit = mixed_family(fam(1, 0.1, 0, 1.0));
    REQUIRE(pureLimit.matrix().max_abs_diff(pure_vv_hh(fam(1, 0.1)).matrix()) < 1e-15);

    DensityMatrix bellLimit = mixed_family(fam(1, 0.1, 0, 0.0));
    REQUIRE(bellLimit(1, 1).real() == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(bellLimit(1, 2).real() == Catch::Approx(0.5).margin(1e-12));

    // entrywise affine in gamma
    const double g = 0.37;
    DensityMatrix mid = mixed_family(fam(1, 0.4, 0.2, g));
    ComplexMatrix blend = Complex(g) * pure_vv_hh(fam(1, 0.4, 0.2)).matrix() +
                          Complex(1 - g) * bell_state(Bell::psi_plus).matrix();
    REQUIRE(mid.matrix().max_abs_diff(blend) < 1e-12);

    REQUIRE_THROWS_AS(mixed_family(fam(1, 0.1, 0, -0.1)), ValidationError);
    REQUIRE_THROWS_AS(mixed_family(fam(1, 0.1, 0, 1.1)), ValidationError);
}

TEST_CASE("werner construction") {
    DensityMatrix bell = bell_state(Bell::phi_plus);

    DensityMatrix w0 = werner(0.0, bell);
    REQUIRE(w0.matrix().max_abs_diff(maximally_mixed().matrix()) < 1e-15);

    DensityMatrix w1 = werner(1.0, bell);
    REQUIRE(w1.matrix().max_abs_diff(bell.matrix()) < 1e-15);

    REQUIRE_THROWS_AS(werner(-0.1, bell), ValidationError);
    REQUIRE_THROWS_AS(werner(1.1, bell), ValidationError);
    REQUIRE_THROWS_AS(werner(0.5, mixed_family(fam(1, 0.1, 0, 0.3))), ValidationError);
}

TEST_CASE("bell states") {
    REQUIRE(bell_state(Bell::phi_plus)(0, 3).real() == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(bell_state(Bell::phi_minus)(0, 3).real() == Catch::Approx(-0.5).margin(1e-12));
    REQUIRE(bell_state(Bell::psi_plus)(1, 2).real() == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(bell_state(Bell::psi_minus)(1, 2).real() == Catch::Approx(-0.5).margin(1e-12));
}

TEST_CASE("validate reports each invariant") {
    REQUIRE(validate(maximally_mixed().matrix()).ok());
    REQUIRE(validate(mixed_family(fam(1, 0.1, 0, 0.30)).matrix()).ok());

    ComplexMatrix short_trace(4);
    for (int i = 0; i < 4; ++i) short_trace(i, i) = 0.225;
    ValidationReport rep = validate(short_trace);
    REQUIRE(rep.hermitian_ok);
    REQUIRE_FALSE(rep.trace_ok);
    REQUIRE(rep.trace_deviation == Catch::Approx(0.1).margin(1e-12));

    ComplexMatrix skew = ComplexMatrix::identity(4);
    skew(0, 1) = 0.5;
    rep = validate(Complex(0.25) * skew);
    REQUIRE_FALSE(rep.hermitian_ok);

    ComplexMatrix neg(4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    rep = validate(neg);
    REQUIRE(rep.hermitian_ok);
    REQUIRE(rep.trace_ok);
    REQUIRE_FALSE(rep.psd_ok);
    REQUIRE(rep.min_eigenvalue == Catch::Approx(-0.5).margin(1e-12));
}

TEST_CASE("from_matrix enforces the invariants") {
    ComplexMatrix neg(4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    REQUIRE_THROWS_AS(DensityMatrix::from_matrix(neg), NotPositiveSemidefinite);

    ComplexMatrix short_trace(4);
    for (int i = 0; i < 4; ++i) short_trace(i, i) = 0.2;
    REQUIRE_THROWS_AS(DensityMatrix::from_matrix(short_trace), ValidationError);

    ComplexMatrix skew = ComplexMatrix::identity(4);
    skew(0, 1) = 0.5;
    REQUIRE_THROWS_AS(DensityMatrix::from_matrix(Complex(0.25) * skew), ValidationError);

    REQUIRE_THROWS_AS(DensityMatrix::from_matrix(ComplexMatrix(3)), ValidationError);
}

TEST_CASE("constructed states are always physical") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        StateFamilyParams p;
        p.eps1 = testsup::gauss(rng);
        p.eps2 = testsup::gauss(rng);
        p.phi = 7 * u(rng);
        p.gamma = u(rng);
        REQUIRE(validate(pure_vv_hh(p).matrix()).ok());
        REQUIRE(validate(pure_vh_hv(p).matrix()).ok());
        REQUIRE(validate(mixed_family(p).matrix()).ok());
        REQUIRE(validate(werner(u(rng), pure_vv_hh(p)).matrix()).ok());
    }
}

TEST_CASE("json round trip is exact") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix rho = testsup::random_density(rng);
        nlohmann::json j = nlohmann::json::parse(state_to_json(rho).dump());
        DensityMatrix back = state_from_json(j);
        REQUIRE(back.matrix().max_abs_diff(rho.matrix()) == 0.0);
    }
}

TEST_CASE("json input is strict about shape and basis") {
    nlohmann::json good = state_to_json(maximally_mixed());
    good["note"] = "extra keys are fine";
    REQUIRE_NOTHROW(state_from_json(good));

    nlohmann::json swapped = state_to_json(maximally_mixed());
    swapped["basis"] = {"VV", "HV", "VH", "HH"};
    REQUIRE_THROWS_AS(state_from_json(swapped), ValidationError);

    nlohmann::json missing = state_to_json(maximally_mixed());
    missing.erase("im");
    REQUIRE_THROWS_AS(state_from_json(missing), ValidationError);

    nlohmann::json ragged = state_to_json(maximally_mixed());
    ragged["re"][2] = {0.0, 0.0};
    REQUIRE_THROWS_AS(state_from_json(ragged), ValidationError);

    REQUIRE_THROWS_AS(state_from_json(nlohmann::json::array()), ValidationError);
}
