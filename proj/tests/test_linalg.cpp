#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace entconc;
using testsup::random_matrix;
using testsup::random_unitary;

TEST_CASE("matrix basics") {
    ComplexMatrix id = ComplexMatrix::identity(4);
    REQUIRE(id.dim() == 4);
    REQUIRE(id.trace() == Complex(4.0));

    std::mt19937_64 rng(11);
    ComplexMatrix a = random_matrix(rng, 4);
    REQUIRE(a.adjoint().adjoint().max_abs_diff(a) == 0.0);
    REQUIRE((a * id).max_abs_diff(a) < 1e-15);

    ComplexMatrix b = random_matrix(rng, 4);
    REQUIRE(std::abs((a * b).trace() - (b * a).trace()) < 1e-12);
}

TEST_CASE("kron multiplicativity") {
    std::mt19937_64 rng(12);
    ComplexMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
    ComplexMatrix c = random_matrix(rng, 2), d = random_matrix(rng, 2);
    ComplexMatrix lhs = kron(a, b) * kron(c, d);
    ComplexMatrix rhs = kron(a * c, b * d);
    REQUIRE(kron(a, b).dim() == 4);
    REQUIRE(lhs.max_abs_diff(rhs) < 1e-12);
}

TEST_CASE("eigensolver on fixed matrices") {
    EigenSystem es = hermitian_eig(ComplexMatrix::identity(4));
    for (double v : es.values) REQUIRE(v == Catch::Approx(1.0).margin(1e-12));

    ComplexMatrix d(4);
    d(0, 0) = 0.9;
    d(1, 1) = 0.1;
    es = hermitian_eig(d);
    REQUIRE(es.values[0] == Catch::Approx(0.9).margin(1e-12));
    REQUIRE(es.values[1] == Catch::Approx(0.1).margin(1e-12));
    REQUIRE(es.values[2] == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(es.values[3] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("eigensolver properties on random Hermitian input") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        ComplexMatrix a = random_matrix(rng, 4);
        ComplexMatrix h = a + a.adjoint();
        EigenSystem es = hermitian_eig(h);

        double sum = 0.0;
        for (double v : es.values) sum += v;
        REQUIRE(sum == Catch::Approx(h.trace().real()).margin(1e-10));
        REQUIRE(std::is_sorted(es.values.rbegin(), es.values.rend()));

        ComplexMatrix recon(4);
        for (int k = 0; k < 4; ++k)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    recon(r, c) += es.values[k] * es.vectors(r, k) * std::conj(es.vectors(c, k));
        REQUIRE(recon.max_abs_diff(h) < 1e-10);

        ComplexMatrix gram = es.vectors.adjoint() * es.vectors;
        REQUIRE(gram.max_abs_diff(ComplexMatrix::identity(4)) < 1e-10);
    }
}

TEST_CASE("eigensolver rejects lopsided input") {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(0, 1) = 0.5;
    REQUIRE_THROWS_AS(hermitian_eig(m), ValidationError);
    REQUIRE_THROWS_WITH(hermitian_eig(m), Catch::Matchers::ContainsSubstring("Hermitian"));
}

TEST_CASE("psd_sqrt on fixed matrices") {
    ComplexMatrix id = ComplexMatrix::identity(4);
    REQUIRE(psd_sqrt(id).max_abs_diff(id) < 1e-12);

    ComplexMatrix d(4);
    d(0, 0) = 4.0;
    d(1, 1) = 1.0;
    ComplexMatrix r = psd_sqrt(d);
    REQUIRE(r(0, 0).real() == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(r(1, 1).real() == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(r(2, 2).real() == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("psd_sqrt squares back and fixes projectors") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        ComplexMatrix a = random_matrix(rng, 4);
        ComplexMatrix p = a * a.adjoint();
        ComplexMatrix r = psd_sqrt(p);
        REQUIRE(r.hermiticity_deviation() < 1e-12);
        REQUIRE((r * r).max_abs_diff(p) < 1e-9);
    }
    // rank-2 projector from two orthonormal columns
    ComplexMatrix u = random_unitary(rng, 4);
    ComplexMatrix proj(4);
    for (int k = 0; k < 2; ++k)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) proj(r, c) += u(r, k) * std::conj(u(c, k));
    REQUIRE(psd_sqrt(proj).max_abs_diff(proj) < 1e-10);
}

TEST_CASE("psd_sqrt clamps round-off but rejects real negativity") {
    ComplexMatrix tiny(4);
    tiny(0, 0) = 1.0;
    tiny(1, 1) = -1e-11;
    REQUIRE_NOTHROW(psd_sqrt(tiny));

    ComplexMatrix bad(4);
    bad(0, 0) = 1.0;
    bad(1, 1) = -1e-8;
    REQUIRE_THROWS_AS(psd_sqrt(bad), NotPositiveSemidefinite);
}

TEST_CASE("singular values") {
    std::mt19937_64 rng(15);
    ComplexMatrix u = random_unitary(rng, 4);
    std::vector<double> sv = singular_values(u);
    for (double s : sv) REQUIRE(s == Catch::Approx(1.0).margin(1e-10));

    for (int trial = 0; trial < 25; ++trial) {
        ComplexMatrix a = random_matrix(rng, 4);
        sv = singular_values(a);
        REQUIRE(std::is_sorted(sv.rbegin(), sv.rend()));
        EigenSystem es = hermitian_eig(a * a.adjoint());
        for (int i = 0; i < 4; ++i)
            REQUIRE(sv[i] == Catch::Approx(std::sqrt(std::max(0.0, es.values[i]))).margin(1e-8));
    }
}
