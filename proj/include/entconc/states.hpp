#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "linalg.hpp"

namespace entconc {

// Fixed two-qubit polarization product basis. Index order is load-bearing:
// every matrix in this library is expressed over (VV, VH, HV, HH).
inline constexpr std::array<const char*, 4> basis_labels{"VV", "VH", "HV", "HH"};

struct ValidationReport {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool psd_ok = false;
    bool ok() const { return hermitian_ok && trace_ok && psd_ok; }
};

// Diagnostic check of the density-matrix invariants. Never throws; callers
// that need enforcement use DensityMatrix::from_matrix.
inline ValidationReport validate(const ComplexMatrix& rho, double herm_tol = tol::hermiticity,
                                 double trace_tol = tol::trace_one, double psd_tol = tol::psd) {
    ValidationReport rep;
    rep.hermiticity_deviation = rho.hermiticity_deviation();
    rep.hermitian_ok = rep.hermiticity_deviation <= herm_tol;
    rep.trace_deviation = std::abs(rho.trace() - Complex(1.0));
    rep.trace_ok = rep.trace_deviation <= trace_tol;
    // Eigenvalues of the Hermitized average still diagnose lopsided input.
    EigenSystem es = hermitian_eig(rho, std::numeric_limits<double>::infinity());
    rep.min_eigenvalue = es.values.back();
    rep.psd_ok = rep.min_eigenvalue >= -psd_tol;
    return rep;
}

// A two-qubit density matrix over (VV, VH, HV, HH). Construction goes through
// from_matrix, which enforces Hermiticity, unit trace and positivity, so a
// DensityMatrix in hand is always physical within tolerances.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(const ComplexMatrix& m, double herm_tol = tol::hermiticity,
                                     double trace_tol = tol::trace_one, double psd_tol = tol::psd) {
        if (m.dim() != 4) throw ValidationError("density matrix must be 4x4");
        ValidationReport rep = validate(m, herm_tol, trace_tol, psd_tol);
        if (!rep.hermitian_ok)
            throw ValidationError("density matrix is not Hermitian, max deviation " +
                                  detail::num(rep.hermiticity_deviation));
        if (!rep.trace_ok)
            throw ValidationError("density matrix trace deviates from 1 by " +
                                  detail::num(rep.trace_deviation));
        if (!rep.psd_ok)
            throw NotPositiveSemidefinite("density matrix has eigenvalue " +
                                          detail::num(rep.min_eigenvalue));
        return DensityMatrix(m);
    }

    const ComplexMatrix& matrix() const { return m_; }
    const Complex& operator()(int r, int c) const { return m_(r, c); }

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

// Parameters of the input families. eps1/eps2 are complex amplitudes; phi is
// an extra relative phase folded onto eps2, so the pure state reads
// N (eps1 |VV> + eps2 e^{i phi} |HH>) and likewise for the VH/HV family.
struct StateFamilyParams {
    Complex eps1{1.0, 0.0};
    Complex eps2{0.0, 0.0};
    double phi = 0.0;
    double gamma = 1.0;
    double werner_fraction = 1.0;
};

namespace detail {
inline DensityMatrix pure_pair(Complex e1, Complex e2, double phi, int i1, int i2) {
    const double n2 = std::norm(e1) + std::norm(e2);
    if (n2 <= 0.0) throw ValidationError("eps1 and eps2 cannot both be zero");
    const double n = 1.0 / std::sqrt(n2);
    std::array<Complex, 4> amp{};
    amp[i1] = n * e1;
    amp[i2] = n * e2 * std::polar(1.0, phi);
    ComplexMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = amp[r] * std::conj(amp[c]);
    return DensityMatrix::from_matrix(m);
}
}

// N (eps1 |VV> + eps2 e^{i phi} |HH>)
inline DensityMatrix pure_vv_hh(const StateFamilyParams& p) {
    return detail::pure_pair(p.eps1, p.eps2, p.phi, 0, 3);
}

// N (eps1 |VH> + eps2 e^{i phi} |HV>)
inline DensityMatrix pure_vh_hv(const StateFamilyParams& p) {
    return detail::pure_pair(p.eps1, p.eps2, p.phi, 1, 2);
}

enum class Bell { phi_plus, phi_minus, psi_plus, psi_minus };

inline DensityMatrix bell_state(Bell b) {
    StateFamilyParams p;
    p.eps1 = 1.0;
    switch (b) {
        case Bell::phi_plus:  p.eps2 = 1.0;  return pure_vv_hh(p);
        case Bell::phi_minus: p.eps2 = -1.0; return pure_vv_hh(p);
        case Bell::psi_plus:  p.eps2 = 1.0;  return pure_vh_hv(p);
        case Bell::psi_minus: p.eps2 = -1.0; return pure_vh_hv(p);
    }
    throw ValidationError("unknown Bell state");
}

inline DensityMatrix maximally_mixed() {
    ComplexMatrix m(4);
    for (int i = 0; i < 4; ++i) m(i, i) = 0.25;
    return DensityMatrix::from_matrix(m);
}

// gamma-weighted mixture of the VV/HH pure state with the maximally entangled
// VH/HV state: gamma rho(eps1, eps2, phi) + (1-gamma) |psi+><psi+|.
inline DensityMatrix mixed_family(const StateFamilyParams& p) {
    if (!(p.gamma >= 0.0 && p.gamma <= 1.0))
        throw ValidationError("gamma must lie in [0, 1]");
    const ComplexMatrix a = pure_vv_hh(p).matrix();
    const ComplexMatrix b = bell_state(Bell::psi_plus).matrix();
    return DensityMatrix::from_matrix(Complex(p.gamma) * a + Complex(1.0 - p.gamma) * b);
}

inline double purity(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    double sum = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) sum += (m(r, c) * m(c, r)).real();
    return sum;
}

// fraction * pure + (1-fraction)/4 * I. The first ingredient must be pure.
inline DensityMatrix werner(double fraction, const DensityMatrix& pure_state) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw ValidationError("werner fraction must lie in [0, 1]");
    const double pur = purity(pure_state);
    if (pur < 1.0 - tol::pure_purity)
        throw ValidationError("werner: ingredient state is not pure, purity " + detail::num(pur));
    ComplexMatrix m = Complex(fraction) * pure_state.matrix();
    for (int i = 0; i < 4; ++i) m(i, i) += (1.0 - fraction) * 0.25;
    return DensityMatrix::from_matrix(m);
}

}
