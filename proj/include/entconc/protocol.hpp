#pragma once

#include <array>
#include <cmath>

#include "states.hpp"

namespace entconc {

// Amplitude transmission coefficients of the two polarization-dependent beam
// splitters, one per arm (a, b) and polarization (v, h). All four lie in
// [0, 1]; 1 means the photon always passes.
struct BeamSplitterSettings {
    double eta_va = 1.0;
    double eta_ha = 1.0;
    double eta_vb = 1.0;
    double eta_hb = 1.0;

    static BeamSplitterSettings identity() { return {}; }

    void validate() const {
        for (double e : {eta_va, eta_ha, eta_vb, eta_hb})
            if (!(e >= 0.0 && e <= 1.0))
                throw ValidationError("transmission coefficient " + detail::num(e) +
                                      " outside [0, 1]");
    }

    BeamSplitterSettings composed_with(const BeamSplitterSettings& o) const {
        return {eta_va * o.eta_va, eta_ha * o.eta_ha, eta_vb * o.eta_vb, eta_hb * o.eta_hb};
    }
};

struct ProtocolOutcome {
    DensityMatrix state;
    double success_probability = 0.0;
};

// Post-selected action of the two beam splitters on a coincidence-detected
// pair. Basis weight per component: w = (va*vb, va*hb, ha*vb, ha*hb); entry
// (i, j) picks up w_i w_j, then the block is renormalized by the coincidence
// probability.
inline ProtocolOutcome bs_transform(const DensityMatrix& rho, const BeamSplitterSettings& s) {
    s.validate();
    const std::array<double, 4> w{s.eta_va * s.eta_vb, s.eta_va * s.eta_hb,
                                  s.eta_ha * s.eta_vb, s.eta_ha * s.eta_hb};
    double t = 0.0;
    for (int i = 0; i < 4; ++i) t += rho(i, i).real() * w[i] * w[i];
    if (t <= tol::degenerate_trace)
        throw DegeneratePostSelection("post-selection probability " + detail::num(t) +
                                      " is numerically zero");
    ComplexMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = rho(r, c) * (w[r] * w[c] / t);
    return {DensityMatrix::from_matrix(m), t};
}

// Same physics carried out in the full mode space: each photon occupies four
// modes (V kept, H kept, V lost, H lost), each beam splitter is a rotation
// between a kept mode and its loss mode, and the coincidence block is the
// kept (x) kept corner. Exists to cross-check bs_transform; O(16^3) per call.
inline ProtocolOutcome fock_oracle(const DensityMatrix& rho, const BeamSplitterSettings& s) {
    s.validate();
    auto photon_unitary = [](double ev, double eh) {
        ComplexMatrix u(4);
        const double sv = std::sqrt(std::max(0.0, 1.0 - ev * ev));
        const double sh = std::sqrt(std::max(0.0, 1.0 - eh * eh));
        u(0, 0) = ev;  u(0, 2) = -sv;
        u(2, 0) = sv;  u(2, 2) = ev;
        u(1, 1) = eh;  u(1, 3) = -sh;
        u(3, 1) = sh;  u(3, 3) = eh;
        return u;
    };
    const ComplexMatrix u = kron(photon_unitary(s.eta_va, s.eta_ha),
                                 photon_unitary(s.eta_vb, s.eta_hb));
    // Two-qubit basis index -> mode-pair index with both photons kept.
    const std::array<int, 4> keep{0, 1, 4, 5};
    ComplexMatrix big(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) big(keep[r], keep[c]) = rho(r, c);
    const ComplexMatrix out = u * big * u.adjoint();
    ComplexMatrix block(4);
    double t = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) block(r, c) = out(keep[r], keep[c]);
        t += block(r, r).real();
    }
    if (t <= tol::degenerate_trace)
        throw DegeneratePostSelection("post-selection probability " + detail::num(t) +
                                      " is numerically zero");
    return {DensityMatrix::from_matrix(Complex(1.0 / t) * block), t};
}

// Settings that turn N (eps1 |VV> + eps2 |HH>) into a Bell state: attenuate
// the stronger component in both arms so the amplitudes balance. Probability
// of success is maximal for this family when the attenuation is split evenly.
inline BeamSplitterSettings distill_settings_vv_hh(Complex eps1, Complex eps2) {
    const double a1 = std::abs(eps1), a2 = std::abs(eps2);
    if (a1 == 0.0 || a2 == 0.0)
        throw NoDistillationPossible("a product state has no entanglement to distill");
    BeamSplitterSettings s;
    if (a1 >= a2) {
        s.eta_va = s.eta_vb = std::sqrt(a2 / a1);
    } else {
        s.eta_ha = s.eta_hb = std::sqrt(a1 / a2);
    }
    return s;
}

// Settings that balance N (eps1 |VH> + eps2 |HV>) by attenuating a single
// coefficient, which maximizes the success probability for this family.
inline BeamSplitterSettings distill_settings_vh_hv(Complex eps1, Complex eps2) {
    const double a1 = std::abs(eps1), a2 = std::abs(eps2);
    if (a1 == 0.0 || a2 == 0.0)
        throw NoDistillationPossible("a product state has no entanglement to distill");
    BeamSplitterSettings s;
    if (a1 >= a2) {
        s.eta_va = a2 / a1;
    } else {
        s.eta_vb = a1 / a2;
    }
    return s;
}

}
