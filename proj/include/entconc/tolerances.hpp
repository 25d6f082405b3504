#pragma once

// Central numeric tolerances. Functions that enforce one take it as a
// defaulted parameter so tests can tighten or relax locally.
namespace entconc::tol {

inline constexpr double hermiticity = 1e-10;       // max |a_ij - conj(a_ji)| accepted as Hermitian
inline constexpr double trace_one = 1e-10;         // |tr(rho) - 1| accepted as normalized
inline constexpr double psd = 1e-10;               // eigenvalues >= -psd accepted as positive
inline constexpr double jacobi_off = 1e-14;        // off-diagonal Frobenius mass at convergence
inline constexpr double spectral_floor = 1e-14;    // rho eigenvalues below this are treated as exact zeros in concurrence
inline constexpr double degenerate_trace = 1e-15;  // post-selection trace below this has no coincidence statistics
inline constexpr double x_shape = 1e-10;           // max off-pattern magnitude for the X-state fast path
inline constexpr double pure_purity = 1e-8;        // 1 - tr(rho^2) allowed for a "pure" Werner ingredient
inline constexpr double improvement = 1e-12;       // strict-improvement threshold for classification
inline constexpr double descent_stop = 1e-9;       // coordinate-descent EOF gain cutoff
inline constexpr double golden_width = 1e-6;       // golden-section bracket width target

}
