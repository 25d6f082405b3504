#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "states.hpp"

namespace entconc {

struct EntanglementMetrics {
    double concurrence = 0.0;
    double eof = 0.0;
    double entropy = 0.0;
    double purity = 0.0;
};

namespace detail {
// sigma_y (x) sigma_y is the real antidiagonal matrix with entries -1, 1, 1, -1.
inline ComplexMatrix spin_flip_operator() {
    ComplexMatrix y(4);
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}
}

inline ComplexMatrix spin_flip(const DensityMatrix& rho) {
    const ComplexMatrix y = detail::spin_flip_operator();
    return y * rho.matrix().conjugate() * y;
}

// Wootters concurrence. The textbook recipe takes eigenvalues of
// rho * spin_flip(rho); here the same spectrum is extracted as the singular
// values of A = sqrt(rho) Y conj(sqrt(rho)), which keeps the three
// near-zero values of a nearly pure state at machine scale instead of
// amplifying their error through a square root.
inline double concurrence(const DensityMatrix& rho) {
    EigenSystem es = hermitian_eig(rho.matrix());
    ComplexMatrix root(4);
    for (int k = 0; k < 4; ++k) {
        double lam = es.values[k];
        if (lam < tol::spectral_floor) lam = 0.0;
        const double s = std::sqrt(lam);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                root(r, c) += s * es.vectors(r, k) * std::conj(es.vectors(c, k));
    }
    const ComplexMatrix a = root * detail::spin_flip_operator() * root.conjugate();
    std::vector<double> sv = singular_values(a);
    return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

// Closed form valid only for X-shaped states (all population in the diagonal
// and the two antidiagonal coherences). Cross-checks the general routine.
inline double x_state_concurrence_oracle(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    double off = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            if (r == c || r + c == 3) continue;
            off = std::max(off, std::abs(m(r, c)));
        }
    if (off > tol::x_shape)
        throw NotApplicable("state is not X-shaped, off-pattern magnitude " + detail::num(off));
    const double inner = std::abs(m(1, 2)) - std::sqrt(std::max(0.0, m(0, 0).real() * m(3, 3).real()));
    const double outer = std::abs(m(0, 3)) - std::sqrt(std::max(0.0, m(1, 1).real() * m(2, 2).real()));
    return 2.0 * std::max({0.0, inner, outer});
}

inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) {
        if (x >= -1e-12 && x <= 1.0 + 1e-12)
            x = std::clamp(x, 0.0, 1.0);
        else
            throw std::domain_error("binary_entropy: argument " + detail::num(x) + " outside [0, 1]");
    }
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

inline double eof_of_concurrence(double c) {
    const double arg = std::max(0.0, 1.0 - c * c);
    return binary_entropy(0.5 * (1.0 + std::sqrt(arg)));
}

inline double eof(const DensityMatrix& rho) { return eof_of_concurrence(concurrence(rho)); }

// von Neumann entropy in units of log 4, so a maximally mixed two-qubit
// state scores exactly 1.
inline double entropy_log4(const DensityMatrix& rho) {
    EigenSystem es = hermitian_eig(rho.matrix());
    double s = 0.0;
    for (double lam : es.values) {
        if (lam <= 0.0) continue;
        s -= lam * std::log(lam);
    }
    return std::max(0.0, s / std::log(4.0));
}

inline EntanglementMetrics metrics(const DensityMatrix& rho) {
    EntanglementMetrics m;
    m.concurrence = concurrence(rho);
    m.eof = eof_of_concurrence(m.concurrence);
    m.entropy = entropy_log4(rho);
    m.purity = purity(rho);
    return m;
}

}
