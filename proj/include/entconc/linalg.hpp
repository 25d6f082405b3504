#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "tolerances.hpp"

namespace entconc {

using Complex = std::complex<double>;

namespace detail {
inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}
}

// Dense square complex matrix, row-major. Dimensions in this library are tiny
// (4 for two-qubit states, 8 and 16 for auxiliary problems), so all routines
// are textbook O(n^3) loops.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim) : dim_(dim), a_(check_dim(dim)) {}

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(r, c));
        return m;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    double hermiticity_deviation() const {
        double dev = 0.0;
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return dev;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double max_abs_diff(const ComplexMatrix& o) const {
        double m = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    ComplexMatrix& operator*=(Complex z) {
        for (Complex& v : a_) v *= z;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex z, ComplexMatrix a) { return a *= z; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex z) { return a *= z; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        const int n = a.dim_;
        ComplexMatrix out(n);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                const Complex ark = a(r, k);
                if (ark == 0.0) continue;
                for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
            }
        return out;
    }

private:
    static std::vector<Complex> check_dim(int dim) {
        if (dim <= 0) throw ValidationError("matrix dimension must be positive");
        return std::vector<Complex>(static_cast<std::size_t>(dim) * dim);
    }

    int dim_;
    std::vector<Complex> a_;
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca) {
            const Complex f = a(ra, ca);
            if (f == 0.0) continue;
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb)
                    out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
        }
    return out;
}

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Cyclic complex Jacobi eigensolver for Hermitian matrices. Sweeps rotate
// away each off-diagonal pivot until the off-diagonal Frobenius mass drops
// below tol::jacobi_off; plenty for the 4..16 dimensional problems here.
inline EigenSystem hermitian_eig(const ComplexMatrix& m, double herm_tol = tol::hermiticity) {
    const int n = m.dim();
    const double dev = m.hermiticity_deviation();
    if (dev > herm_tol)
        throw ValidationError("hermitian_eig: matrix is not Hermitian, max deviation " + detail::num(dev));

    // Average away the sub-tolerance asymmetry so updates stay exactly Hermitian.
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 60;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off2 = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) off2 += std::norm(a(r, c));
        if (std::sqrt(2.0 * off2) < tol::jacobi_off) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / mag;  // e^{i arg(a_pq)}
                const double tau = (aqq - app) / (2.0 * mag);
                const double hyp = std::sqrt(1.0 + tau * tau);
                const double t = (tau >= 0.0) ? 1.0 / (tau + hyp) : 1.0 / (tau - hyp);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex spf = s * phase;        // s e^{i phi}
                const Complex spb = std::conj(spf);   // s e^{-i phi}

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - spb * akq;
                    a(k, q) = spf * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = app - mag * t;
                a(q, q) = aqq + mag * t;
                a(p, q) = a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - spb * vkq;
                    v(k, q) = spf * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) {
        double off2 = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) off2 += std::norm(a(r, c));
        if (std::sqrt(2.0 * off2) >= tol::jacobi_off)
            throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
    }
    return es;
}

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-clamp, spectral_floor] are treated as zero (the square
// root would otherwise inflate roundoff-scale values to sqrt(roundoff));
// anything below -clamp is an error.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m, double herm_tol = tol::hermiticity,
                              double clamp = tol::psd) {
    EigenSystem es = hermitian_eig(m, herm_tol);
    const int n = m.dim();
    for (double& w : es.values) {
        if (w < -clamp)
            throw NotPositiveSemidefinite("psd_sqrt: eigenvalue " + detail::num(w) +
                                          " below -" + detail::num(clamp));
        w = w > tol::spectral_floor ? std::sqrt(w) : 0.0;
    }
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < n; ++k)
                sum += es.vectors(r, k) * es.values[k] * std::conj(es.vectors(c, k));
            out(r, c) = sum;
        }
    // Re-symmetrize the roundoff so downstream Hermitian checks see a clean matrix.
    for (int r = 0; r < n; ++r) {
        out(r, r) = out(r, r).real();
        for (int c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
            out(r, c) = avg;
            out(c, r) = std::conj(avg);
        }
    }
    return out;
}

// Singular values of a general square complex matrix, descending. Solved as
// the Hermitian eigenproblem of [[0, A],[A^dagger, 0]], whose spectrum is
// {+sigma_i, -sigma_i}; this keeps tiny singular values at roundoff scale
// instead of square-root-inflating them through A^dagger A.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix b(2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            b(r, n + c) = a(r, c);
            b(n + c, r) = std::conj(a(r, c));
        }
    EigenSystem es = hermitian_eig(b);
    std::vector<double> s(es.values.begin(), es.values.begin() + n);
    for (double& v : s) v = std::max(v, 0.0);
    return s;  // already descending
}

}
