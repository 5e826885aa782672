#pragma once

// Test-only oracles, independent of the library paths they check: extended
// precision summation, residual-norm recomputation, and direct bilinear-form
// evaluation.

#include <complex>
#include <cstddef>
#include <vector>

#include "orthobound/conditions.hpp"
#include "orthobound/linalg.hpp"

namespace oracles {

using orthobound::BoxBounds;
using orthobound::OrthonormalFamily;
using orthobound::Scalar;
using orthobound::Vector;

using LongComplex = std::complex<long double>;

inline LongComplex widen(const Scalar& s) {
    return LongComplex(static_cast<long double>(s.real()), static_cast<long double>(s.imag()));
}

inline Scalar narrow(const LongComplex& s) {
    return Scalar(static_cast<double>(s.real()), static_cast<double>(s.imag()));
}

/// Coordinate inner product summed in extended precision.
inline Scalar inner_extended(const Vector& x, const Vector& y) {
    LongComplex sum(0.0L, 0.0L);
    for (std::size_t k = 0; k < x.dim(); ++k) {
        sum += widen(x[k]) * std::conj(widen(y[k]));
    }
    return narrow(sum);
}

/// |x - sum <x,e_i> e_i|^2 recomputed coordinatewise in extended precision.
inline double bessel_residual_sq(const Vector& x, const OrthonormalFamily& family) {
    std::vector<LongComplex> residual(x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k) residual[k] = widen(x[k]);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Vector& e = family.member(i);
        LongComplex coeff(0.0L, 0.0L);
        for (std::size_t k = 0; k < x.dim(); ++k) {
            coeff += widen(x[k]) * std::conj(widen(e[k]));
        }
        for (std::size_t k = 0; k < x.dim(); ++k) {
            residual[k] -= coeff * widen(e[k]);
        }
    }
    long double sum = 0.0L;
    for (const LongComplex& r : residual) sum += std::norm(r);
    return static_cast<double>(sum);
}

/// Re< sum Phi_i e_i - x, x - sum phi_i e_i > assembled coordinatewise in
/// extended precision.
inline double re_form_extended(const Vector& x, const OrthonormalFamily& family,
                               const BoxBounds& box) {
    std::vector<LongComplex> upper_vec(x.dim(), LongComplex(0.0L, 0.0L));
    std::vector<LongComplex> lower_vec(x.dim(), LongComplex(0.0L, 0.0L));
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Vector& e = family.member(i);
        for (std::size_t k = 0; k < x.dim(); ++k) {
            upper_vec[k] += widen(box.upper()[i]) * widen(e[k]);
            lower_vec[k] += widen(box.lower()[i]) * widen(e[k]);
        }
    }
    LongComplex sum(0.0L, 0.0L);
    for (std::size_t k = 0; k < x.dim(); ++k) {
        const LongComplex xv = widen(x[k]);
        sum += (upper_vec[k] - xv) * std::conj(xv - lower_vec[k]);
    }
    return static_cast<double>(sum.real());
}

/// Largest |<e_i,e_j> - delta_ij| over all pairs, in extended precision.
inline double gram_error_extended(const OrthonormalFamily& family) {
    long double worst = 0.0L;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            LongComplex g(0.0L, 0.0L);
            for (std::size_t k = 0; k < family.dim(); ++k) {
                g += widen(family.member(i)[k]) * std::conj(widen(family.member(j)[k]));
            }
            const long double target = (i == j) ? 1.0L : 0.0L;
            const long double err = std::abs(g - LongComplex(target, 0.0L));
            if (err > worst) worst = err;
        }
    }
    return static_cast<double>(worst);
}

inline bool close_rel(double a, double b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace oracles
