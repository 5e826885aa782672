#include "orthobound/linalg.hpp"

#include <cmath>
#include <utility>

namespace orthobound {

std::string to_string(Mode mode) {
    return mode == Mode::real ? "real" : "complex";
}

bool is_finite(Scalar value) {
    return std::isfinite(value.real()) && std::isfinite(value.imag());
}

Vector::Vector(std::vector<Scalar> coords, Mode mode)
    : coords_(std::move(coords)), mode_(mode) {
    if (coords_.empty()) {
        throw ShapeError("vector must have dimension >= 1");
    }
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (!is_finite(coords_[k])) {
            throw DomainError("vector coordinate " + std::to_string(k) + " is not finite");
        }
        if (mode_ == Mode::real && coords_[k].imag() != 0.0) {
            throw ShapeError("real-mode vector has nonzero imaginary part at coordinate " +
                             std::to_string(k));
        }
    }
}

Vector Vector::real(std::vector<double> coords) {
    std::vector<Scalar> c(coords.begin(), coords.end());
    return Vector(std::move(c), Mode::real);
}

Vector Vector::complex(std::vector<Scalar> coords) {
    return Vector(std::move(coords), Mode::complex_);
}

Vector Vector::zero(std::size_t dim, Mode mode) {
    return Vector(std::vector<Scalar>(dim, Scalar(0.0, 0.0)), mode);
}

namespace {

void require_same_shape(const Vector& a, const Vector& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw ShapeError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
    if (a.mode() != b.mode()) {
        throw ShapeError(std::string(op) + ": mode mismatch (" + to_string(a.mode()) +
                         " vs " + to_string(b.mode()) + ")");
    }
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
    require_same_shape(a, b, "add");
    std::vector<Scalar> c(a.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return Vector(std::move(c), a.mode());
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_shape(a, b, "subtract");
    std::vector<Scalar> c(a.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return Vector(std::move(c), a.mode());
}

Vector operator*(Scalar s, const Vector& v) {
    std::vector<Scalar> c(v.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * v[k];
    Mode mode = (v.mode() == Mode::real && s.imag() == 0.0) ? Mode::real : Mode::complex_;
    return Vector(std::move(c), mode);
}

Vector operator*(double s, const Vector& v) {
    return Scalar(s, 0.0) * v;
}

Scalar inner(const Vector& x, const Vector& y) {
    require_same_shape(x, y, "inner");
    Scalar sum(0.0, 0.0);
    for (std::size_t k = 0; k < x.dim(); ++k) {
        sum += x[k] * std::conj(y[k]);
    }
    return sum;
}

double norm(const Vector& x) {
    double sum = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        sum += std::norm(x[k]);
    }
    return std::sqrt(sum);
}

OrthonormalFamily::OrthonormalFamily(std::vector<Vector> members,
                                     std::vector<std::string> labels,
                                     double gram_tolerance)
    : members_(std::move(members)),
      labels_(std::move(labels)),
      gram_tolerance_(gram_tolerance),
      max_gram_error_(0.0) {
    if (members_.empty()) {
        throw ShapeError("orthonormal family must be nonempty");
    }
    if (labels_.size() != members_.size()) {
        throw ShapeError("family labels must match member count");
    }
    if (gram_tolerance_ < 0.0) {
        throw DomainError("gram tolerance must be nonnegative");
    }
    const std::size_t n = members_.front().dim();
    const Mode mode = members_.front().mode();
    for (const Vector& e : members_) {
        if (e.dim() != n || e.mode() != mode) {
            throw ShapeError("family members must share dimension and mode");
        }
    }
    if (members_.size() > n) {
        throw ShapeError("family size exceeds ambient dimension");
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = i; j < members_.size(); ++j) {
            const Scalar g = inner(members_[i], members_[j]);
            const double target = (i == j) ? 1.0 : 0.0;
            const double err = std::abs(g - Scalar(target, 0.0));
            if (err > max_gram_error_) max_gram_error_ = err;
        }
    }
    if (max_gram_error_ > gram_tolerance_) {
        throw DomainError("family is not orthonormal: max Gram error " +
                          std::to_string(max_gram_error_) + " exceeds tolerance " +
                          std::to_string(gram_tolerance_));
    }
}

GramSchmidtResult gram_schmidt(const std::vector<Vector>& vectors, double tolerance) {
    if (vectors.empty()) {
        throw ShapeError("gram_schmidt requires at least one input vector");
    }
    const std::size_t n = vectors.front().dim();
    const Mode mode = vectors.front().mode();
    for (const Vector& v : vectors) {
        if (v.dim() != n || v.mode() != mode) {
            throw ShapeError("gram_schmidt inputs must share dimension and mode");
        }
    }
    if (tolerance < 0.0) {
        throw DomainError("gram_schmidt tolerance must be nonnegative");
    }

    std::vector<Vector> accepted;
    std::vector<std::string> labels;
    std::vector<std::size_t> dropped;
    for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
        const Vector& v = vectors[idx];
        Vector w = v;
        // One reorthogonalization pass keeps near-dependent inputs from
        // poisoning downstream Gram entries.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& e : accepted) {
                w = w - inner(w, e) * e;
            }
        }
        const double residual = norm(w);
        if (residual < tolerance * std::max(1.0, norm(v)) || accepted.size() == n) {
            dropped.push_back(idx);
            continue;
        }
        accepted.push_back((1.0 / residual) * w);
        labels.push_back("e" + std::to_string(idx));
    }
    if (accepted.empty()) {
        throw DependenceError("gram_schmidt: all inputs are linearly dependent");
    }
    return GramSchmidtResult{OrthonormalFamily(std::move(accepted), std::move(labels), tolerance),
                             std::move(dropped)};
}

std::vector<Scalar> fourier_coefficients(const Vector& x, const OrthonormalFamily& family) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        coeffs.push_back(inner(x, family.member(i)));
    }
    return coeffs;
}

Vector combination(const OrthonormalFamily& family, const std::vector<Scalar>& coeffs) {
    if (coeffs.size() != family.size()) {
        throw ShapeError("combination: coefficient count must match family size");
    }
    if (family.mode() == Mode::real) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].imag() != 0.0) {
                throw ShapeError("combination: coefficient " + std::to_string(i) +
                                 " must be real in real mode");
            }
        }
    }
    std::vector<Scalar> out(family.dim(), Scalar(0.0, 0.0));
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Vector& e = family.member(i);
        for (std::size_t k = 0; k < e.dim(); ++k) {
            out[k] += coeffs[i] * e[k];
        }
    }
    return Vector(std::move(out), family.mode());
}

}  // namespace orthobound
