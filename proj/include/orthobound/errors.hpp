#pragma once

#include <stdexcept>
#include <string>

namespace orthobound {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension or mode mismatch between operands.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Parameter outside its admissible domain (lambda, tolerances, weights, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A theorem hypothesis failed. Carries which input failed and the measured
/// excess beyond the admissible boundary.
class HypothesisError : public Error {
public:
    HypothesisError(const std::string& what, std::string subject, double excess)
        : Error(what), subject_(std::move(subject)), excess_(excess) {}

    const std::string& subject() const noexcept { return subject_; }
    double excess() const noexcept { return excess_; }

private:
    std::string subject_;
    double excess_;
};

/// Orthonormalization consumed every input (all directions dependent).
class DependenceError : public Error {
public:
    explicit DependenceError(const std::string& what) : Error(what) {}
};

/// A quadrature rule is too coarse for the requested family.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& what) : Error(what) {}
};

/// Malformed problem input (CLI/JSON layer).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace orthobound
