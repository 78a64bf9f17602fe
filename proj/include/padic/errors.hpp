#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Thrown when a shell series, moment, or weighted measure has no finite value.
class divergence_error : public std::runtime_error {
public:
    explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a requested combination cannot be represented exactly by the
// per-shell step model (e.g. a tabulated kernel applied to a function with a
// nonzero low-end tail).
class unsupported_representation_error : public std::runtime_error {
public:
    explicit unsupported_representation_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace padic
