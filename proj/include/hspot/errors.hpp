#pragma once

#include <stdexcept>
#include <string>

namespace hspot {

// Mixing pi-powers in a sum means a derivation went wrong somewhere upstream.
struct PiPowerMismatch : std::logic_error {
    explicit PiPowerMismatch(const std::string& what) : std::logic_error(what) {}
};

struct GammaPoleError : std::domain_error {
    explicit GammaPoleError(const std::string& what) : std::domain_error(what) {}
};

struct DimensionError : std::domain_error {
    explicit DimensionError(const std::string& what) : std::domain_error(what) {}
};

struct DimensionTooSmall : DimensionError {
    explicit DimensionTooSmall(const std::string& what) : DimensionError(what) {}
};

struct ConvolutionUndefined : std::domain_error {
    explicit ConvolutionUndefined(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedError : std::domain_error {
    explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

struct EvaluationError : std::runtime_error {
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hspot
