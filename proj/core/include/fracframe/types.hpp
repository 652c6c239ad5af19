#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracframe {

inline constexpr const char* kVersion = "0.1.0";

/// Extremization sense over orthonormal frames.
enum class Sign { sup, inf };

inline const char* to_string(Sign s) { return s == Sign::sup ? "sup" : "inf"; }

inline Sign sign_from_string(const std::string& s) {
    if (s == "sup" || s == "+") return Sign::sup;
    if (s == "inf" || s == "-") return Sign::inf;
    throw std::invalid_argument("sign must be 'sup' or 'inf', got '" + s + "'");
}

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Near-field second-difference decay check failed: the integrand
/// delta(u,x,tau xi)/tau^{1+2s} is not integrable at tau = 0.
struct NonIntegrableSingularity : Error {
    using Error::Error;
};

/// Quadrature error estimate exceeds the requested tolerance after the
/// refinement budget is spent.
struct TolNotMet : Error {
    double value;
    double err_estimate;
    TolNotMet(const std::string& what, double v, double e)
        : Error(what), value(v), err_estimate(e) {}
};

struct BadDims : Error {
    using Error::Error;
};

struct DegenerateChart : Error {
    using Error::Error;
};

struct NonIntegrable : Error {
    using Error::Error;
};

struct CZeroOrderTooLarge : Error {
    using Error::Error;
};

struct NotConverged : Error {
    using Error::Error;
};

struct MonotonicityViolated : Error {
    using Error::Error;
};

struct NotCertified : Error {
    using Error::Error;
};

struct InsufficientBand : Error {
    using Error::Error;
};

struct NegativeValues : Error {
    using Error::Error;
};

struct BracketNotFound : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace fracframe
