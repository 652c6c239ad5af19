#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracframe/frames.hpp"

namespace fracframe {

struct OperatorOptions {
    QuadratureSpec quad;
    ExtremizeOptions ext;
    /// Extra slack attributed to the frame sampler on top of quadrature
    /// error; feeds the discontinuity threshold.
    double sampler_slack = 1e-4;
};

/// I_k^{+/-} u(x): extremize and report the value.
double eval_Ik(const ScalarField& u, const Vec& x, int k, Sign sign,
               const FractionalOrder& fo, const OperatorOptions& opts = {});

struct PointEval {
    Vec x;
    double value = 0.0;
    double err_estimate = 0.0;
    bool ok = false;
    std::string error;  // set when ok == false
};

/// Pointwise eval_Ik over a point list; order-preserving, errors collected
/// per point rather than aborting the batch.
std::vector<PointEval> eval_field(const ScalarField& u, std::span<const Vec> points,
                                  int k, Sign sign, const FractionalOrder& fo,
                                  const OperatorOptions& opts = {});

struct DiscontinuityReport {
    double value_at_x0 = 0.0;
    double limsup_estimate = 0.0;  // max over the approach values
    double gap = 0.0;              // value_at_x0 - limsup_estimate
    double threshold = 0.0;        // 3x combined quadrature + sampler tolerance
    bool discontinuous = false;
    std::vector<PointEval> approach;
};

/// Probe of x -> I_k u(x) along a sequence approaching x0; flags a
/// discontinuity when the gap exceeds the declared threshold.
DiscontinuityReport discontinuity_probe(const ScalarField& u, const Vec& x0,
                                        std::span<const Vec> approach, int k, Sign sign,
                                        const FractionalOrder& fo,
                                        const OperatorOptions& opts = {});

}  // namespace fracframe
