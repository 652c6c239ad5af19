#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracframe {
namespace quad {

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of order n (computed once by Newton iteration on P_n).
const GaussRule& gauss_legendre(int n);

/// One Gauss-Legendre panel of f over [a, b].
double gl_panel(const std::function<double(double)>& f, double a, double b, int n);

struct PanelResult {
    double value = 0.0;
    double err_estimate = 0.0;  // sum of |GL(n) - GL(n/2)| over panels
    std::size_t evals = 0;
};

/// Composite Gauss-Legendre over the given panel edges with an embedded
/// error estimate. Edges must be sorted ascending.
PanelResult composite_gl(const std::function<double(double)>& f,
                         std::span<const double> edges, int n);

/// Adaptive variant: splits the worst panels (at the geometric mean, so
/// power-law integrands stay resolved) until the estimate drops below tol
/// or max_splits is spent. Does not throw; caller inspects err_estimate.
PanelResult adaptive_gl(const std::function<double(double)>& f,
                        std::span<const double> edges, int n, double tol,
                        int max_splits);

/// Tanh-sinh (double-exponential) quadrature of f over (a, b). Handles
/// integrable endpoint singularities; the workhorse behind the Beta-function
/// oracle. Converges to ~1e-13 relative for the integrands used here.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13);

}  // namespace quad
}  // namespace fracframe
