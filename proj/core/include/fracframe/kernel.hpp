#pragma once

#include <cstddef>

#include "fracframe/field.hpp"
#include "fracframe/vec.hpp"

namespace fracframe {

/// Fractional order s in (0,1) with the one-dimensional normalization
/// constant C_s = 4^s Gamma(s+1/2) / (sqrt(pi) |Gamma(-s)|), cached once.
/// This is the unique constant for which the directional operator acts as
/// the 2s-fractional derivative along the line.
struct FractionalOrder {
    double s;
    double Cs;

    static FractionalOrder make(double s);
};

/// Parameters of the singular quadrature in tau.
struct QuadratureSpec {
    /// Near/far split radius.
    double rho = 0.5;

    /// Geometric (dyadic) panel count grading the near field toward tau = 0;
    /// the leftover [0, rho 2^-K] is handled by a one-point weighted-moment
    /// rule exploiting delta = O(tau^2).
    int near_panels = 10;

    /// Gauss-Legendre points per panel.
    int gl_points = 16;

    enum class TailMode { analytic, truncated };
    /// analytic: past T the integrand is 2(far - u(x))/tau^{1+2s} up to the
    /// field's far eps, integrated exactly. truncated: drop the tail, book
    /// its bound into the error estimate. analytic requires a constant far
    /// value, which every field here declares via far_field().
    TailMode tail_mode = TailMode::analytic;

    /// Truncation radius; 0 = choose from the field's far radius and tol.
    double T = 0.0;

    /// Absolute error target for one directional evaluation.
    double tol = 1e-7;

    /// Adaptive split budget on top of the initial panels.
    int max_splits = 60;

    /// Skip the near-field C^2 decay guard (the split form with phi known
    /// smooth does not need it).
    bool check_c2 = true;
};

struct IxiResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evals = 0;
};

/// Directional 2s-derivative: C_s \int_0^inf delta(u,x,tau xi)/tau^{1+2s} dtau.
/// Throws NonIntegrableSingularity when the second-difference decay check
/// fails at x, TolNotMet when the error estimate cannot be brought below
/// q.tol within the split budget.
IxiResult i_xi(const ScalarField& u, const Vec& x, const Vec& xi,
               const FractionalOrder& fo, const QuadratureSpec& q);

/// Split evaluation used by the viscosity definition: phi on [0, rho],
/// u on [rho, inf). Coincides with i_xi when phi == u near x.
IxiResult i_xi_split(const ScalarField& u, const ScalarField& phi, const Vec& x,
                     const Vec& xi, double rho, const FractionalOrder& fo,
                     const QuadratureSpec& q);

}  // namespace fracframe
