#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "fracframe/vec.hpp"

namespace fracframe {

/// What a field promises about its behaviour far from the origin:
/// |u(z) - value| <= eps for all |z| >= radius. Compactly supported fields
/// report eps = 0; fields with fast decay report the radius past which the
/// residue is below machine noise.
struct FarField {
    double radius = std::numeric_limits<double>::infinity();
    double value = 0.0;
    double eps = 0.0;
};

/// A bounded real function on R^N: closed-form oracle or grid-backed.
/// Everything the singular-integral kernel needs lives behind this surface.
class ScalarField {
  public:
    virtual ~ScalarField() = default;

    virtual int dim() const = 0;
    virtual double operator()(const Vec& x) const = 0;

    /// A known global sup of |u|.
    virtual double bound() const = 0;

    virtual FarField far_field() const { return FarField{}; }

    /// Dirichlet flag: u vanishes identically outside a bounded set, exactly.
    virtual bool zero_outside() const { return false; }

    /// Radii tau > 0 at which tau -> u(x + tau xi) or tau -> u(x - tau xi)
    /// may kink or jump. Quadrature panels are split there. Piecewise fields
    /// report their region crossings; smooth fields report nothing.
    virtual void ray_breakpoints(const Vec& x, const Vec& xi,
                                 std::vector<double>& out) const {
        (void)x;
        (void)xi;
        (void)out;
    }
};

/// Closed-form field from a callable plus metadata. Used by tests and the
/// right-hand sides of the solver.
class FunctionField final : public ScalarField {
  public:
    FunctionField(int dim, std::function<double(const Vec&)> f, double bound,
                  FarField far = FarField{})
        : dim_(dim), f_(std::move(f)), bound_(bound), far_(far) {}

    int dim() const override { return dim_; }
    double operator()(const Vec& x) const override { return f_(x); }
    double bound() const override { return bound_; }
    FarField far_field() const override { return far_; }

  private:
    int dim_;
    std::function<double(const Vec&)> f_;
    double bound_;
    FarField far_;
};

using FieldPtr = std::shared_ptr<const ScalarField>;

inline FieldPtr constant_field(int dim, double c) {
    return std::make_shared<FunctionField>(
        dim, [c](const Vec&) { return c; }, std::abs(c),
        FarField{0.0, c, 0.0});
}

/// u(x+y) + u(x-y) - 2 u(x).
double delta(const ScalarField& u, const Vec& x, const Vec& y);

}  // namespace fracframe
