#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "fracframe/field.hpp"
#include "fracframe/kernel.hpp"
#include "fracframe/types.hpp"

namespace fracframe {

/// Beta function in the convention beta(a, b) = int_0^1 t^{-b} (1-t)^{-a} dt,
/// by adaptive double-exponential quadrature. Requires a < 1 and b < 1.
/// For the barrier identity case, beta(1-s, s) = pi / sin(pi s).
double beta(double a, double b);

/// 1-D normalization constant C_s (see FractionalOrder).
double cs_constant(double s);

/// int_0^inf (1 - e^{-t^2}) t^{-1-2s} dt, the profile integral behind the
/// entire eigenfunction; closed form Gamma(1-s)/(2s) is used only in tests.
double gaussian_profile_integral(double s);

/// int_1^inf (1 + e^{-t}) t^{-1-2s} dt, the sector example's value, by
/// independent 1-D quadrature.
double sector_tail_integral(double s);

/// M (R^2 - |x - center|^2)_+^s. Every directional derivative equals
/// -M C_s beta(1-s, s) inside the ball, independent of R, x and direction.
FieldPtr make_barrier(double R, const Vec& center, double M, double s);

enum class Counterexample {
    annulus_eq5,       // 0 on the unit ball and the lower half-space, -1 elsewhere
    line_modified,     // annulus variant that is also 0 on the x_N axis
    halfline_exp,      // e^{-x_N} outside the ball in the upper half-space
    plane_sector_exp,  // e^{-x_N} on a planar sector of the last two coordinates
    cross,             // 1 where every |x_i| > 1, else 0
    radial_bump,       // e^{-1/(1-|x|^2)} inside the unit ball
};

Counterexample counterexample_from_string(const std::string& name);
const char* to_string(Counterexample c);

FieldPtr make_counterexample(Counterexample which, int dim);

struct EntireEigenfunction {
    FieldPtr field;  // w(x) = e^{-alpha |x|^2}
    double alpha;
    double mu;
    int k;
};

/// w with I_k^- w + mu w = 0 away from the origin (k < N), alpha from
/// alpha^s = mu / (2 k C_s * gaussian_profile_integral(s)).
EntireEigenfunction make_entire_eigenfunction(double mu, int k, double s, int dim);

/// A recorded ground-truth value (or bound) for a catalog field.
struct KnownValue {
    Vec x;
    int k = 1;
    Sign sign = Sign::sup;
    enum class Kind { equals, upper_bound } kind = Kind::equals;
    double value = 0.0;
    double tol = 1e-3;
    std::string rule;  // how the number was derived
};

struct CatalogEntry {
    std::string name;
    FieldPtr field;
    std::vector<KnownValue> known;
};

struct CatalogCheck {
    std::string entry;
    KnownValue known;
    double got = 0.0;
    bool pass = false;
};

/// Every closed-form function and value used as ground truth, bundled for
/// the identity suite (`verify` subcommand and the master test).
class OracleCatalog {
  public:
    static OracleCatalog standard(int dim, double s);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    int dim() const { return dim_; }
    double s() const { return s_; }

    /// Re-derives every known value through the kernel + frames pipeline.
    std::vector<CatalogCheck> verify(const struct OperatorOptions& opts) const;

    /// Structured text dump: name, definition hash, known values.
    void dump(std::ostream& os) const;

  private:
    OracleCatalog(int dim, double s) : dim_(dim), s_(s) {}
    int dim_;
    double s_;
    std::vector<CatalogEntry> entries_;
};

std::uint64_t fnv1a(const std::string& data);

}  // namespace fracframe
