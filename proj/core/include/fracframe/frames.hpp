#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fracframe/kernel.hpp"
#include "fracframe/types.hpp"
#include "fracframe/vec.hpp"

namespace fracframe {

/// Ordered orthonormal set {xi_1, ..., xi_k} in R^N, k <= N.
class Frame {
  public:
    static Frame canonical(int k, int n);

    /// Frame from explicit rows; validates the Gram identity to 1e-12.
    static Frame from_rows(std::span<const Vec> rows);

    /// Givens-rotation chart: angles theta_{ij}, i in [0,k), j in (i, n),
    /// k*n - k(k+1)/2 parameters. Surjective onto the frame manifold up to
    /// row signs, which the extremization objective cannot see.
    static Frame from_givens(std::span<const double> angles, int k, int n);

    /// Orthonormalized-matrix chart: k*n parameters, Gram-Schmidt applied to
    /// the rows. Throws DegenerateChart on (numerically) dependent rows.
    static Frame from_matrix_chart(std::span<const double> params, int k, int n);

    int k() const { return k_; }
    int dim() const { return n_; }
    const Vec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    /// max_ij |<xi_i, xi_j> - delta_ij|.
    double gram_deviation() const;

    /// Lexicographic comparison of the row matrices; deterministic
    /// tie-breaking among equal-value frames.
    bool lex_less(const Frame& o) const;

  private:
    Frame(int k, int n) : k_(k), n_(n) {}
    std::array<Vec, kMaxDim> rows_;
    int k_ = 0, n_ = 0;
};

int givens_param_count(int k, int n);

/// Dispatches between the charts the way the extremizer does: Givens for
/// k in {1, n-1, n}, orthonormalized matrix otherwise.
Frame frame_from_chart(std::span<const double> params, int k, int n);
int chart_param_count(int k, int n);

struct ExtremizeOptions {
    int starts = 32;              // M0 coarse global starts
    double step0 = 0.392699;      // pi/8 initial compass step
    double step_min = 1e-6;       // refinement floor
    int max_iters = 400;          // compass iterations per start
    std::uint64_t seed = 0x5eedULL;
    bool include_canonical = true;
    /// Stop launching starts once this many refined starts agree to within
    /// flat_tol (the objective is frame-independent for radial fields).
    int flat_quorum = 6;
    double flat_tol = 1e-9;
    bool parallel = true;
};

enum class ExtremizeStatus { converged, tolerance_limited };

/// Best value found over the frame manifold. No attainment certificate is
/// ever implied: the supremum may be approached but not achieved, so `frame`
/// is only the best sampled point.
struct ExtremizeResult {
    double value = 0.0;
    Frame frame = Frame::canonical(1, 1);
    ExtremizeStatus status = ExtremizeStatus::converged;
    long samples = 0;           // objective evaluations
    double err_estimate = 0.0;  // propagated quadrature error at the best frame
};

/// Extremize xi -> sum_i I_{xi_i} u(x) over orthonormal k-frames:
/// multi-start coarse sampling plus compass refinement on the chart.
ExtremizeResult extremize(const ScalarField& u, const Vec& x, int k, Sign sign,
                          const FractionalOrder& fo, const QuadratureSpec& q,
                          const ExtremizeOptions& opts = {});

}  // namespace fracframe
