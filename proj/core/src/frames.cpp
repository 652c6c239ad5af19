#include "fracframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "fracframe/parallel.hpp"
#include "fracframe/rng.hpp"

namespace fracframe {

namespace {

void check_kn(int k, int n) {
    if (n < 1 || n > kMaxDim) throw BadDims("frame dimension out of range");
    if (k < 1 || k > n) throw BadDims("frame size k must satisfy 1 <= k <= N");
}

}  // namespace

Frame Frame::canonical(int k, int n) {
    check_kn(k, n);
    Frame f(k, n);
    for (int i = 0; i < k; ++i) f.rows_[static_cast<std::size_t>(i)] = Vec::basis(i, n);
    return f;
}

Frame Frame::from_rows(std::span<const Vec> rows) {
    if (rows.empty()) throw BadDims("empty frame");
    const int n = rows[0].dim();
    const int k = static_cast<int>(rows.size());
    check_kn(k, n);
    Frame f(k, n);
    for (int i = 0; i < k; ++i) f.rows_[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)];
    if (f.gram_deviation() > 1e-12) throw BadDims("rows are not orthonormal to 1e-12");
    return f;
}

double Frame::gram_deviation() const {
    double dev = 0.0;
    for (int i = 0; i < k_; ++i)
        for (int j = i; j < k_; ++j) {
            const double g = row(i).dot(row(j)) - (i == j ? 1.0 : 0.0);
            dev = std::max(dev, std::abs(g));
        }
    return dev;
}

bool Frame::lex_less(const Frame& o) const {
    for (int i = 0; i < std::min(k_, o.k_); ++i)
        for (int d = 0; d < n_; ++d) {
            if (row(i)[d] < o.row(i)[d]) return true;
            if (row(i)[d] > o.row(i)[d]) return false;
        }
    return k_ < o.k_;
}

int givens_param_count(int k, int n) {
    check_kn(k, n);
    return k * n - k * (k + 1) / 2;
}

Frame Frame::from_givens(std::span<const double> angles, int k, int n) {
    check_kn(k, n);
    if (static_cast<int>(angles.size()) != givens_param_count(k, n))
        throw BadDims("givens chart expects k*n - k(k+1)/2 angles");

    // Start from the canonical basis and apply plane rotations G(i,j,theta)
    // for i < k, j > i. Each rotation preserves orthonormality exactly
    // (up to roundoff), so the result always passes the Gram check.
    std::array<Vec, kMaxDim> rows;
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = Vec::basis(i, n);

    std::size_t a = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double c = std::cos(angles[a]), s = std::sin(angles[a]);
            ++a;
            for (int r = 0; r < n; ++r) {
                const double vi = rows[static_cast<std::size_t>(r)][i];
                const double vj = rows[static_cast<std::size_t>(r)][j];
                rows[static_cast<std::size_t>(r)][i] = c * vi - s * vj;
                rows[static_cast<std::size_t>(r)][j] = s * vi + c * vj;
            }
        }

    // Rows of the rotation: row r of R^T ... we rotated the basis column-wise;
    // rows[] now holds the images of e_r, which are orthonormal.
    Frame f(k, n);
    for (int i = 0; i < k; ++i) f.rows_[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)];
    return f;
}

Frame Frame::from_matrix_chart(std::span<const double> params, int k, int n) {
    check_kn(k, n);
    if (static_cast<int>(params.size()) != k * n)
        throw BadDims("matrix chart expects k*n parameters");

    std::array<Vec, kMaxDim> rows;
    std::size_t a = 0;
    for (int i = 0; i < k; ++i) {
        Vec v(n);
        for (int d = 0; d < n; ++d) v[d] = params[a++];
        rows[static_cast<std::size_t>(i)] = v;
    }
    // Modified Gram-Schmidt.
    for (int i = 0; i < k; ++i) {
        Vec v = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) {
            const Vec& q = rows[static_cast<std::size_t>(j)];
            v = v - q * v.dot(q);
        }
        const double r = v.norm();
        if (r < 1e-10) throw DegenerateChart("matrix chart hit a rank-deficient matrix");
        rows[static_cast<std::size_t>(i)] = v * (1.0 / r);
    }
    Frame f(k, n);
    for (int i = 0; i < k; ++i) f.rows_[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)];
    return f;
}

int chart_param_count(int k, int n) {
    check_kn(k, n);
    if (k == 1 || k == n - 1 || k == n) return givens_param_count(k, n);
    return k * n;
}

Frame frame_from_chart(std::span<const double> params, int k, int n) {
    if (k == 1 || k == n - 1 || k == n) return Frame::from_givens(params, k, n);
    return Frame::from_matrix_chart(params, k, n);
}

namespace {

struct StartOutcome {
    double value;        // signed objective (already negated for inf)
    Frame frame;
    long samples;
    double err;
    bool tolerance_limited;
};

/// Compass search: try +/- step on each coordinate, move to the best
/// improvement, halve the step when stuck, stop at step_min.
StartOutcome refine(const std::function<double(std::span<const double>, double*)>& obj,
                    std::vector<double> params, int k, int n,
                    const ExtremizeOptions& opts) {
    long samples = 0;
    double err = 0.0;
    double best = obj(params, &err);
    ++samples;

    double step = opts.step0;
    int iter = 0;
    while (step >= opts.step_min && iter < opts.max_iters) {
        ++iter;
        bool improved = false;
        std::vector<double> cand = params;
        double cand_val = best;
        for (std::size_t i = 0; i < params.size(); ++i) {
            for (double sgn : {+1.0, -1.0}) {
                std::vector<double> trial = params;
                trial[i] += sgn * step;
                double e = 0.0;
                const double v = obj(trial, &e);
                ++samples;
                if (v > cand_val) {
                    cand = trial;
                    cand_val = v;
                    err = e;
                    improved = true;
                }
            }
        }
        if (improved) {
            params = std::move(cand);
            best = cand_val;
        } else {
            step *= 0.5;
        }
    }

    StartOutcome out{best, frame_from_chart(params, k, n), samples, err,
                     iter >= opts.max_iters && step >= opts.step_min};
    return out;
}

}  // namespace

ExtremizeResult extremize(const ScalarField& u, const Vec& x, int k, Sign sign,
                          const FractionalOrder& fo, const QuadratureSpec& q,
                          const ExtremizeOptions& opts) {
    const int n = u.dim();
    check_kn(k, n);
    const double flip = (sign == Sign::sup) ? 1.0 : -1.0;

    auto objective = [&](std::span<const double> params, double* err_out) {
        const Frame f = frame_from_chart(params, k, n);
        double total = 0.0, err = 0.0;
        for (int i = 0; i < k; ++i) {
            const IxiResult r = i_xi(u, x, f.row(i), fo, q);
            total += r.value;
            err += r.err_estimate;
        }
        if (err_out) *err_out = err;
        return flip * total;
    };

    const int p = chart_param_count(k, n);

    if (p == 0) {
        // N = 1: the only frame is {e_1}.
        double err = 0.0;
        std::vector<double> none;
        const double v = objective(none, &err);
        return ExtremizeResult{flip * v, Frame::canonical(1, 1), ExtremizeStatus::converged, 1, err};
    }

    // Start list: canonical chart origin plus seeded uniform angles/entries.
    Rng rng(opts.seed);
    std::vector<std::vector<double>> starts;
    if (opts.include_canonical) starts.emplace_back(static_cast<std::size_t>(p), 0.0);
    while (static_cast<int>(starts.size()) < std::max(1, opts.starts)) {
        std::vector<double> s(static_cast<std::size_t>(p));
        for (double& v : s) v = rng.uniform(-M_PI, M_PI);
        starts.push_back(std::move(s));
    }

    std::vector<StartOutcome> outcomes;
    outcomes.reserve(starts.size());

    // Launch in waves so the flat-objective early exit can trigger without
    // burning the full budget; each wave is parallel over starts.
    std::size_t launched = 0;
    bool flat_exit = false;
    while (launched < starts.size() && !flat_exit) {
        const std::size_t wave_end =
            std::min(starts.size(), launched + static_cast<std::size_t>(std::max(1, opts.flat_quorum)));
        const std::size_t wave = wave_end - launched;
        std::vector<StartOutcome> wave_out(
            wave, StartOutcome{0.0, Frame::canonical(1, 1), 0, 0.0, false});
        auto run_one = [&](std::int64_t i) {
            wave_out[static_cast<std::size_t>(i)] =
                refine(objective, starts[launched + static_cast<std::size_t>(i)], k, n, opts);
        };
        if (opts.parallel)
            parallel_for(static_cast<std::int64_t>(wave), run_one);
        else
            for (std::size_t i = 0; i < wave; ++i) run_one(static_cast<std::int64_t>(i));
        for (auto& o : wave_out) outcomes.push_back(std::move(o));
        launched = wave_end;

        if (static_cast<int>(outcomes.size()) >= opts.flat_quorum) {
            double lo = outcomes[0].value, hi = outcomes[0].value;
            for (const auto& o : outcomes) {
                lo = std::min(lo, o.value);
                hi = std::max(hi, o.value);
            }
            if (hi - lo <= opts.flat_tol * std::max(1.0, std::abs(hi))) flat_exit = true;
        }
    }

    // Deterministic merge: best value, lexicographically smallest frame on ties.
    const StartOutcome* best = &outcomes.front();
    long samples = 0;
    bool tol_limited = false;
    for (const auto& o : outcomes) {
        samples += o.samples;
        tol_limited = tol_limited || o.tolerance_limited;
        const double tie = 1e-12 * std::max(1.0, std::abs(best->value));
        if (o.value > best->value + tie ||
            (std::abs(o.value - best->value) <= tie && o.frame.lex_less(best->frame)))
            best = &o;
    }

    return ExtremizeResult{flip * best->value, best->frame,
                           tol_limited ? ExtremizeStatus::tolerance_limited
                                       : ExtremizeStatus::converged,
                           samples, best->err};
}

}  // namespace fracframe
