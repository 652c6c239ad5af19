#include "fracframe/operators.hpp"

#include <algorithm>

#include "fracframe/parallel.hpp"

namespace fracframe {

double eval_Ik(const ScalarField& u, const Vec& x, int k, Sign sign,
               const FractionalOrder& fo, const OperatorOptions& opts) {
    return extremize(u, x, k, sign, fo, opts.quad, opts.ext).value;
}

std::vector<PointEval> eval_field(const ScalarField& u, std::span<const Vec> points,
                                  int k, Sign sign, const FractionalOrder& fo,
                                  const OperatorOptions& opts) {
    std::vector<PointEval> out(points.size());
    OperatorOptions inner = opts;
    inner.ext.parallel = false;  // points are the parallel axis here
    parallel_for(static_cast<std::int64_t>(points.size()), [&](std::int64_t i) {
        PointEval& pe = out[static_cast<std::size_t>(i)];
        pe.x = points[static_cast<std::size_t>(i)];
        try {
            const ExtremizeResult r = extremize(u, pe.x, k, sign, fo, inner.quad, inner.ext);
            pe.value = r.value;
            pe.err_estimate = r.err_estimate;
            pe.ok = true;
        } catch (const Error& e) {
            pe.ok = false;
            pe.error = e.what();
        }
    });
    return out;
}

DiscontinuityReport discontinuity_probe(const ScalarField& u, const Vec& x0,
                                        std::span<const Vec> approach, int k, Sign sign,
                                        const FractionalOrder& fo,
                                        const OperatorOptions& opts) {
    DiscontinuityReport rep;
    const ExtremizeResult at0 = extremize(u, x0, k, sign, fo, opts.quad, opts.ext);
    rep.value_at_x0 = at0.value;
    rep.approach = eval_field(u, approach, k, sign, fo, opts);

    bool any = false;
    double sup = 0.0, err_max = at0.err_estimate;
    for (const PointEval& pe : rep.approach) {
        if (!pe.ok) continue;
        sup = any ? std::max(sup, pe.value) : pe.value;
        err_max = std::max(err_max, pe.err_estimate);
        any = true;
    }
    if (!any) throw Error("discontinuity_probe: no approach point evaluated successfully");

    rep.limsup_estimate = sup;
    rep.gap = rep.value_at_x0 - rep.limsup_estimate;
    rep.threshold = 3.0 * (err_max + static_cast<double>(k) * opts.quad.tol + opts.sampler_slack);
    rep.discontinuous = std::abs(rep.gap) > rep.threshold;
    return rep;
}

}  // namespace fracframe
