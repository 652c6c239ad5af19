#include "fracframe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracframe {
namespace quad {

namespace {

GaussRule compute_gauss(int n) {
    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev initial guess, Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[static_cast<std::size_t>(i)] = -x;
        r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        r.weights[static_cast<std::size_t>(i)] = w;
        r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

PanelResult composite_gl(const std::function<double(double)>& f,
                         std::span<const double> edges, int n) {
    PanelResult out;
    const int nlow = std::max(2, n / 2);
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
        const double hi16 = gl_panel(f, edges[j], edges[j + 1], n);
        const double lo8 = gl_panel(f, edges[j], edges[j + 1], nlow);
        out.value += hi16;
        out.err_estimate += std::abs(hi16 - lo8);
        out.evals += static_cast<std::size_t>(n + nlow);
    }
    return out;
}

PanelResult adaptive_gl(const std::function<double(double)>& f,
                        std::span<const double> edges, int n, double tol,
                        int max_splits) {
    struct Panel {
        double a, b, value, err;
    };
    const int nlow = std::max(2, n / 2);
    auto eval = [&](double a, double b) {
        const double hi = gl_panel(f, a, b, n);
        const double lo = gl_panel(f, a, b, nlow);
        return Panel{a, b, hi, std::abs(hi - lo)};
    };

    std::vector<Panel> panels;
    PanelResult out;
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
        panels.push_back(eval(edges[j], edges[j + 1]));
        out.evals += static_cast<std::size_t>(n + nlow);
    }

    for (int split = 0; split < max_splits; ++split) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t j = 0; j < panels.size(); ++j) {
            total_err += panels[j].err;
            if (panels[j].err > panels[worst].err) worst = j;
        }
        if (total_err <= tol) break;
        Panel p = panels[worst];
        // Geometric mean keeps power-law integrands equidistributed; fall
        // back to the midpoint when the panel touches zero or is signed.
        double m = (p.a > 0.0 && p.b > 0.0) ? std::sqrt(p.a * p.b) : 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) m = 0.5 * (p.a + p.b);
        panels[worst] = eval(p.a, m);
        panels.push_back(eval(m, p.b));
        out.evals += 2 * static_cast<std::size_t>(n + nlow);
    }

    out.value = 0.0;
    out.err_estimate = 0.0;
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : panels) {
        out.value += p.value;
        out.err_estimate += p.err;
    }
    return out;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) throw std::invalid_argument("tanh_sinh: need b > a");
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    // x = mid + half * tanh(pi/2 sinh(t)); integrate over t with the
    // trapezoid rule, doubling the density per level.
    auto g = [&](double t) {
        const double sh = std::sinh(t);
        const double w = 0.5 * M_PI * std::cosh(t) / std::pow(std::cosh(0.5 * M_PI * sh), 2);
        const double x = mid + half * std::tanh(0.5 * M_PI * sh);
        if (x <= a || x >= b) return 0.0;  // underflow to the endpoint
        const double v = f(x);
        return std::isfinite(v) ? v * w : 0.0;
    };

    const double tmax = 6.1;  // tanh(pi/2 sinh(6.1)) is 1 to machine precision
    double h = 1.0;
    double sum = g(0.0);
    for (double t = h; t <= tmax; t += h) sum += g(t) + g(-t);
    double prev = sum * h * half;

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += g(t) + g(-t);
        sum += add;
        const double cur = sum * h * half;
        if (level >= 3 && std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace quad
}  // namespace fracframe
