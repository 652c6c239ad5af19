#include "fracframe/oracles.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "fracframe/operators.hpp"
#include "fracframe/quadrature.hpp"

namespace fracframe {

double beta(double a, double b) {
    if (!(a < 1.0 && b < 1.0))
        throw NonIntegrable("beta(a,b) requires a < 1 and b < 1 for integrability");
    auto f = [a, b](double t) { return std::pow(t, -b) * std::pow(1.0 - t, -a); };
    return quad::tanh_sinh(f, 0.0, 1.0, 1e-14);
}

double cs_constant(double s) { return FractionalOrder::make(s).Cs; }

double gaussian_profile_integral(double s) {
    auto f = [s](double t) { return (1.0 - std::exp(-t * t)) * std::pow(t, -1.0 - 2.0 * s); };
    const double near = quad::tanh_sinh(f, 0.0, 1.0, 1e-14);
    std::vector<double> edges{1.0, 2.0, 4.0, 8.0};
    const double mid = quad::composite_gl(f, edges, 24).value;
    const double tail = std::pow(8.0, -2.0 * s) / (2.0 * s);  // e^{-64} residue ignored
    return near + mid + tail;
}

double sector_tail_integral(double s) {
    auto f = [s](double t) { return (1.0 + std::exp(-t)) * std::pow(t, -1.0 - 2.0 * s); };
    std::vector<double> edges{1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
    const double mid = quad::composite_gl(f, edges, 24).value;
    const double tail = std::pow(64.0, -2.0 * s) / (2.0 * s);
    return mid + tail;
}

namespace {

// --- ray crossing helpers ------------------------------------------------

/// Positive radii where x + sgn*tau*xi crosses the sphere |p - c| = r.
void sphere_crossings(const Vec& x, const Vec& xi, const Vec& c, double r, double sgn,
                      std::vector<double>& out) {
    const Vec d = x - c;
    const double b = sgn * d.dot(xi);
    const double disc = b * b - (d.norm2() - r * r);
    if (disc < 0.0) return;
    const double sq = std::sqrt(disc);
    for (double t : {-b - sq, -b + sq})
        if (t > 0.0) out.push_back(t);
}

/// Positive radius where coordinate i of x + sgn*tau*xi equals level.
void plane_crossing(const Vec& x, const Vec& xi, int i, double level, double sgn,
                    std::vector<double>& out) {
    const double den = sgn * xi[i];
    if (den == 0.0) return;
    const double t = (level - x[i]) / den;
    if (t > 0.0) out.push_back(t);
}

// --- the barrier ----------------------------------------------------------

class BarrierField final : public ScalarField {
  public:
    BarrierField(double R, Vec center, double M, double s)
        : R_(R), c_(center), M_(M), s_(s) {}

    int dim() const override { return c_.dim(); }

    double operator()(const Vec& x) const override {
        const double q = R_ * R_ - (x - c_).norm2();
        return q > 0.0 ? M_ * std::pow(q, s_) : 0.0;
    }

    double bound() const override { return std::abs(M_) * std::pow(R_, 2.0 * s_); }
    bool zero_outside() const override { return true; }

    FarField far_field() const override { return FarField{c_.norm() + R_, 0.0, 0.0}; }

    void ray_breakpoints(const Vec& x, const Vec& xi, std::vector<double>& out) const override {
        sphere_crossings(x, xi, c_, R_, +1.0, out);
        sphere_crossings(x, xi, c_, R_, -1.0, out);
    }

  private:
    double R_;
    Vec c_;
    double M_;
    double s_;
};

// --- counterexamples -------------------------------------------------------

class AnnulusField final : public ScalarField {
  public:
    AnnulusField(int dim, bool carve_axis) : n_(dim), carve_axis_(carve_axis) {
        if (dim < 2) throw BadDims("this example needs N >= 2");
    }

    int dim() const override { return n_; }

    double operator()(const Vec& x) const override {
        if (x.norm2() <= 1.0 || x[n_ - 1] <= 0.0) return 0.0;
        if (carve_axis_) {
            double cross = 0.0;
            for (int i = 0; i + 1 < n_; ++i) cross += x[i] * x[i];
            if (cross == 0.0) return 0.0;
        }
        return -1.0;
    }

    double bound() const override { return 1.0; }

    void ray_breakpoints(const Vec& x, const Vec& xi, std::vector<double>& out) const override {
        const Vec origin = Vec::zero(n_);
        for (double sgn : {+1.0, -1.0}) {
            sphere_crossings(x, xi, origin, 1.0, sgn, out);
            plane_crossing(x, xi, n_ - 1, 0.0, sgn, out);
        }
    }

  private:
    int n_;
    bool carve_axis_;
};

class HalflineExpField final : public ScalarField {
  public:
    explicit HalflineExpField(int dim) : n_(dim) {
        if (dim < 2) throw BadDims("this example needs N >= 2");
    }

    int dim() const override { return n_; }

    double operator()(const Vec& x) const override {
        if (x.norm2() <= 1.0 || x[n_ - 1] <= 0.0) return 0.0;
        return std::exp(-x[n_ - 1]);
    }

    double bound() const override { return 1.0; }

    void ray_breakpoints(const Vec& x, const Vec& xi, std::vector<double>& out) const override {
        const Vec origin = Vec::zero(n_);
        for (double sgn : {+1.0, -1.0}) {
            sphere_crossings(x, xi, origin, 1.0, sgn, out);
            plane_crossing(x, xi, n_ - 1, 0.0, sgn, out);
        }
    }

  private:
    int n_;
};

class PlaneSectorExpField final : public ScalarField {
  public:
    explicit PlaneSectorExpField(int dim) : n_(dim) {
        if (dim < 2) throw BadDims("this example needs N >= 2");
    }

    int dim() const override { return n_; }

    double operator()(const Vec& x) const override {
        double off_plane = 0.0;
        for (int i = 0; i + 2 < n_; ++i) off_plane += x[i] * x[i];
        if (off_plane != 0.0) return 0.0;
        const double a = x[n_ - 2], b = x[n_ - 1];
        if (a * a + b * b <= 1.0 || b <= 0.0) return 0.0;
        return std::exp(-b);
    }

    double bound() const override { return 1.0; }

    void ray_breakpoints(const Vec& x, const Vec& xi, std::vector<double>& out) const override {
        const Vec origin = Vec::zero(n_);
        for (double sgn : {+1.0, -1.0}) {
            sphere_crossings(x, xi, origin, 1.0, sgn, out);
            plane_crossing(x, xi, n_ - 1, 0.0, sgn, out);
        }
    }

  private:
    int n_;
};

class CrossField final : public ScalarField {
  public:
    explicit CrossField(int dim) : n_(dim) {}

    int dim() const override { return n_; }

    double operator()(const Vec& x) const override {
        for (int i = 0; i < n_; ++i)
            if (std::abs(x[i]) <= 1.0) return 0.0;
        return 1.0;
    }

    double bound() const override { return 1.0; }

    void ray_breakpoints(const Vec& x, const Vec& xi, std::vector<double>& out) const override {
        for (double sgn : {+1.0, -1.0})
            for (int i = 0; i < n_; ++i)
                for (double level : {-1.0, 1.0}) plane_crossing(x, xi, i, level, sgn, out);
    }

  private:
    int n_;
};

class RadialBumpField final : public ScalarField {
  public:
    explicit RadialBumpField(int dim) : n_(dim) {}

    int dim() const override { return n_; }

    double operator()(const Vec& x) const override {
        const double r2 = x.norm2();
        if (r2 >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - r2));
    }

    double bound() const override { return std::exp(-1.0); }
    bool zero_outside() const override { return true; }
    FarField far_field() const override { return FarField{1.0, 0.0, 0.0}; }

    void ray_breakpoints(const Vec& x, const Vec& xi, std::vector<double>& out) const override {
        const Vec origin = Vec::zero(n_);
        for (double sgn : {+1.0, -1.0}) sphere_crossings(x, xi, origin, 1.0, sgn, out);
    }

  private:
    int n_;
};

class GaussianField final : public ScalarField {
  public:
    GaussianField(int dim, double alpha) : n_(dim), alpha_(alpha) {}

    int dim() const override { return n_; }
    double operator()(const Vec& x) const override { return std::exp(-alpha_ * x.norm2()); }
    double bound() const override { return 1.0; }

    FarField far_field() const override {
        return FarField{std::sqrt(45.0 / alpha_), 0.0, std::exp(-45.0)};
    }

  private:
    int n_;
    double alpha_;
};

}  // namespace

FieldPtr make_barrier(double R, const Vec& center, double M, double s) {
    if (!(R > 0.0)) throw std::invalid_argument("barrier radius must be positive");
    return std::make_shared<BarrierField>(R, center, M, s);
}

Counterexample counterexample_from_string(const std::string& name) {
    if (name == "annulus_eq5") return Counterexample::annulus_eq5;
    if (name == "line_modified") return Counterexample::line_modified;
    if (name == "halfline_exp") return Counterexample::halfline_exp;
    if (name == "plane_sector_exp") return Counterexample::plane_sector_exp;
    if (name == "cross") return Counterexample::cross;
    if (name == "radial_bump") return Counterexample::radial_bump;
    throw ConfigError("unknown counterexample '" + name + "'");
}

const char* to_string(Counterexample c) {
    switch (c) {
        case Counterexample::annulus_eq5: return "annulus_eq5";
        case Counterexample::line_modified: return "line_modified";
        case Counterexample::halfline_exp: return "halfline_exp";
        case Counterexample::plane_sector_exp: return "plane_sector_exp";
        case Counterexample::cross: return "cross";
        case Counterexample::radial_bump: return "radial_bump";
    }
    return "?";
}

FieldPtr make_counterexample(Counterexample which, int dim) {
    switch (which) {
        case Counterexample::annulus_eq5: return std::make_shared<AnnulusField>(dim, false);
        case Counterexample::line_modified: return std::make_shared<AnnulusField>(dim, true);
        case Counterexample::halfline_exp: return std::make_shared<HalflineExpField>(dim);
        case Counterexample::plane_sector_exp: return std::make_shared<PlaneSectorExpField>(dim);
        case Counterexample::cross: return std::make_shared<CrossField>(dim);
        case Counterexample::radial_bump: return std::make_shared<RadialBumpField>(dim);
    }
    throw ConfigError("unknown counterexample");
}

EntireEigenfunction make_entire_eigenfunction(double mu, int k, double s, int dim) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (!(k >= 1 && k < dim))
        throw BadDims("entire eigenfunction requires 1 <= k < N");
    const double cs = cs_constant(s);
    const double i0 = gaussian_profile_integral(s);
    const double alpha = std::pow(mu / (2.0 * k * cs * i0), 1.0 / s);
    return EntireEigenfunction{std::make_shared<GaussianField>(dim, alpha), alpha, mu, k};
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

OracleCatalog OracleCatalog::standard(int dim, double s) {
    OracleCatalog cat(dim, s);
    const double cs = cs_constant(s);
    const double bt = beta(1.0 - s, s);
    const int N = dim;

    auto add = [&](std::string name, FieldPtr f, std::vector<KnownValue> kv) {
        cat.entries_.push_back(CatalogEntry{std::move(name), std::move(f), std::move(kv)});
    };

    for (double R : {1.0, 2.0}) {
        std::vector<KnownValue> kv;
        for (int k = 1; k <= N; ++k)
            for (Sign sg : {Sign::sup, Sign::inf}) {
                kv.push_back(KnownValue{Vec::zero(N), k, sg, KnownValue::Kind::equals,
                                        -k * cs * bt, 1e-3,
                                        "closed form -k*Cs*beta(1-s,s), R-independent"});
                Vec off = Vec::zero(N);
                off[0] = 0.37 * R;
                kv.push_back(KnownValue{off, k, sg, KnownValue::Kind::equals, -k * cs * bt,
                                        1e-3, "same identity at an off-center point"});
            }
        add("barrier_R" + std::to_string(static_cast<int>(R)),
            make_barrier(R, Vec::zero(N), 1.0, s), std::move(kv));
    }

    if (N >= 2) {
        const double n4 = 4.0;
        const double bound4 = -cs / (2.0 * s) * std::pow(1.0 - 1.0 / (n4 * n4), -s);
        Vec x4 = Vec::zero(N);
        x4[N - 1] = 1.0 / n4;
        add("annulus_eq5", make_counterexample(Counterexample::annulus_eq5, N),
            {KnownValue{Vec::zero(N), 1, Sign::sup, KnownValue::Kind::equals, 0.0, 1e-3,
                        "canonical directions off the last axis give exactly 0"},
             KnownValue{x4, 1, Sign::sup, KnownValue::Kind::upper_bound, bound4, 1e-3,
                        "every direction loses at least the mass of the far annulus"}});

        add("halfline_exp", make_counterexample(Counterexample::halfline_exp, N),
            {KnownValue{Vec::zero(N), 1, Sign::sup, KnownValue::Kind::equals, cs / (2.0 * s),
                        1e-3, "sup approached as the direction flattens; value Cs/(2s)"}});

        add("plane_sector_exp", make_counterexample(Counterexample::plane_sector_exp, N),
            {KnownValue{Vec::zero(N), 2, Sign::sup, KnownValue::Kind::equals,
                        cs * sector_tail_integral(s), 1e-3,
                        "sup of the in-plane pair objective; independent 1-D quadrature"}});

        const double boundN = -cs * (N - 1) / (2.0 * s) * std::pow(1.0 - 1.0 / (n4 * n4), -s);
        add("line_modified", make_counterexample(Counterexample::line_modified, N),
            {KnownValue{Vec::zero(N), N, Sign::sup, KnownValue::Kind::equals, 0.0, 1e-3,
                        "the canonical basis sees only the zero set"},
             KnownValue{x4, N, Sign::sup, KnownValue::Kind::upper_bound, boundN, 1e-3,
                        "at most one frame vector can ride the spared axis"}});

        Vec xc = Vec::zero(N);
        xc[0] = 0.31;
        xc[N - 1] = -0.4;
        add("cross", make_counterexample(Counterexample::cross, N),
            {KnownValue{Vec::zero(N), N, Sign::inf, KnownValue::Kind::equals, 0.0, 1e-3,
                        "coordinate lines never leave the zero set"},
             KnownValue{xc, N, Sign::inf, KnownValue::Kind::equals, 0.0, 1e-3,
                        "same at any interior point of the unit ball"}});

        Vec xb = Vec::zero(N);
        xb[0] = 0.5;
        add("radial_bump", make_counterexample(Counterexample::radial_bump, N),
            {KnownValue{xb, 1, Sign::inf, KnownValue::Kind::upper_bound, 0.0, 1e-6,
                        "tangential directions are nonpositive by radial monotonicity"}});

        EntireEigenfunction ee = make_entire_eigenfunction(1.0, 1, s, N);
        Vec xe = Vec::zero(N);
        xe[0] = 1.0;
        const double w1 = (*ee.field)(xe);
        add("gaussian_eigenfunction", ee.field,
            {KnownValue{xe, 1, Sign::inf, KnownValue::Kind::equals, -ee.mu * w1, 1e-3,
                        "inf attained orthogonally; equals -mu w by the alpha formula"}});
    }

    return cat;
}

std::vector<CatalogCheck> OracleCatalog::verify(const OperatorOptions& opts) const {
    std::vector<CatalogCheck> out;
    for (const CatalogEntry& e : entries_) {
        for (const KnownValue& kv : e.known) {
            CatalogCheck c;
            c.entry = e.name;
            c.known = kv;
            const FractionalOrder fo = FractionalOrder::make(s_);
            c.got = eval_Ik(*e.field, kv.x, kv.k, kv.sign, fo, opts);
            if (kv.kind == KnownValue::Kind::equals)
                c.pass = std::abs(c.got - kv.value) <= kv.tol;
            else
                c.pass = c.got <= kv.value + kv.tol;
            out.push_back(std::move(c));
        }
    }
    return out;
}

void OracleCatalog::dump(std::ostream& os) const {
    os << "oracle-catalog 1\n";
    os << "dim " << dim_ << "\n";
    os << "s " << s_ << "\n";
    for (const CatalogEntry& e : entries_) {
        std::ostringstream def;
        def << e.name << "|dim=" << dim_ << "|s=" << s_;
        os << "entry " << e.name << " hash 0x" << std::hex << fnv1a(def.str()) << std::dec
           << "\n";
        for (const KnownValue& kv : e.known) {
            os << "  known x=" << kv.x.str() << " k=" << kv.k << " sign=" << to_string(kv.sign)
               << (kv.kind == KnownValue::Kind::equals ? " equals " : " upper_bound ")
               << kv.value << " tol " << kv.tol << " rule: " << kv.rule << "\n";
        }
    }
}

}  // namespace fracframe
