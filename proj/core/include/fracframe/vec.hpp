#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include "fracframe/types.hpp"

namespace fracframe {

/// Hard cap on the ambient dimension. Pointwise evaluation runs in
/// N <= 3; the grid solver in N <= 2.
inline constexpr int kMaxDim = 3;

/// Small stack-allocated point/vector in R^N, N <= kMaxDim.
class Vec {
  public:
    Vec() = default;

    explicit Vec(int dim) : n_(check_dim(dim)) { c_.fill(0.0); }

    Vec(double x) : n_(1) { c_ = {x, 0.0, 0.0}; }
    Vec(double x, double y) : n_(2) { c_ = {x, y, 0.0}; }
    Vec(double x, double y, double z) : n_(3) { c_ = {x, y, z}; }

    static Vec zero(int dim) { return Vec(dim); }

    static Vec basis(int i, int dim) {
        Vec v(dim);
        if (i < 0 || i >= dim) throw BadDims("basis index out of range");
        v.c_[static_cast<std::size_t>(i)] = 1.0;
        return v;
    }

    int dim() const { return n_; }

    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    Vec operator+(const Vec& o) const {
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Vec operator*(double a) const {
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] * a;
        return r;
    }
    Vec operator-() const { return *this * -1.0; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
        return *this;
    }

    friend Vec operator*(double a, const Vec& v) { return v * a; }

    double dot(const Vec& o) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += c_[i] * o.c_[i];
        return s;
    }

    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    Vec normalized() const {
        const double r = norm();
        if (r == 0.0) throw DegenerateChart("cannot normalize zero vector");
        return *this * (1.0 / r);
    }

    /// Saturating add-scaled: *this + t * d, dimension taken from *this.
    Vec fma(double t, const Vec& d) const {
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] + t * d.c_[i];
        return r;
    }

    bool operator==(const Vec& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ", ";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }

  private:
    static int check_dim(int dim) {
        if (dim < 1 || dim > kMaxDim) throw BadDims("dimension must be in [1," + std::to_string(kMaxDim) + "]");
        return dim;
    }

    std::array<double, kMaxDim> c_{};
    int n_ = 0;
};

}  // namespace fracframe
