#pragma once
/// @file series.hpp
/// @brief Truncated power series over an exact scalar domain (Rational or
///        ModPrimePower).  A series of order N stores the coefficients
///        c_0..c_{N-1}; binary operations return the minimum of the orders.
///
/// Scalar domains are closed: there is no implicit promotion between Rational
/// and ModPrimePower (an explicit reduction bridges them, see hg.hpp).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hgk3/errors.hpp"
#include "hgk3/modp.hpp"

namespace hgk3 {

template <class S>
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw error("TruncatedSeries: order must be >= 1");
    }

    /// Constant series of the given order, with scalar domain taken from `value`.
    static TruncatedSeries constant(const S& value, int order) {
        if (order < 1) throw error("TruncatedSeries: order must be >= 1");
        std::vector<S> c(static_cast<std::size_t>(order), zero_like(value));
        c[0] = value;
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()); }
    const S& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    S& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<S>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const S& x : c_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    /// Copy truncated (or zero-padded is forbidden: n must be <= order).
    TruncatedSeries truncated(int n) const {
        if (n < 1 || n > order()) throw TruncationBeyondOrder();
        return TruncatedSeries(std::vector<S>(c_.begin(), c_.begin() + n));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        std::vector<S> c;
        c.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c.push_back(a[i] + b[i]);
        return TruncatedSeries(std::move(c));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        std::vector<S> c;
        c.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c.push_back(a[i] - b[i]);
        return TruncatedSeries(std::move(c));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        const S z = zero_like(a[0]);
        std::vector<S> c(static_cast<std::size_t>(n), z);
        for (int i = 0; i < n; ++i) {
            if (scalar_is_zero(a[i])) continue;
            for (int j = 0; i + j < n; ++j)
                c[static_cast<std::size_t>(i + j)] = c[static_cast<std::size_t>(i + j)] + a[i] * b[j];
        }
        return TruncatedSeries(std::move(c));
    }
    friend TruncatedSeries operator*(const S& s, const TruncatedSeries& a) {
        std::vector<S> c;
        c.reserve(a.c_.size());
        for (const S& x : a.c_) c.push_back(s * x);
        return TruncatedSeries(std::move(c));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        std::vector<S> c;
        c.reserve(a.c_.size());
        for (const S& x : a.c_) c.push_back(-x);
        return TruncatedSeries(std::move(c));
    }

    /// Division by a series whose constant term is a unit (NonUnitDivisor
    /// otherwise).  Standard long division in the truncated ring.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        if (!is_unit_scalar(b[0])) throw NonUnitDivisor();
        const S b0inv = recip(b[0]);
        const S z = zero_like(a[0]);
        std::vector<S> q(static_cast<std::size_t>(n), z);
        for (int k = 0; k < n; ++k) {
            S acc = a[k];
            for (int j = 0; j < k; ++j)
                acc = acc - q[static_cast<std::size_t>(j)] * b[k - j];
            q[static_cast<std::size_t>(k)] = acc * b0inv;
        }
        return TruncatedSeries(std::move(q));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) return false;
        for (int i = 0; i < a.order(); ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    }

  private:
    std::vector<S> c_;
};

/// d/dt; the result determines one coefficient fewer than the input
/// (a length-1 input yields the zero constant series).
template <class S>
TruncatedSeries<S> derivative(const TruncatedSeries<S>& f) {
    int n = std::max(f.order() - 1, 1);
    const S z = zero_like(f[0]);
    std::vector<S> c(static_cast<std::size_t>(n), z);
    for (int i = 1; i < f.order(); ++i)
        c[static_cast<std::size_t>(i - 1)] = scalar_from_int(z, i) * f[i];
    return TruncatedSeries<S>(std::move(c));
}

/// theta(f) = t * f'; coefficientwise i*c_i, so the order is preserved.
template <class S>
TruncatedSeries<S> theta(const TruncatedSeries<S>& f) {
    const S z = zero_like(f[0]);
    std::vector<S> c(static_cast<std::size_t>(f.order()), z);
    for (int i = 1; i < f.order(); ++i)
        c[static_cast<std::size_t>(i)] = scalar_from_int(z, i) * f[i];
    return TruncatedSeries<S>(std::move(c));
}

/// f(g(t)) for inner series g with zero constant term
/// (NonzeroConstantInComposition otherwise).  Horner over the series ring.
template <class S>
TruncatedSeries<S> compose(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
    if (!scalar_is_zero(g[0])) throw NonzeroConstantInComposition();
    int n = std::min(f.order(), g.order());
    TruncatedSeries<S> gi = g.truncated(n);
    TruncatedSeries<S> acc = TruncatedSeries<S>::constant(f[n - 1], n);
    for (int i = n - 2; i >= 0; --i)
        acc = acc * gi + TruncatedSeries<S>::constant(f[i], n);
    return acc;
}

/// True iff a and b agree on coefficients 0..n-1.
template <class S>
bool equal_to_order(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b, int n) {
    if (n > a.order() || n > b.order()) throw TruncationBeyondOrder();
    for (int i = 0; i < n; ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

using QSeries = TruncatedSeries<Rational>;
using PSeries = TruncatedSeries<ModPrimePower>;

} // namespace hgk3
