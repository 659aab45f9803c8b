#pragma once

/**
 * Forward-mode dual numbers with a fixed number of partial derivatives,
 * used to differentiate straight-cube parametrizations.
 */

#include <array>
#include <cmath>

namespace cubevol {

template <int N>
struct Dual
{
    double v = 0.0;
    std::array<double, N> d{};

    Dual() = default;
    Dual(double value) : v(value) {}

    static Dual variable(double value, int index)
    {
        Dual x(value);
        x.d[index] = 1.0;
        return x;
    }

    Dual& operator+=(const Dual& o) { v += o.v; for (int i = 0; i < N; ++i) d[i] += o.d[i]; return *this; }
    Dual& operator-=(const Dual& o) { v -= o.v; for (int i = 0; i < N; ++i) d[i] -= o.d[i]; return *this; }
    Dual& operator*=(const Dual& o)
    {
        for (int i = 0; i < N; ++i)
            d[i] = d[i] * o.v + v * o.d[i];
        v *= o.v;
        return *this;
    }
    Dual& operator/=(const Dual& o)
    {
        const double inv = 1.0 / o.v;
        const double r = v * inv;
        for (int i = 0; i < N; ++i)
            d[i] = (d[i] - r * o.d[i]) * inv;
        v = r;
        return *this;
    }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
    friend Dual operator-(Dual a)
    {
        a.v = -a.v;
        for (auto& x : a.d) x = -x;
        return a;
    }
    friend bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
};

namespace detail {

template <int N>
Dual<N> chain(const Dual<N>& x, double value, double derivative)
{
    Dual<N> r(value);
    for (int i = 0; i < N; ++i)
        r.d[i] = derivative * x.d[i];
    return r;
}

}   // namespace detail

template <int N> Dual<N> sinh(const Dual<N>& x) { return detail::chain(x, std::sinh(x.v), std::cosh(x.v)); }
template <int N> Dual<N> cosh(const Dual<N>& x) { return detail::chain(x, std::cosh(x.v), std::sinh(x.v)); }
template <int N> Dual<N> sqrt(const Dual<N>& x)
{
    const double s = std::sqrt(x.v);
    return detail::chain(x, s, 0.5 / s);
}
template <int N> Dual<N> acosh(const Dual<N>& x)
{
    return detail::chain(x, std::acosh(x.v), 1.0 / std::sqrt(x.v * x.v - 1.0));
}

inline double value_of(double x) { return x; }
template <int N> double value_of(const Dual<N>& x) { return x.v; }

}   // namespace cubevol
