#pragma once

#include <Eigen/Core>
#include <cmath>

namespace steadipose {

/// Forward-mode dual scalar: value plus an N-vector of first derivatives.
/// Templating the residual evaluation on the scalar type and instantiating
/// it with Jet<5> yields the exact analytic Jacobian of the per-frame
/// objective without hand-derived chain rules.
template <int N>
struct Jet {
    double a = 0.0;
    Eigen::Matrix<double, N, 1> v = Eigen::Matrix<double, N, 1>::Zero();

    Jet() = default;
    Jet(double value) : a(value) {}  // NOLINT: constants promote implicitly
    Jet(double value, int k) : a(value) { v[k] = 1.0; }
    Jet(double value, const Eigen::Matrix<double, N, 1>& deriv) : a(value), v(deriv) {}
};

template <int N>
inline Jet<N> operator+(const Jet<N>& x, const Jet<N>& y) {
    return Jet<N>(x.a + y.a, x.v + y.v);
}
template <int N>
inline Jet<N> operator+(const Jet<N>& x, double s) {
    return Jet<N>(x.a + s, x.v);
}
template <int N>
inline Jet<N> operator+(double s, const Jet<N>& x) {
    return Jet<N>(s + x.a, x.v);
}
template <int N>
inline Jet<N> operator-(const Jet<N>& x) {
    return Jet<N>(-x.a, -x.v);
}
template <int N>
inline Jet<N> operator-(const Jet<N>& x, const Jet<N>& y) {
    return Jet<N>(x.a - y.a, x.v - y.v);
}
template <int N>
inline Jet<N> operator-(const Jet<N>& x, double s) {
    return Jet<N>(x.a - s, x.v);
}
template <int N>
inline Jet<N> operator-(double s, const Jet<N>& x) {
    return Jet<N>(s - x.a, -x.v);
}
template <int N>
inline Jet<N> operator*(const Jet<N>& x, const Jet<N>& y) {
    return Jet<N>(x.a * y.a, y.a * x.v + x.a * y.v);
}
template <int N>
inline Jet<N> operator*(const Jet<N>& x, double s) {
    return Jet<N>(x.a * s, s * x.v);
}
template <int N>
inline Jet<N> operator*(double s, const Jet<N>& x) {
    return Jet<N>(s * x.a, s * x.v);
}
template <int N>
inline Jet<N> operator/(const Jet<N>& x, const Jet<N>& y) {
    const double inv = 1.0 / y.a;
    return Jet<N>(x.a * inv, inv * x.v - (x.a * inv * inv) * y.v);
}
template <int N>
inline Jet<N> operator/(const Jet<N>& x, double s) {
    const double inv = 1.0 / s;
    return Jet<N>(x.a * inv, inv * x.v);
}
template <int N>
inline Jet<N> operator/(double s, const Jet<N>& y) {
    const double inv = 1.0 / y.a;
    return Jet<N>(s * inv, -(s * inv * inv) * y.v);
}

template <int N>
inline Jet<N>& operator+=(Jet<N>& x, const Jet<N>& y) {
    x = x + y;
    return x;
}
template <int N>
inline Jet<N>& operator-=(Jet<N>& x, const Jet<N>& y) {
    x = x - y;
    return x;
}
template <int N>
inline Jet<N>& operator*=(Jet<N>& x, const Jet<N>& y) {
    x = x * y;
    return x;
}
template <int N>
inline Jet<N>& operator/=(Jet<N>& x, const Jet<N>& y) {
    x = x / y;
    return x;
}

template <int N>
inline bool operator<(const Jet<N>& x, const Jet<N>& y) {
    return x.a < y.a;
}
template <int N>
inline bool operator<(const Jet<N>& x, double y) {
    return x.a < y;
}
template <int N>
inline bool operator<(double x, const Jet<N>& y) {
    return x < y.a;
}
template <int N>
inline bool operator>(const Jet<N>& x, const Jet<N>& y) {
    return x.a > y.a;
}
template <int N>
inline bool operator>(const Jet<N>& x, double y) {
    return x.a > y;
}
template <int N>
inline bool operator>(double x, const Jet<N>& y) {
    return x > y.a;
}
template <int N>
inline bool operator<=(const Jet<N>& x, const Jet<N>& y) {
    return x.a <= y.a;
}
template <int N>
inline bool operator>=(const Jet<N>& x, const Jet<N>& y) {
    return x.a >= y.a;
}
template <int N>
inline bool operator==(const Jet<N>& x, const Jet<N>& y) {
    return x.a == y.a;
}
template <int N>
inline bool operator!=(const Jet<N>& x, const Jet<N>& y) {
    return x.a != y.a;
}

template <int N>
inline Jet<N> sqrt(const Jet<N>& x) {
    const double s = std::sqrt(x.a);
    return Jet<N>(s, (0.5 / s) * x.v);
}
template <int N>
inline Jet<N> exp(const Jet<N>& x) {
    const double e = std::exp(x.a);
    return Jet<N>(e, e * x.v);
}
template <int N>
inline Jet<N> log(const Jet<N>& x) {
    return Jet<N>(std::log(x.a), (1.0 / x.a) * x.v);
}
template <int N>
inline Jet<N> log1p(const Jet<N>& x) {
    return Jet<N>(std::log1p(x.a), (1.0 / (1.0 + x.a)) * x.v);
}
template <int N>
inline Jet<N> sin(const Jet<N>& x) {
    return Jet<N>(std::sin(x.a), std::cos(x.a) * x.v);
}
template <int N>
inline Jet<N> cos(const Jet<N>& x) {
    return Jet<N>(std::cos(x.a), -std::sin(x.a) * x.v);
}
template <int N>
inline Jet<N> abs(const Jet<N>& x) {
    return x.a < 0.0 ? -x : x;
}
template <int N>
inline Jet<N> atan2(const Jet<N>& y, const Jet<N>& x) {
    const double norm2 = x.a * x.a + y.a * y.a;
    return Jet<N>(std::atan2(y.a, x.a), (x.a * y.v - y.a * x.v) / norm2);
}

/// Value accessors usable generically in code templated on double-or-Jet.
inline double scalar_value(double x) { return x; }
template <int N>
inline double scalar_value(const Jet<N>& x) {
    return x.a;
}

}  // namespace steadipose

namespace Eigen {

template <int N>
struct NumTraits<steadipose::Jet<N>> {
    using Real = steadipose::Jet<N>;
    using NonInteger = steadipose::Jet<N>;
    using Nested = steadipose::Jet<N>;
    using Literal = steadipose::Jet<N>;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 1 + N,
        MulCost = 3 + 2 * N,
    };

    static inline Real epsilon() { return Real(NumTraits<double>::epsilon()); }
    static inline Real dummy_precision() { return Real(1e-12); }
    static inline Real highest() { return Real(NumTraits<double>::highest()); }
    static inline Real lowest() { return Real(NumTraits<double>::lowest()); }
    static inline int digits10() { return NumTraits<double>::digits10(); }
    static inline int max_digits10() { return NumTraits<double>::max_digits10(); }
};

template <int N, typename BinaryOp>
struct ScalarBinaryOpTraits<steadipose::Jet<N>, double, BinaryOp> {
    using ReturnType = steadipose::Jet<N>;
};
template <int N, typename BinaryOp>
struct ScalarBinaryOpTraits<double, steadipose::Jet<N>, BinaryOp> {
    using ReturnType = steadipose::Jet<N>;
};

}  // namespace Eigen
