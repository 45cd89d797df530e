#ifndef DDEINT_TESTS_ORACLE_SERIES_HPP
#define DDEINT_TESTS_ORACLE_SERIES_HPP

// Plain truncated power-series arithmetic in long double.  Written against
// the textbook recurrences, deliberately separate from the library jets, to
// serve as the independent oracle for jet coefficients.

#include <array>
#include <cstddef>

namespace oracle {

constexpr int kOrder = 8; // coefficients 0..kOrder

struct Series {
    std::array<long double, kOrder + 1> c{};
};

inline Series s_const(long double v) {
    Series s;
    s.c[0] = v;
    return s;
}

inline Series operator+(const Series& a, const Series& b) {
    Series r;
    for (int i = 0; i <= kOrder; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline Series operator-(const Series& a, const Series& b) {
    Series r;
    for (int i = 0; i <= kOrder; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline Series operator*(const Series& a, const Series& b) {
    Series r;
    for (int i = 0; i <= kOrder; ++i)
        for (int j = 0; j <= i; ++j) r.c[i] += a.c[j] * b.c[i - j];
    return r;
}

inline Series operator/(const Series& a, const Series& b) {
    Series q;
    for (int i = 0; i <= kOrder; ++i) {
        long double acc = a.c[i];
        for (int j = 1; j <= i; ++j) acc -= b.c[j] * q.c[i - j];
        q.c[i] = acc / b.c[0];
    }
    return q;
}

inline Series s_pow(const Series& a, int n) {
    Series r = s_const(1.0L);
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

// series of beta*u/(1+u^n) - gamma*v
inline Series mackey_glass(const Series& u, const Series& v, long double beta, long double gamma,
                           int n) {
    Series num = s_const(beta) * u;
    Series den = s_const(1.0L) + s_pow(u, n);
    return num / den - s_const(gamma) * v;
}

} // namespace oracle

#endif
