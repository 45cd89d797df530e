#ifndef DDEINT_INTERVAL_HPP
#define DDEINT_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "ddeint/errors.hpp"

namespace ddeint {

namespace rnd {

inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Exactness tests: true only when the rounded result equals the real one,
// so widening can be skipped without losing containment.
inline bool add_exact(double a, double b, double s) {
    return (s - a) == b && (s - b) == a;
}
inline bool sub_exact(double a, double b, double s) {
    return (a - s) == b && (s + b) == a;
}
inline bool mul_exact(double a, double b, double p) {
    return std::fma(a, b, -p) == 0.0;
}
inline bool div_exact(double a, double b, double q) {
    return std::fma(q, b, -a) == 0.0;
}

// Knuth two-sum applied to a - b: returns s, e with a - b = s + e exactly
inline void two_diff(double a, double b, double& s, double& e) {
    const double c = -b;
    s = a + c;
    const double z = s - a;
    e = (a - (s - z)) + (c - z);
}

} // namespace rnd

// Closed interval with double endpoints.  Every operation returns an
// enclosure of the exact real image (outward rounding).
class Interval {
  public:
    Interval() : lo_(0.0), hi_(0.0) {}
    explicit Interval(double pt) : lo_(pt), hi_(pt) { validate(); }
    Interval(double lo, double hi) : lo_(lo), hi_(hi) { validate(); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool is_point() const { return lo_ == hi_; }

    double mid() const {
        if (lo_ == hi_) return lo_;
        double m = lo_ + 0.5 * (hi_ - lo_);
        if (!(m >= lo_)) m = lo_;
        if (m > hi_) m = hi_;
        return m;
    }
    double rad() const {
        double m = mid();
        double r1 = rnd::up(m - lo_);
        double r2 = rnd::up(hi_ - m);
        return r1 > r2 ? r1 : r2;
    }
    double diam() const {
        double d = hi_ - lo_;
        return rnd::sub_exact(hi_, lo_, d) ? d : rnd::up(d);
    }
    // max |x| over the interval
    double mag() const {
        double a = std::fabs(lo_), b = std::fabs(hi_);
        return a > b ? a : b;
    }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

    Interval operator-() const { return Interval(-hi_, -lo_); }

    static Interval unchecked(double lo, double hi) {
        Interval r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }
    static Interval entire_sym(double m) { return Interval(-m, m); }

  private:
    void validate() {
        if (std::isnan(lo_) || std::isnan(hi_) || lo_ > hi_)
            throw InvalidInterval("[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]");
        if (lo_ == 0.0) lo_ = 0.0; // normalize -0
        if (hi_ == 0.0) hi_ = 0.0;
    }
    double lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator*(double c, const Interval& b);
inline Interval operator*(const Interval& a, double c) { return c * a; }

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

// x^n for integer n >= 0, tight on monotone pieces
Interval pow_int(const Interval& a, int n);

inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}
Interval intersect(const Interval& a, const Interval& b); // throws EmptyIntersection

inline bool subset(const Interval& a, const Interval& b) {
    return b.lo() <= a.lo() && a.hi() <= b.hi();
}
// a contained in the interior of b (strict endpoint inequalities)
inline bool subset_interior(const Interval& a, const Interval& b) {
    return b.lo() < a.lo() && a.hi() < b.hi();
}
inline bool disjoint(const Interval& a, const Interval& b) {
    return a.hi() < b.lo() || b.hi() < a.lo();
}
inline Interval widen(const Interval& a, double abs_inflation) {
    return Interval(rnd::down(a.lo() - abs_inflation), rnd::up(a.hi() + abs_inflation));
}
// enclosure of |x| over the interval
inline Interval abs_hull(const Interval& a) {
    if (a.lo() >= 0.0) return a;
    if (a.hi() <= 0.0) return -a;
    return Interval(0.0, a.mag());
}
inline Interval max_hull(const Interval& a, const Interval& b) {
    return Interval(a.lo() > b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

Interval pi_enclosure();
Interval sin(const Interval& x);
Interval cos(const Interval& x);

// Tightest double interval containing the exact value of a decimal literal
// (optional '-', digits, optional '.' digits); exact integer comparison
// against numerator/10^digits decides the endpoints.
Interval parse_decimal(std::string_view s);

// -1/0/+1: exact comparison of the double v against the decimal literal s
int compare_double_decimal(double v, std::string_view s);

// bit-exact serialization
std::string to_hex(double x);
std::string to_hex(const Interval& x);
double double_from_hex(std::string_view s);
Interval interval_from_hex_pair(std::string_view lo, std::string_view hi);

// decimal strings d with d <= x (lower) resp. d >= x (upper), verified by
// exact comparison; used for outward-rounded report printing
std::string decimal_lower(double x, int significant);
std::string decimal_upper(double x, int significant);
std::string format_outward(const Interval& x, int significant);

} // namespace ddeint

#endif
