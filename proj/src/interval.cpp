#include "ddeint/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddeint {

using boost::multiprecision::cpp_int;
using rnd::add_exact;
using rnd::div_exact;
using rnd::down;
using rnd::mul_exact;
using rnd::sub_exact;
using rnd::up;

Interval operator+(const Interval& a, const Interval& b) {
    double lo = a.lo() + b.lo();
    double hi = a.hi() + b.hi();
    if (!add_exact(a.lo(), b.lo(), lo)) lo = down(lo);
    if (!add_exact(a.hi(), b.hi(), hi)) hi = up(hi);
    return Interval(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    double lo = a.lo() - b.hi();
    double hi = a.hi() - b.lo();
    if (!sub_exact(a.lo(), b.hi(), lo)) lo = down(lo);
    if (!sub_exact(a.hi(), b.lo(), hi)) hi = up(hi);
    return Interval(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
    const double p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    const bool exact = mul_exact(a.lo(), b.lo(), p1) && mul_exact(a.lo(), b.hi(), p2) &&
                       mul_exact(a.hi(), b.lo(), p3) && mul_exact(a.hi(), b.hi(), p4);
    if (!exact) {
        lo = down(lo);
        hi = up(hi);
    }
    return Interval(lo, hi);
}

Interval operator*(double c, const Interval& b) {
    const double p1 = c * b.lo(), p2 = c * b.hi();
    double lo = std::min(p1, p2), hi = std::max(p1, p2);
    if (!(mul_exact(c, b.lo(), p1) && mul_exact(c, b.hi(), p2))) {
        lo = down(lo);
        hi = up(hi);
    }
    return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionByZeroInterval();
    const double q1 = a.lo() / b.lo(), q2 = a.lo() / b.hi();
    const double q3 = a.hi() / b.lo(), q4 = a.hi() / b.hi();
    double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    const bool exact = div_exact(a.lo(), b.lo(), q1) && div_exact(a.lo(), b.hi(), q2) &&
                       div_exact(a.hi(), b.lo(), q3) && div_exact(a.hi(), b.hi(), q4);
    if (!exact) {
        lo = down(lo);
        hi = up(hi);
    }
    return Interval(lo, hi);
}

namespace {

// binary exponentiation, tight for intervals with lo >= 0
Interval ipow_nonneg(const Interval& a, int n) {
    Interval result(1.0);
    Interval base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

} // namespace

Interval pow_int(const Interval& a, int n) {
    if (n < 0) throw InvalidInterval("negative exponent in pow_int");
    if (n == 0) return Interval(1.0);
    if (n == 1) return a;
    if (a.lo() >= 0.0) return ipow_nonneg(a, n);
    if (a.hi() <= 0.0) {
        Interval p = ipow_nonneg(-a, n);
        return (n % 2 == 0) ? p : -p;
    }
    if (n % 2 == 0) {
        Interval m(a.mag());
        return Interval(0.0, ipow_nonneg(m, n).hi());
    }
    Interval neg = ipow_nonneg(Interval(0.0, -a.lo()), n);
    Interval pos = ipow_nonneg(Interval(0.0, a.hi()), n);
    return Interval(-neg.hi(), pos.hi());
}

Interval intersect(const Interval& a, const Interval& b) {
    double lo = std::max(a.lo(), b.lo());
    double hi = std::min(a.hi(), b.hi());
    if (lo > hi) throw EmptyIntersection();
    return Interval(lo, hi);
}

Interval pi_enclosure() {
    // nearest double below pi; the successor lies above
    const double pi_lo = 3.141592653589793115997963468544185161590576171875;
    return Interval::unchecked(pi_lo, up(pi_lo));
}

namespace {

// Taylor kernels, valid for |y| <= 0.8 (arguments reduced to +-pi/4).
// Truncation bounded by the first omitted term (alternating series);
// terms are summed smallest-first so rounding stays at the small scale.
Interval sin_kernel(const Interval& y) {
    const Interval y2 = pow_int(y, 2);
    Interval term(1.0);
    Interval t[9];
    for (int k = 1; k <= 8; ++k) {
        term = term * y2 / Interval(static_cast<double>(2 * k) * (2 * k + 1));
        t[k] = term;
    }
    const double tail = 1.6e-18; // 0.8^18/19! with margin
    Interval r(-tail, tail);
    for (int k = 8; k >= 1; --k) r = (k % 2) ? r - t[k] : r + t[k];
    return intersect(y + y * r, Interval(-1.0, 1.0));
}

Interval cos_kernel(const Interval& y) {
    const Interval y2 = pow_int(y, 2);
    Interval term(1.0);
    Interval t[9];
    for (int k = 1; k <= 8; ++k) {
        term = term * y2 / Interval(static_cast<double>(2 * k - 1) * (2 * k));
        t[k] = term;
    }
    const double tail = 3.1e-17; // 0.8^18/18! with margin
    Interval r(-tail, tail);
    for (int k = 8; k >= 1; --k) r = (k % 2) ? r - t[k] : r + t[k];
    return intersect(Interval(1.0) + r, Interval(-1.0, 1.0));
}

// sin over a thin interval: reduce by the nearest multiple of pi/2.
// pi/2 = C1 + C2 + delta with C1 carrying only 33 mantissa bits, so
// m*C1 is exact for moderate m and the reduced argument stays tight.
Interval sin_reduced(const Interval& x) {
    const double C1 = 1.5707963267341256e+00;
    const double C2 = 6.077100506506192e-11;
    const Interval DELTA = Interval::unchecked(3.5e-27, 3.6e-27);
    const double m = std::nearbyint(x.mid() / 1.5707963267948966);
    if (std::fabs(m) > 1e15) return Interval(-1.0, 1.0);
    Interval y;
    const double mc1 = m * C1;
    if (std::fabs(m) <= 400000.0 && mul_exact(m, C1, mc1)) {
        // exact split of x - m*C1 keeps the whole reduction at one rounding
        double s1, e1, s2, e2;
        rnd::two_diff(x.lo(), mc1, s1, e1);
        rnd::two_diff(x.hi(), mc1, s2, e2);
        const Interval tail =
            hull(Interval(e1), Interval(e2)) - m * Interval(C2) - m * DELTA;
        y = Interval(s1, s2) + tail;
    } else {
        y = x - m * (pi_enclosure() / Interval(2.0));
    }
    if (y.mag() > 0.8) return Interval(-1.0, 1.0); // reduction failed, trivial bound
    const long q = static_cast<long>(m) % 4;
    switch ((q + 4) % 4) {
        case 0: return sin_kernel(y);
        case 1: return cos_kernel(y);
        case 2: return -sin_kernel(y);
        default: return -cos_kernel(y);
    }
}

// Enclosure of an oscillation from endpoint values plus detected extrema.
// Extrema sit at (k + phase)*pi; maxima at even k when `max_at_even`.
template <typename PointEval>
Interval trig_enclosure(const Interval& x, double phase, bool max_at_even, PointEval point_eval) {
    if (!std::isfinite(x.lo()) || !std::isfinite(x.hi())) return Interval(-1.0, 1.0);
    const Interval pi = pi_enclosure();
    if (x.diam() >= 2.0 * pi.hi()) return Interval(-1.0, 1.0);

    Interval range = hull(point_eval(Interval(x.lo())), point_eval(Interval(x.hi())));

    const long k_from = static_cast<long>(std::floor(x.lo() / pi.mid() - phase)) - 1;
    const long k_to = static_cast<long>(std::ceil(x.hi() / pi.mid() - phase)) + 1;
    bool hit_max = false, hit_min = false;
    for (long k = k_from; k <= k_to; ++k) {
        const Interval crit = (Interval(static_cast<double>(k)) + Interval(phase)) * pi;
        if (crit.hi() < x.lo() || crit.lo() > x.hi()) continue;
        const bool is_max = (((k % 2) + 2) % 2 == 0) == max_at_even;
        (is_max ? hit_max : hit_min) = true;
    }
    double lo = hit_min ? -1.0 : range.lo();
    double hi = hit_max ? 1.0 : range.hi();
    return intersect(Interval(lo, hi), Interval(-1.0, 1.0));
}

} // namespace

Interval sin(const Interval& x) {
    return trig_enclosure(x, 0.5, true, [](const Interval& p) { return sin_reduced(p); });
}

Interval cos(const Interval& x) {
    const Interval half_pi = pi_enclosure() / Interval(2.0);
    return trig_enclosure(x, 0.0, true,
                          [&](const Interval& p) { return sin_reduced(p + half_pi); });
}

namespace {

struct Decimal {
    bool negative = false;
    cpp_int numerator;   // magnitude
    cpp_int denominator; // 10^fraction_digits
};

Decimal parse_decimal_literal(std::string_view s) {
    size_t i = 0, n = s.size();
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    while (n > i && std::isspace(static_cast<unsigned char>(s[n - 1]))) --n;
    if (i >= n) throw ParseError("empty decimal literal");
    Decimal d;
    if (s[i] == '-') {
        d.negative = true;
        ++i;
    }
    size_t digits = 0, frac_digits = 0;
    bool seen_dot = false;
    d.numerator = 0;
    for (; i < n; ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw ParseError("second '.' in \"" + std::string(s) + "\"");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw ParseError("unexpected character in \"" + std::string(s) + "\"");
        d.numerator = d.numerator * 10 + (c - '0');
        ++digits;
        if (seen_dot) ++frac_digits;
    }
    if (digits == 0) throw ParseError("no digits in \"" + std::string(s) + "\"");
    d.denominator = 1;
    for (size_t k = 0; k < frac_digits; ++k) d.denominator *= 10;
    if (d.numerator == 0) d.negative = false;
    return d;
}

// exact sign of v - num/den
int compare_exact(double v, const Decimal& d) {
    if (std::isnan(v)) throw InvalidInterval("nan in decimal comparison");
    if (v == std::numeric_limits<double>::infinity()) return 1;
    if (v == -std::numeric_limits<double>::infinity()) return -1;
    cpp_int dec_num = d.negative ? cpp_int(-d.numerator) : d.numerator;
    if (v == 0.0) {
        if (dec_num == 0) return 0;
        return dec_num > 0 ? -1 : 1;
    }
    int exp2 = 0;
    double fr = std::frexp(v, &exp2); // v = fr * 2^exp2, 0.5 <= |fr| < 1
    cpp_int mant = static_cast<long long>(std::ldexp(fr, 53));
    int e = exp2 - 53; // v = mant * 2^e exactly
    cpp_int lhs = mant, rhs = dec_num;
    if (e >= 0)
        lhs <<= e;
    else
        rhs <<= -e;
    lhs *= d.denominator;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// convert %.*e output to plain decimal notation
std::string expand_exponent_notation(const std::string& s) {
    auto epos = s.find_first_of("eE");
    if (epos == std::string::npos) return s;
    std::string mant = s.substr(0, epos);
    int expo = std::atoi(s.c_str() + epos + 1);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string digits;
    int point = 0;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '-' || c == '+') continue;
        if (c == '.') {
            seen_dot = true;
            continue;
        }
        digits.push_back(c);
        if (!seen_dot) ++point;
    }
    point += expo;
    std::string out = neg ? "-" : "";
    if (point <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-point), '0');
        out += digits;
    } else if (point >= static_cast<int>(digits.size())) {
        out += digits;
        out.append(static_cast<size_t>(point) - digits.size(), '0');
    } else {
        out += digits.substr(0, static_cast<size_t>(point)) + "." +
               digits.substr(static_cast<size_t>(point));
    }
    return out;
}

// one unit in the last printed digit of a plain decimal string
std::string step_plain_decimal(const std::string& s, bool towards_minus_inf) {
    bool neg = !s.empty() && s[0] == '-';
    std::string digits;
    int dot_at = -1;
    for (char c : s) {
        if (c == '-') continue;
        if (c == '.') {
            dot_at = static_cast<int>(digits.size());
            continue;
        }
        digits.push_back(c);
    }
    const bool shrink = (neg != towards_minus_inf);
    if (shrink) {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[i] == '0') digits[static_cast<size_t>(i--)] = '9';
        if (i >= 0)
            digits[static_cast<size_t>(i)] -= 1;
        else
            digits.assign(digits.size(), '0');
    } else {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[i] == '9') digits[static_cast<size_t>(i--)] = '0';
        if (i >= 0)
            digits[static_cast<size_t>(i)] += 1;
        else {
            digits.insert(digits.begin(), '1');
            if (dot_at >= 0) dot_at += 1;
        }
    }
    std::string out = neg ? "-" : "";
    if (dot_at < 0)
        out += digits;
    else
        out += digits.substr(0, static_cast<size_t>(dot_at)) + "." +
               digits.substr(static_cast<size_t>(dot_at));
    return out;
}

std::string decimal_bound(double x, int significant, bool lower) {
    if (x == 0.0) return "0";
    if (!std::isfinite(x)) throw InvalidInterval("non-finite bound in decimal printing");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", significant - 1, x);
    std::string s = expand_exponent_notation(buf);
    for (int guard = 0; guard < 8; ++guard) {
        int c = compare_double_decimal(x, s);
        if (lower ? (c >= 0) : (c <= 0)) return s;
        s = step_plain_decimal(s, lower);
    }
    throw ParseError("failed to round decimal outward");
}

} // namespace

int compare_double_decimal(double v, std::string_view s) {
    return compare_exact(v, parse_decimal_literal(s));
}

Interval parse_decimal(std::string_view s) {
    const Decimal d = parse_decimal_literal(s);
    if (d.numerator == 0) return Interval(0.0);
    double q = static_cast<double>(d.numerator) / static_cast<double>(d.denominator);
    if (d.negative) q = -q;
    if (!std::isfinite(q))
        q = d.negative ? -std::numeric_limits<double>::max() : std::numeric_limits<double>::max();
    int c = compare_exact(q, d);
    for (int guard = 0; c < 0 && guard < 2100; ++guard) {
        double nq = up(q);
        if (compare_exact(nq, d) > 0) return Interval(q, nq);
        q = nq;
        c = compare_exact(q, d);
    }
    for (int guard = 0; c > 0 && guard < 2100; ++guard) {
        double nq = down(q);
        if (compare_exact(nq, d) < 0) return Interval(nq, q);
        q = nq;
        c = compare_exact(q, d);
    }
    if (c == 0) return Interval(q);
    throw ParseError("failed to bracket \"" + std::string(s) + "\"");
}

std::string to_hex(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%a", x);
    return buf;
}

std::string to_hex(const Interval& x) { return to_hex(x.lo()) + " " + to_hex(x.hi()); }

double double_from_hex(std::string_view s) {
    std::string tmp(s);
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str()) throw ParseError("bad float literal \"" + tmp + "\"");
    return v;
}

Interval interval_from_hex_pair(std::string_view lo, std::string_view hi) {
    return Interval(double_from_hex(lo), double_from_hex(hi));
}

std::string decimal_lower(double x, int significant) { return decimal_bound(x, significant, true); }
std::string decimal_upper(double x, int significant) {
    return decimal_bound(x, significant, false);
}

std::string format_outward(const Interval& x, int significant) {
    return "[" + decimal_lower(x.lo(), significant) + ", " + decimal_upper(x.hi(), significant) +
           "]";
}

} // namespace ddeint
