#ifndef DDEINT_TESTS_ORACLE_STEPS_HPP
#define DDEINT_TESTS_ORACLE_STEPS_HPP

// Exact rational method-of-steps solution of x'(t) = x(t-1), x == 1 on
// [-1, 0]: on each unit segment the solution is a polynomial with rational
// coefficients, integrated segment by segment.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace oracle {

using Rat = boost::rational<boost::multiprecision::cpp_int>;
using RatPoly = std::vector<Rat>; // coefficient k multiplies s^k, s in [0,1]

inline RatPoly integrate_from(const RatPoly& src, const Rat& value_at_0) {
    RatPoly out(src.size() + 1);
    out[0] = value_at_0;
    for (size_t k = 0; k < src.size(); ++k) out[k + 1] = src[k] / Rat(static_cast<int>(k) + 1);
    return out;
}

inline Rat eval(const RatPoly& p, const Rat& s) {
    Rat acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * s + p[k];
    return acc;
}

// segments[j] is the solution on t in [j-1, j] as a polynomial in s = t-(j-1)
inline std::vector<RatPoly> delay_segments(int count) {
    std::vector<RatPoly> seg;
    seg.push_back(RatPoly{Rat(1)}); // initial function on [-1, 0]
    for (int j = 1; j < count; ++j) {
        RatPoly prev = seg.back();
        seg.push_back(integrate_from(prev, eval(prev, Rat(1))));
    }
    return seg;
}

// k-th Taylor coefficient (derivative/k!) of the solution at time t = num/den,
// using the right-hand segment at the breakpoints
inline Rat taylor_coeff_at(const std::vector<RatPoly>& seg, const Rat& t, int k) {
    Rat shifted = t + Rat(1); // segment index offset: segment j starts at t = j-1
    boost::multiprecision::cpp_int whole = shifted.numerator() / shifted.denominator();
    if (shifted < Rat(0)) throw std::runtime_error("time before initial segment");
    size_t j = static_cast<size_t>(static_cast<long>(whole));
    Rat s = shifted - Rat(whole);
    if (j >= seg.size()) {
        // exactly at the right end of the last segment
        j = seg.size() - 1;
        s = s + Rat(1);
    }
    const RatPoly& p = seg[j];
    // derivative k of sum c_l s^l, divided by k!
    Rat acc(0);
    for (size_t l = static_cast<size_t>(k); l < p.size(); ++l) {
        Rat binom(1);
        for (int i = 1; i <= k; ++i)
            binom *= Rat(static_cast<int>(l) - k + i, i);
        Rat pw(1);
        for (int i = 0; i < static_cast<int>(l) - k; ++i) pw *= s;
        acc += binom * p[l] * pw;
    }
    return acc;
}

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace oracle

#endif
