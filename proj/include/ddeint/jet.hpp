#ifndef DDEINT_JET_HPP
#define DDEINT_JET_HPP

#include <vector>

#include "ddeint/interval.hpp"
#include "ddeint/rhs.hpp"

namespace ddeint {

// Taylor coefficients x^[k] = x^(k)/k!, entry k of the vector.
using Jet = std::vector<Interval>;

// Interval carrying first-order sensitivities; an empty gradient means zero.
struct Dual {
    Interval val;
    std::vector<Interval> grad;
};

Dual operator+(const Dual& a, const Dual& b);
Dual operator-(const Dual& a, const Dual& b);
Dual operator*(const Dual& a, const Dual& b);
Dual operator/(const Dual& a, const Dual& b);

namespace detail {

template <typename S> S scalar_constant(const Interval& c);
template <> inline Interval scalar_constant<Interval>(const Interval& c) { return c; }
template <> inline double scalar_constant<double>(const Interval& c) { return c.mid(); }
template <> inline Dual scalar_constant<Dual>(const Interval& c) { return {c, {}}; }

template <typename S> S scalar_div_int(const S& a, int k);
template <> inline Interval scalar_div_int<Interval>(const Interval& a, int k) {
    return a / Interval(static_cast<double>(k));
}
template <> inline double scalar_div_int<double>(const double& a, int k) { return a / k; }
template <> inline Dual scalar_div_int<Dual>(const Dual& a, int k) {
    Dual r{a.val / Interval(static_cast<double>(k)), a.grad};
    for (auto& g : r.grad) g = g / Interval(static_cast<double>(k));
    return r;
}

inline bool divisor_contains_zero(const Interval& x) { return x.contains_zero(); }
inline bool divisor_contains_zero(double x) { return x == 0.0; }
inline bool divisor_contains_zero(const Dual& x) { return x.val.contains_zero(); }

} // namespace detail

// Order-by-order evaluation of an RhsSpec on jets: after push_order(k) the
// root coefficient k equals the k-th Taylor coefficient of
// t -> f(u(t), v(t)).  Inputs u and v only need entries 0..k at that point,
// which lets the solution recursion feed v back in as it grows.
template <typename S>
class JetEngine {
  public:
    JetEngine(const RhsSpec& f, const std::vector<S>* u, const std::vector<S>* v)
        : f_(&f), u_(u), v_(v), coeffs_(f.nodes().size()) {}

    void push_order(int k) {
        const auto& nodes = f_->nodes();
        for (size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            auto& c = coeffs_[i];
            switch (n.op) {
                case RhsSpec::Op::kConst:
                    c.push_back(k == 0 ? detail::scalar_constant<S>(n.value)
                                       : detail::scalar_constant<S>(Interval(0.0)));
                    break;
                case RhsSpec::Op::kDelayed: c.push_back((*u_)[static_cast<size_t>(k)]); break;
                case RhsSpec::Op::kCurrent: c.push_back((*v_)[static_cast<size_t>(k)]); break;
                case RhsSpec::Op::kAdd:
                    c.push_back(coeffs_[n.lhs][k] + coeffs_[n.rhs][k]);
                    break;
                case RhsSpec::Op::kSub:
                    c.push_back(coeffs_[n.lhs][k] - coeffs_[n.rhs][k]);
                    break;
                case RhsSpec::Op::kMul: {
                    S acc = coeffs_[n.lhs][0] * coeffs_[n.rhs][k];
                    for (int j = 1; j <= k; ++j)
                        acc = acc + coeffs_[n.lhs][j] * coeffs_[n.rhs][k - j];
                    c.push_back(acc);
                    break;
                }
                case RhsSpec::Op::kDiv: {
                    const auto& den = coeffs_[n.rhs];
                    if (detail::divisor_contains_zero(den[0])) throw DivisionByZeroInterval();
                    S acc = coeffs_[n.lhs][k];
                    for (int j = 1; j <= k; ++j) acc = acc - den[j] * c[k - j];
                    c.push_back(acc / den[0]);
                    break;
                }
            }
        }
        ++order_;
    }

    const S& root_coeff(int k) const { return coeffs_[f_->root()][static_cast<size_t>(k)]; }
    int pushed_orders() const { return order_; }

  private:
    const RhsSpec* f_;
    const std::vector<S>* u_;
    const std::vector<S>* v_;
    std::vector<std::vector<S>> coeffs_;
    int order_ = 0;
};

// jet of t -> f(u(t), v(t)) through the given order
template <typename S>
std::vector<S> rhs_jet_t(const RhsSpec& f, const std::vector<S>& u, const std::vector<S>& v,
                         int order) {
    JetEngine<S> eng(f, &u, &v);
    std::vector<S> out;
    for (int k = 0; k <= order; ++k) {
        eng.push_order(k);
        out.push_back(eng.root_coeff(k));
    }
    return out;
}

// Solution jet at the current time from the delayed jet u and the value v0:
// each new coefficient v[k+1] = (rhs jet)[k] / (k+1), fed back into the rhs.
template <typename S>
std::vector<S> advance_solution_jet_t(const RhsSpec& f, const std::vector<S>& u, const S& v0,
                                      int order) {
    std::vector<S> v;
    v.reserve(static_cast<size_t>(order) + 1);
    v.push_back(v0);
    JetEngine<S> eng(f, &u, &v);
    for (int k = 0; k < order; ++k) {
        eng.push_order(k);
        v.push_back(detail::scalar_div_int<S>(eng.root_coeff(k), k + 1));
    }
    return v;
}

inline Jet rhs_jet(const RhsSpec& f, const Jet& u, const Jet& v, int order) {
    return rhs_jet_t<Interval>(f, u, v, order);
}
inline Jet advance_solution_jet(const RhsSpec& f, const Jet& u, const Interval& v0, int order) {
    return advance_solution_jet_t<Interval>(f, u, v0, order);
}

// value and gradient of f at a point pair (order-0 jet with seeds)
Dual rhs_gradient(const RhsSpec& f, const Interval& z1, const Interval& z2);

} // namespace ddeint

#endif
