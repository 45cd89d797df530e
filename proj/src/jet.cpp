#include "ddeint/jet.hpp"

namespace ddeint {

namespace {

size_t common_size(const Dual& a, const Dual& b) {
    return a.grad.size() > b.grad.size() ? a.grad.size() : b.grad.size();
}
Interval grad_at(const Dual& d, size_t i) {
    return i < d.grad.size() ? d.grad[i] : Interval();
}

} // namespace

Dual operator+(const Dual& a, const Dual& b) {
    Dual r{a.val + b.val, {}};
    const size_t n = common_size(a, b);
    r.grad.resize(n);
    for (size_t i = 0; i < n; ++i) r.grad[i] = grad_at(a, i) + grad_at(b, i);
    return r;
}

Dual operator-(const Dual& a, const Dual& b) {
    Dual r{a.val - b.val, {}};
    const size_t n = common_size(a, b);
    r.grad.resize(n);
    for (size_t i = 0; i < n; ++i) r.grad[i] = grad_at(a, i) - grad_at(b, i);
    return r;
}

Dual operator*(const Dual& a, const Dual& b) {
    Dual r{a.val * b.val, {}};
    const size_t n = common_size(a, b);
    r.grad.resize(n);
    for (size_t i = 0; i < n; ++i)
        r.grad[i] = a.val * grad_at(b, i) + b.val * grad_at(a, i);
    return r;
}

Dual operator/(const Dual& a, const Dual& b) {
    if (b.val.contains_zero()) throw DivisionByZeroInterval();
    Dual r{a.val / b.val, {}};
    const size_t n = common_size(a, b);
    r.grad.resize(n);
    for (size_t i = 0; i < n; ++i)
        r.grad[i] = (grad_at(a, i) - r.val * grad_at(b, i)) / b.val;
    return r;
}

Dual rhs_gradient(const RhsSpec& f, const Interval& z1, const Interval& z2) {
    std::vector<Dual> u{{z1, {Interval(1.0), Interval(0.0)}}};
    std::vector<Dual> v{{z2, {Interval(0.0), Interval(1.0)}}};
    return rhs_jet_t<Dual>(f, u, v, 0)[0];
}

} // namespace ddeint
