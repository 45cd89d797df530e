#include "ddeint/linalg.hpp"

namespace ddeint {

IMatrix matmul(const IMatrix& a, const IMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    IMatrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            Interval acc;
            for (size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

IVector matmul(const IMatrix& a, const IVector& v) {
    if (a.cols() != v.size())
        throw DimensionMismatch("matmul " + std::to_string(a.cols()) + " vs " +
                                std::to_string(v.size()));
    IVector r(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        Interval acc;
        for (size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

SplitResult split(const IVector& x) {
    SplitResult s;
    s.mid.resize(x.size());
    s.rad = IVector(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const double m = x[i].mid();
        s.mid[i] = m;
        const Interval r = x[i] - Interval(m);
        // force zero into the radius
        s.rad[i] = hull(r, Interval(0.0));
    }
    return s;
}

IVector operator+(const IVector& a, const IVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector +");
    IVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVector operator-(const IVector& a, const IVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector -");
    IVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool subset(const IVector& a, const IVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector subset");
    for (size_t i = 0; i < a.size(); ++i)
        if (!subset(a[i], b[i])) return false;
    return true;
}

IVector hull(const IVector& a, const IVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector hull");
    IVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = hull(a[i], b[i]);
    return r;
}

double max_diam(const IVector& a) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, a[i].diam());
    return d;
}

} // namespace ddeint
