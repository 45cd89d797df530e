#ifndef DDEINT_LINALG_HPP
#define DDEINT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "ddeint/interval.hpp"

namespace ddeint {

class IVector {
  public:
    IVector() = default;
    explicit IVector(size_t n) : data_(n) {}
    IVector(std::initializer_list<Interval> init) : data_(init) {}

    size_t size() const { return data_.size(); }
    Interval& operator[](size_t i) { return data_[i]; }
    const Interval& operator[](size_t i) const { return data_[i]; }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

  private:
    std::vector<Interval> data_;
};

class IMatrix {
  public:
    IMatrix() : rows_(0), cols_(0) {}
    IMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Interval& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Interval& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    static IMatrix identity(size_t n) {
        IMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Interval(1.0);
        return m;
    }

  private:
    size_t rows_, cols_;
    std::vector<Interval> data_;
};

// row-by-column products; accumulation in ascending column index
IMatrix matmul(const IMatrix& a, const IMatrix& b);
IVector matmul(const IMatrix& a, const IVector& v);

struct SplitResult {
    std::vector<double> mid;
    IVector rad; // zero-centered, mid + rad contains the input
};
SplitResult split(const IVector& x);

IVector operator+(const IVector& a, const IVector& b);
IVector operator-(const IVector& a, const IVector& b);

bool subset(const IVector& a, const IVector& b);
IVector hull(const IVector& a, const IVector& b);
double max_diam(const IVector& a);

} // namespace ddeint

#endif
