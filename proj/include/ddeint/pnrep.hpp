#ifndef DDEINT_PNREP_HPP
#define DDEINT_PNREP_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "ddeint/interval.hpp"
#include "ddeint/jet.hpp"

namespace ddeint {

// Grid layout of a piecewise-Taylor representation of a function on
// [-tau, 0]: p cells per delay, Taylor order n at each node, one value at 0
// and one remainder bound per cell.  Size m = p*(n+2)+1.
struct PnParams {
    int p = 0;
    int n = 0;
    Interval tau;
    Interval h; // tau / p

    PnParams() = default;
    PnParams(int p_, int n_, const Interval& tau_)
        : p(p_), n(n_), tau(tau_), h(tau_ / Interval(static_cast<double>(p_))) {
        if (p_ <= 0 || n_ < 0 || tau_.lo() <= 0.0)
            throw InvalidInterval("bad grid parameters");
    }
    int size() const { return p * (n + 2) + 1; }
    bool operator==(const PnParams& o) const {
        return p == o.p && n == o.n && tau.lo() == o.tau.lo() && tau.hi() == o.tau.hi();
    }
};

struct GridIndex {
    int i; // 0..p, node counted backwards from 0 in steps of h
    int k; // 0..n+1; k = n+1 addresses the cell remainder
};

// 1-based position of a grid index; value entry first, then node
// coefficients in node-major order, then the p remainders.
size_t position(const PnParams& params, GridIndex g);

class PnVector {
  public:
    PnVector() = default;
    explicit PnVector(const PnParams& params)
        : params_(params), data_(static_cast<size_t>(params.size())) {}

    const PnParams& params() const { return params_; }
    size_t size() const { return data_.size(); }

    const Interval& value0() const { return data_[0]; }
    Interval& value0() { return data_[0]; }
    const Interval& coeff(int i, int k) const { return data_[coeff_offset(i, k)]; }
    Interval& coeff(int i, int k) { return data_[coeff_offset(i, k)]; }
    const Interval& remainder(int i) const { return data_[remainder_offset(i)]; }
    Interval& remainder(int i) { return data_[remainder_offset(i)]; }

    const Interval& entry(size_t flat) const { return data_[flat]; } // 0-based
    Interval& entry(size_t flat) { return data_[flat]; }

    Jet node_jet(int i) const {
        Jet j(static_cast<size_t>(params_.n) + 1);
        for (int k = 0; k <= params_.n; ++k) j[static_cast<size_t>(k)] = coeff(i, k);
        return j;
    }

    size_t coeff_offset(int i, int k) const {
        check_node(i, k);
        return static_cast<size_t>(1 + (i - 1) * (params_.n + 1) + k);
    }
    size_t remainder_offset(int i) const {
        check_node(i, 0);
        return static_cast<size_t>(params_.p * (params_.n + 1) + i);
    }

  private:
    void check_node(int i, int k) const {
        if (i < 1 || i > params_.p || k < 0 || k > params_.n)
            throw IndexOutOfRange("node (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
    PnParams params_;
    std::vector<Interval> data_;
};

// Enclosure of the k-th Taylor coefficient at -i*h + eps for every
// represented function, via the in-cell Taylor formula; eps must lie in
// [0, h].  k may address the remainder order n+1.
Interval coeff_enclosure(const PnVector& x, int i, int k, const Interval& eps);

// Representation-level bounds for the derivative: a (p, n-1) vector whose
// node coefficients are (k+1)*x_{i,k+1}, remainders (n+1) times the input
// remainders, and whose value entry is the left-limit of the derivative at 0
// (valid for the C^1 members of the set).
PnVector derivative_bound(const PnVector& x);

// Upper bound on the C^r distance sum_{j<=r} sup |approx^(j) - x^(j)| over
// [-tau, 0].  `approx(t, j)` must return a rigorous enclosure of its own
// j-th derivative over the interval t, for j <= r+1.  The returned interval
// carries a crude lower estimate in its lower endpoint; the upper endpoint
// is the rigorous bound.
Interval ck_norm_distance(const PnVector& x,
                          const std::function<Interval(const Interval&, int)>& approx, int r,
                          int subdivisions = 4);

PnVector from_taylor_callback(const PnParams& params,
                              const std::function<Interval(int, int)>& coeff_source,
                              const std::function<Interval(int)>& remainder_source,
                              const Interval& value0);

bool subset(const PnVector& a, const PnVector& b);
PnVector hull(const PnVector& a, const PnVector& b);
PnVector intersect_entrywise(const PnVector& a, const PnVector& b);
double max_diam(const PnVector& a);
std::vector<double> midpoints(const PnVector& a);
PnVector from_midpoints(const PnParams& params, const std::vector<double>& mid);

// text format: "p n tau_lo_hex tau_hi_hex" header, then one line
// "index lo_hex hi_hex" per entry in position order
void save_pnvector(std::ostream& os, const PnVector& x);
PnVector load_pnvector(std::istream& is);
void save_pnvector_file(const std::string& path, const PnVector& x);
PnVector load_pnvector_file(const std::string& path);

} // namespace ddeint

#endif
