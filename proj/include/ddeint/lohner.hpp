#ifndef DDEINT_LOHNER_HPP
#define DDEINT_LOHNER_HPP

#include <vector>

#include "ddeint/linalg.hpp"
#include "ddeint/pnrep.hpp"
#include "ddeint/rhs.hpp"

namespace ddeint {

// Jacobian of the coefficient (Taylor) part of one integration step.  Only
// the forward-dependence block is stored: rows {value entry, new-node
// coefficients 0..n} against columns {value entry, oldest-node coefficients
// 0..n}.  The node shift contributes an implicit identity (node i reads
// node i-1), remainder rows and columns are zero.
struct BlockMatrix {
    PnParams params;
    IMatrix fwd; // (n+2) x (n+2)

    BlockMatrix() = default;
    explicit BlockMatrix(const PnParams& pr)
        : params(pr),
          fwd(static_cast<size_t>(pr.n) + 2, static_cast<size_t>(pr.n) + 2) {}
};

// enclosure of the derivative of the coefficient map over the hull of a set
BlockMatrix step_jacobian(const PnVector& hull, const RhsSpec& f);

// dense m x m image of the block matrix (tests and the bench oracle)
IMatrix materialize(const BlockMatrix& a);

// products avoiding all zero blocks; results are bit-identical to the dense
// product of materialize(a) with the operand
IVector block_mul(const BlockMatrix& a, const IVector& v);
IMatrix block_mul(const BlockMatrix& a, const IMatrix& mat);

// Set of representations stored as x + C*[r0] + [r~]: a point anchor, a
// point coordinate frame applied to the fixed initial box, and an interval
// box of accumulated local errors.
struct DoubletonSet {
    PnParams params;
    std::vector<double> x;  // length m
    std::vector<double> C;  // m x m row-major
    IVector r0;             // zero-centered initial box
    IVector r_tilde;        // zero-centered local-error box

    size_t size() const { return x.size(); }
    double c_at(size_t r, size_t c) const { return C[r * x.size() + c]; }
    double& c_at(size_t r, size_t c) { return C[r * x.size() + c]; }
};

// point set: anchor at the midpoints of x, identity frame, zero boxes
DoubletonSet point_set(const PnVector& x);
// anchor + frame * box (the initial-set constructor used by proofs)
DoubletonSet framed_set(const PnParams& params, const std::vector<double>& anchor,
                        const std::vector<double>& frame, const IVector& box);

Interval hull_entry(const DoubletonSet& s, size_t flat);
PnVector hull_of(const DoubletonSet& s);

// One Lohner step of the doubleton through the decomposed map
//   image = Phi(set) + R(hull):
// phi_mid is the interval evaluation of the coefficient part at the anchor,
// r_part the remainder contributions on the whole set, a the jacobian of the
// coefficient part over the hull.
DoubletonSet propagate(const DoubletonSet& s, const BlockMatrix& a, const PnVector& phi_mid,
                       const PnVector& r_part);

} // namespace ddeint

#endif
