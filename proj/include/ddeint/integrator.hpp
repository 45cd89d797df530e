#ifndef DDEINT_INTEGRATOR_HPP
#define DDEINT_INTEGRATOR_HPP

#include "ddeint/jet.hpp"
#include "ddeint/lohner.hpp"
#include "ddeint/pnrep.hpp"
#include "ddeint/rhs.hpp"

namespace ddeint {

struct RoughEnclosureResult {
    Interval enclosure; // contains the solution values over one step
    Interval candidate; // validated superset, enclosure in its interior
    int attempts = 0;
};

// A priori bound on x([0,h]) for every represented initial function, by the
// inflate-and-verify test on candidate intervals.
RoughEnclosureResult rough_enclosure(const PnVector& hull, const RhsSpec& f,
                                     int max_attempts = 30);

// New-node coefficients 0..n over a set, by the solution-jet recursion fed
// from the oldest node.
Jet forward_coeffs(const PnVector& hull, const RhsSpec& f);

// Bound on the order-(n+1) coefficient over the new cell (mean value form:
// the step-start term plus the slope term times [0,h]).
Interval forward_remainder(const PnVector& hull, const RhsSpec& f, const Jet& coeffs,
                           const Interval& enclosure);

// Value at the end of the step from the new-node expansion.
Interval forward_value(const Jet& coeffs, const Interval& remainder, const Interval& h, int n);

// One step of the coefficient/remainder decomposition, evaluated once per
// input set: the coefficient map at the anchor, its jacobian over the hull,
// and the remainder contributions of the whole set.
struct StepDecomposition {
    PnVector phi_mid;
    BlockMatrix jacobian;
    PnVector r_part;
    RoughEnclosureResult rough;
    Interval new_remainder;
    Jet mid_jet;   // new-node coefficients at the anchor
    Jet hull_jet;  // new-node coefficients over the hull
};

StepDecomposition prepare_step(const DoubletonSet& s, const RhsSpec& f);

// full step through the doubleton
DoubletonSet step(const DoubletonSet& s, const RhsSpec& f);

// plain interval-set step (no frame); the method-0 baseline and the
// small-set oracle used in containment tests
PnVector step_hull(const PnVector& x, const RhsSpec& f);

// Partial step by eps in [0, h]: in-cell Taylor shift of the coefficients,
// remainders hulled with their shifted neighbours, value from the new-node
// expansion.  Needs the decomposition of the step that was prepared at s.
DoubletonSet epsilon_step(const DoubletonSet& s, const StepDecomposition& dec,
                          const Interval& eps);

} // namespace ddeint

#endif
