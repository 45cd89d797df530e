#include "ddeint/integrator.hpp"

#include <cmath>

namespace ddeint {

namespace {

double binomial(int l, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (l - k + j) / j;
    return r;
}

// in-cell Taylor coefficient enclosure from one node's data
Interval cell_coeff(const Jet& node, const Interval& rem, int n, int k, const Interval& eps) {
    Interval acc = Interval(binomial(n + 1, k)) * rem;
    for (int l = n; l >= k; --l)
        acc = acc * eps + Interval(binomial(l, k)) * node[static_cast<size_t>(l)];
    return acc;
}

Interval eval_rhs(const RhsSpec& f, const Interval& z1, const Interval& z2) {
    Jet u{z1}, v{z2};
    return rhs_jet(f, u, v, 0)[0];
}

Interval inflate(const Interval& y, double factor) {
    const double mid = y.mid();
    const double r = y.rad();
    return Interval(rnd::down(mid - factor * r - 1e-15), rnd::up(mid + factor * r + 1e-15));
}

RoughEnclosureResult rough_enclosure_impl(const Interval& value0, const Jet& oldest,
                                          const Interval& oldest_rem, int n, const Interval& h,
                                          const RhsSpec& f, int max_attempts) {
    const Interval step_range(0.0, h.hi());
    const Interval slab = cell_coeff(oldest, oldest_rem, n, 0, step_range);
    try {
        Interval y = inflate(value0 + step_range * eval_rhs(f, slab, value0), 1.5);
        for (int attempt = 1; attempt <= max_attempts; ++attempt) {
            if (!std::isfinite(y.lo()) || !std::isfinite(y.hi())) break;
            const Interval z = value0 + step_range * eval_rhs(f, slab, y);
            if (subset_interior(z, y)) return {z, y, attempt};
            y = inflate(hull(y, z), 2.0);
        }
    } catch (const Error&) {
        throw EnclosureFailure("arithmetic breakdown while inflating the candidate");
    }
    throw EnclosureFailure("no candidate validated after " + std::to_string(max_attempts) +
                           " attempts");
}

} // namespace

RoughEnclosureResult rough_enclosure(const PnVector& hull, const RhsSpec& f, int max_attempts) {
    const PnParams& pr = hull.params();
    return rough_enclosure_impl(hull.value0(), hull.node_jet(pr.p), hull.remainder(pr.p), pr.n,
                                pr.h, f, max_attempts);
}

Jet forward_coeffs(const PnVector& hull, const RhsSpec& f) {
    const PnParams& pr = hull.params();
    return advance_solution_jet(f, hull.node_jet(pr.p), hull.value0(), pr.n);
}

Interval forward_remainder(const PnVector& hull, const RhsSpec& f, const Jet& coeffs,
                           const Interval& enclosure) {
    const PnParams& pr = hull.params();
    const int n = pr.n;
    const Interval step_range(0.0, pr.h.hi());
    const Jet oldest = hull.node_jet(pr.p);
    const Interval a_star =
        rhs_jet(f, oldest, coeffs, n)[static_cast<size_t>(n)] /
        Interval(static_cast<double>(n + 1));

    Jet c(static_cast<size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k)
        c[static_cast<size_t>(k)] = cell_coeff(oldest, hull.remainder(pr.p), n, k, step_range);
    Jet d;
    d.reserve(static_cast<size_t>(n) + 2);
    d.push_back(enclosure);
    JetEngine<Interval> eng(f, &c, &d);
    for (int k = 0; k <= n; ++k) {
        eng.push_order(k);
        d.push_back(eng.root_coeff(k) / Interval(static_cast<double>(k + 1)));
    }
    eng.push_order(n + 1);
    const Interval b_star = eng.root_coeff(n + 1);
    return a_star + b_star * step_range;
}

Interval forward_value(const Jet& coeffs, const Interval& remainder, const Interval& h, int n) {
    Interval acc = remainder;
    for (int k = n; k >= 0; --k) acc = acc * h + coeffs[static_cast<size_t>(k)];
    return acc;
}

StepDecomposition prepare_step(const DoubletonSet& s, const RhsSpec& f) {
    const PnParams& pr = s.params;
    PnVector layout(pr);
    StepDecomposition dec;

    // hull data the forward part depends on: the value entry, the oldest
    // node, and every remainder
    PnVector hull_piece(pr);
    hull_piece.value0() = hull_entry(s, 0);
    for (int k = 0; k <= pr.n; ++k)
        hull_piece.coeff(pr.p, k) = hull_entry(s, layout.coeff_offset(pr.p, k));
    IVector rem_hull(static_cast<size_t>(pr.p) + 1);
    for (int i = 1; i <= pr.p; ++i) {
        rem_hull[static_cast<size_t>(i)] = hull_entry(s, layout.remainder_offset(i));
        hull_piece.remainder(i) = rem_hull[static_cast<size_t>(i)];
    }

    dec.rough = rough_enclosure(hull_piece, f);
    dec.jacobian = step_jacobian(hull_piece, f);

    Jet hull_jet = forward_coeffs(hull_piece, f);
    dec.hull_jet = hull_jet;
    dec.new_remainder = forward_remainder(hull_piece, f, hull_jet, dec.rough.enclosure);

    // coefficient map at the anchor
    PnVector anchor = from_midpoints(pr, s.x);
    dec.mid_jet = advance_solution_jet(f, anchor.node_jet(pr.p), anchor.value0(), pr.n);
    dec.phi_mid = PnVector(pr);
    dec.phi_mid.value0() = forward_value(dec.mid_jet, Interval(0.0), pr.h, pr.n);
    for (int k = 0; k <= pr.n; ++k) dec.phi_mid.coeff(1, k) = dec.mid_jet[static_cast<size_t>(k)];
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k) dec.phi_mid.coeff(i, k) = anchor.coeff(i - 1, k);

    // remainder contributions of the whole set
    dec.r_part = PnVector(pr);
    dec.r_part.value0() = pow_int(pr.h, pr.n + 1) * dec.new_remainder;
    dec.r_part.remainder(1) = dec.new_remainder;
    for (int i = 2; i <= pr.p; ++i) dec.r_part.remainder(i) = rem_hull[static_cast<size_t>(i) - 1];
    return dec;
}

DoubletonSet step(const DoubletonSet& s, const RhsSpec& f) {
    StepDecomposition dec = prepare_step(s, f);
    return propagate(s, dec.jacobian, dec.phi_mid, dec.r_part);
}

PnVector step_hull(const PnVector& x, const RhsSpec& f) {
    const PnParams& pr = x.params();
    RoughEnclosureResult rough = rough_enclosure(x, f);
    Jet coeffs = forward_coeffs(x, f);
    Interval rem = forward_remainder(x, f, coeffs, rough.enclosure);
    PnVector out(pr);
    out.value0() = forward_value(coeffs, rem, pr.h, pr.n);
    for (int k = 0; k <= pr.n; ++k) out.coeff(1, k) = coeffs[static_cast<size_t>(k)];
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k) out.coeff(i, k) = x.coeff(i - 1, k);
    out.remainder(1) = rem;
    for (int i = 2; i <= pr.p; ++i) out.remainder(i) = x.remainder(i - 1);
    return out;
}

DoubletonSet epsilon_step(const DoubletonSet& s, const StepDecomposition& dec,
                          const Interval& eps) {
    const PnParams& pr = s.params;
    if (eps.lo() < 0.0 || eps.hi() > pr.h.hi())
        throw EpsilonOutOfRange("eps=[" + std::to_string(eps.lo()) + "," +
                                std::to_string(eps.hi()) + "]");
    const size_t m = s.size();
    const int n = pr.n;
    PnVector layout(pr);

    // weights of the in-cell Taylor shift and the value row
    std::vector<Interval> epow(static_cast<size_t>(n) + 2);
    epow[0] = Interval(1.0);
    for (int j = 1; j <= n + 1; ++j) epow[static_cast<size_t>(j)] = pow_int(eps, j);
    auto weight = [&](int k, int l) {
        return Interval(binomial(l, k)) * epow[static_cast<size_t>(l - k)];
    };
    const size_t nfwd = static_cast<size_t>(n) + 2;
    std::vector<Interval> value_row(nfwd);
    for (size_t c = 0; c < nfwd; ++c) {
        Interval acc = dec.jacobian.fwd.at(nfwd - 1, c);
        for (int k = n - 1; k >= 0; --k)
            acc = acc * eps + dec.jacobian.fwd.at(static_cast<size_t>(k) + 1, c);
        value_row[c] = acc;
    }
    std::vector<size_t> fwd_cols;
    fwd_cols.push_back(0);
    for (int k = 0; k <= n; ++k) fwd_cols.push_back(layout.coeff_offset(pr.p, k));

    IVector rem_hull(static_cast<size_t>(pr.p) + 1);
    for (int i = 1; i <= pr.p; ++i)
        rem_hull[static_cast<size_t>(i)] = hull_entry(s, layout.remainder_offset(i));

    // u = Phi_eps(anchor) + R_eps(set), entrywise
    IVector u(m);
    {
        Interval acc = dec.mid_jet[static_cast<size_t>(n)];
        for (int k = n - 1; k >= 0; --k) acc = acc * eps + dec.mid_jet[static_cast<size_t>(k)];
        u[0] = acc + epow[static_cast<size_t>(n) + 1] * dec.new_remainder;
    }
    for (int i = 1; i <= pr.p; ++i) {
        for (int k = 0; k <= n; ++k) {
            Interval acc = Interval(binomial(n + 1, k)) * rem_hull[static_cast<size_t>(i)];
            for (int l = n; l >= k; --l)
                acc = acc * eps + Interval(binomial(l, k)) * Interval(s.x[layout.coeff_offset(i, l)]);
            u[layout.coeff_offset(i, k)] = acc;
        }
        const Interval shifted =
            (i == 1) ? dec.new_remainder : rem_hull[static_cast<size_t>(i) - 1];
        u[layout.remainder_offset(i)] = hull(rem_hull[static_cast<size_t>(i)], shifted);
    }

    DoubletonSet out;
    out.params = pr;
    out.x.assign(m, 0.0);
    out.C.assign(m * m, 0.0);
    out.r0 = s.r0;
    out.r_tilde = IVector(m);
    IVector z(m);
    for (size_t j = 0; j < m; ++j) {
        out.x[j] = u[j].mid();
        z[j] = u[j] - Interval(out.x[j]);
    }

    // frame update and local-error update for all coefficient rows
    std::vector<Interval> ac_row(m);
    auto finish_row = [&](size_t dst, const std::vector<Interval>& row, Interval a_rt) {
        for (size_t j = 0; j < m; ++j) out.c_at(dst, j) = row[j].mid();
        Interval corr;
        for (size_t j = 0; j < m; ++j) {
            const Interval d = row[j] - Interval(out.c_at(dst, j));
            if (d.lo() == 0.0 && d.hi() == 0.0) continue;
            corr += d * s.r0[j];
        }
        out.r_tilde[dst] = a_rt + z[dst] + corr;
    };

    // value row
    {
        Interval a_rt;
        for (size_t j = 0; j < m; ++j) {
            Interval acc;
            for (size_t c = 0; c < nfwd; ++c) {
                const Interval& w = value_row[c];
                if (w.lo() == 0.0 && w.hi() == 0.0) continue;
                acc += w * Interval(s.c_at(fwd_cols[c], j));
            }
            ac_row[j] = acc;
        }
        for (size_t c = 0; c < nfwd; ++c) a_rt += value_row[c] * s.r_tilde[fwd_cols[c]];
        finish_row(0, ac_row, a_rt);
    }
    // node rows: upper-triangular in-cell combinations within each node
    for (int i = 1; i <= pr.p; ++i) {
        for (int k = 0; k <= n; ++k) {
            const size_t dst = layout.coeff_offset(i, k);
            Interval a_rt;
            for (size_t j = 0; j < m; ++j) {
                Interval acc;
                for (int l = k; l <= n; ++l)
                    acc += weight(k, l) * Interval(s.c_at(layout.coeff_offset(i, l), j));
                ac_row[j] = acc;
            }
            for (int l = k; l <= n; ++l)
                a_rt += weight(k, l) * s.r_tilde[layout.coeff_offset(i, l)];
            finish_row(dst, ac_row, a_rt);
        }
        const size_t roff = layout.remainder_offset(i);
        out.r_tilde[roff] = z[roff];
    }
    return out;
}

} // namespace ddeint
