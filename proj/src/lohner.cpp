#include "ddeint/lohner.hpp"

#include "ddeint/jet.hpp"

namespace ddeint {

namespace {

// flat offsets of the forward block columns: value entry and oldest node
std::vector<size_t> forward_cols(const PnParams& pr, const PnVector& layout) {
    std::vector<size_t> cols;
    cols.push_back(0);
    for (int k = 0; k <= pr.n; ++k) cols.push_back(layout.coeff_offset(pr.p, k));
    return cols;
}

} // namespace

BlockMatrix step_jacobian(const PnVector& hull, const RhsSpec& f) {
    const PnParams& pr = hull.params();
    BlockMatrix a(pr);
    const size_t g = static_cast<size_t>(pr.n) + 2; // gradient length

    std::vector<Dual> u(static_cast<size_t>(pr.n) + 1);
    for (int k = 0; k <= pr.n; ++k) {
        u[static_cast<size_t>(k)].val = hull.coeff(pr.p, k);
        u[static_cast<size_t>(k)].grad.assign(g, Interval());
        u[static_cast<size_t>(k)].grad[static_cast<size_t>(k) + 1] = Interval(1.0);
    }
    Dual v0{hull.value0(), std::vector<Interval>(g)};
    v0.grad[0] = Interval(1.0);

    std::vector<Dual> v = advance_solution_jet_t<Dual>(f, u, v0, pr.n);

    for (int k = 0; k <= pr.n; ++k)
        for (size_t c = 0; c < g; ++c)
            a.fwd.at(static_cast<size_t>(k) + 1, c) = v[static_cast<size_t>(k)].grad[c];

    // value row: Horner sum of the new coefficients times h powers
    Dual acc = v[static_cast<size_t>(pr.n)];
    const Dual hmul{pr.h, {}};
    for (int k = pr.n - 1; k >= 0; --k) acc = acc * hmul + v[static_cast<size_t>(k)];
    for (size_t c = 0; c < g; ++c) a.fwd.at(0, c) = acc.grad[c];
    return a;
}

IMatrix materialize(const BlockMatrix& a) {
    const PnParams& pr = a.params;
    const size_t m = static_cast<size_t>(pr.size());
    IMatrix full(m, m);
    PnVector layout(pr);
    const auto cols = forward_cols(pr, layout);
    for (size_t r = 0; r < static_cast<size_t>(pr.n) + 2; ++r)
        for (size_t c = 0; c < cols.size(); ++c) full.at(r, cols[c]) = a.fwd.at(r, c);
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k)
            full.at(layout.coeff_offset(i, k), layout.coeff_offset(i - 1, k)) = Interval(1.0);
    return full;
}

IVector block_mul(const BlockMatrix& a, const IVector& v) {
    const PnParams& pr = a.params;
    const size_t m = static_cast<size_t>(pr.size());
    if (v.size() != m) throw DimensionMismatch("block_mul vector");
    PnVector layout(pr);
    const auto cols = forward_cols(pr, layout);
    IVector r(m);
    for (size_t row = 0; row < static_cast<size_t>(pr.n) + 2; ++row) {
        Interval acc;
        for (size_t c = 0; c < cols.size(); ++c) acc += a.fwd.at(row, c) * v[cols[c]];
        r[row] = acc;
    }
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k)
            r[layout.coeff_offset(i, k)] = v[layout.coeff_offset(i - 1, k)];
    return r;
}

IMatrix block_mul(const BlockMatrix& a, const IMatrix& mat) {
    const PnParams& pr = a.params;
    const size_t m = static_cast<size_t>(pr.size());
    if (mat.rows() != m) throw DimensionMismatch("block_mul matrix");
    PnVector layout(pr);
    const auto cols = forward_cols(pr, layout);
    IMatrix r(m, mat.cols());
    for (size_t row = 0; row < static_cast<size_t>(pr.n) + 2; ++row)
        for (size_t j = 0; j < mat.cols(); ++j) {
            Interval acc;
            for (size_t c = 0; c < cols.size(); ++c) acc += a.fwd.at(row, c) * mat.at(cols[c], j);
            r.at(row, j) = acc;
        }
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k) {
            const size_t dst = layout.coeff_offset(i, k);
            const size_t src = layout.coeff_offset(i - 1, k);
            for (size_t j = 0; j < mat.cols(); ++j) r.at(dst, j) = mat.at(src, j);
        }
    return r;
}

DoubletonSet point_set(const PnVector& x) {
    DoubletonSet s;
    s.params = x.params();
    const size_t m = x.size();
    s.x = midpoints(x);
    s.C.assign(m * m, 0.0);
    for (size_t i = 0; i < m; ++i) s.c_at(i, i) = 1.0;
    s.r0 = IVector(m);
    s.r_tilde = IVector(m);
    // any width of x beyond its midpoint lives in the local-error box
    PnVector mid_rep = from_midpoints(x.params(), s.x);
    for (size_t j = 0; j < m; ++j)
        s.r_tilde[j] = hull(x.entry(j) - mid_rep.entry(j), Interval(0.0));
    return s;
}

DoubletonSet framed_set(const PnParams& params, const std::vector<double>& anchor,
                        const std::vector<double>& frame, const IVector& box) {
    const size_t m = static_cast<size_t>(params.size());
    if (anchor.size() != m || frame.size() != m * m || box.size() != m)
        throw DimensionMismatch("framed_set");
    DoubletonSet s;
    s.params = params;
    s.x = anchor;
    s.C = frame;
    s.r0 = box;
    for (size_t j = 0; j < m; ++j)
        if (!box[j].contains(0.0)) throw InvalidInterval("initial box must contain zero");
    s.r_tilde = IVector(m);
    return s;
}

Interval hull_entry(const DoubletonSet& s, size_t flat) {
    const size_t m = s.size();
    Interval acc = s.r_tilde[flat];
    const double* row = s.C.data() + flat * m;
    for (size_t j = 0; j < m; ++j) {
        const double c = row[j];
        if (c != 0.0) acc += c * s.r0[j];
    }
    return Interval(s.x[flat]) + acc;
}

PnVector hull_of(const DoubletonSet& s) {
    PnVector h(s.params);
    for (size_t j = 0; j < s.size(); ++j) h.entry(j) = hull_entry(s, j);
    return h;
}

DoubletonSet propagate(const DoubletonSet& s, const BlockMatrix& a, const PnVector& phi_mid,
                       const PnVector& r_part) {
    const PnParams& pr = s.params;
    const size_t m = s.size();
    const size_t nfwd = static_cast<size_t>(pr.n) + 2;
    PnVector layout(pr);
    const auto cols = forward_cols(pr, layout);

    DoubletonSet out;
    out.params = pr;
    out.x.assign(m, 0.0);
    out.C.assign(m * m, 0.0);
    out.r0 = s.r0;
    out.r_tilde = IVector(m);

    // u = Phi(x) + R([X]) entrywise; its midpoint becomes the new anchor
    IVector u(m);
    for (size_t j = 0; j < m; ++j) u[j] = phi_mid.entry(j) + r_part.entry(j);
    IVector z(m);
    for (size_t j = 0; j < m; ++j) {
        out.x[j] = u[j].mid();
        z[j] = u[j] - Interval(out.x[j]);
    }

    // forward rows of A*C stay as intervals for the r0 correction term
    std::vector<IVector> fwd_ac(nfwd, IVector(m));
    for (size_t row = 0; row < nfwd; ++row) {
        for (size_t j = 0; j < m; ++j) {
            Interval acc;
            for (size_t c = 0; c < nfwd; ++c) {
                const Interval& w = a.fwd.at(row, c);
                if (w.lo() == 0.0 && w.hi() == 0.0) continue;
                acc += w * Interval(s.c_at(cols[c], j));
            }
            fwd_ac[row][j] = acc;
            out.c_at(row, j) = acc.mid();
        }
    }
    // shifted rows of the new frame are exact copies
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k) {
            const size_t dst = layout.coeff_offset(i, k);
            const size_t src = layout.coeff_offset(i - 1, k);
            for (size_t j = 0; j < m; ++j) out.c_at(dst, j) = s.c_at(src, j);
        }
    // remainder rows of the frame are zero: those coordinates are re-boxed
    // through the remainder part each step

    // r~' = A r~ + z + (A C - C') r0
    for (size_t row = 0; row < nfwd; ++row) {
        Interval acc;
        for (size_t c = 0; c < nfwd; ++c) acc += a.fwd.at(row, c) * s.r_tilde[cols[c]];
        Interval corr;
        for (size_t j = 0; j < m; ++j) {
            const Interval d = fwd_ac[row][j] - Interval(out.c_at(row, j));
            if (d.lo() == 0.0 && d.hi() == 0.0) continue;
            corr += d * s.r0[j];
        }
        out.r_tilde[row] = acc + z[row] + corr;
    }
    for (int i = 2; i <= pr.p; ++i)
        for (int k = 0; k <= pr.n; ++k)
            out.r_tilde[layout.coeff_offset(i, k)] =
                s.r_tilde[layout.coeff_offset(i - 1, k)] + z[layout.coeff_offset(i, k)];
    for (int i = 1; i <= pr.p; ++i) {
        const size_t off = layout.remainder_offset(i);
        out.r_tilde[off] = z[off];
    }
    return out;
}

} // namespace ddeint
