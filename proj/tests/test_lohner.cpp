#include <doctest.h>

#include <random>

#include "ddeint/integrator.hpp"
#include "ddeint/lohner.hpp"

using namespace ddeint;

namespace {

std::mt19937_64 rng(90210u);
double rand_double(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

BlockMatrix random_block(const PnParams& params) {
    BlockMatrix a(params);
    for (size_t r = 0; r < a.fwd.rows(); ++r)
        for (size_t c = 0; c < a.fwd.cols(); ++c) {
            double x = rand_double(-2.0, 2.0);
            a.fwd.at(r, c) = Interval(x, x + rand_double(0.0, 0.1));
        }
    return a;
}

} // namespace

TEST_CASE("materialized block matrix has exact structural entries") {
    PnParams params(4, 2, Interval(1.0));
    BlockMatrix a = random_block(params);
    IMatrix full = materialize(a);
    PnVector layout(params);
    for (int i = 2; i <= params.p; ++i)
        for (int k = 0; k <= params.n; ++k) {
            CHECK(full.at(layout.coeff_offset(i, k), layout.coeff_offset(i - 1, k)).lo() == 1.0);
            CHECK(full.at(layout.coeff_offset(i, k), layout.coeff_offset(i - 1, k)).hi() == 1.0);
        }
    for (int i = 1; i <= params.p; ++i)
        for (size_t c = 0; c < full.cols(); ++c) {
            CHECK(full.at(layout.remainder_offset(i), c).lo() == 0.0);
            CHECK(full.at(layout.remainder_offset(i), c).hi() == 0.0);
        }
}

TEST_CASE("block product is bit-identical to the dense product") {
    for (auto [p, n] : {std::pair{4, 1}, std::pair{8, 2}, std::pair{32, 4}}) {
        PnParams params(p, n, Interval(1.0));
        const size_t m = static_cast<size_t>(params.size());
        BlockMatrix a = random_block(params);
        IMatrix dense = materialize(a);

        IMatrix mat(m, 3);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < 3; ++c) {
                double x = rand_double(-1.0, 1.0);
                mat.at(r, c) = Interval(x, x + rand_double(0.0, 0.01));
            }
        IMatrix got = block_mul(a, mat);
        IMatrix want = matmul(dense, mat);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < 3; ++c) {
                CHECK(got.at(r, c).lo() == want.at(r, c).lo());
                CHECK(got.at(r, c).hi() == want.at(r, c).hi());
            }

        IVector v(m);
        for (size_t r = 0; r < m; ++r) v[r] = Interval(rand_double(-1.0, 1.0));
        IVector gv = block_mul(a, v);
        IVector wv = matmul(dense, v);
        for (size_t r = 0; r < m; ++r) {
            CHECK(gv[r].lo() == wv[r].lo());
            CHECK(gv[r].hi() == wv[r].hi());
        }
    }
}

TEST_CASE("pure shift block matrix permutes coefficients") {
    PnParams params(3, 1, Interval(1.0));
    BlockMatrix a(params); // fwd all zero
    const size_t m = static_cast<size_t>(params.size());
    IVector v(m);
    for (size_t r = 0; r < m; ++r) v[r] = Interval(static_cast<double>(r + 1));
    IVector r = block_mul(a, v);
    PnVector layout(params);
    CHECK(r[0].lo() == 0.0);
    for (int k = 0; k <= params.n; ++k) CHECK(r[layout.coeff_offset(1, k)].lo() == 0.0);
    for (int i = 2; i <= params.p; ++i)
        for (int k = 0; k <= params.n; ++k)
            CHECK(r[layout.coeff_offset(i, k)].lo() ==
                  v[layout.coeff_offset(i - 1, k)].lo());
    for (int i = 1; i <= params.p; ++i) CHECK(r[layout.remainder_offset(i)].lo() == 0.0);
}

TEST_CASE("step jacobian of the pure delay") {
    RhsSpec f = RhsSpec::parse("z1");
    PnParams params(3, 2, Interval(1.0));
    PnVector x(params);
    x.value0() = Interval(1.0);
    for (int i = 1; i <= params.p; ++i) x.coeff(i, 0) = Interval(1.0);
    BlockMatrix a = step_jacobian(x, f);
    // new coefficient of order 1 reads the oldest node's order 0 exactly
    CHECK(a.fwd.at(2, 1).lo() == 1.0);
    CHECK(a.fwd.at(2, 1).hi() == 1.0);
    // and does not depend on the value entry
    CHECK(a.fwd.at(2, 0).lo() == 0.0);
    // new order-0 coefficient is the copied value entry
    CHECK(a.fwd.at(1, 0).lo() == 1.0);
}

TEST_CASE("step jacobian of the pure ode is the exponential column") {
    RhsSpec f = RhsSpec::parse("z2");
    PnParams params(2, 3, Interval(1.0));
    PnVector x(params);
    x.value0() = Interval(1.0);
    for (int i = 1; i <= params.p; ++i) x.coeff(i, 0) = Interval(1.0);
    BlockMatrix a = step_jacobian(x, f);
    CHECK(a.fwd.at(1, 0).contains(1.0));
    CHECK(a.fwd.at(2, 0).contains(1.0));
    CHECK(a.fwd.at(3, 0).contains(0.5));
    CHECK(a.fwd.at(3, 0).diam() < 1e-14);
    CHECK(a.fwd.at(4, 0).contains(1.0 / 6.0));
}

TEST_CASE("hull of doubleton variants") {
    PnParams params(2, 1, Interval(1.0));
    const size_t m = static_cast<size_t>(params.size());

    PnVector pt(params);
    for (size_t j = 0; j < m; ++j) pt.entry(j) = Interval(rand_double(-1.0, 1.0));
    DoubletonSet s = point_set(pt);
    PnVector h = hull_of(s);
    for (size_t j = 0; j < m; ++j) {
        CHECK(h.entry(j).lo() == pt.entry(j).lo());
        CHECK(h.entry(j).hi() == pt.entry(j).hi());
    }

    // identity frame: hull is x + r0 + r~ entrywise
    std::vector<double> anchor(m), frame(m * m, 0.0);
    IVector r0(m);
    for (size_t j = 0; j < m; ++j) {
        anchor[j] = rand_double(-1.0, 1.0);
        frame[j * m + j] = 1.0;
        r0[j] = Interval(-rand_double(0.0, 0.2), rand_double(0.0, 0.2));
    }
    DoubletonSet fs = framed_set(params, anchor, frame, r0);
    PnVector hf = hull_of(fs);
    for (size_t j = 0; j < m; ++j) {
        CHECK(hf.entry(j).lo() == doctest::Approx(anchor[j] + r0[j].lo()).epsilon(1e-14));
        CHECK(hf.entry(j).hi() == doctest::Approx(anchor[j] + r0[j].hi()).epsilon(1e-14));
    }
}

TEST_CASE("hull contains sampled members of a random doubleton") {
    PnParams params(2, 1, Interval(1.0));
    const size_t m = static_cast<size_t>(params.size());
    std::vector<double> anchor(m), frame(m * m);
    IVector r0(m);
    for (size_t j = 0; j < m; ++j) {
        anchor[j] = rand_double(-1.0, 1.0);
        r0[j] = Interval(-rand_double(0.0, 0.3), rand_double(0.0, 0.3));
        for (size_t c = 0; c < m; ++c) frame[j * m + c] = rand_double(-1.0, 1.0);
    }
    DoubletonSet s = framed_set(params, anchor, frame, r0);
    for (size_t j = 0; j < m; ++j)
        s.r_tilde[j] = Interval(-rand_double(0.0, 0.05), rand_double(0.0, 0.05));
    PnVector h = hull_of(s);
    for (int trial = 0; trial < 1000; ++trial) {
        for (size_t j = 0; j < m; ++j) {
            double acc = anchor[j] + rand_double(s.r_tilde[j].lo(), s.r_tilde[j].hi());
            for (size_t c = 0; c < m; ++c)
                acc += frame[j * m + c] * rand_double(r0[c].lo(), r0[c].hi());
            // the sample itself is rounded; allow a few ulps
            CHECK(widen(h.entry(j), 1e-12).contains(acc));
        }
    }
}

TEST_CASE("identity dynamics leave the set unchanged") {
    PnParams params(1, 0, Interval(1.0));
    const size_t m = static_cast<size_t>(params.size()); // 3
    std::vector<double> anchor{0.3, -0.2, 0.0};
    std::vector<double> frame(m * m, 0.0);
    for (size_t j = 0; j < m; ++j) frame[j * m + j] = 1.0;
    IVector r0(m);
    r0[0] = Interval(-0.125, 0.125);
    r0[1] = Interval(-0.125, 0.125);
    DoubletonSet s = framed_set(params, anchor, frame, r0);

    BlockMatrix a(params);
    a.fwd.at(0, 0) = Interval(1.0);
    a.fwd.at(1, 1) = Interval(1.0);
    PnVector phi_mid(params);
    phi_mid.value0() = Interval(anchor[0]);
    phi_mid.coeff(1, 0) = Interval(anchor[1]);
    PnVector r_part(params); // all zero

    DoubletonSet next = propagate(s, a, phi_mid, r_part);
    PnVector h0 = hull_of(s);
    PnVector h1 = hull_of(next);
    for (size_t j = 0; j < 2; ++j) {
        CHECK(subset(h0.entry(j), widen(h1.entry(j), 1e-15)));
        CHECK(h1.entry(j).diam() <= h0.entry(j).diam() + 1e-14);
    }
}

TEST_CASE("doubleton absorbs rotation where plain boxes blow up") {
    // eight 45-degree rotations: a full turn
    PnParams params(1, 0, Interval(1.0));
    const size_t m = static_cast<size_t>(params.size());
    const double c = std::sqrt(2.0) / 2.0;

    std::vector<double> anchor{0.0, 0.0, 0.0};
    std::vector<double> frame(m * m, 0.0);
    for (size_t j = 0; j < m; ++j) frame[j * m + j] = 1.0;
    IVector r0(m);
    r0[0] = Interval(-0.5, 0.5);
    r0[1] = Interval(-0.5, 0.5);
    DoubletonSet s = framed_set(params, anchor, frame, r0);

    BlockMatrix rot(params);
    rot.fwd.at(0, 0) = Interval(c);
    rot.fwd.at(0, 1) = Interval(-c);
    rot.fwd.at(1, 0) = Interval(c);
    rot.fwd.at(1, 1) = Interval(c);

    PnVector zero_phi(params), zero_r(params);
    IVector box(m);
    box[0] = r0[0];
    box[1] = r0[1];
    const double d0 = box[0].diam();
    for (int it = 0; it < 8; ++it) {
        s = propagate(s, rot, zero_phi, zero_r); // anchor stays at the origin
        box = block_mul(rot, box);               // method-0 baseline
    }
    PnVector h = hull_of(s);
    CHECK(h.entry(0).diam() <= 1.2 * d0);
    CHECK(h.entry(1).diam() <= 1.2 * d0);
    CHECK(box[0].diam() >= 15.0 * d0);
    CHECK(box[1].diam() >= 15.0 * d0);
}
