#include "ddeint/pnrep.hpp"

#include <fstream>
#include <sstream>

namespace ddeint {

size_t position(const PnParams& params, GridIndex g) {
    if (g.i == 0 && g.k == 0) return 1;
    if (g.i < 1 || g.i > params.p || g.k < 0 || g.k > params.n + 1)
        throw IndexOutOfRange("grid index (" + std::to_string(g.i) + "," + std::to_string(g.k) +
                              ")");
    if (g.k <= params.n) return static_cast<size_t>(2 + (g.i - 1) * (params.n + 1) + g.k);
    return static_cast<size_t>(1 + params.p * (params.n + 1) + g.i);
}

namespace {

double binomial(int l, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (l - k + j) / j;
    return r;
}

} // namespace

Interval coeff_enclosure(const PnVector& x, int i, int k, const Interval& eps) {
    const PnParams& pr = x.params();
    if (i < 1 || i > pr.p || k < 0 || k > pr.n + 1) throw IndexOutOfRange("coeff_enclosure");
    if (eps.lo() < 0.0 || eps.hi() > pr.h.hi())
        throw EpsilonOutOfRange("eps=[" + std::to_string(eps.lo()) + "," +
                                std::to_string(eps.hi()) + "]");
    if (k == pr.n + 1) return x.remainder(i);
    // Horner over orders k..n+1; binomials are exact small integers
    Interval acc = Interval(binomial(pr.n + 1, k)) * x.remainder(i);
    for (int l = pr.n; l >= k; --l)
        acc = acc * eps + Interval(binomial(l, k)) * x.coeff(i, l);
    return acc;
}

PnVector derivative_bound(const PnVector& x) {
    const PnParams& pr = x.params();
    if (pr.n < 1) throw OrderTooLow("derivative_bound needs n >= 1");
    PnVector d(PnParams(pr.p, pr.n - 1, pr.tau));
    for (int i = 1; i <= pr.p; ++i) {
        for (int k = 0; k + 1 <= pr.n; ++k)
            d.coeff(i, k) = Interval(static_cast<double>(k + 1)) * x.coeff(i, k + 1);
        d.remainder(i) = Interval(static_cast<double>(pr.n + 1)) * x.remainder(i);
    }
    // left limit of the derivative at t = 0 from the first cell's expansion
    d.value0() = coeff_enclosure(x, 1, 1, Interval(0.0, pr.h.hi()));
    return d;
}

namespace {

double factorial(int j) {
    double r = 1.0;
    for (int i = 2; i <= j; ++i) r *= i;
    return r;
}

} // namespace

Interval ck_norm_distance(const PnVector& x,
                          const std::function<Interval(const Interval&, int)>& approx, int r,
                          int subdivisions) {
    const PnParams& pr = x.params();
    if (r > pr.n) throw OrderTooLow("ck_norm_distance order above representation order");
    const Interval sub_count(static_cast<double>(subdivisions));
    Interval total;
    for (int j = 0; j <= r; ++j) {
        const Interval fact_j(factorial(j));
        const Interval fact_j1(factorial(j + 1));
        double upper = 0.0;
        double lower = 0.0;
        for (int i = 1; i <= pr.p; ++i) {
            const Interval node_t = Interval(static_cast<double>(-i)) * pr.h;
            for (int s = 0; s < subdivisions; ++s) {
                const Interval eps_sub =
                    Interval(static_cast<double>(s), static_cast<double>(s + 1)) * pr.h /
                    sub_count;
                const Interval t_sub = node_t + eps_sub;
                const Interval diff_range =
                    approx(t_sub, j) - fact_j * coeff_enclosure(x, i, j, eps_sub);
                double cell_bound = diff_range.mag();
                // centered mean-value form, usually far tighter
                const Interval eps_mid(eps_sub.mid());
                const Interval t_mid = node_t + eps_mid;
                const Interval diff_mid =
                    approx(t_mid, j) - fact_j * coeff_enclosure(x, i, j, eps_mid);
                const Interval ddiff_range =
                    approx(t_sub, j + 1) - fact_j1 * coeff_enclosure(x, i, j + 1, eps_sub);
                const Interval dev = eps_sub - eps_mid;
                const double centered =
                    (abs_hull(diff_mid) + Interval(dev.mag()) * abs_hull(ddiff_range)).hi();
                cell_bound = std::min(cell_bound, centered);
                upper = std::max(upper, cell_bound);
                lower = std::max(lower, abs_hull(diff_mid).lo());
            }
        }
        const double upb = rnd::up(upper);
        total += Interval(std::min(lower, upb), upb);
    }
    return total;
}

PnVector from_taylor_callback(const PnParams& params,
                              const std::function<Interval(int, int)>& coeff_source,
                              const std::function<Interval(int)>& remainder_source,
                              const Interval& value0) {
    PnVector x(params);
    x.value0() = value0;
    for (int i = 1; i <= params.p; ++i) {
        for (int k = 0; k <= params.n; ++k) x.coeff(i, k) = coeff_source(i, k);
        x.remainder(i) = remainder_source(i);
    }
    return x;
}

bool subset(const PnVector& a, const PnVector& b) {
    if (!(a.params() == b.params())) throw DimensionMismatch("pnvector subset");
    for (size_t j = 0; j < a.size(); ++j)
        if (!subset(a.entry(j), b.entry(j))) return false;
    return true;
}

PnVector hull(const PnVector& a, const PnVector& b) {
    if (!(a.params() == b.params())) throw DimensionMismatch("pnvector hull");
    PnVector r(a.params());
    for (size_t j = 0; j < a.size(); ++j) r.entry(j) = hull(a.entry(j), b.entry(j));
    return r;
}

PnVector intersect_entrywise(const PnVector& a, const PnVector& b) {
    if (!(a.params() == b.params())) throw DimensionMismatch("pnvector intersect");
    PnVector r(a.params());
    for (size_t j = 0; j < a.size(); ++j) r.entry(j) = intersect(a.entry(j), b.entry(j));
    return r;
}

double max_diam(const PnVector& a) {
    double d = 0.0;
    for (size_t j = 0; j < a.size(); ++j) d = std::max(d, a.entry(j).diam());
    return d;
}

std::vector<double> midpoints(const PnVector& a) {
    std::vector<double> m(a.size());
    for (size_t j = 0; j < a.size(); ++j) m[j] = a.entry(j).mid();
    return m;
}

PnVector from_midpoints(const PnParams& params, const std::vector<double>& mid) {
    PnVector x(params);
    if (mid.size() != x.size()) throw DimensionMismatch("from_midpoints");
    for (size_t j = 0; j < mid.size(); ++j) x.entry(j) = Interval(mid[j]);
    return x;
}

void save_pnvector(std::ostream& os, const PnVector& x) {
    const PnParams& pr = x.params();
    os << pr.p << " " << pr.n << " " << to_hex(pr.tau) << "\n";
    // emit in position order: build position -> flat map
    std::vector<size_t> flat_of_pos(x.size() + 1);
    flat_of_pos[position(pr, {0, 0})] = 0;
    for (int i = 1; i <= pr.p; ++i) {
        for (int k = 0; k <= pr.n; ++k) flat_of_pos[position(pr, {i, k})] = x.coeff_offset(i, k);
        flat_of_pos[position(pr, {i, pr.n + 1})] = x.remainder_offset(i);
    }
    for (size_t pos = 1; pos <= x.size(); ++pos)
        os << pos << " " << to_hex(x.entry(flat_of_pos[pos])) << "\n";
}

PnVector load_pnvector(std::istream& is) {
    int p = 0, n = -1;
    std::string tau_lo, tau_hi;
    if (!(is >> p >> n >> tau_lo >> tau_hi)) throw IoError("bad representation header");
    PnParams params(p, n, interval_from_hex_pair(tau_lo, tau_hi));
    PnVector x(params);
    std::vector<size_t> flat_of_pos(x.size() + 1);
    flat_of_pos[position(params, {0, 0})] = 0;
    for (int i = 1; i <= p; ++i) {
        for (int k = 0; k <= n; ++k) flat_of_pos[position(params, {i, k})] = x.coeff_offset(i, k);
        flat_of_pos[position(params, {i, n + 1})] = x.remainder_offset(i);
    }
    for (size_t row = 1; row <= x.size(); ++row) {
        size_t pos;
        std::string lo, hi;
        if (!(is >> pos >> lo >> hi)) throw IoError("bad representation row");
        if (pos < 1 || pos > x.size()) throw IoError("representation index out of range");
        x.entry(flat_of_pos[pos]) = interval_from_hex_pair(lo, hi);
    }
    return x;
}

void save_pnvector_file(const std::string& path, const PnVector& x) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path);
    save_pnvector(os, x);
}

PnVector load_pnvector_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read " + path);
    return load_pnvector(is);
}

} // namespace ddeint
