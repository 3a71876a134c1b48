#include "zdlab/burgers_multivalued.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "zdlab/errors.hpp"

namespace zdl {

namespace {

constexpr double kRootWidth = 1e-12;
constexpr int kMaxDoublings = 8;

double torus_distance(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d < 0.0) d += kTwoPi;
    return std::min(d, kTwoPi - d);
}

template <class F>
double bisect(F&& h, double a, double b) {
    bool fa_pos = h(a) > 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = h(mid);
        if (fm == 0.0) return mid;
        if (b - a <= kRootWidth && std::abs(fm) <= 1e-13) return mid;
        if ((fm > 0.0) == fa_pos) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

template <class F>
std::vector<double> scan_roots(F&& h, double lo, double hi, int cells) {
    std::vector<double> roots;
    const double step = (hi - lo) / cells;
    double y_prev = lo;
    bool pos_prev = h(lo) > 0.0;
    for (int i = 1; i <= cells; ++i) {
        const double y = (i == cells) ? hi : lo + i * step;
        const bool pos = h(y) > 0.0;
        if (pos != pos_prev) roots.push_back(bisect(h, y_prev, y));
        y_prev = y;
        pos_prev = pos;
    }
    return roots;
}

}  // namespace

BranchSet branches(const TorusFunction& u0, double t, double x, int scan_points) {
    if (scan_points < 64) throw DomainError("scan_points must be >= 64");
    const double delta = 1e-6 * (1.0 + u0.sup_abs());
    const double lo = u0.min() - delta;
    const double hi = u0.max() + delta;
    auto h = [&](double y) { return y - u0(x - 2.0 * t * y); };

    std::vector<double> roots = scan_roots(h, lo, hi, scan_points);
    int stable = 0;
    int cells = scan_points;
    for (int d = 0; d < kMaxDoublings && stable < 2; ++d) {
        cells *= 2;
        std::vector<double> finer = scan_roots(h, lo, hi, cells);
        if (finer.size() == roots.size()) {
            ++stable;
        } else {
            stable = 0;
        }
        roots = std::move(finer);
    }
    if (stable < 2) {
        std::ostringstream msg;
        msg << "root count at (t,x)=(" << t << "," << x << ") did not stabilize up to " << cells
            << " scan cells; brackets are narrower than the scan resolution, increase scan_points";
        throw NumericalError(msg.str());
    }

    BranchSet b;
    b.t = t;
    b.x = x;
    b.roots = std::move(roots);
    std::sort(b.roots.begin(), b.roots.end());
    for (double y : b.roots) {
        b.residuals.push_back(std::abs(h(y)));
        const double slope = 1.0 + 2.0 * t * u0.derivative(x - 2.0 * t * y);
        if (std::abs(slope) < kCausticTolerance) b.caustic = true;
    }
    if (b.roots.size() % 2 == 0) b.caustic = true;
    return b;
}

double alternating_sum(const BranchSet& b) {
    if (b.caustic) throw DomainError("alternating sum is undefined at a caustic point");
    double s = 0.0;
    double sign = 1.0;
    for (double y : b.roots) {
        s += sign * y;
        sign = -sign;
    }
    return s;
}

BreakingTimes breaking_times(const TorusFunction& u0) {
    if (!u0.differentiable()) throw DomainError("breaking times need a continuously differentiable datum");
    const auto [dmin, dmax] = u0.derivative_range();
    const double inf = std::numeric_limits<double>::infinity();
    BreakingTimes bt;
    bt.minus = dmax > 0.0 ? -1.0 / (2.0 * dmax) : -inf;
    bt.plus = dmin < 0.0 ? -1.0 / (2.0 * dmin) : inf;
    return bt;
}

bool is_caustic(const TorusFunction& u0, double t, double x, double tol) {
    if (t == 0.0) return false;
    auto g = [&](double z) { return z + 2.0 * t * u0(z); };
    auto dg = [&](double z) { return 1.0 + 2.0 * t * u0.derivative(z); };
    const int n = std::max(4096, 16 * u0.degree());
    const double h = kTwoPi / n;
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = dg(i * h);
    auto at = [&](int i) { return d[static_cast<std::size_t>((i % n + n) % n)]; };

    double slack = 0.0;
    for (int i = 0; i < n; ++i) slack = std::max(slack, std::abs(at(i + 1) - at(i)));

    auto hits = [&](double z) { return std::abs(dg(z)) <= tol && torus_distance(g(z), x) <= tol; };
    const int bits = std::numeric_limits<double>::digits;
    for (int i = 0; i < n; ++i) {
        const double a = at(i);
        const double b = at(i + 1);
        if ((a > 0.0) != (b > 0.0)) {
            const double z = bisect(dg, i * h, (i + 1) * h);
            if (hits(z)) return true;
        }
        // Tangential zeros of g' show up as local minima of |g'|.
        const double m = std::abs(a);
        if (m <= std::abs(at(i - 1)) && m < std::abs(b) && m <= tol + 2.0 * slack) {
            auto sq = [&](double z) { const double v = dg(z); return v * v; };
            const auto r = boost::math::tools::brent_find_minima(sq, (i - 1) * h, (i + 1) * h, bits);
            if (hits(r.first)) return true;
        }
    }
    return false;
}

}  // namespace zdl
