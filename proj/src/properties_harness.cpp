#include "zdlab/properties_harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zdlab/burgers_multivalued.hpp"
#include "zdlab/chi_transport.hpp"
#include "zdlab/errors.hpp"

namespace zdl {

namespace {

constexpr double kMaxPrincipleTol = 1e-6;
constexpr double kNormTol = 1e-4;
constexpr double kContractionTol = 1e-4;
constexpr double kOleinikTol = 1e-6;
constexpr double kWindowTol = 1e-6;
constexpr double kEqualityTol = 1e-10;

PropertyReport make_report(std::string property, std::string inputs, double measured, double bound,
                           double tolerance) {
    PropertyReport r;
    r.property = std::move(property);
    r.inputs = std::move(inputs);
    r.measured = measured;
    r.bound = bound;
    r.slack = bound - measured;
    r.tolerance = tolerance;
    r.pass = r.slack >= -tolerance;
    return r;
}

std::string describe(const TorusFunction& u) {
    std::ostringstream s;
    s.precision(6);
    if (u.is_trig()) {
        const auto& p = u.trig_data();
        s << "trig(mean=" << p.mean << ", degree=" << u.degree() << ")";
    } else {
        s << "grid(N=" << u.grid_data().values.size() << ")";
    }
    return s.str();
}

std::vector<double> profile_on_grid(const TorusFunction& u0, double t, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (double x : torus_grid(n)) out.push_back(as_profile_quadrature(u0, t, x));
    return out;
}

std::vector<double> profile_midpoints(const TorusFunction& u0, double t, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    const double h = kTwoPi / n;
    for (int j = 0; j < n; ++j) out.push_back(as_profile_quadrature(u0, t, (j + 0.5) * h));
    return out;
}

double sample_norm(const std::vector<double>& v, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double a : v) m = std::max(m, std::abs(a));
        return m;
    }
    double acc = 0.0;
    for (double a : v) acc += std::pow(std::abs(a), p);
    return std::pow(acc / static_cast<double>(v.size()), 1.0 / p);
}

// (1/2pi) int_0^{2pi} f^2 by adaptive Gauss-Kronrod.
template <class F>
double mean_square(F&& f) {
    auto sq = [&](double x) {
        const double v = f(x);
        return v * v;
    };
    double err = 0.0;
    const double total = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(sq, 0.0, kTwoPi, 20, 1e-12, &err);
    return total / kTwoPi;
}

}  // namespace

nlohmann::json report_to_json(const PropertyReport& r) {
    return {{"property", r.property}, {"inputs", r.inputs}, {"pass", r.pass},       {"measured", r.measured},
            {"bound", r.bound},       {"slack", r.slack},   {"tolerance", r.tolerance}, {"seed", r.seed}};
}

nlohmann::json reports_to_json(const std::vector<PropertyReport>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

PropertyReport check_max_principle(const TorusFunction& u0, double t, int grid_n) {
    if (grid_n < 1) throw DomainError("grid_n must be positive");
    double excess = -std::numeric_limits<double>::infinity();
    for (double v : profile_on_grid(u0, t, grid_n)) excess = std::max({excess, v - u0.max(), u0.min() - v});
    std::ostringstream in;
    in << describe(u0) << ", t=" << t << ", grid=" << grid_n;
    return make_report("max_principle", in.str(), excess, 0.0, kMaxPrincipleTol);
}

PropertyReport check_norm_control(const TorusFunction& u0, double t, double p) {
    if (!(p == 1.0 || p == 2.0 || std::isinf(p))) throw DomainError("norm control is checked for p in {1, 2, inf}");
    const double lhs = sample_norm(profile_midpoints(u0, t, kNormSamples), p);
    const double rhs = lp_norm([&](double x) { return u0(x); }, p, kNormSamples);
    std::ostringstream in;
    in << describe(u0) << ", t=" << t << ", p=" << p;
    return make_report("norm_control", in.str(), lhs, rhs, kNormTol);
}

PropertyReport check_l1_contraction(const TorusFunction& u0, const TorusFunction& v0, double t) {
    const auto a = profile_midpoints(u0, t, kNormSamples);
    const auto b = profile_midpoints(v0, t, kNormSamples);
    double lhs = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) lhs += std::abs(a[j] - b[j]);
    lhs /= static_cast<double>(a.size());
    const double rhs = lp_norm([&](double x) { return u0(x) - v0(x); }, 1.0, kNormSamples);
    std::ostringstream in;
    in << describe(u0) << " vs " << describe(v0) << ", t=" << t;
    return make_report("l1_contraction", in.str(), lhs, rhs, kContractionTol);
}

PropertyReport check_oleinik(const TorusFunction& u0, double t, int grid_n) {
    if (t == 0.0) throw DomainError("Oleinik estimate needs t != 0");
    if (grid_n < 2) throw DomainError("grid_n must be >= 2");
    const auto v = profile_on_grid(u0, t, grid_n);
    const double h = kTwoPi / grid_n;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            if (i == j) continue;
            // representative of x_i - x_j in (-pi, pi]
            int diff = i - j;
            if (2 * diff > grid_n) diff -= grid_n;
            if (2 * diff <= -grid_n) diff += grid_n;
            const double q = 2.0 * t * (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)]) / (diff * h);
            worst = std::max(worst, q);
        }
    }
    std::ostringstream in;
    in << describe(u0) << ", t=" << t << ", grid=" << grid_n;
    return make_report("oleinik", in.str(), worst, 1.0, kOleinikTol);
}

PropertyReport check_strong_window(const TorusFunction& u0, const std::vector<double>& samples) {
    if (samples.empty()) throw DomainError("strong-window check needs at least one time");
    const BreakingTimes bt = breaking_times(u0);
    for (double t : samples)
        if (!(t >= bt.minus && t <= bt.plus)) {
            std::ostringstream msg;
            msg << "time " << t << " outside the breaking window [" << bt.minus << ", " << bt.plus << "]";
            throw DomainError(msg.str());
        }
    const double ref = mean_square([&](double x) { return u0(x); });
    double worst = 0.0;
    for (double t : samples) {
        const double n2 = mean_square([&](double x) { return as_profile_quadrature(u0, t, x); });
        worst = std::max(worst, std::abs(n2 - ref));
    }
    std::ostringstream in;
    in << describe(u0) << ", times=" << samples.size() << ", window=[" << bt.minus << ", " << bt.plus << "]";
    return make_report("strong_window", in.str(), worst, 0.0, kWindowTol);
}

PropertyReport check_weighted_inequality(const StepFunction& f, double p) {
    if (!(p >= 1.0)) throw DomainError("weighted inequality needs p >= 1");
    if (f.edges.size() != f.values.size() + 1 || f.values.empty()) throw DomainError("step function needs one more edge than values");
    if (f.edges.front() != 0.0) throw DomainError("step function must start at 0");
    double l1 = 0.0;
    double sup = 0.0;
    double moment = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double a = f.edges[i];
        const double b = f.edges[i + 1];
        if (!(b > a)) throw DomainError("step edges must be strictly increasing");
        const double v = std::abs(f.values[i]);
        l1 += v * (b - a);
        if (v > 0.0) sup = std::max(sup, v);
        moment += v * (std::pow(b, p) - std::pow(a, p)) / p;
    }
    const double rhs = std::pow(p, 1.0 / p) * std::pow(sup, 1.0 - 1.0 / p) * std::pow(moment, 1.0 / p);
    std::ostringstream in;
    in << "steps=" << f.values.size() << ", p=" << p;
    PropertyReport r = make_report("weighted_inequality", in.str(), l1, rhs, kEqualityTol);
    if (f.values.size() == 1) {
        r.property = "weighted_equality";
        r.pass = std::abs(r.slack) <= kEqualityTol;
    }
    return r;
}

TorusFunction random_trig(std::uint64_t seed, int modes, double amp) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-amp, amp);
    const double mean = dist(rng);
    std::vector<double> c(static_cast<std::size_t>(modes));
    std::vector<double> s(static_cast<std::size_t>(modes));
    for (int j = 0; j < modes; ++j) {
        c[static_cast<std::size_t>(j)] = dist(rng);
        s[static_cast<std::size_t>(j)] = dist(rng);
    }
    return TorusFunction::trig(mean, std::move(c), std::move(s));
}

std::vector<PropertyReport> run_property_suite(const TorusFunction& u0, std::uint64_t seed, int grid_n) {
    const std::vector<double> times{0.3, 1.0, 3.0};
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<PropertyReport> out;
    for (double t : times) {
        out.push_back(check_max_principle(u0, t, grid_n));
        for (double p : {1.0, 2.0, inf}) out.push_back(check_norm_control(u0, t, p));
        out.push_back(check_oleinik(u0, t, grid_n));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
        const TorusFunction a = random_trig(rng(), 3, 1.0);
        const TorusFunction b = random_trig(rng(), 3, 1.0);
        for (double t : times) {
            PropertyReport r = check_l1_contraction(a, b, t);
            r.seed = seed;
            out.push_back(std::move(r));
        }
    }
    if (u0.differentiable()) {
        const BreakingTimes bt = breaking_times(u0);
        const double lo = std::isinf(bt.minus) ? -1.0 : bt.minus;
        const double hi = std::isinf(bt.plus) ? 1.0 : bt.plus;
        out.push_back(check_strong_window(u0, {lo, 0.5 * lo, 0.0, 0.5 * hi, hi}));
    }
    out.push_back(check_weighted_inequality({{0.0, 1.0}, {1.0}}, 2.0));
    out.push_back(check_weighted_inequality({{0.0, 3.0}, {2.0}}, 3.0));
    out.push_back(check_weighted_inequality({{0.0, 1.0, 2.0, 3.0}, {1.0, 0.0, 1.0}}, 2.0));
    std::uniform_real_distribution<double> pos(0.1, 4.0);
    for (int i = 0; i < 5; ++i) {
        const double alpha = pos(rng);
        const double radius = pos(rng);
        const double p = 1.0 + pos(rng);
        PropertyReport r = check_weighted_inequality({{0.0, radius}, {alpha}}, p);
        r.seed = seed;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace zdl
