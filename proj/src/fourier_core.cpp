#include "zdlab/fourier_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "zdlab/errors.hpp"

namespace zdl {

namespace {

double eval_trig(const TrigPoly& p, double x) {
    const cplx step = std::polar(1.0, x);
    cplx power = 1.0;
    double sum = p.mean;
    const std::size_t n = std::max(p.cos_coeffs.size(), p.sin_coeffs.size());
    for (std::size_t j = 0; j < n; ++j) {
        power *= step;
        if (j < p.cos_coeffs.size()) sum += p.cos_coeffs[j] * power.real();
        if (j < p.sin_coeffs.size()) sum += p.sin_coeffs[j] * power.imag();
    }
    return sum;
}

double eval_trig_derivative(const TrigPoly& p, double x) {
    const cplx step = std::polar(1.0, x);
    cplx power = 1.0;
    double sum = 0.0;
    const std::size_t n = std::max(p.cos_coeffs.size(), p.sin_coeffs.size());
    for (std::size_t j = 0; j < n; ++j) {
        power *= step;
        const double freq = static_cast<double>(j + 1);
        if (j < p.cos_coeffs.size()) sum -= freq * p.cos_coeffs[j] * power.imag();
        if (j < p.sin_coeffs.size()) sum += freq * p.sin_coeffs[j] * power.real();
    }
    return sum;
}

double wrap(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

int trig_degree(const TrigPoly& p) {
    return static_cast<int>(std::max(p.cos_coeffs.size(), p.sin_coeffs.size()));
}

// Min and max of a smooth periodic f: dense scan, then Brent refinement around
// every sampled local extremum that comes within `slack` of the sampled optimum.
std::pair<double, double> refined_extrema(const std::function<double(double)>& f, int samples) {
    std::vector<double> vals(static_cast<std::size_t>(samples));
    const double h = kTwoPi / samples;
    for (int i = 0; i < samples; ++i) vals[static_cast<std::size_t>(i)] = f(i * h);
    const auto [lo_it, hi_it] = std::minmax_element(vals.begin(), vals.end());
    double lo = *lo_it;
    double hi = *hi_it;
    const double slack = 1e-3 * (1.0 + hi - lo);
    const int bits = std::numeric_limits<double>::digits;
    auto at = [&](int i) { return vals[static_cast<std::size_t>((i % samples + samples) % samples)]; };
    for (int i = 0; i < samples; ++i) {
        const double v = at(i);
        if (v < at(i - 1) && v <= at(i + 1) && v <= lo + slack) {
            auto r = boost::math::tools::brent_find_minima(f, (i - 1) * h, (i + 1) * h, bits);
            lo = std::min(lo, r.second);
        }
        if (v > at(i - 1) && v >= at(i + 1) && v >= hi - slack) {
            auto neg = [&](double x) { return -f(x); };
            auto r = boost::math::tools::brent_find_minima(neg, (i - 1) * h, (i + 1) * h, bits);
            hi = std::max(hi, -r.second);
        }
    }
    return {lo, hi};
}

// e^{-2 pi i m / n}, m = 0..n-1
std::vector<cplx> unit_roots(int n) {
    std::vector<cplx> r(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) r[static_cast<std::size_t>(m)] = std::polar(1.0, -kTwoPi * m / n);
    return r;
}

int scan_size(int degree) { return std::max(4096, 16 * degree); }

}  // namespace

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<double> torus_grid(int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) xs[static_cast<std::size_t>(j)] = kTwoPi * j / n;
    return xs;
}

TorusFunction TorusFunction::trig(double mean, std::vector<double> cos_coeffs,
                                  std::vector<double> sin_coeffs) {
    TorusFunction u;
    u.kind_ = Kind::Trig;
    u.trig_.mean = mean;
    u.trig_.cos_coeffs = std::move(cos_coeffs);
    u.trig_.sin_coeffs = std::move(sin_coeffs);
    for (double c : u.trig_.cos_coeffs)
        if (!std::isfinite(c)) throw DomainError("trig coefficient is not finite");
    for (double c : u.trig_.sin_coeffs)
        if (!std::isfinite(c)) throw DomainError("trig coefficient is not finite");
    if (!std::isfinite(mean)) throw DomainError("trig mean is not finite");
    u.finalize();
    return u;
}

TorusFunction TorusFunction::constant(double c) { return trig(c, {}, {}); }

TorusFunction TorusFunction::grid(std::vector<double> values, Interp interp) {
    const long n = static_cast<long>(values.size());
    if (n < 4 || !is_power_of_two(n))
        throw DomainError("grid size must be a power of two >= 4, got " + std::to_string(n));
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("grid sample is not finite");
    TorusFunction u;
    u.kind_ = Kind::Grid;
    u.grid_.values = std::move(values);
    u.grid_.interp = interp;
    u.finalize();
    return u;
}

TorusFunction TorusFunction::sampled(const std::function<double(double)>& f, int n, Interp interp) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (double x : torus_grid(n)) values.push_back(f(x));
    return grid(std::move(values), interp);
}

void TorusFunction::finalize() {
    if (kind_ == Kind::Grid) {
        const auto& v = grid_.values;
        const int n = static_cast<int>(v.size());
        const int half = n / 2;
        interpolant_ = TrigPoly{};
        interpolant_.cos_coeffs.assign(static_cast<std::size_t>(half), 0.0);
        interpolant_.sin_coeffs.assign(static_cast<std::size_t>(half), 0.0);
        double mean = 0.0;
        for (double s : v) mean += s;
        interpolant_.mean = mean / n;
        if (grid_.interp == Interp::Linear) {
            const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            range_ = {*lo, *hi};
            return;
        }
        const auto roots = unit_roots(n);
        for (int k = 1; k <= half; ++k) {
            cplx acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += v[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>((static_cast<long>(k) * j) % n)];
            acc /= static_cast<double>(n);
            // Nyquist mode is split between +-N/2, which halves its weight.
            const double w = (k == half) ? 1.0 : 2.0;
            interpolant_.cos_coeffs[static_cast<std::size_t>(k - 1)] = w * acc.real();
            interpolant_.sin_coeffs[static_cast<std::size_t>(k - 1)] = -w * acc.imag();
        }
    }
    range_ = refined_extrema([this](double x) { return (*this)(x); }, scan_size(degree()));
}

const TrigPoly& TorusFunction::trig_data() const {
    if (!is_trig()) throw DomainError("function is not a trigonometric polynomial");
    return trig_;
}

const GridSamples& TorusFunction::grid_data() const {
    if (!is_grid()) throw DomainError("function is not grid-sampled");
    return grid_;
}

double TorusFunction::operator()(double x) const {
    if (kind_ == Kind::Trig) return eval_trig(trig_, x);
    if (grid_.interp == Interp::Trig) return eval_trig(interpolant_, x);
    const auto& v = grid_.values;
    const int n = static_cast<int>(v.size());
    const double s = wrap(x) * n / kTwoPi;
    int i = static_cast<int>(std::floor(s));
    const double frac = s - i;
    i %= n;
    const double a = v[static_cast<std::size_t>(i)];
    const double b = v[static_cast<std::size_t>((i + 1) % n)];
    return a + frac * (b - a);
}

double TorusFunction::derivative(double x) const {
    if (kind_ == Kind::Trig) return eval_trig_derivative(trig_, x);
    if (grid_.interp == Interp::Trig) return eval_trig_derivative(interpolant_, x);
    const auto& v = grid_.values;
    const int n = static_cast<int>(v.size());
    int i = static_cast<int>(std::floor(wrap(x) * n / kTwoPi)) % n;
    return (v[static_cast<std::size_t>((i + 1) % n)] - v[static_cast<std::size_t>(i)]) * n / kTwoPi;
}

int TorusFunction::degree() const {
    return kind_ == Kind::Trig ? trig_degree(trig_) : static_cast<int>(grid_.values.size() / 2);
}

double TorusFunction::mean() const { return kind_ == Kind::Trig ? trig_.mean : interpolant_.mean; }

double TorusFunction::sup_abs() const { return std::max(std::abs(range_.first), std::abs(range_.second)); }

std::pair<double, double> TorusFunction::derivative_range() const {
    if (kind_ == Kind::Trig && trig_degree(trig_) == 0) return {0.0, 0.0};
    if (!differentiable()) {
        const auto& v = grid_.values;
        const int n = static_cast<int>(v.size());
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int i = 0; i < n; ++i) {
            const double s = (v[static_cast<std::size_t>((i + 1) % n)] - v[static_cast<std::size_t>(i)]) * n / kTwoPi;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return {lo, hi};
    }
    return refined_extrema([this](double x) { return derivative(x); }, scan_size(degree()));
}

TorusFunction TorusFunction::translated(double a) const {
    if (kind_ == Kind::Trig) {
        const std::size_t n = static_cast<std::size_t>(trig_degree(trig_));
        std::vector<double> c(n, 0.0), s(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double ca = j < trig_.cos_coeffs.size() ? trig_.cos_coeffs[j] : 0.0;
            const double sb = j < trig_.sin_coeffs.size() ? trig_.sin_coeffs[j] : 0.0;
            const double phase = static_cast<double>(j + 1) * a;
            c[j] = ca * std::cos(phase) - sb * std::sin(phase);
            s[j] = ca * std::sin(phase) + sb * std::cos(phase);
        }
        return trig(trig_.mean, std::move(c), std::move(s));
    }
    const int n = static_cast<int>(grid_.values.size());
    return sampled([&](double x) { return (*this)(x - a); }, n, grid_.interp);
}

FourierSeries::FourierSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(2 * order + 1), cplx{}) {
    if (order < 0) throw DomainError("negative truncation order");
}

cplx FourierSeries::operator[](int k) const {
    if (k < -order_ || k > order_) return cplx{};
    return coeffs_[static_cast<std::size_t>(k + order_)];
}

cplx& FourierSeries::operator[](int k) {
    if (k < -order_ || k > order_) throw DomainError("Fourier index outside truncation");
    return coeffs_[static_cast<std::size_t>(k + order_)];
}

double HardyCoeffs::norm() const {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return std::sqrt(s);
}

FourierSeries fourier_coeffs(const TorusFunction& u, int order) {
    if (order < 1) throw DomainError("truncation order K must be >= 1");
    FourierSeries f(order);
    if (u.is_trig()) {
        const auto& p = u.trig_data();
        f[0] = p.mean;
        for (int k = 1; k <= order; ++k) {
            const std::size_t j = static_cast<std::size_t>(k - 1);
            const double a = j < p.cos_coeffs.size() ? p.cos_coeffs[j] : 0.0;
            const double b = j < p.sin_coeffs.size() ? p.sin_coeffs[j] : 0.0;
            f[k] = cplx(a / 2.0, -b / 2.0);
            f[-k] = std::conj(f[k]);
        }
        return f;
    }
    const auto& v = u.grid_data().values;
    const long n = static_cast<long>(v.size());
    if (n < 2L * order + 1) {
        std::ostringstream msg;
        msg << "grid of " << n << " samples aliases modes up to K=" << order << " (need N >= 2K+1)";
        throw DomainError(msg.str());
    }
    const auto roots = unit_roots(static_cast<int>(n));
    for (int k = 0; k <= order; ++k) {
        cplx acc = 0.0;
        for (long j = 0; j < n; ++j)
            acc += v[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>((k * j) % n)];
        f[k] = acc / static_cast<double>(n);
        if (k > 0) f[-k] = std::conj(f[k]);
    }
    return f;
}

HardyCoeffs szego_project(const FourierSeries& f) {
    HardyCoeffs h(f.order());
    for (int k = 0; k <= f.order(); ++k) h[k] = f[k];
    return h;
}

TorusFunction reconstruct_real(const HardyCoeffs& h, double tau_im) {
    if (h.c.empty()) throw DomainError("empty Hardy coefficient vector");
    if (std::abs(h[0].imag()) > tau_im) {
        std::ostringstream msg;
        msg << "mean coefficient has imaginary part " << h[0].imag() << "; underlying function is not real";
        throw DomainError(msg.str());
    }
    std::vector<double> c, s;
    for (int k = 1; k <= h.order(); ++k) {
        c.push_back(2.0 * h[k].real());
        s.push_back(-2.0 * h[k].imag());
    }
    return TorusFunction::trig(h[0].real(), std::move(c), std::move(s));
}

cplx inner_product(const HardyCoeffs& f, const HardyCoeffs& g) {
    if (f.order() != g.order()) throw DomainError("inner product of mismatched truncation orders");
    cplx s = 0.0;
    for (std::size_t k = 0; k < f.c.size(); ++k) s += f.c[k] * std::conj(g.c[k]);
    return s;
}

TorusFunction torus_from_json(const nlohmann::json& j) {
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "trig") {
            return TorusFunction::trig(j.value("mean", 0.0), j.value("cos", std::vector<double>{}),
                                       j.value("sin", std::vector<double>{}));
        }
        if (type == "grid") {
            const std::string interp = j.value("interp", std::string("trig"));
            if (interp != "trig" && interp != "linear") throw DomainError("unknown interp '" + interp + "'");
            return TorusFunction::grid(j.at("values").get<std::vector<double>>(),
                                       interp == "trig" ? Interp::Trig : Interp::Linear);
        }
        throw DomainError("unknown datum type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed datum JSON: ") + e.what());
    }
}

nlohmann::json torus_to_json(const TorusFunction& u) {
    if (u.is_trig()) {
        const auto& p = u.trig_data();
        return {{"type", "trig"}, {"mean", p.mean}, {"cos", p.cos_coeffs}, {"sin", p.sin_coeffs}};
    }
    const auto& g = u.grid_data();
    return {{"type", "grid"}, {"values", g.values}, {"interp", g.interp == Interp::Trig ? "trig" : "linear"}};
}

}  // namespace zdl
