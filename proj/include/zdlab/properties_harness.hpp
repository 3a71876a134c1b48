#pragma once

// Executable checks of the qualitative properties of the alternating-sum
// profile: maximum principle, norm control, L1 contraction, Oleinik bound,
// norm preservation before breaking, and the weighted step-function inequality.
// All profiles are computed by kinetic quadrature.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdlab/fourier_core.hpp"

namespace zdl {

struct PropertyReport {
    std::string property;
    std::string inputs;
    double measured = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // bound - measured
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
};

nlohmann::json report_to_json(const PropertyReport& r);
nlohmann::json reports_to_json(const std::vector<PropertyReport>& rs);

inline constexpr int kNormSamples = 4096;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

// inf u0 - 1e-6 <= AS(t, x) <= sup u0 + 1e-6 on grid_n points.
PropertyReport check_max_principle(const TorusFunction& u0, double t, int grid_n);
// ||AS(t)||_p <= ||u0||_p + 1e-4; p = 1, 2 or infinity.
PropertyReport check_norm_control(const TorusFunction& u0, double t, double p);
// ||AS[u0](t) - AS[v0](t)||_1 <= ||u0 - v0||_1 + 1e-4.
PropertyReport check_l1_contraction(const TorusFunction& u0, const TorusFunction& v0, double t);
// max over grid pairs of 2t (AS(x) - AS(y)) / (x - y) <= 1 + 1e-6, x - y in (-pi, pi].
PropertyReport check_oleinik(const TorusFunction& u0, double t, int grid_n);
// | ||AS(t)||_2^2 - ||u0||_2^2 | <= 1e-6 for every t in samples; samples must
// lie in the breaking window.
PropertyReport check_strong_window(const TorusFunction& u0, const std::vector<double>& samples);

// f = sum_i values[i] * 1_{(edges[i], edges[i+1])} on (0, inf), edges[0] = 0.
struct StepFunction {
    std::vector<double> edges;
    std::vector<double> values;
};

// ||f||_1 <= p^{1/p} ||f||_inf^{1-1/p} || |.|^{p-1} f ||_1^{1/p}; when f is a
// single step alpha 1_{(0,R)} equality is required to 1e-10.
PropertyReport check_weighted_inequality(const StepFunction& f, double p);

// Random trig polynomial with `modes` modes and coefficients uniform in [-amp, amp].
TorusFunction random_trig(std::uint64_t seed, int modes, double amp);

// Full suite on u0: every property at the standard times, 20 seeded random
// contraction pairs and the weighted-inequality family.
std::vector<PropertyReport> run_property_suite(const TorusFunction& u0, std::uint64_t seed = kDefaultSeed,
                                               int grid_n = 256);

}  // namespace zdl
