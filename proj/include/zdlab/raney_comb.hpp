#pragma once

// Combinatorics of shift words S(m,n): vacuum weights <S(m,n)1,1>, signed
// sums, Raney rotations, the associated vector, and the two series
// expansions of the k-th Fourier coefficient in powers of (-2it).

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zdlab/fourier_core.hpp"

namespace zdl {

using Rational = boost::multiprecision::cpp_rational;

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_zero() const { return re == 0 && im == 0; }
    cplx to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

// Integer vector with 1-based cyclic indexing: y_{j + L} = y_j.
class CyclicVector {
public:
    CyclicVector() = default;
    explicit CyclicVector(std::vector<long> values) : v_(std::move(values)) {}

    long size() const { return static_cast<long>(v_.size()); }
    long operator[](long j) const;
    const std::vector<long>& values() const { return v_; }
    // (T^r y)_j = y_{j+r}
    CyclicVector rotated(long r) const;

    friend bool operator==(const CyclicVector& a, const CyclicVector& b) { return a.v_ == b.v_; }

private:
    std::vector<long> v_;
};

// m has d+1 entries summing to k >= 1; n has k nonnegative entries summing to d.
struct ShiftWord {
    std::vector<long> m;
    std::vector<long> n;

    long k() const;
    long d() const;
    bool valid() const;
};

// Sigma(y, j): y_1 + ... + y_j for j > 0, -(y_{j+1} + ... + y_0) for j < 0, 0 for j = 0.
long signed_sum(const CyclicVector& y, long j);

// <S(m,n)1, 1> in {0, 1}, by tracking the exponent of the monomial.
int shift_word_weight(const ShiftWord& w);

// The unique r in {1..d+1} with all proper partial sums of T^r y positive.
int raney_rotation(const CyclicVector& y);

// Sigma(n, Sigma(m, j)) < j for every j in 1..d.
bool weight_characterization(const ShiftWord& w);

// y_j = 1 + Sigma(n, Sigma(m, j-1)) - Sigma(n, Sigma(m, j)), j = 1..d+1.
CyclicVector associated_vector(const ShiftWord& w);

// sum_{j=1}^{d+1} sum_{l=1}^{k} weight(T^j m, T^l n)
long raney_type_sum(const ShiftWord& w);

inline constexpr long kDefaultWordBudget = 10'000'000;

// Coefficient of (-2it)^d in the expansion of <(e^{-2itT}S*)^k Pi u0, 1>:
// sum over m in X_{d,k} with entries in [-M, M] and n in Y_{d,k} of
// weight(m,n) uhat(m) / n!.
cplx hard_expansion_coeff(const TorusFunction& u0, int k, int d, long budget = kDefaultWordBudget);
// (k^d / (d+1)!) sum_{m in X_{d,k}} uhat(m)
cplx easy_expansion_coeff(const TorusFunction& u0, int k, int d, long budget = kDefaultWordBudget);

// Exact versions; u0 must have dyadic-rational trig coefficients.
GaussianRational hard_expansion_exact(const TorusFunction& u0, int k, int d, long budget = kDefaultWordBudget);
GaussianRational easy_expansion_exact(const TorusFunction& u0, int k, int d, long budget = kDefaultWordBudget);

// Calls f(m) for every m in Z^{len} with entries in [-bound, bound] summing to total.
void for_each_composition_bounded(int len, long total, long bound, const std::function<void(const std::vector<long>&)>& f);
// Calls f(n) for every n in N_0^{parts} summing to total.
void for_each_weak_composition(int parts, long total, const std::function<void(const std::vector<long>&)>& f);

struct RaneyVerifyRow {
    int k = 0;
    int d = 0;
    int bound = 0;
    long words_checked = 0;
    long failures = 0;
};

// Exhaustive check of the Raney-type sum, the weight characterization and the
// associated-vector properties for 1 <= k <= k_max, 0 <= d <= d_max, m-entries
// in [-bound, bound].
std::vector<RaneyVerifyRow> verify_shift_words(int k_max, int d_max, int bound, long budget = kDefaultWordBudget);

}  // namespace zdl
