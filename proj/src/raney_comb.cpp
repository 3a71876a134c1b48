#include "zdlab/raney_comb.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "zdlab/errors.hpp"

namespace zdl {

namespace {

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

double binomial(long n, long r) {
    if (r < 0 || r > n) return 0.0;
    double b = 1.0;
    for (long i = 1; i <= r; ++i) b = b * static_cast<double>(n - r + i) / static_cast<double>(i);
    return b;
}

std::vector<long> rotate_vec(const std::vector<long>& v, long r) {
    const long len = static_cast<long>(v.size());
    std::vector<long> out(v.size());
    for (long j = 0; j < len; ++j) out[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(floor_mod(j + r, len))];
    return out;
}

Rational exact_rational(double x) {
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r(scaled);
    const int shift = exp - 53;
    boost::multiprecision::cpp_int pow2 = 1;
    pow2 <<= std::abs(shift);
    if (shift >= 0) {
        r *= Rational(pow2);
    } else {
        r /= Rational(pow2);
    }
    return r;
}

struct TrigSupport {
    int bound = 0;  // M
    std::vector<long> modes;  // modes with nonzero coefficient, within [-M, M]
};

TrigSupport support_of(const TorusFunction& u0) {
    if (!u0.is_trig()) throw DomainError("series expansions need a trigonometric-polynomial datum");
    TrigSupport s;
    s.bound = std::max(u0.degree(), 0);
    const FourierSeries f = fourier_coeffs(u0, std::max(1, s.bound));
    for (long m = -s.bound; m <= s.bound; ++m)
        if (f[static_cast<int>(m)] != cplx{}) s.modes.push_back(m);
    return s;
}

void check_budget(int k, int d, int bound, bool with_n, long budget) {
    double words = std::pow(2.0 * bound + 1.0, d + 1);
    if (with_n) words *= binomial(d + k - 1, k - 1);
    if (words > static_cast<double>(budget)) {
        std::ostringstream msg;
        msg << "enumeration of ~" << words << " words exceeds the budget of " << budget
            << "; reduce k, d or the datum degree M";
        throw BudgetError(msg.str());
    }
}

void check_kd(int k, int d) {
    if (k < 1) throw DomainError("expansion index k must be >= 1");
    if (d < 0) throw DomainError("expansion degree d must be >= 0");
}

// Calls f(m) for every m in modes^{len} summing to total.
void for_each_from_support(int len, long total, const std::vector<long>& modes,
                           const std::function<void(const std::vector<long>&)>& f) {
    if (modes.empty()) return;
    const auto [lo_it, hi_it] = std::minmax_element(modes.begin(), modes.end());
    const long lo = *lo_it;
    const long hi = *hi_it;
    std::vector<long> m(static_cast<std::size_t>(len));
    std::function<void(int, long)> rec = [&](int pos, long remaining) {
        const long left = len - pos;
        if (left == 0) {
            if (remaining == 0) f(m);
            return;
        }
        if (remaining < lo * left || remaining > hi * left) return;
        for (long v : modes) {
            m[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, total);
}

template <class Scalar, class Coeff, class FromWeight>
Scalar hard_sum(const TrigSupport& s, int k, int d, Coeff&& coeff, FromWeight&& weight_over_factorial) {
    Scalar total{};
    for_each_from_support(d + 1, k, s.modes, [&](const std::vector<long>& m) {
        Scalar prod = coeff(m[0]);
        for (std::size_t i = 1; i < m.size(); ++i) prod = prod * coeff(m[i]);
        for_each_weak_composition(k, d, [&](const std::vector<long>& n) {
            if (shift_word_weight(ShiftWord{m, n}) == 1) total += prod * weight_over_factorial(n);
        });
    });
    return total;
}

template <class Scalar, class Coeff>
Scalar easy_sum(const TrigSupport& s, int k, int d, Coeff&& coeff) {
    Scalar total{};
    for_each_from_support(d + 1, k, s.modes, [&](const std::vector<long>& m) {
        Scalar prod = coeff(m[0]);
        for (std::size_t i = 1; i < m.size(); ++i) prod = prod * coeff(m[i]);
        total += prod;
    });
    return total;
}

}  // namespace

long CyclicVector::operator[](long j) const {
    if (v_.empty()) throw DomainError("empty cyclic vector");
    return v_[static_cast<std::size_t>(floor_mod(j - 1, size()))];
}

CyclicVector CyclicVector::rotated(long r) const { return CyclicVector(rotate_vec(v_, r)); }

long ShiftWord::k() const {
    long s = 0;
    for (long v : m) s += v;
    return s;
}

long ShiftWord::d() const {
    long s = 0;
    for (long v : n) s += v;
    return s;
}

bool ShiftWord::valid() const {
    if (n.empty() || m.empty()) return false;
    for (long v : n)
        if (v < 0) return false;
    return k() == static_cast<long>(n.size()) && k() >= 1 && d() + 1 == static_cast<long>(m.size());
}

long signed_sum(const CyclicVector& y, long j) {
    long s = 0;
    if (j > 0) {
        for (long i = 1; i <= j; ++i) s += y[i];
    } else if (j < 0) {
        for (long i = j + 1; i <= 0; ++i) s -= y[i];
    }
    return s;
}

int shift_word_weight(const ShiftWord& w) {
    if (!w.valid()) throw DomainError("invalid shift word");
    // Operator sequence left to right, then applied right to left to q^0.
    std::vector<long> ops;
    ops.reserve(w.m.size() + w.n.size());
    std::size_t j = 0;
    for (long block : w.n) {
        for (long c = 0; c < block; ++c) ops.push_back(w.m[j++]);
        ops.push_back(-1);
    }
    ops.push_back(w.m[j]);
    long exponent = 0;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        exponent += *it;
        if (exponent < 0) return 0;
    }
    return exponent == 0 ? 1 : 0;
}

int raney_rotation(const CyclicVector& y) {
    const long len = y.size();
    if (len < 1) throw DomainError("empty vector");
    if (signed_sum(y, len) != 1) throw DomainError("Raney rotation needs a vector summing to one");
    int found = 0;
    int count = 0;
    for (long r = 1; r <= len; ++r) {
        const CyclicVector rot = y.rotated(r);
        bool positive = true;
        long partial = 0;
        for (long j = 1; j < len && positive; ++j) {
            partial += rot[j];
            positive = partial > 0;
        }
        if (positive) {
            found = static_cast<int>(r);
            ++count;
        }
    }
    if (count != 1) throw NumericalError("Raney's lemma violated: " + std::to_string(count) + " valid rotations");
    return found;
}

bool weight_characterization(const ShiftWord& w) {
    if (!w.valid()) throw DomainError("invalid shift word");
    const CyclicVector m(w.m);
    const CyclicVector n(w.n);
    for (long j = 1; j <= w.d(); ++j)
        if (signed_sum(n, signed_sum(m, j)) >= j) return false;
    return true;
}

CyclicVector associated_vector(const ShiftWord& w) {
    if (!w.valid()) throw DomainError("invalid shift word");
    const CyclicVector m(w.m);
    const CyclicVector n(w.n);
    std::vector<long> y;
    for (long j = 1; j <= w.d() + 1; ++j)
        y.push_back(1 + signed_sum(n, signed_sum(m, j - 1)) - signed_sum(n, signed_sum(m, j)));
    return CyclicVector(std::move(y));
}

long raney_type_sum(const ShiftWord& w) {
    if (!w.valid()) throw DomainError("invalid shift word");
    long total = 0;
    const long dm = static_cast<long>(w.m.size());
    const long kn = static_cast<long>(w.n.size());
    for (long j = 1; j <= dm; ++j)
        for (long l = 1; l <= kn; ++l) total += shift_word_weight(ShiftWord{rotate_vec(w.m, j), rotate_vec(w.n, l)});
    return total;
}

void for_each_composition_bounded(int len, long total, long bound,
                                  const std::function<void(const std::vector<long>&)>& f) {
    if (len < 1 || bound < 0) return;
    std::vector<long> modes;
    for (long v = -bound; v <= bound; ++v) modes.push_back(v);
    for_each_from_support(len, total, modes, f);
}

void for_each_weak_composition(int parts, long total, const std::function<void(const std::vector<long>&)>& f) {
    if (parts < 1 || total < 0) return;
    std::vector<long> n(static_cast<std::size_t>(parts), 0);
    std::function<void(int, long)> rec = [&](int pos, long remaining) {
        if (pos == parts - 1) {
            n[static_cast<std::size_t>(pos)] = remaining;
            f(n);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            n[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, total);
}

cplx hard_expansion_coeff(const TorusFunction& u0, int k, int d, long budget) {
    check_kd(k, d);
    const TrigSupport s = support_of(u0);
    check_budget(k, d, s.bound, true, budget);
    const FourierSeries f = fourier_coeffs(u0, std::max(1, s.bound));
    auto coeff = [&](long m) { return f[static_cast<int>(m)]; };
    auto inv_factorial = [](const std::vector<long>& n) {
        double p = 1.0;
        for (long v : n) p *= std::tgamma(static_cast<double>(v) + 1.0);
        return cplx(1.0 / p, 0.0);
    };
    return hard_sum<cplx>(s, k, d, coeff, inv_factorial);
}

cplx easy_expansion_coeff(const TorusFunction& u0, int k, int d, long budget) {
    check_kd(k, d);
    const TrigSupport s = support_of(u0);
    check_budget(k, d, s.bound, false, budget);
    const FourierSeries f = fourier_coeffs(u0, std::max(1, s.bound));
    auto coeff = [&](long m) { return f[static_cast<int>(m)]; };
    const double scale = std::pow(static_cast<double>(k), d) / std::tgamma(static_cast<double>(d) + 2.0);
    return scale * easy_sum<cplx>(s, k, d, coeff);
}

namespace {

std::vector<GaussianRational> exact_coefficients(const TorusFunction& u0, int bound) {
    const auto& p = u0.trig_data();
    std::vector<GaussianRational> c(static_cast<std::size_t>(2 * bound + 1));
    c[static_cast<std::size_t>(bound)] = GaussianRational(exact_rational(p.mean));
    for (int j = 1; j <= bound; ++j) {
        const std::size_t idx = static_cast<std::size_t>(j - 1);
        const Rational a = idx < p.cos_coeffs.size() ? exact_rational(p.cos_coeffs[idx]) : Rational(0);
        const Rational b = idx < p.sin_coeffs.size() ? exact_rational(p.sin_coeffs[idx]) : Rational(0);
        c[static_cast<std::size_t>(bound + j)] = GaussianRational(a / 2, -b / 2);
        c[static_cast<std::size_t>(bound - j)] = GaussianRational(a / 2, b / 2);
    }
    return c;
}

Rational factorial(long n) {
    Rational r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

GaussianRational hard_expansion_exact(const TorusFunction& u0, int k, int d, long budget) {
    check_kd(k, d);
    const TrigSupport s = support_of(u0);
    check_budget(k, d, s.bound, true, budget);
    const auto c = exact_coefficients(u0, s.bound);
    auto coeff = [&](long m) { return c[static_cast<std::size_t>(m + s.bound)]; };
    auto inv_factorial = [](const std::vector<long>& n) {
        Rational p = 1;
        for (long v : n) p *= factorial(v);
        return GaussianRational(Rational(1) / p);
    };
    return hard_sum<GaussianRational>(s, k, d, coeff, inv_factorial);
}

GaussianRational easy_expansion_exact(const TorusFunction& u0, int k, int d, long budget) {
    check_kd(k, d);
    const TrigSupport s = support_of(u0);
    check_budget(k, d, s.bound, false, budget);
    const auto c = exact_coefficients(u0, s.bound);
    auto coeff = [&](long m) { return c[static_cast<std::size_t>(m + s.bound)]; };
    Rational scale = 1;
    for (int i = 0; i < d; ++i) scale *= k;
    scale /= factorial(d + 1);
    return GaussianRational(scale) * easy_sum<GaussianRational>(s, k, d, coeff);
}

std::vector<RaneyVerifyRow> verify_shift_words(int k_max, int d_max, int bound, long budget) {
    if (k_max < 1 || d_max < 0 || bound < 0) throw DomainError("need k_max >= 1, d_max >= 0, M >= 0");
    double total_words = 0.0;
    for (int k = 1; k <= k_max; ++k)
        for (int d = 0; d <= d_max; ++d) total_words += std::pow(2.0 * bound + 1.0, d + 1) * binomial(d + k - 1, k - 1);
    if (total_words > static_cast<double>(budget)) {
        std::ostringstream msg;
        msg << "verification of ~" << total_words << " words exceeds the budget of " << budget;
        throw BudgetError(msg.str());
    }

    std::vector<RaneyVerifyRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        for (int d = 0; d <= d_max; ++d) {
            RaneyVerifyRow row{k, d, bound, 0, 0};
            for_each_composition_bounded(d + 1, k, bound, [&](const std::vector<long>& m) {
                for_each_weak_composition(k, d, [&](const std::vector<long>& n) {
                    const ShiftWord w{m, n};
                    ++row.words_checked;
                    bool ok = raney_type_sum(w) == k;
                    const int weight = shift_word_weight(w);
                    ok = ok && (weight == 1) == weight_characterization(w);
                    const CyclicVector y = associated_vector(w);
                    ok = ok && signed_sum(y, d + 1) == 1;
                    bool positive = true;
                    for (long j = 1; j <= d; ++j) positive = positive && signed_sum(y, j) > 0;
                    ok = ok && (weight == 1) == positive;
                    const ShiftWord shifted{rotate_vec(m, 1), rotate_vec(n, m[0])};
                    ok = ok && y.rotated(1) == associated_vector(shifted);
                    try {
                        const int r = raney_rotation(y);
                        ok = ok && r >= 1 && r <= d + 1;
                    } catch (const NumericalError&) {
                        ok = false;
                    }
                    if (!ok) ++row.failures;
                });
            });
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace zdl
