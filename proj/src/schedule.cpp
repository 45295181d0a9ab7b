#include "dyson/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace dyson {

std::pair<long long, long long> small_rational(double x, long long max_den) {
    // Continued-fraction convergents of |x|.
    double target = std::fabs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double a = target;
    for (int it = 0; it < 48; ++it) {
        long long ai = static_cast<long long>(std::floor(a));
        long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = a - static_cast<double>(ai);
        if (frac < 1e-15) break;
        a = 1.0 / frac;
    }
    if (q1 == 0) return {0, 0};
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::fabs(approx - target) > 1e-12 * std::max(1.0, target)) return {0, 0};
    return {x < 0 ? -p1 : p1, q1};
}

namespace {

// c^e computed through exp2l(log2l(c) * num/den) when e is a small rational;
// exact whenever log2l(c) * num is divisible by den (dyadic c, rational e).
long double rational_pow(long double c, double e) {
    auto [num, den] = small_rational(e);
    if (den != 0) {
        long double l2 = std::log2(c);
        return std::exp2(l2 * static_cast<long double>(num) / static_cast<long double>(den));
    }
    return std::pow(c, static_cast<long double>(e));
}

// Tail of sum_{k > K} k^-m by Euler-Maclaurin; certified to ~K^-m-3 accuracy.
long double tail_power_sum(long double K, int m) {
    long double mm = m;
    long double t = std::pow(K, 1 - mm) / (mm - 1);  // integral term
    t -= 0.5L * std::pow(K, -mm);                    // -f(K)/2
    t += (mm / 12.0L) * std::pow(K, -mm - 1);        // -f'(K)/12
    t -= (mm * (mm + 1) * (mm + 2) / 720.0L) * std::pow(K, -mm - 3);
    return t;
}

} // namespace

RenormSchedule build_schedule(double gamma_prime, double gamma, double alpha,
                              double epsilon, std::int64_t c0, std::int64_t M1,
                              std::int64_t L, int n_max, std::int64_t trunc_terms) {
    if (!(alpha / 2.0 < gamma_prime))
        throw std::invalid_argument("alpha/2 < gamma_prime violated");
    if (!(gamma_prime < gamma)) throw std::invalid_argument("gamma_prime < gamma violated");
    if (!(gamma < 1.0)) throw std::invalid_argument("gamma < 1 violated");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon in (0,1) violated");
    if (c0 < 1) throw std::invalid_argument("c0 >= 1 violated");
    if (M1 < 1) throw std::invalid_argument("M1 >= 1 violated");
    if (L < 0) throw std::invalid_argument("L >= 0 violated");
    if (n_max < 1) throw std::invalid_argument("n_max >= 1 violated");
    if (trunc_terms < 16) throw std::invalid_argument("trunc_terms >= 16 violated");

    RenormSchedule s;
    s.gamma_prime = gamma_prime;
    s.gamma = gamma;
    s.alpha = alpha;
    s.epsilon = epsilon;
    s.c0 = c0;
    s.M1 = M1;
    s.L = L;
    s.n_max = n_max;

    // 2/(1-gamma) through the small-rational route, so that a gamma like 0.9
    // gives the exact exponent 20 and integral n yields integral c_n.
    long double growth_exp = 2.0L / (1.0L - static_cast<long double>(gamma));
    if (auto [num, den] = small_rational(1.0 - gamma); den != 0)
        growth_exp = 2.0L * static_cast<long double>(den) / static_cast<long double>(num);
    const long double c0l = static_cast<long double>(c0);
    const long double d_c0_branch = rational_pow(c0l, gamma - 1.0);

    auto c_of = [&](std::int64_t n) {
        long double cn = std::pow(static_cast<long double>(n), growth_exp);
        return cn >= c0l ? cn : c0l;
    };
    auto d_of = [&](std::int64_t n) {
        // On the n-branch, c_n^(gamma-1) = n^(2(gamma-1)/(1-gamma)) = n^-2
        // identically; no floating-point power needed.
        long double cn = std::pow(static_cast<long double>(n), growth_exp);
        if (cn >= c0l) return 1.0L / (static_cast<long double>(n) * static_cast<long double>(n));
        return d_c0_branch;
    };

    // Branch point: past it every d_k is exactly k^-2, so the product tail
    // has a closed Euler-Maclaurin form. Evaluating the literal stop rule
    // ("tail factor < 1 + 1e-9 by direct summation") would need ~3e9 terms.
    std::int64_t k_branch = 1;
    while (std::pow(static_cast<long double>(k_branch), growth_exp) < c0l) ++k_branch;
    const std::int64_t K = std::max(trunc_terms, k_branch + 1);

    long double log_product = 0.0L;
    for (std::int64_t k = 1; k <= K; ++k) log_product += std::log(1.0L + 3.0L * d_of(k));
    // log prod_{k>K} (1 + 3 k^-2) = 3 S2 - 9/2 S4 + 9 S6 - ... ; S6 and the
    // series remainder are ~1e-18 at K = 4096, far inside the 1e-9 budget.
    const long double Kl = static_cast<long double>(K);
    long double log_tail = 3.0L * tail_power_sum(Kl, 2) - 4.5L * tail_power_sum(Kl, 4) +
                           9.0L * tail_power_sum(Kl, 6);
    long double product = std::exp(log_product + log_tail);
    s.epsilon_1 = static_cast<long double>(epsilon) / product;

    s.c.assign(static_cast<std::size_t>(n_max) + 1, 0.0L);
    s.M.assign(static_cast<std::size_t>(n_max) + 1, 0.0L);
    s.d.assign(static_cast<std::size_t>(n_max) + 1, 0.0L);
    s.eps.assign(static_cast<std::size_t>(n_max) + 1, 0.0L);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        auto i = static_cast<std::size_t>(n);
        s.c[i] = c_of(n);
        s.d[i] = d_of(n);
        s.M[i] = (n == 1) ? static_cast<long double>(M1) : s.M[i - 1] * s.c[i];
        s.eps[i] = (n == 1) ? s.epsilon_1 : (1.0L + 3.0L * s.d[i]) * s.eps[i - 1];
        if (!(s.eps[i] < static_cast<long double>(epsilon)))
            throw std::logic_error("eps_n < epsilon violated");
    }
    return s;
}

std::pair<double, bool> markov_bound(double eps_prev, double d_n) {
    if (!(eps_prev > 0.0 && eps_prev < 1.0))
        throw std::invalid_argument("eps_prev in (0,1) violated");
    if (!(d_n > 0.0)) throw std::invalid_argument("d_n > 0 violated");
    if (!(d_n < 0.5)) throw std::invalid_argument("d_n < 1/2 violated");
    double bound = 1.0 - eps_prev / (1.0 - d_n);
    bool chained = bound >= 1.0 - eps_prev * (1.0 + 2.0 * d_n);
    return {bound, chained};
}

double er_disconnect_bound(std::int64_t k, double q) {
    if (k < 2) throw std::invalid_argument("k >= 2 violated");
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q in (0,1] violated");
    return 2.0 * static_cast<double>(k) * std::pow(1.0 - q, static_cast<double>(k - 1));
}

} // namespace dyson
