#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dyson {

// Deterministic renormalization schedule: scale factors c_n = max{n^{2/(1-g)},
// c0}, block sizes M_n = M_{n-1} c_n, contraction d_n = c_n^{g-1}, and error
// budget eps_n = (1+3 d_n) eps_{n-1} seeded by eps_1 = eps / prod_{k>=1}
// (1+3 d_k). Sequences are 1-indexed; index 0 is unused. M_n grows far past
// any integer type at realistic parameters, hence long double storage.
struct RenormSchedule {
    double gamma_prime = 0;
    double gamma = 0;
    double alpha = 0;
    double epsilon = 0;
    long double epsilon_1 = 0;
    std::int64_t c0 = 1;
    std::int64_t M1 = 1;
    std::int64_t L = 0;
    int n_max = 1;
    std::vector<long double> c, M, d, eps;
};

// Builds the schedule, validating alpha/2 < gamma' < gamma < 1 and
// eps in (0, 1). d_n is exact on both branches of c_n: the n-branch gives
// d_n = n^-2 identically (independent of gamma), and the c0-branch recovers
// gamma-1 as a small rational so that dyadic c0 yields an exact dyadic power.
// The infinite product for eps_1 is evaluated explicitly to `trunc_terms`
// factors plus a certified analytic tail (< 1e-9 relative).
RenormSchedule build_schedule(double gamma_prime, double gamma, double alpha,
                              double epsilon, std::int64_t c0, std::int64_t M1,
                              std::int64_t L, int n_max,
                              std::int64_t trunc_terms = 4096);

// 1 - eps_prev / (1 - d_n), plus whether it is >= 1 - eps_prev (1 + 2 d_n).
// The chained comparison needs d_n < 1/2; larger d_n is an error.
std::pair<double, bool> markov_bound(double eps_prev, double d_n);

// 2 k (1-q)^{k-1}: twice the expected number of isolated vertices in an
// Erdos-Renyi graph G(k, q); a (possibly vacuous, > 1) disconnection bound.
// Clamping to 1 is left to reporting code.
double er_disconnect_bound(std::int64_t k, double q);

// Smallest rational num/den with den <= max_den reproducing x to within
// 1e-12; used to make d_n exact. Returns den = 0 when none fits.
std::pair<long long, long long> small_rational(double x, long long max_den = 64);

} // namespace dyson
