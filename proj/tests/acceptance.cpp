// End-to-end acceptance runs: ten numbered probes, one PASS/FAIL line each,
// nonzero exit when any probe fails. Tolerances and budgets are fixed here.
#include <sys/resource.h>
#include <unistd.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dyson/clusters.hpp"
#include "dyson/dominance.hpp"
#include "dyson/edge_prob.hpp"
#include "dyson/estimators.hpp"
#include "dyson/fk.hpp"
#include "dyson/graph.hpp"
#include "dyson/graph_law.hpp"
#include "dyson/renorm.hpp"
#include "dyson/rng.hpp"
#include "dyson/sampling.hpp"
#include "dyson/schedule.hpp"

namespace {

using namespace dyson;

constexpr std::uint64_t kMaster = 20260815;

struct Check {
    std::vector<std::string> reasons;
    void expect(bool ok, const std::string& what) {
        if (!ok) reasons.push_back(what);
    }
    bool ok() const { return reasons.empty(); }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// --------------------------------------------------------------- criterion 1
// Independent percolation is exact at q = 1: per-distance edge counts over
// many samples must match their binomial law. 4 sigma per distance.
void c1_binomial_counts(Check& chk) {
    const Interval v{0, 256};
    const double alpha = 1.5, beta = 1.0;
    const EdgeProbFn f = dyson_prob(beta, alpha);
    const std::int64_t reps = 100000;
    const Seed base{kMaster, 0};
    std::vector<std::int64_t> counts(static_cast<std::size_t>(v.length()), 0);
    for (std::int64_t r = 0; r < reps; ++r)
        accumulate_distance_counts(v, f, substream(base, 0xACC1, static_cast<std::uint64_t>(r)),
                                   counts);
    std::int64_t bad = 0;
    double worst = 0;
    for (std::int64_t d = 1; d < v.length(); ++d) {
        const double p = -std::expm1(-beta * std::pow(static_cast<double>(d), -alpha));
        const double n = static_cast<double>(reps) * static_cast<double>(v.length() - d);
        const double mu = n * p;
        const double sigma = std::sqrt(n * p * (1.0 - p));
        const double z = std::abs(static_cast<double>(counts[static_cast<std::size_t>(d)]) - mu) /
                         sigma;
        worst = std::max(worst, z);
        if (z > 4.0) ++bad;
    }
    chk.expect(bad == 0, "distances beyond 4 sigma: " + std::to_string(bad) +
                             " of 255 (worst z = " + fmt(worst) + ")");
}

// --------------------------------------------------------------- criterion 2
// The heat-bath chain must reproduce the exactly enumerated random-cluster
// law: total variation <= 0.02 over the 3-vertex universe after 1e6 recorded
// sweeps, and the 2-vertex open rate must sit at p/(p + q(1-p)) = 1/3 within
// 0.005.
void c2_chain_vs_exact(Check& chk) {
    const EdgeProbFn f = constant_prob(0.5);
    const double q = 2.0;

    const Interval v3{0, 3};
    const DiscreteGraphLaw exact = fk_exact_distribution(v3, f, q);
    FkHeatBathChain chain(v3, f, q, Seed{kMaster, 2});
    chain.run(1000);
    const std::int64_t kept = 1000000;
    std::vector<std::int64_t> hist(exact.n_configs(), 0);
    for (std::int64_t i = 0; i < kept; ++i) {
        chain.sweep();
        ++hist[chain.current_mask()];
    }
    double tv = 0;
    for (std::size_t m = 0; m < exact.n_configs(); ++m)
        tv += std::abs(static_cast<double>(hist[m]) / static_cast<double>(kept) - exact.prob[m]);
    tv *= 0.5;
    chk.expect(tv <= 0.02, "3-vertex total variation = " + fmt(tv) + " > 0.02");

    FkHeatBathChain pair(Interval{0, 2}, f, q, Seed{kMaster, 3});
    pair.run(1000);
    std::int64_t open = 0;
    for (std::int64_t i = 0; i < kept; ++i) {
        pair.sweep();
        open += pair.current_mask() & 1u;
    }
    const double rate = static_cast<double>(open) / static_cast<double>(kept);
    chk.expect(std::abs(rate - 1.0 / 3.0) <= 0.005,
               "2-vertex open rate = " + fmt(rate) + ", want 1/3 +- 0.005");
}

// --------------------------------------------------------------- criterion 3
// Sprinkling: a beta-graph union an independent delta-sprinkle has marginal
// 1 - e^{-(b+d)J} <= 1 - e^{-(b+2d)J}, per pair on a 10^4-point sweep, and
// the product laws are certified dominated on every small universe.
void c3_sprinkle_domination(Check& chk) {
    const double betas[] = {0.05, 0.1, 0.2, 0.4, 0.7, 1.0, 1.5, 2.0, 3.0, 5.0};
    const double deltas[] = {0.0, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0};
    const double alphas[] = {1.1, 1.3, 1.5, 1.9};
    std::int64_t points = 0, bad = 0;
    for (double b : betas)
        for (double d : deltas)
            for (double a : alphas)
                for (Vertex j = 1; j <= 25; ++j) {
                    const SprinkleIdentity r = sprinkle_edge_identity(b, d, a, 0, j);
                    ++points;
                    if (!r.ok || r.p_combined > r.p_target + 1e-15) ++bad;
                }
    chk.expect(points == 10000, "sweep size " + std::to_string(points) + " != 10^4");
    chk.expect(bad == 0, "identity violated at " + std::to_string(bad) + " sweep points");

    // combined = dyson(beta + delta), target = dyson(beta + 2 delta): the
    // union of independent exponential-margin graphs adds the rates.
    const Interval universes[] = {{0, 2}, {0, 3}, {0, 4}, {-2, 1}, {-1, 3}};
    const double tuples[][3] = {
        {1.0, 0.5, 1.5}, {0.3, 0.2, 1.2}, {2.0, 1.0, 1.8}, {0.1, 2.0, 1.5}, {0.8, 0.4, 1.1}};
    for (const Interval& u : universes)
        for (const auto& t : tuples) {
            const DiscreteGraphLaw lo = product_law(u, dyson_prob(t[0] + t[1], t[2]));
            const DiscreteGraphLaw hi = product_law(u, dyson_prob(t[0] + 2.0 * t[1], t[2]));
            const DominanceResult res = check_dominance_exact(lo, hi);
            chk.expect(res.holds, "combined not dominated on [" + std::to_string(u.lo) + ", " +
                                      std::to_string(u.hi) + ") at beta=" + fmt(t[0]) +
                                      " delta=" + fmt(t[1]) + " (flow " + fmt(res.flow) + ")");
        }
}

// --------------------------------------------------------------- criterion 4
// Conditioning a random-cluster law on any outside event can only help
// connectivity: the free law on v is dominated by the conditioned law, for
// every (w, v, q, edge law, condition) in the corpus.
void c4_conditioned_domination(Check& chk) {
    using Cond = std::pair<std::string, OutsideCondition>;
    auto count_open = [](std::uint32_t mask) { return std::popcount(mask); };
    const std::vector<Cond> conditions = {
        {"any", [](const std::vector<Edge>&, std::uint32_t) { return true; }},
        {"all-open",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             return m + 1 == (1u << p.size());
         }},
        {"all-closed", [](const std::vector<Edge>&, std::uint32_t m) { return m == 0; }},
        {"some-open", [](const std::vector<Edge>&, std::uint32_t m) { return m != 0; }},
        {"some-closed",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             return m + 1 != (1u << p.size());
         }},
        {"even-open",
         [&](const std::vector<Edge>&, std::uint32_t m) { return count_open(m) % 2 == 0; }},
        {"odd-open",
         [&](const std::vector<Edge>&, std::uint32_t m) { return count_open(m) % 2 == 1; }},
        {"at-least-two-open",
         [&](const std::vector<Edge>&, std::uint32_t m) { return count_open(m) >= 2; }},
        {"at-most-one-open",
         [&](const std::vector<Edge>&, std::uint32_t m) { return count_open(m) <= 1; }},
        {"exactly-one-open",
         [&](const std::vector<Edge>&, std::uint32_t m) { return count_open(m) == 1; }},
        {"exactly-two-open",
         [&](const std::vector<Edge>&, std::uint32_t m) { return count_open(m) == 2; }},
        {"first-open", [](const std::vector<Edge>&, std::uint32_t m) { return (m & 1u) != 0; }},
        {"first-closed", [](const std::vector<Edge>&, std::uint32_t m) { return (m & 1u) == 0; }},
        {"last-open",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             return (m >> (p.size() - 1)) & 1u;
         }},
        {"last-closed",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             return !((m >> (p.size() - 1)) & 1u);
         }},
        {"majority-open",
         [&](const std::vector<Edge>& p, std::uint32_t m) {
             return 2 * count_open(m) >= static_cast<int>(p.size());
         }},
        {"minority-open",
         [&](const std::vector<Edge>& p, std::uint32_t m) {
             return 2 * count_open(m) <= static_cast<int>(p.size());
         }},
        {"longest-open",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             std::size_t best = 0;
             for (std::size_t k = 1; k < p.size(); ++k)
                 if (p[k].second - p[k].first > p[best].second - p[best].first) best = k;
             return (m >> best) & 1u;
         }},
        {"adjacent-some-open",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             for (std::size_t k = 0; k < p.size(); ++k)
                 if (p[k].second - p[k].first == 1 && ((m >> k) & 1u)) return true;
             return false;
         }},
        {"adjacent-all-open",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             for (std::size_t k = 0; k < p.size(); ++k)
                 if (p[k].second - p[k].first == 1 && !((m >> k) & 1u)) return false;
             return true;
         }},
        {"prefix-open",
         [](const std::vector<Edge>&, std::uint32_t m) { return (m & (m + 1)) == 0; }},
        {"leftmost-isolated",
         [](const std::vector<Edge>& p, std::uint32_t m) {
             Vertex lo = p.front().first;
             for (const Edge& e : p) lo = std::min(lo, e.first);
             for (std::size_t k = 0; k < p.size(); ++k)
                 if (p[k].first == lo && ((m >> k) & 1u)) return false;
             return true;
         }},
    };
    chk.expect(conditions.size() >= 20,
               "condition corpus too small: " + std::to_string(conditions.size()));

    const std::pair<Interval, Interval> combos[] = {
        {{0, 3}, {0, 2}}, {{0, 4}, {0, 2}}, {{0, 4}, {0, 3}}, {{-1, 3}, {0, 2}}, {{0, 4}, {1, 3}}};
    const std::pair<std::string, EdgeProbFn> laws[] = {{"dyson(0.8,1.5)", dyson_prob(0.8, 1.5)},
                                                       {"const(0.5)", constant_prob(0.5)}};
    std::int64_t cases = 0;
    for (const auto& [w, v] : combos)
        for (const auto& [law_name, f] : laws)
            for (double q : {1.0, 2.0}) {
                const DiscreteGraphLaw lo = fk_exact_distribution(v, f, q);
                for (const auto& [cond_name, cond] : conditions) {
                    const DiscreteGraphLaw hi = conditioned_fk_law(w, v, f, q, cond);
                    const DominanceResult res = check_dominance_exact(lo, hi);
                    ++cases;
                    chk.expect(res.holds, "free law not dominated: w=[" + std::to_string(w.lo) +
                                              "," + std::to_string(w.hi) + ") v=[" +
                                              std::to_string(v.lo) + "," + std::to_string(v.hi) +
                                              ") q=" + fmt(q) + " " + law_name + " | " +
                                              cond_name);
                }
            }
    chk.expect(cases == 440, "case count " + std::to_string(cases) + " != 440");
}

// --------------------------------------------------------------- criterion 5
// Coarse graph against a brute-force oracle on random fixtures, and the
// closed-form coarse edge probability bound against Monte Carlo frequency.
void c5_coarse_graph(Check& chk) {
    Rng shape(Seed{kMaster, 5});
    std::int64_t mismatches = 0, fixtures = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::int64_t len = 10 + static_cast<std::int64_t>(shape.next_u64() % 111);
        const std::int64_t lo = static_cast<std::int64_t>(shape.next_u64() % 61) - 30;
        const Interval dom{lo, lo + len};
        const std::size_t want_sets = 1 + shape.next_u64() % 8;
        std::vector<std::vector<Vertex>> buckets(want_sets);
        for (Vertex x = dom.lo; x < dom.hi; ++x) {
            const std::uint64_t b = shape.next_u64() % (want_sets + 2); // leave gaps
            if (b < want_sets) buckets[b].push_back(x);
        }
        std::vector<std::vector<Vertex>> sets;
        for (auto& s : buckets)
            if (!s.empty()) sets.push_back(std::move(s));
        if (sets.empty()) continue;
        ++fixtures;
        const Graph h = sample_bernoulli(dom, dyson_prob(0.9, 1.2),
                                         substream(Seed{kMaster, 5}, 0xC0A5,
                                                   static_cast<std::uint64_t>(t)));
        const Graph coarse = coarse_graph(h, CoarseGraphSpec{dom, sets});

        std::map<Vertex, std::int64_t> owner;
        for (std::size_t k = 0; k < sets.size(); ++k)
            for (Vertex x : sets[k]) owner[x] = static_cast<std::int64_t>(k);
        std::set<Edge> want;
        for (const Edge& e : h.edges) {
            const auto a = owner.find(e.first), b = owner.find(e.second);
            if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
            want.insert({std::min(a->second, b->second), std::max(a->second, b->second)});
        }
        const std::vector<Edge> expect_edges(want.begin(), want.end());
        if (coarse.edges != expect_edges ||
            coarse.vertices != Interval{0, static_cast<Vertex>(sets.size())})
            ++mismatches;
    }
    chk.expect(fixtures >= 990, "usable fixtures: " + std::to_string(fixtures));
    chk.expect(mismatches == 0,
               "oracle mismatches: " + std::to_string(mismatches) + " of " +
                   std::to_string(fixtures));

    Rng prng(Seed{kMaster, 55});
    std::int64_t violations = 0;
    for (int t = 0; t < 100; ++t) {
        const double delta = 0.1 + 1.9 * prng.next_unit();
        const double alpha = 1.1 + 0.8 * prng.next_unit();
        const std::int64_t si = 1 + static_cast<std::int64_t>(prng.next_u64() % 6);
        const std::int64_t sj = 1 + static_cast<std::int64_t>(prng.next_u64() % 6);
        const std::int64_t gap = 1 + static_cast<std::int64_t>(prng.next_u64() % 20);
        const Interval dom{0, si + gap + sj};
        // worst-case pair distance across the two sets
        const std::int64_t d_ij = dom.hi - 1;
        const double lb = coarse_edge_prob_lb(delta, si, sj, d_ij, alpha);
        const std::int64_t reps = 2000;
        std::int64_t hits = 0;
        for (std::int64_t r = 0; r < reps; ++r) {
            const Graph g =
                sample_bernoulli(dom, dyson_prob(delta, alpha),
                                 substream(Seed{kMaster, 56}, 0x100 + static_cast<std::uint64_t>(t),
                                           static_cast<std::uint64_t>(r)));
            bool cross = false;
            for (const Edge& e : g.edges)
                if (e.first < si && e.second >= si + gap) {
                    cross = true;
                    break;
                }
            hits += cross ? 1 : 0;
        }
        const double freq = static_cast<double>(hits) / static_cast<double>(reps);
        const double sigma = std::sqrt(std::max(lb * (1.0 - lb), 1e-12) /
                                       static_cast<double>(reps));
        if (lb > freq + 4.0 * sigma) ++violations;
    }
    chk.expect(violations == 0,
               "bound above frequency + 4 sigma at " + std::to_string(violations) +
                   " of 100 configurations");
}

// --------------------------------------------------------------- criterion 6
// Schedule arithmetic at (gamma = 0.9, c0 = 2^20, eps = 0.1, n_max = 8):
// exact scale factors max{n^20, c0}, exact d_n, recursion identities, all
// budgets below eps, and a truncation-stable leading budget.
void c6_schedule(Check& chk) {
    const RenormSchedule s = build_schedule(0.8, 0.9, 1.5, 0.1, 1 << 20, 1, 0, 8);
    chk.expect(s.d[1] == 0.25L, "d_1 = " + fmt(static_cast<double>(s.d[1])) + " != 1/4 exactly");
    for (int n = 1; n <= 8; ++n) {
        const auto i = static_cast<std::size_t>(n);
        long double pw = 1.0L;
        for (int k = 0; k < 20; ++k) pw *= static_cast<long double>(n);
        const long double c_want = std::max(pw, static_cast<long double>(s.c0));
        chk.expect(s.c[i] == c_want, "c_" + std::to_string(n) + " not exactly max{n^20, c0}");
        if (n >= 2)
            chk.expect(s.d[i] == 1.0L / static_cast<long double>(n * n),
                       "d_" + std::to_string(n) + " != n^-2 exactly");
        const long double m_want =
            (n == 1) ? static_cast<long double>(s.M1) : s.M[i - 1] * s.c[i];
        chk.expect(s.M[i] == m_want, "M recursion broken at n = " + std::to_string(n));
        const long double e_want =
            (n == 1) ? s.epsilon_1 : (1.0L + 3.0L * s.d[i]) * s.eps[i - 1];
        chk.expect(s.eps[i] == e_want, "eps recursion broken at n = " + std::to_string(n));
        chk.expect(static_cast<double>(s.eps[i]) < s.epsilon,
                   "eps_" + std::to_string(n) + " not below the budget");
        if (n >= 2) {
            chk.expect(s.eps[i] > s.eps[i - 1], "eps not increasing at n = " + std::to_string(n));
            chk.expect(s.c[i] >= s.c[i - 1], "c not monotone at n = " + std::to_string(n));
            const auto [bound, chained] =
                markov_bound(static_cast<double>(s.eps[i - 1]), static_cast<double>(s.d[i]));
            chk.expect(chained && bound > 0.0 && bound < 1.0,
                       "chained Markov bound fails at n = " + std::to_string(n));
        }
    }
    const RenormSchedule s2 = build_schedule(0.8, 0.9, 1.5, 0.1, 1 << 20, 1, 0, 8, 8192);
    const long double rel = std::abs(static_cast<double>((s.epsilon_1 - s2.epsilon_1) /
                                                         s.epsilon_1));
    chk.expect(rel <= 1e-9L, "leading budget drifts " + fmt(static_cast<double>(rel)) +
                                 " under doubled truncation");
}

// --------------------------------------------------------------- criterion 7
// Above the estimated two-sided crossing point, the goodness rate
// P(|C_I| >= N^0.8) must grow with N (within Wilson intervals) and exceed
// 0.9 at N = 2^14.
void c7_goodness_growth(Check& chk) {
    const ProxyKind giant{ProxyKind::Tag::giant, 0.5};
    const BetaCEstimate two =
        estimate_beta_c(Side::two_sided, 1.5, 1.0, {1024, 2048, 4096}, default_beta_grid(), 400,
                        giant, Seed{kMaster, 7});
    const double beta = 1.5 * two.estimate;
    chk.expect(beta > 0.0 && beta < 2.0, "implausible probe point beta = " + fmt(beta));

    const std::vector<std::int64_t> sizes{256, 512, 1024, 2048, 4096, 8192, 16384};
    const LemmaReport rep = lemma2_experiment(ModelParams{1.5, beta, 1.0, 0.0}, 0.8, sizes, 400,
                                              Seed{kMaster, 8});
    for (std::size_t k = 0; k + 1 < rep.rows.size(); ++k)
        chk.expect(rep.rows[k + 1].wilson_hi >= rep.rows[k].wilson_lo,
                   "rate drops beyond CI from N=" + std::to_string(rep.rows[k].N) +
                       " (lo " + fmt(rep.rows[k].wilson_lo) + ") to N=" +
                       std::to_string(rep.rows[k + 1].N) + " (hi " +
                       fmt(rep.rows[k + 1].wilson_hi) + ")");
    chk.expect(rep.rows.back().rate > 0.9,
               "rate at N=16384 is " + fmt(rep.rows.back().rate) + " <= 0.9");
}

// --------------------------------------------------------------- criterion 8
// One- vs two-sided crossing points at growing sizes: the one-sided point
// sits above the two-sided one at every size, below eight times it overall,
// and the gap closes (within confidence bands) as the volume grows.
void c8_side_comparison(Check& chk) {
    const ProxyKind giant{ProxyKind::Tag::giant, 0.5};
    const std::vector<std::int64_t> sizes{4096, 16384, 65536};
    const BetaCEstimate one = estimate_beta_c(Side::one_sided, 1.5, 1.0, sizes,
                                              default_beta_grid(), 400, giant, Seed{kMaster, 81});
    const BetaCEstimate two = estimate_beta_c(Side::two_sided, 1.5, 1.0, sizes,
                                              default_beta_grid(), 400, giant, Seed{kMaster, 82});
    chk.expect(one.crossings.size() == sizes.size() && two.crossings.size() == sizes.size(),
               "missing per-size crossings");
    if (!chk.ok()) return;

    for (std::size_t k = 0; k < sizes.size(); ++k)
        chk.expect(one.crossings[k].crossing >= two.crossings[k].crossing,
                   "(a) one-sided crossing " + fmt(one.crossings[k].crossing) +
                       " below two-sided " + fmt(two.crossings[k].crossing) + " at M=" +
                       std::to_string(sizes[k]));
    chk.expect(one.estimate <= 8.0 * two.estimate,
               "(b) one-sided estimate " + fmt(one.estimate) + " above 8 x " +
                   fmt(two.estimate));
    auto width = [](const SizeCrossing& c) { return c.ci_hi - c.ci_lo; };
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        const double gap_k = one.crossings[k].crossing - two.crossings[k].crossing;
        const double gap_n = one.crossings[k + 1].crossing - two.crossings[k + 1].crossing;
        const double slack = 0.5 * (width(one.crossings[k]) + width(two.crossings[k]) +
                                    width(one.crossings[k + 1]) + width(two.crossings[k + 1]));
        chk.expect(gap_n <= gap_k + slack,
                   "(c) gap grows from " + fmt(gap_k) + " (M=" + std::to_string(sizes[k]) +
                       ") to " + fmt(gap_n) + " (M=" + std::to_string(sizes[k + 1]) +
                       "), slack " + fmt(slack));
    }
}

// --------------------------------------------------------------- criterion 9
// Million-vertex sample: under ten seconds, edge count inside its 4 sigma
// window, and peak memory bounded by the edge scale, far below anything
// quadratic in the vertex count.
void c9_performance(Check& chk) {
    const Interval v{0, 1000000};
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = sample_bernoulli(v, dyson_prob(1.0, 1.5), Seed{kMaster, 9});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    chk.expect(secs < 10.0, "sampling took " + fmt(secs) + " s >= 10 s");

    long double mu = 0.0L, var = 0.0L;
    for (std::int64_t d = 1; d < v.length(); ++d) {
        const long double p =
            -std::expm1(-std::pow(static_cast<long double>(d), -1.5L));
        const long double n = static_cast<long double>(v.length() - d);
        mu += n * p;
        var += n * p * (1.0L - p);
    }
    const double dev = std::abs(static_cast<double>(static_cast<long double>(g.edge_count()) - mu));
    const double win = 4.0 * static_cast<double>(std::sqrt(var));
    chk.expect(dev <= win, "edge count " + std::to_string(g.edge_count()) + " deviates " +
                               fmt(dev) + " from mean " + fmt(static_cast<double>(mu)) +
                               ", window " + fmt(win));

    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    chk.expect(ru.ru_maxrss < 512 * 1024,
               "peak RSS " + std::to_string(ru.ru_maxrss) + " KiB >= 512 MiB");
}

// -------------------------------------------------------------- criterion 10
// Every subcommand, run twice with one seed and configuration, must emit
// byte-identical files; one run goes through a config file.
void c10_determinism(Check& chk) {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("dyson-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto read_all = [](const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream os;
        os << is.rdbuf();
        return os.str();
    };
    const auto run = [&](const std::string& args, const fs::path& out) {
        const std::string cmd = std::string(DYSON_RC_BIN) + " " + args + " --out '" +
                                out.string() + "' >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };

    chk.expect(run("sample --beta 0.9 --size 128 --seed 3", dir / "g.txt") == 0,
               "seed graph for clusters failed");
    const std::string graph_in = (dir / "g.txt").string();
    const fs::path cfg = dir / "run.cfg";
    std::ofstream(cfg) << "beta=0.8\nsize=96\nseed=29\n";

    const std::pair<std::string, std::string> cmds[] = {
        {"sample", "sample --model fk --beta 0.6 --q 2 --size 48 --sweeps 32 --seed 7"},
        {"sample-config", "sample --config '" + cfg.string() + "'"},
        {"clusters", "clusters --in '" + graph_in + "' --seed 3"},
        {"lemma2", "lemma2 --beta 0.5 --gamma 0.8 --sizes 64,128 --replicas 50 --seed 5"},
        {"lemma2-jsonl",
         "lemma2 --beta 0.5 --gamma 0.8 --sizes 64,128 --replicas 50 --seed 5 --format jsonl"},
        {"betac", "betac --side two --sizes 128,192,256 --grid 0.2,0.25,0.3,0.35,0.4,0.45,0.5 "
                  "--replicas 40 --seed 11"},
        {"coarse", "coarse --beta 0.8 --size 64 --block 8 --seed 13"},
        {"schedule", "schedule --alpha 1.5 --gamma 0.9 --eps 0.1 --nmax 8 --seed 1"},
        {"induction",
         "induction --n 2 --m-prev 32 --c-n 8 --beta 1 --delta 0.5 --replicas 20 --seed 17"},
        {"dominate", "dominate --seed 19"},
    };
    for (const auto& [name, args] : cmds) {
        const fs::path a = dir / (name + ".a"), b = dir / (name + ".b");
        const int ra = run(args, a), rb = run(args, b);
        chk.expect(ra == 0 && rb == 0,
                   name + ": exit " + std::to_string(ra) + "/" + std::to_string(rb));
        if (ra != 0 || rb != 0) continue;
        const std::string ba = read_all(a), bb = read_all(b);
        chk.expect(!ba.empty(), name + ": empty output");
        chk.expect(ba == bb, name + ": reruns differ (" + std::to_string(ba.size()) + " vs " +
                                 std::to_string(bb.size()) + " bytes)");
    }
    std::error_code ec;
    fs::remove_all(dir, ec);
}

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> table = {
        {"q=1 per-distance edge counts match the binomial law", 60, c1_binomial_counts},
        {"heat-bath chain reproduces the exact small-universe law", 120, c2_chain_vs_exact},
        {"sprinkled marginals are dominated by the boosted target", 60, c3_sprinkle_domination},
        {"conditioned cluster laws dominate the free law", 120, c4_conditioned_domination},
        {"coarse graph matches brute force; edge bound stays below frequency", 60,
         c5_coarse_graph},
        {"schedule arithmetic is exact and stays inside the budget", 1, c6_schedule},
        {"interval goodness rate grows toward one with the volume", 600, c7_goodness_growth},
        {"one- vs two-sided crossings: ordered, bounded by 8x, gap closing", 1800,
         c8_side_comparison},
        {"million-vertex sampler stays time- and memory-edge-bound", 30, c9_performance},
        {"every subcommand is byte-identical across reruns", 300, c10_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Check chk;
        try {
            table[i].body(chk);
        } catch (const std::exception& e) {
            chk.expect(false, std::string("exception: ") + e.what());
        } catch (...) {
            chk.expect(false, "unknown exception");
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        chk.expect(secs <= table[i].budget_seconds,
                   "over time budget: " + fmt(secs) + " s > " + fmt(table[i].budget_seconds) +
                       " s");
        const bool pass = chk.ok();
        failed += pass ? 0 : 1;
        std::printf("[%2zu/10] %s  %-66s (%.1f s)\n", i + 1, pass ? "PASS" : "FAIL",
                    table[i].label.c_str(), secs);
        for (const std::string& r : chk.reasons) std::printf("         - %s\n", r.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/10 passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
