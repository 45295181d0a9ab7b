#include "dyson/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "dyson/clusters.hpp"
#include "dyson/fk.hpp"
#include "dyson/parallel.hpp"
#include "dyson/sampling.hpp"
#include "dyson/stats.hpp"

namespace dyson {

Interval side_domain(Side side, std::int64_t M) {
    if (M < 1) throw std::invalid_argument("size must be at least 1");
    return side == Side::one_sided ? Interval{0, M} : Interval{-M, M};
}

Side parse_side(const std::string& text) {
    if (text == "one" || text == "one_sided" || text == "one-sided") return Side::one_sided;
    if (text == "two" || text == "two_sided" || text == "two-sided") return Side::two_sided;
    throw std::invalid_argument("side must be 'one' or 'two'");
}

std::string side_name(Side side) { return side == Side::one_sided ? "one" : "two"; }

ProxyKind parse_proxy(const std::string& id) {
    if (id == "span") return ProxyKind{ProxyKind::Tag::span, 0.0};
    if (id.rfind("giant(", 0) == 0 && id.back() == ')') {
        double c = std::stod(id.substr(6, id.size() - 7));
        if (!(c > 0.0 && c <= 1.0))
            throw std::invalid_argument("giant threshold must lie in (0,1]");
        return ProxyKind{ProxyKind::Tag::giant, c};
    }
    throw std::invalid_argument("unknown proxy id: " + id);
}

std::string proxy_name(const ProxyKind& kind) {
    if (kind.tag == ProxyKind::Tag::span) return "span";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "giant(%g)", kind.c);
    return buf;
}

namespace {

// Largest cluster size and the span event in one union-find pass, without
// Graph canonicalization; hot path for the estimators.
struct ProxyStats {
    std::int64_t largest = 0;
    bool span = false;
};

ProxyStats proxy_stats(Interval v, const std::vector<Edge>& edges) {
    const auto n = static_cast<std::size_t>(v.length());
    UnionFind uf(n);
    for (const auto& e : edges)
        uf.unite(static_cast<std::size_t>(e.first - v.lo),
                 static_cast<std::size_t>(e.second - v.lo));
    ProxyStats st;
    st.largest = uf.max_component_size();
    const auto tenth = static_cast<std::size_t>(v.length() / 10);
    if (tenth >= 1) {
        // Roots reaching the first tenth, then scan the last tenth.
        std::vector<std::size_t> first_roots;
        first_roots.reserve(tenth);
        for (std::size_t i = 0; i < tenth; ++i) first_roots.push_back(uf.find(i));
        std::sort(first_roots.begin(), first_roots.end());
        first_roots.erase(std::unique(first_roots.begin(), first_roots.end()),
                          first_roots.end());
        for (std::size_t i = n - tenth; i < n && !st.span; ++i)
            st.span = std::binary_search(first_roots.begin(), first_roots.end(), uf.find(i));
    }
    return st;
}

bool proxy_from_stats(const ProxyStats& st, const ProxyKind& kind, std::int64_t n_vertices) {
    if (kind.tag == ProxyKind::Tag::span) return st.span;
    return static_cast<double>(st.largest) >=
           kind.c * static_cast<double>(n_vertices);
}

// Single sample of the model on `domain`: exact Bernoulli at q = 1, the
// heat-bath chain otherwise (kept to enumerable/desk scale by callers).
Graph sample_model(Interval domain, const EdgeProbFn& f, double q, Seed seed) {
    if (q == 1.0) return sample_bernoulli(domain, f, seed);
    if (domain.length() > 2048)
        throw std::invalid_argument("q > 1 estimation is limited to domains of at most 2048 vertices");
    return fk_sample_mcmc(domain, f, q, 64, seed);
}

} // namespace

bool percolation_proxy(const Graph& g, const ProxyKind& kind) {
    if (g.vertices.length() < 10)
        throw std::invalid_argument("proxy needs at least 10 vertices");
    return proxy_from_stats(proxy_stats(g.vertices, g.edges), kind, g.vertices.length());
}

ThetaEstimate estimate_theta(const ModelParams& params, Side side, std::int64_t M,
                             std::int64_t replicas, Seed s, int threads) {
    validate(params);
    if (replicas < 1) throw std::invalid_argument("replicas >= 1 violated");
    Interval domain = side_domain(side, M);
    EdgeProbFn f = dyson_prob(params.beta, params.alpha);
    std::vector<double> density(static_cast<std::size_t>(replicas));
    parallel_for(replicas, threads, [&](std::int64_t r) {
        Graph g = sample_model(domain, f, params.q, substream(s, stream_tag::theta, static_cast<std::uint64_t>(r)));
        ProxyStats st = proxy_stats(domain, g.edges);
        density[static_cast<std::size_t>(r)] =
            static_cast<double>(st.largest) / static_cast<double>(domain.length());
    });
    MeanAccumulator acc;
    for (double x : density) acc.add(x);
    return ThetaEstimate{acc.mean(), acc.std_error(), replicas};
}

LemmaReport lemma2_experiment_with(const EdgeProbFn& f, double q, double alpha,
                                   double beta, double gamma,
                                   const std::vector<std::int64_t>& N_list,
                                   std::int64_t replicas, Seed s, int threads) {
    if (!(gamma > alpha / 2.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in (alpha/2, 1)");
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    if (replicas < 1) throw std::invalid_argument("replicas >= 1 violated");
    if (N_list.empty()) throw std::invalid_argument("at least one N required");
    LemmaReport report;
    report.alpha = alpha;
    report.beta = beta;
    report.gamma = gamma;
    report.q = q;
    for (std::size_t k = 0; k < N_list.size(); ++k) {
        std::int64_t N = N_list[k];
        if (N < 2) throw std::invalid_argument("N must be at least 2");
        Interval domain{0, N};
        long double threshold = std::pow(static_cast<long double>(N),
                                          static_cast<long double>(gamma));
        std::vector<char> hit(static_cast<std::size_t>(replicas), 0);
        parallel_for(replicas, threads, [&](std::int64_t r) {
            Graph g = sample_model(domain, f, q,
                                   substream(s, stream_tag::lemma + k, static_cast<std::uint64_t>(r)));
            ProxyStats st = proxy_stats(domain, g.edges);
            hit[static_cast<std::size_t>(r)] =
                static_cast<long double>(st.largest) >= threshold ? 1 : 0;
        });
        LemmaRow row;
        row.N = N;
        row.replicas = replicas;
        row.successes = std::count(hit.begin(), hit.end(), 1);
        row.rate = static_cast<double>(row.successes) / static_cast<double>(replicas);
        auto [wl, wh] = wilson_interval(row.successes, replicas);
        row.wilson_lo = wl;
        row.wilson_hi = wh;
        report.rows.push_back(row);
    }
    return report;
}

LemmaReport lemma2_experiment(const ModelParams& params, double gamma,
                              const std::vector<std::int64_t>& N_list,
                              std::int64_t replicas, Seed s, int threads) {
    validate(params);
    return lemma2_experiment_with(dyson_prob(params.beta, params.alpha), params.q,
                                  params.alpha, params.beta, gamma, N_list, replicas, s,
                                  threads);
}

std::vector<double> default_beta_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 48; ++k) grid.push_back(0.05 + 0.0125 * k);
    return grid;
}

CrossingResult find_crossing(const std::vector<double>& beta_grid,
                             const std::function<double(std::size_t)>& rate_eval) {
    if (beta_grid.size() < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!std::is_sorted(beta_grid.begin(), beta_grid.end()))
        throw std::invalid_argument("beta grid must be ascending");
    CrossingResult res;
    auto eval = [&](std::size_t i) {
        double r = rate_eval(i);
        res.evaluated.emplace_back(i, r);
        return r;
    };
    std::size_t lo = 0, hi = beta_grid.size() - 1;
    double r_lo = eval(lo), r_hi = eval(hi);
    if (!(r_lo < 0.5 && r_hi >= 0.5)) throw std::runtime_error("grid too narrow");
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        double r = eval(mid);
        if (r < 0.5) {
            lo = mid;
            r_lo = r;
        } else {
            hi = mid;
            r_hi = r;
        }
    }
    res.lo_idx = lo;
    res.hi_idx = hi;
    res.crossing = beta_grid[lo] + (0.5 - r_lo) * (beta_grid[hi] - beta_grid[lo]) /
                                       (r_hi - r_lo);
    std::sort(res.evaluated.begin(), res.evaluated.end());
    return res;
}

BetaCEstimate estimate_beta_c(Side side, double alpha, double q,
                              const std::vector<std::int64_t>& M_list,
                              const std::vector<double>& beta_grid,
                              std::int64_t replicas, const ProxyKind& proxy, Seed s,
                              int threads) {
    if (!(alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    if (M_list.size() < 3) throw std::invalid_argument("at least 3 sizes required");
    if (!std::is_sorted(M_list.begin(), M_list.end()))
        throw std::invalid_argument("sizes must be ascending");
    if (replicas < 1) throw std::invalid_argument("replicas >= 1 violated");

    BetaCEstimate est;
    est.side = side;
    est.alpha = alpha;
    est.q = q;
    est.proxy = proxy_name(proxy);
    est.replicas = replicas;

    for (std::size_t mi = 0; mi < M_list.size(); ++mi) {
        Interval domain = side_domain(side, M_list[mi]);
        // Rates per grid index, evaluated lazily by the bisection; each
        // (size, beta, replica) triple has its own stream, so results do not
        // depend on evaluation order.
        std::map<std::size_t, GridEval> cache;
        auto rate_at = [&](std::size_t gi) {
            auto it = cache.find(gi);
            if (it != cache.end()) return it->second.rate;
            EdgeProbFn f = dyson_prob(beta_grid[gi], alpha);
            std::vector<char> hit(static_cast<std::size_t>(replicas), 0);
            parallel_for(replicas, threads, [&](std::int64_t r) {
                Graph g = sample_model(domain, f, q,
                                       substream(s, stream_tag::betac + mi * 1024 + gi,
                                                 static_cast<std::uint64_t>(r)));
                ProxyStats st = proxy_stats(domain, g.edges);
                hit[static_cast<std::size_t>(r)] =
                    proxy_from_stats(st, proxy, domain.length()) ? 1 : 0;
            });
            GridEval ev;
            ev.beta = beta_grid[gi];
            ev.replicas = replicas;
            ev.successes = std::count(hit.begin(), hit.end(), 1);
            ev.rate = static_cast<double>(ev.successes) / static_cast<double>(replicas);
            ev.std_error = std::sqrt(std::max(0.0, ev.rate * (1.0 - ev.rate) /
                                                       static_cast<double>(replicas)));
            cache.emplace(gi, ev);
            return ev.rate;
        };
        CrossingResult cr = find_crossing(beta_grid, rate_at);

        SizeCrossing sc;
        sc.M = M_list[mi];
        sc.crossing = cr.crossing;
        sc.bracket_lo = beta_grid[cr.lo_idx];
        sc.bracket_hi = beta_grid[cr.hi_idx];
        // Wilson envelopes inverted inside the bracket: where the optimistic
        // (upper) rate curve reaches 1/2 and where the pessimistic (lower)
        // one does. Clamped to the bracket.
        const GridEval& lo_ev = cache.at(cr.lo_idx);
        const GridEval& hi_ev = cache.at(cr.hi_idx);
        auto invert = [&](double r_lo, double r_hi) {
            if (r_hi <= r_lo) return sc.bracket_hi;
            double t = (0.5 - r_lo) / (r_hi - r_lo);
            t = std::clamp(t, 0.0, 1.0);
            return sc.bracket_lo + t * (sc.bracket_hi - sc.bracket_lo);
        };
        auto [lo_wl, lo_wh] = wilson_interval(lo_ev.successes, lo_ev.replicas);
        auto [hi_wl, hi_wh] = wilson_interval(hi_ev.successes, hi_ev.replicas);
        sc.ci_lo = invert(lo_wh, hi_wh);
        sc.ci_hi = invert(lo_wl, hi_wl);
        if (sc.ci_lo > sc.ci_hi) std::swap(sc.ci_lo, sc.ci_hi);
        for (auto& [gi, ev] : cache) sc.evals.push_back(ev);
        est.crossings.push_back(std::move(sc));
    }

    const SizeCrossing& last = est.crossings.back();
    const SizeCrossing& prev = est.crossings[est.crossings.size() - 2];
    est.estimate = last.crossing;
    est.ci_lo = std::min({last.bracket_lo, prev.bracket_lo});
    est.ci_hi = std::max({last.bracket_hi, prev.bracket_hi});
    return est;
}

} // namespace dyson
