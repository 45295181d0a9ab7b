#include "dyson/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "dyson/fk.hpp"
#include "dyson/parallel.hpp"
#include "dyson/sampling.hpp"

namespace dyson {

BlockPartition make_block_partition(Interval domain, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("block length must be at least 1");
    if (domain.empty()) throw std::invalid_argument("empty interval");
    BlockPartition p;
    p.N = N;
    p.domain = domain;
    // Aligned block indices: floor division for possibly negative domains.
    auto fdiv = [](Vertex a, Vertex b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    Vertex k_lo = fdiv(domain.lo, N);
    Vertex k_hi = fdiv(domain.hi - 1, N);
    for (Vertex k = k_lo; k <= k_hi; ++k)
        p.blocks.push_back(Interval{std::max(domain.lo, k * N),
                                    std::min(domain.hi, (k + 1) * N)});
    return p;
}

bool is_good(const Graph& g, Interval i, double gamma) {
    if (i.empty()) throw std::invalid_argument("empty interval");
    if (!g.vertices.contains(i))
        throw std::invalid_argument("interval not contained in vertex set");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma in (0,1) violated");
    long double threshold = std::pow(static_cast<long double>(i.length()),
                                      static_cast<long double>(gamma));
    return static_cast<long double>(largest_induced_size(clusters(g), i)) >= threshold;
}

std::vector<std::int64_t> good_blocks(const std::vector<Graph>& per_block,
                                      const BlockPartition& partition, double gamma) {
    if (per_block.size() != partition.blocks.size())
        throw std::invalid_argument("one graph required per block");
    std::vector<std::int64_t> good;
    for (std::size_t k = 0; k < per_block.size(); ++k)
        if (is_good(per_block[k], partition.blocks[k], gamma))
            good.push_back(static_cast<std::int64_t>(k));
    return good;
}

Graph coarse_graph(const Graph& h, const CoarseGraphSpec& spec) {
    std::unordered_map<Vertex, std::int64_t> set_of;
    for (std::size_t a = 0; a < spec.sets.size(); ++a)
        for (Vertex v : spec.sets[a]) {
            if (!h.vertices.contains(v))
                throw std::invalid_argument("set vertex outside graph domain");
            if (!set_of.emplace(v, static_cast<std::int64_t>(a)).second)
                throw std::invalid_argument("overlapping sets");
        }
    std::vector<Edge> coarse;
    for (const auto& e : h.edges) {
        auto it = set_of.find(e.first);
        auto jt = set_of.find(e.second);
        if (it == set_of.end() || jt == set_of.end()) continue;
        if (it->second == jt->second) continue;
        coarse.emplace_back(std::min(it->second, jt->second),
                            std::max(it->second, jt->second));
    }
    return make_graph(Interval{0, static_cast<Vertex>(spec.sets.size())}, std::move(coarse));
}

double coarse_edge_prob_lb(double delta, std::int64_t s_i, std::int64_t s_j,
                           std::int64_t d_ij, double alpha) {
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    if (s_i < 1 || s_j < 1) throw std::invalid_argument("set sizes must be at least 1");
    if (d_ij < 1) throw std::invalid_argument("distance bound must be at least 1");
    double x = delta * static_cast<double>(s_i) * static_cast<double>(s_j) *
               std::pow(static_cast<double>(d_ij), -alpha);
    return -std::expm1(-x);
}

double effective_beta(double delta, std::int64_t n_block, double gamma, double alpha) {
    if (!(2.0 * gamma > alpha)) throw std::invalid_argument("subcritical exponent");
    if (n_block < 1) throw std::invalid_argument("block length must be at least 1");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    return delta * std::pow(2.0, -alpha) *
           std::pow(static_cast<double>(n_block), 2.0 * gamma - alpha);
}

std::int64_t find_boundary_padding(double beta, double alpha, std::int64_t M1,
                                   double gamma, double eps1, std::int64_t replicas,
                                   Seed s, std::int64_t l_max) {
    if (M1 < 1) throw std::invalid_argument("M1 >= 1 violated");
    if (replicas < 1) throw std::invalid_argument("replicas >= 1 violated");
    Interval block{0, M1};
    EdgeProbFn f = dyson_prob(beta, alpha);
    for (std::int64_t L = 1; L <= l_max; L *= 2) {
        Interval padded{block.lo - L, block.hi + L};
        std::int64_t successes = 0;
        for (std::int64_t r = 0; r < replicas; ++r) {
            Graph g = sample_bernoulli(padded, f, substream(s, static_cast<std::uint64_t>(L), static_cast<std::uint64_t>(r)));
            if (is_good(g, block, gamma)) ++successes;
        }
        double rate = static_cast<double>(successes) / static_cast<double>(replicas);
        if (rate > 1.0 - eps1) return L;
    }
    throw std::runtime_error("padding search exceeded limit");
}

namespace {

// Largest block over members of child interval j in a rollback union-find,
// with the member list of the winner (tie: smallest minimum vertex, i.e.
// first root encountered scanning ascending).
struct ChildWitness {
    std::int64_t size = 0;
    std::vector<Vertex> members;
};

ChildWitness child_largest_induced(const RollbackUnionFind& uf, Interval child, Vertex base_lo) {
    std::unordered_map<std::size_t, std::int64_t> count;
    count.reserve(static_cast<std::size_t>(child.length()) * 2);
    std::int64_t best = 0;
    for (Vertex v = child.lo; v < child.hi; ++v) {
        std::size_t r = uf.find(static_cast<std::size_t>(v - base_lo));
        best = std::max(best, ++count[r]);
    }
    // Tie-break matches largest_induced: smallest minimum vertex, i.e. the
    // first maximal root met scanning ascending.
    std::size_t best_root = 0;
    for (Vertex v = child.lo; v < child.hi; ++v) {
        std::size_t r = uf.find(static_cast<std::size_t>(v - base_lo));
        if (count[r] == best) {
            best_root = r;
            break;
        }
    }
    ChildWitness w;
    w.size = best;
    w.members.reserve(static_cast<std::size_t>(best));
    for (Vertex v = child.lo; v < child.hi; ++v)
        if (uf.find(static_cast<std::size_t>(v - base_lo)) == best_root)
            w.members.push_back(v);
    return w;
}

struct ReplicaOutcome {
    std::int64_t good_children = 0;
    bool k_exceeds = false;
    bool has_coarse = false; // K >= 2
    bool coarse_connected = false;
    double coarse_bound = 0; // clamped 1 - ER bound at this K
    bool final_event = false;
    bool chain_violated = false;
};

} // namespace

InductionReport induction_step_experiment(const ModelParams& params,
                                          const RenormSchedule& schedule, int n,
                                          std::int64_t replicas, Seed s,
                                          std::optional<InductionScale> scale,
                                          int threads) {
    validate(params);
    if (n < 2 || n > schedule.n_max) throw std::invalid_argument("n must lie in [2, n_max]");
    if (replicas < 1) throw std::invalid_argument("replicas >= 1 violated");

    const double gamma = schedule.gamma;
    long double M_prev_l, c_l;
    if (scale) {
        if (scale->M_prev < 1 || scale->c_n < 2)
            throw std::invalid_argument("override scale needs M_prev >= 1 and c_n >= 2");
        M_prev_l = static_cast<long double>(scale->M_prev);
        c_l = static_cast<long double>(scale->c_n);
    } else {
        M_prev_l = schedule.M[static_cast<std::size_t>(n) - 1];
        c_l = schedule.c[static_cast<std::size_t>(n)];
    }
    const long double M_n_l = M_prev_l * c_l;
    if (!(M_n_l <= 1e6L)) throw std::invalid_argument("infeasible scale: M_n exceeds 1e6");
    const auto M_prev = static_cast<std::int64_t>(llroundl(M_prev_l));
    const auto c_n = static_cast<std::int64_t>(llroundl(c_l));
    if (std::fabs(c_l - static_cast<long double>(c_n)) > 1e-9L)
        throw std::invalid_argument("infeasible scale: c_n must be integral at experiment scale");
    const std::int64_t M_n = M_prev * c_n;
    if (params.q > 1.0 && M_n > 2048)
        throw std::invalid_argument("infeasible scale: q > 1 runs need M_n <= 2048");

    const long double d_n = std::pow(c_l, static_cast<long double>(gamma) - 1.0L);
    const long double child_threshold = std::pow(M_prev_l, static_cast<long double>(gamma));
    const long double final_threshold = std::pow(M_n_l, static_cast<long double>(gamma));
    const long double k_threshold = c_l - std::pow(c_l, static_cast<long double>(gamma));
    const double q_lb = -std::expm1(
        -params.delta * static_cast<double>(std::pow(c_l, -static_cast<long double>(params.alpha)) *
                                            std::pow(M_prev_l, 2.0L * static_cast<long double>(gamma) -
                                                                    static_cast<long double>(params.alpha))));

    const Interval domain{0, M_n};
    const EdgeProbFn base_f = dyson_prob(params.beta, params.alpha);
    const EdgeProbFn sprinkle_f = dyson_prob(params.delta, params.alpha);

    std::vector<ReplicaOutcome> out(static_cast<std::size_t>(replicas));
    parallel_for(replicas, threads, [&](std::int64_t rep) {
        ReplicaOutcome& o = out[static_cast<std::size_t>(rep)];
        Seed base_seed = substream(s, stream_tag::induction_base, static_cast<std::uint64_t>(rep));
        Seed spr_seed = substream(s, stream_tag::induction_sprinkle, static_cast<std::uint64_t>(rep));
        Graph g = (params.q == 1.0)
                      ? sample_bernoulli(domain, base_f, base_seed)
                      : fk_sample_mcmc(domain, base_f, params.q, 48, base_seed);
        Graph h = sample_bernoulli(domain, sprinkle_f, spr_seed);

        // Base state: components of g; children then add their in-block
        // sprinkle edges on top and roll back.
        RollbackUnionFind uf(static_cast<std::size_t>(M_n));
        for (const auto& e : g.edges)
            uf.unite(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second));

        // h's edges grouped per child for the in-block pass; cross-child
        // edges kept separate for the coarse stage.
        std::vector<std::vector<Edge>> h_in(static_cast<std::size_t>(c_n));
        std::vector<Edge> h_cross;
        for (const auto& e : h.edges) {
            std::int64_t ci = e.first / M_prev, cj = e.second / M_prev;
            if (ci == cj)
                h_in[static_cast<std::size_t>(ci)].push_back(e);
            else
                h_cross.push_back(e);
        }

        std::vector<std::vector<Vertex>> witnesses; // S_j for good children
        for (std::int64_t j = 0; j < c_n; ++j) {
            Interval child{j * M_prev, (j + 1) * M_prev};
            std::size_t mark = uf.checkpoint();
            for (const auto& e : h_in[static_cast<std::size_t>(j)])
                uf.unite(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second));
            ChildWitness w = child_largest_induced(uf, child, 0);
            if (static_cast<long double>(w.size) >= child_threshold) {
                ++o.good_children;
                witnesses.push_back(std::move(w.members));
            }
            uf.rollback(mark);
        }
        const std::int64_t K = o.good_children;
        o.k_exceeds = static_cast<long double>(K) > k_threshold;

        // Coarse graph on the witnesses, using cross-child sprinkle edges.
        Graph h_cross_graph = graph_from_canonical(domain, std::move(h_cross));
        CoarseGraphSpec spec{domain, witnesses};
        Graph coarse = coarse_graph(h_cross_graph, spec);
        std::int64_t coarse_largest = 0;
        bool coarse_connected = true;
        if (K >= 1) {
            ClusterPartition cp = clusters(coarse);
            coarse_largest = largest_cluster_size(cp);
            coarse_connected = cp.block_count() == 1;
        }
        if (K >= 2) {
            o.has_coarse = true;
            o.coarse_connected = coarse_connected;
            double er = er_disconnect_bound(K, std::min(1.0, std::max(q_lb, 1e-300)));
            o.coarse_bound = std::max(0.0, 1.0 - std::min(1.0, er));
        }

        // Full-sprinkle union for the final event and the per-sample chain.
        std::size_t mark = uf.checkpoint();
        for (const auto& e : h.edges)
            uf.unite(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second));
        std::vector<std::int64_t> count(static_cast<std::size_t>(M_n), 0);
        std::int64_t largest = 0;
        for (Vertex v = 0; v < M_n; ++v)
            largest = std::max(largest, ++count[uf.find(static_cast<std::size_t>(v))]);
        uf.rollback(mark);
        o.final_event = static_cast<long double>(largest) > final_threshold;
        o.chain_violated = static_cast<long double>(largest) <
                           static_cast<long double>(coarse_largest) * child_threshold;
    });

    InductionReport r;
    r.n = n;
    r.M_prev = M_prev_l;
    r.c_n = c_l;
    r.d_n = d_n;
    r.M_n = M_n_l;
    r.gamma = gamma;
    r.replicas = replicas;
    r.children_per_replica = c_n;
    std::int64_t good_total = 0, k_exceeds = 0, coarse_n = 0, coarse_conn = 0, finals = 0;
    double coarse_bound_sum = 0;
    for (const auto& o : out) {
        good_total += o.good_children;
        k_exceeds += o.k_exceeds ? 1 : 0;
        if (o.has_coarse) {
            ++coarse_n;
            coarse_conn += o.coarse_connected ? 1 : 0;
            coarse_bound_sum += o.coarse_bound;
        }
        finals += o.final_event ? 1 : 0;
        r.chain_violations += o.chain_violated ? 1 : 0;
    }
    r.child_good_rate = static_cast<double>(good_total) /
                        static_cast<double>(replicas * c_n);
    r.eps_hat = 1.0 - r.child_good_rate;
    r.k_exceeds_rate = static_cast<double>(k_exceeds) / static_cast<double>(replicas);
    r.markov_rhs = 1.0 - r.eps_hat / (1.0 - static_cast<double>(d_n));
    r.markov_chain_valid = d_n < 0.5L;
    r.q_lb = q_lb;
    r.coarse_samples = coarse_n;
    r.coarse_connected_rate =
        coarse_n ? static_cast<double>(coarse_conn) / static_cast<double>(coarse_n) : 0.0;
    r.coarse_bound_mean = coarse_n ? coarse_bound_sum / static_cast<double>(coarse_n) : 0.0;
    r.final_rate = static_cast<double>(finals) / static_cast<double>(replicas);
    r.final_bound = 1.0 - r.eps_hat * (1.0 + 3.0 * static_cast<double>(d_n));
    return r;
}

} // namespace dyson
