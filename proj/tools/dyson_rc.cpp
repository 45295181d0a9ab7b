// dyson-rc: command-line front end for the Dyson long-range percolation and
// random-cluster toolkit. Every run is a pure function of (config, seed);
// tabular rows carry (seed, stream, config_hash) so any row can be re-derived.
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyson/clusters.hpp"
#include "dyson/dominance.hpp"
#include "dyson/edge_prob.hpp"
#include "dyson/estimators.hpp"
#include "dyson/fk.hpp"
#include "dyson/graph.hpp"
#include "dyson/graph_io.hpp"
#include "dyson/parallel.hpp"
#include "dyson/renorm.hpp"
#include "dyson/rng.hpp"
#include "dyson/sampling.hpp"
#include "dyson/schedule.hpp"
#include "dyson/stats.hpp"

namespace {

using namespace dyson;

// ---------------------------------------------------------------- formatting

std::string fmt(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string fmt(long double x) { return fmt(static_cast<double>(x)); }

std::string fmt(std::int64_t x) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string fmt(std::uint64_t x) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string hex16(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 15];
    return s;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

// ------------------------------------------------------------------- tables

struct Cell {
    std::string text;
    bool quoted = false;
};

Cell num(double x) { return {fmt(x), false}; }
Cell num(long double x) { return {fmt(x), false}; }
Cell num(std::int64_t x) { return {fmt(x), false}; }
Cell num(int x) { return {fmt(static_cast<std::int64_t>(x)), false}; }
Cell num(std::uint64_t x) { return {fmt(x), false}; }
Cell txt(const std::string& s) { return {s, true}; }

struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells) {
        if (cells.size() != cols.size())
            throw std::logic_error("row width mismatch");
        rows.push_back(std::move(cells));
    }

    std::string render(const std::string& format) const {
        std::ostringstream os;
        if (format == "csv") {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "") << cols[i];
            os << '\n';
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    os << (i ? "," : "") << r[i].text;
                os << '\n';
            }
        } else { // jsonl
            for (const auto& r : rows) {
                os << '{';
                for (std::size_t i = 0; i < r.size(); ++i) {
                    os << (i ? "," : "") << '"' << cols[i] << "\":";
                    if (r[i].quoted)
                        os << '"' << json_escape(r[i].text) << '"';
                    else
                        os << r[i].text;
                }
                os << "}\n";
            }
        }
        return os.str();
    }
};

// -------------------------------------------------------------- run identity

// Canonical key=value serialization of the effective configuration; its
// FNV-1a hash tags every output row.
struct Canon {
    std::string text;

    void add(const std::string& k, const std::string& v) {
        text += k;
        text += '=';
        text += v;
        text += '\n';
    }
    void add(const std::string& k, double v) { add(k, fmt(v)); }
    void add(const std::string& k, std::int64_t v) { add(k, fmt(v)); }
    void add(const std::string& k, int v) { add(k, fmt(static_cast<std::int64_t>(v))); }
    void add(const std::string& k, std::uint64_t v) { add(k, fmt(v)); }

    std::string hash_hex() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        return hex16(h);
    }
};

// ------------------------------------------------------------------- output

// Full content is staged next to the target and renamed in, so a failed run
// never leaves a partial output file.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    try {
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw std::runtime_error("cannot open output file: " + path);
            os << content;
            os.flush();
            if (!os) throw std::runtime_error("cannot write output file: " + path);
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// ------------------------------------------------------------------- common

struct CommonOpts {
    std::string config;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    int threads = 0;

    int resolved_threads() const { return threads > 0 ? threads : default_threads(); }
    Seed base() const { return Seed{seed, 0}; }
};

// Flat key=value config file: each key names a long option of the subcommand;
// values fill in only options not given on the command line (flags win).
void apply_config(CLI::App& sub, const std::string& path) {
    if (path.empty()) return;
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(is, line)) {
        std::string entry = CLI::detail::trim_copy(line);
        if (entry.empty() || entry[0] == '#') continue;
        auto eq = entry.find('=');
        std::string key = eq == std::string::npos ? std::string{}
                                                  : CLI::detail::trim_copy(entry.substr(0, eq));
        if (key.empty())
            throw std::invalid_argument("config entry must look like key=value, got " + entry);
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr) throw std::invalid_argument("unknown config key: " + key);
        if (opt->count() > 0) continue;
        opt->add_result(CLI::detail::trim_copy(entry.substr(eq + 1)));
        opt->run_callback();
    }
}

void add_common(CLI::App* sub, CommonOpts& c, bool with_format = true) {
    sub->add_option("--config", c.config, "flat key=value config file; flags win");
    sub->add_option("--seed", c.seed, "master RNG seed")->capture_default_str();
    sub->add_option("--out", c.out, "output path (default: stdout)");
    if (with_format)
        sub->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"csv", "jsonl"}))
            ->capture_default_str();
    sub->add_option("--threads", c.threads,
                    "worker threads (0: DYSON_RC_THREADS or hardware)")
        ->capture_default_str();
}

// ------------------------------------------------------------------- sample

struct SampleOpts {
    CommonOpts c;
    std::string model = "bernoulli";
    double alpha = 1.5, beta = 0.5, q = 1.0, lambda = 1.0;
    std::string side = "one";
    std::int64_t size = 256, sweeps = 64;
};

void run_sample(const SampleOpts& o) {
    Side sd = parse_side(o.side);
    if (o.size < 0) throw std::invalid_argument("size must be nonnegative");
    Interval dom = side_domain(sd, o.size);
    EdgeProbFn f = dyson_prob(o.beta, o.alpha);
    Graph g = make_graph(dom, {});
    if (o.model == "bernoulli") {
        validate(ModelParams{o.alpha, o.beta, 1.0, 0.0});
        g = sample_bernoulli(dom, f, o.c.base());
    } else if (o.model == "fk") {
        validate(ModelParams{o.alpha, o.beta, o.q, 0.0});
        if (o.sweeps < 1) throw std::invalid_argument("sweeps must be positive");
        g = fk_sample_mcmc(dom, f, o.q, o.sweeps, o.c.base());
    } else if (o.model == "site-bond") {
        validate(ModelParams{o.alpha, o.beta, 1.0, 0.0});
        g = sample_site_bond(dom, o.lambda, f, o.c.base());
    } else {
        throw std::invalid_argument("model must be one of bernoulli, fk, site-bond");
    }
    write_output(o.c.out, graph_to_string(g));
}

// ----------------------------------------------------------------- clusters

struct ClustersOpts {
    CommonOpts c;
    std::string in;
};

void run_clusters(const ClustersOpts& o) {
    Graph g = graph_from_string(read_file(o.in));
    ClusterPartition part = clusters(g);
    std::int64_t n_clusters = static_cast<std::int64_t>(part.block_size.size());
    std::int64_t largest = 0;
    std::int64_t largest_rep = 0;
    if (!g.vertices.empty()) {
        std::vector<Vertex> top = largest_cluster(part);
        largest = static_cast<std::int64_t>(top.size());
        largest_rep = top.front();
    }

    Canon canon;
    canon.add("cmd", "clusters");
    canon.add("in", o.in);
    canon.add("seed", o.c.seed);
    const std::string hash = canon.hash_hex();

    Table t;
    t.cols = {"seed", "stream", "config_hash", "vertices", "edges",
              "clusters", "largest_size", "largest_min_vertex"};
    t.add_row({num(o.c.seed), num(std::uint64_t{0}), txt(hash),
               num(g.vertices.length()), num(static_cast<std::int64_t>(g.edges.size())),
               num(n_clusters), num(largest), num(largest_rep)});
    write_output(o.c.out, t.render(o.c.format));
}

// ------------------------------------------------------------------- lemma2

struct Lemma2Opts {
    CommonOpts c;
    double alpha = 1.5, beta = 0.45, q = 1.0, gamma = 0.8;
    std::vector<std::int64_t> sizes = {256, 512, 1024};
    std::int64_t replicas = 200;
};

void run_lemma2(const Lemma2Opts& o) {
    ModelParams params{o.alpha, o.beta, o.q, 0.0};
    LemmaReport rep = lemma2_experiment(params, o.gamma, o.sizes, o.replicas,
                                        o.c.base(), o.c.resolved_threads());

    Canon canon;
    canon.add("cmd", "lemma2");
    canon.add("alpha", o.alpha);
    canon.add("beta", o.beta);
    canon.add("q", o.q);
    canon.add("gamma", o.gamma);
    for (std::size_t k = 0; k < o.sizes.size(); ++k)
        canon.add("size" + fmt(static_cast<std::int64_t>(k)), o.sizes[k]);
    canon.add("replicas", o.replicas);
    canon.add("seed", o.c.seed);
    const std::string hash = canon.hash_hex();

    Table t;
    t.cols = {"seed", "stream", "config_hash", "alpha", "beta", "q", "gamma",
              "N", "replicas", "successes", "rate", "wilson_lo", "wilson_hi"};
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        const LemmaRow& r = rep.rows[k];
        std::uint64_t stream = substream(o.c.base(), stream_tag::lemma + k).stream;
        t.add_row({num(o.c.seed), num(stream), txt(hash), num(o.alpha), num(o.beta),
                   num(o.q), num(o.gamma), num(r.N), num(r.replicas),
                   num(r.successes), num(r.rate), num(r.wilson_lo), num(r.wilson_hi)});
    }
    write_output(o.c.out, t.render(o.c.format));
}

// -------------------------------------------------------------------- betac

struct BetacOpts {
    CommonOpts c;
    double alpha = 1.5, q = 1.0;
    std::string side = "two", proxy = "span";
    std::vector<std::int64_t> sizes = {1024, 2048, 4096};
    std::vector<double> grid;
    std::int64_t replicas = 200;
};

void run_betac(const BetacOpts& o) {
    std::vector<double> grid = o.grid.empty() ? default_beta_grid() : o.grid;
    if (o.alpha >= 2.0)
        std::cerr << "note: alpha >= 2 is an exploratory regime\n";
    BetaCEstimate est =
        estimate_beta_c(parse_side(o.side), o.alpha, o.q, o.sizes, grid, o.replicas,
                        parse_proxy(o.proxy), o.c.base(), o.c.resolved_threads());

    Canon canon;
    canon.add("cmd", "betac");
    canon.add("alpha", o.alpha);
    canon.add("q", o.q);
    canon.add("side", o.side);
    canon.add("proxy", o.proxy);
    for (std::size_t k = 0; k < o.sizes.size(); ++k)
        canon.add("size" + fmt(static_cast<std::int64_t>(k)), o.sizes[k]);
    for (std::size_t k = 0; k < grid.size(); ++k)
        canon.add("grid" + fmt(static_cast<std::int64_t>(k)), grid[k]);
    canon.add("replicas", o.replicas);
    canon.add("seed", o.c.seed);
    const std::string hash = canon.hash_hex();

    // Row kinds: "eval" rows carry the measured proxy rate at a grid beta
    // with its Wilson interval in (lo, hi); "size" rows carry the per-size
    // crossing in `beta` with the crossing confidence interval in (lo, hi);
    // the single "estimate" row carries the final estimate the same way.
    Table t;
    t.cols = {"seed", "stream", "config_hash", "kind", "side", "alpha", "q",
              "proxy", "M", "beta", "rate", "std_error", "lo", "hi"};
    auto grid_index = [&grid](double beta) {
        for (std::size_t gi = 0; gi < grid.size(); ++gi)
            if (grid[gi] == beta) return gi;
        return grid.size();
    };
    for (std::size_t mi = 0; mi < est.crossings.size(); ++mi) {
        const SizeCrossing& sc = est.crossings[mi];
        for (const GridEval& ev : sc.evals) {
            std::uint64_t stream =
                substream(o.c.base(), stream_tag::betac + mi * 1024 + grid_index(ev.beta))
                    .stream;
            auto [wlo, whi] = wilson_interval(ev.successes, ev.replicas);
            t.add_row({num(o.c.seed), num(stream), txt(hash), txt("eval"),
                       txt(o.side), num(o.alpha), num(o.q), txt(est.proxy), num(sc.M),
                       num(ev.beta), num(ev.rate), num(ev.std_error), num(wlo),
                       num(whi)});
        }
        std::uint64_t stream =
            substream(o.c.base(), stream_tag::betac + mi * 1024).stream;
        t.add_row({num(o.c.seed), num(stream), txt(hash), txt("size"), txt(o.side),
                   num(o.alpha), num(o.q), txt(est.proxy), num(sc.M), num(sc.crossing),
                   num(0.5), num(0.0), num(sc.ci_lo), num(sc.ci_hi)});
    }
    const SizeCrossing& last = est.crossings.back();
    t.add_row({num(o.c.seed), num(std::uint64_t{0}), txt(hash), txt("estimate"),
               txt(o.side), num(o.alpha), num(o.q), txt(est.proxy), num(last.M),
               num(est.estimate), num(0.5), num(0.0), num(est.ci_lo), num(est.ci_hi)});
    write_output(o.c.out, t.render(o.c.format));
}

// ------------------------------------------------------------------- coarse

struct CoarseOpts {
    CommonOpts c;
    std::string in;
    double alpha = 1.5, beta = 0.5;
    std::string side = "one";
    std::int64_t size = 256, block = 16;
};

void run_coarse(const CoarseOpts& o) {
    Graph g = o.in.empty()
                  ? sample_bernoulli(side_domain(parse_side(o.side), o.size),
                                     dyson_prob(o.beta, o.alpha), o.c.base())
                  : graph_from_string(read_file(o.in));
    if (o.block < 1) throw std::invalid_argument("block must be positive");
    BlockPartition part = make_block_partition(g.vertices, o.block);
    CoarseGraphSpec spec;
    spec.domain = g.vertices;
    for (const Interval& b : part.blocks) {
        std::vector<Vertex> set;
        set.reserve(static_cast<std::size_t>(b.length()));
        for (Vertex v = b.lo; v < b.hi; ++v) set.push_back(v);
        spec.sets.push_back(std::move(set));
    }
    write_output(o.c.out, graph_to_string(coarse_graph(g, spec)));
}

// ----------------------------------------------------------------- schedule

struct ScheduleOpts {
    CommonOpts c;
    double alpha = 1.5, gamma = 0.9, gamma_prime = 0.0, eps = 0.1;
    std::int64_t c0 = std::int64_t{1} << 20, m1 = 0, L = 0, trunc = 4096;
    int nmax = 8;
};

void run_schedule(const ScheduleOpts& o) {
    double gp = o.gamma_prime > 0 ? o.gamma_prime : (o.alpha / 2 + o.gamma) / 2;
    std::int64_t m1 = o.m1 > 0 ? o.m1 : o.c0;
    RenormSchedule sched =
        build_schedule(gp, o.gamma, o.alpha, o.eps, o.c0, m1, o.L, o.nmax, o.trunc);

    Canon canon;
    canon.add("cmd", "schedule");
    canon.add("alpha", o.alpha);
    canon.add("gamma", o.gamma);
    canon.add("gamma_prime", gp);
    canon.add("eps", o.eps);
    canon.add("c0", o.c0);
    canon.add("m1", m1);
    canon.add("L", o.L);
    canon.add("nmax", o.nmax);
    canon.add("trunc", o.trunc);
    canon.add("seed", o.c.seed);
    const std::string hash = canon.hash_hex();

    Table t;
    t.cols = {"seed", "stream", "config_hash", "n", "c_n", "M_n", "d_n", "eps_n"};
    for (int n = 1; n <= sched.n_max; ++n) {
        std::size_t k = static_cast<std::size_t>(n);
        t.add_row({num(o.c.seed), num(std::uint64_t{0}), txt(hash), num(n),
                   num(sched.c[k]), num(sched.M[k]), num(sched.d[k]),
                   num(sched.eps[k])});
    }
    write_output(o.c.out, t.render(o.c.format));
}

// ---------------------------------------------------------------- induction

struct InductionOpts {
    CommonOpts c;
    double alpha = 1.5, beta = 1.0, q = 1.0, delta = 0.5;
    double gamma = 0.8, gamma_prime = 0.0, eps = 0.1;
    std::int64_t c0 = 4, m1 = 0, L = 0;
    int nmax = 8, n = 2;
    std::int64_t replicas = 100, m_prev = 0, c_n = 0;
};

void run_induction(const InductionOpts& o) {
    double gp = o.gamma_prime > 0 ? o.gamma_prime : (o.alpha / 2 + o.gamma) / 2;
    std::int64_t m1 = o.m1 > 0 ? o.m1 : o.c0;
    RenormSchedule sched =
        build_schedule(gp, o.gamma, o.alpha, o.eps, o.c0, m1, o.L, o.nmax);
    std::optional<InductionScale> scale;
    if (o.m_prev > 0 || o.c_n > 0) {
        if (o.m_prev <= 0 || o.c_n <= 0)
            throw std::invalid_argument("m-prev and c-n must be given together");
        scale = InductionScale{o.m_prev, o.c_n};
    }
    ModelParams params{o.alpha, o.beta, o.q, o.delta};
    InductionReport rep = induction_step_experiment(params, sched, o.n, o.replicas,
                                                    o.c.base(), scale,
                                                    o.c.resolved_threads());

    Canon canon;
    canon.add("cmd", "induction");
    canon.add("alpha", o.alpha);
    canon.add("beta", o.beta);
    canon.add("q", o.q);
    canon.add("delta", o.delta);
    canon.add("gamma", o.gamma);
    canon.add("gamma_prime", gp);
    canon.add("eps", o.eps);
    canon.add("c0", o.c0);
    canon.add("m1", m1);
    canon.add("L", o.L);
    canon.add("nmax", o.nmax);
    canon.add("n", o.n);
    canon.add("m_prev", o.m_prev);
    canon.add("c_n", o.c_n);
    canon.add("replicas", o.replicas);
    canon.add("seed", o.c.seed);
    const std::string hash = canon.hash_hex();

    std::uint64_t stream = substream(o.c.base(), stream_tag::induction_base).stream;
    Table t;
    t.cols = {"seed", "stream", "config_hash", "n", "m_prev", "c_n", "d_n", "m_n",
              "gamma", "replicas", "children", "child_good_rate", "eps_hat",
              "k_exceeds_rate", "markov_rhs", "markov_chain_valid", "q_lb",
              "coarse_samples", "coarse_connected_rate", "coarse_bound_mean",
              "final_rate", "final_bound", "chain_violations"};
    t.add_row({num(o.c.seed), num(stream), txt(hash), num(rep.n), num(rep.M_prev),
               num(rep.c_n), num(rep.d_n), num(rep.M_n), num(rep.gamma),
               num(rep.replicas), num(rep.children_per_replica),
               num(rep.child_good_rate), num(rep.eps_hat), num(rep.k_exceeds_rate),
               num(rep.markov_rhs), num(rep.markov_chain_valid ? 1 : 0),
               num(rep.q_lb), num(rep.coarse_samples), num(rep.coarse_connected_rate),
               num(rep.coarse_bound_mean), num(rep.final_rate), num(rep.final_bound),
               num(rep.chain_violations)});
    write_output(o.c.out, t.render(o.c.format));
}

// ----------------------------------------------------------------- dominate

struct DominateOpts {
    CommonOpts c;
    std::string in;
    double alpha = 1.5, beta = 0.5, q = 2.0;
};

OutsideCondition make_condition(const std::string& id) {
    auto index_of = [](const std::string& s) {
        std::size_t k = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw std::invalid_argument("bad condition index: " + s);
        return k;
    };
    if (id == "none")
        return [](const std::vector<Edge>&, std::uint32_t) { return true; };
    if (id == "any-open")
        return [](const std::vector<Edge>&, std::uint32_t m) { return m != 0; };
    if (id == "all-closed")
        return [](const std::vector<Edge>&, std::uint32_t m) { return m == 0; };
    if (id == "all-open")
        return [](const std::vector<Edge>& pairs, std::uint32_t m) {
            return m == (pairs.empty() ? 0u : (1u << pairs.size()) - 1u);
        };
    if (id.rfind("open:", 0) == 0) {
        std::size_t k = index_of(id.substr(5));
        return [k](const std::vector<Edge>& pairs, std::uint32_t m) {
            if (k >= pairs.size())
                throw std::invalid_argument("condition index out of range");
            return (m >> k) & 1u;
        };
    }
    if (id.rfind("closed:", 0) == 0) {
        std::size_t k = index_of(id.substr(7));
        return [k](const std::vector<Edge>& pairs, std::uint32_t m) {
            if (k >= pairs.size())
                throw std::invalid_argument("condition index out of range");
            return !((m >> k) & 1u);
        };
    }
    if (id.rfind("count:", 0) == 0) {
        std::size_t k = index_of(id.substr(6));
        return [k](const std::vector<Edge>&, std::uint32_t m) {
            return static_cast<std::size_t>(__builtin_popcount(m)) >= k;
        };
    }
    throw std::invalid_argument("unknown condition id: " + id);
}

struct DominateCase {
    Interval w, v;
    double q, beta, alpha;
    std::string condition;
};

Interval parse_interval_token(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("interval must look like lo:hi, got " + s);
    return make_interval(std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1)));
}

std::vector<DominateCase> parse_corpus(const std::string& text, const DominateOpts& o) {
    std::vector<DominateCase> cases;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        DominateCase cs{make_interval(0, 3), make_interval(0, 2), o.q, o.beta,
                        o.alpha, "none"};
        std::istringstream toks(line);
        std::string tok;
        bool any = false;
        while (toks >> tok) {
            any = true;
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("corpus token must be key=value, got " + tok);
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "w") cs.w = parse_interval_token(val);
            else if (key == "v") cs.v = parse_interval_token(val);
            else if (key == "q") cs.q = std::stod(val);
            else if (key == "beta") cs.beta = std::stod(val);
            else if (key == "alpha") cs.alpha = std::stod(val);
            else if (key == "condition") cs.condition = val;
            else throw std::invalid_argument("unknown corpus key: " + key);
        }
        if (any) cases.push_back(cs);
    }
    return cases;
}

const char* kBuiltinCorpus =
    "w=0:3 v=0:2 q=1 condition=none\n"
    "w=0:3 v=0:2 q=1 condition=any-open\n"
    "w=0:3 v=0:2 q=2 condition=none\n"
    "w=0:3 v=0:2 q=2 condition=any-open\n"
    "w=0:3 v=0:2 q=2 condition=all-open\n"
    "w=0:3 v=0:2 q=2 condition=all-closed\n"
    "w=0:4 v=0:2 q=2 condition=open:0\n"
    "w=0:4 v=1:3 q=2 condition=count:2\n";

void run_dominate(const DominateOpts& o) {
    const std::string corpus = o.in.empty() ? std::string(kBuiltinCorpus)
                                            : read_file(o.in);
    std::vector<DominateCase> cases = parse_corpus(corpus, o);

    Canon canon;
    canon.add("cmd", "dominate");
    canon.add("alpha", o.alpha);
    canon.add("beta", o.beta);
    canon.add("q", o.q);
    canon.add("seed", o.c.seed);
    canon.add("corpus", corpus);
    const std::string hash = canon.hash_hex();

    Table t;
    t.cols = {"seed", "stream", "config_hash", "case", "w_lo", "w_hi", "v_lo",
              "v_hi", "q", "beta", "condition", "holds", "flow", "upset_min"};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const DominateCase& cs = cases[i];
        EdgeProbFn f = dyson_prob(cs.beta, cs.alpha);
        DiscreteGraphLaw lo = fk_exact_distribution(cs.v, f, cs.q);
        DiscreteGraphLaw hi =
            conditioned_fk_law(cs.w, cs.v, f, cs.q, make_condition(cs.condition));
        DominanceResult r = check_dominance_exact(lo, hi);
        t.add_row({num(o.c.seed), num(std::uint64_t{0}), txt(hash),
                   num(static_cast<std::int64_t>(i)), num(cs.w.lo), num(cs.w.hi),
                   num(cs.v.lo), num(cs.v.hi), num(cs.q), num(cs.beta),
                   txt(cs.condition), num(r.holds ? 1 : 0), num(r.flow),
                   num(static_cast<std::int64_t>(r.violating_upset.size()))});
    }
    write_output(o.c.out, t.render(o.c.format));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dyson-rc: Monte Carlo toolkit for one- and two-sided "
                 "long-range percolation and random-cluster models"};
    app.require_subcommand(1);

    auto sample = std::make_shared<SampleOpts>();
    {
        CLI::App* s = app.add_subcommand("sample", "draw a graph and write it to a file");
        add_common(s, sample->c, false);
        s->add_option("--model", sample->model, "bernoulli|fk|site-bond")
            ->capture_default_str();
        s->add_option("--alpha", sample->alpha, "distance exponent")->capture_default_str();
        s->add_option("--beta", sample->beta, "inverse temperature")->capture_default_str();
        s->add_option("--q", sample->q, "cluster weight (fk model)")->capture_default_str();
        s->add_option("--lambda", sample->lambda, "site retention (site-bond model)")
            ->capture_default_str();
        s->add_option("--side", sample->side, "one|two")->capture_default_str();
        s->add_option("--size", sample->size, "domain scale M")->capture_default_str();
        s->add_option("--sweeps", sample->sweeps, "heat-bath sweeps (fk model)")
            ->capture_default_str();
        s->callback([s, sample] { apply_config(*s, sample->c.config); run_sample(*sample); });
    }

    auto clusters_o = std::make_shared<ClustersOpts>();
    {
        CLI::App* s = app.add_subcommand("clusters", "cluster statistics of a graph file");
        add_common(s, clusters_o->c);
        s->add_option("--in", clusters_o->in, "input graph file")->required();
        s->callback([s, clusters_o] { apply_config(*s, clusters_o->c.config); run_clusters(*clusters_o); });
    }

    auto lemma2_o = std::make_shared<Lemma2Opts>();
    {
        CLI::App* s = app.add_subcommand(
            "lemma2", "goodness rate P(|C_I| >= N^gamma) across sizes");
        add_common(s, lemma2_o->c);
        s->add_option("--alpha", lemma2_o->alpha, "distance exponent")->capture_default_str();
        s->add_option("--beta", lemma2_o->beta, "inverse temperature")->capture_default_str();
        s->add_option("--q", lemma2_o->q, "cluster weight")->capture_default_str();
        s->add_option("--gamma", lemma2_o->gamma, "goodness exponent")->capture_default_str();
        s->add_option("--sizes", lemma2_o->sizes, "interval lengths")
            ->delimiter(',')
            ->capture_default_str();
        s->add_option("--replicas", lemma2_o->replicas, "samples per size")
            ->capture_default_str();
        s->callback([s, lemma2_o] { apply_config(*s, lemma2_o->c.config); run_lemma2(*lemma2_o); });
    }

    auto betac = std::make_shared<BetacOpts>();
    {
        CLI::App* s = app.add_subcommand(
            "betac", "finite-size critical point estimate over a beta grid");
        add_common(s, betac->c);
        s->add_option("--alpha", betac->alpha, "distance exponent")->capture_default_str();
        s->add_option("--q", betac->q, "cluster weight")->capture_default_str();
        s->add_option("--side", betac->side, "one|two")->capture_default_str();
        s->add_option("--proxy", betac->proxy, "span or giant(c)")->capture_default_str();
        s->add_option("--sizes", betac->sizes, "domain scales, ascending")
            ->delimiter(',')
            ->capture_default_str();
        s->add_option("--grid", betac->grid, "beta grid (default: 0.05..0.65 step 0.0125)")
            ->delimiter(',');
        s->add_option("--replicas", betac->replicas, "samples per grid point")
            ->capture_default_str();
        s->callback([s, betac] { apply_config(*s, betac->c.config); run_betac(*betac); });
    }

    auto coarse = std::make_shared<CoarseOpts>();
    {
        CLI::App* s = app.add_subcommand(
            "coarse", "block coarse graph of a sampled or given instance");
        add_common(s, coarse->c, false);
        s->add_option("--in", coarse->in, "input graph file (default: sample one)");
        s->add_option("--alpha", coarse->alpha, "distance exponent")->capture_default_str();
        s->add_option("--beta", coarse->beta, "inverse temperature")->capture_default_str();
        s->add_option("--side", coarse->side, "one|two")->capture_default_str();
        s->add_option("--size", coarse->size, "domain scale M")->capture_default_str();
        s->add_option("--block", coarse->block, "block length N")->capture_default_str();
        s->callback([s, coarse] { apply_config(*s, coarse->c.config); run_coarse(*coarse); });
    }

    auto schedule = std::make_shared<ScheduleOpts>();
    {
        CLI::App* s = app.add_subcommand(
            "schedule", "renormalization schedule table (n, c_n, M_n, d_n, eps_n)");
        add_common(s, schedule->c);
        s->add_option("--alpha", schedule->alpha, "distance exponent")->capture_default_str();
        s->add_option("--gamma", schedule->gamma, "goodness exponent")->capture_default_str();
        s->add_option("--gamma-prime", schedule->gamma_prime,
                      "coarse exponent (0: midpoint of (alpha/2, gamma))");
        s->add_option("--eps", schedule->eps, "target failure budget")->capture_default_str();
        s->add_option("--c0", schedule->c0, "scale floor")->capture_default_str();
        s->add_option("--m1", schedule->m1, "base block size (0: c0)")->capture_default_str();
        s->add_option("--L", schedule->L, "boundary padding")->capture_default_str();
        s->add_option("--nmax", schedule->nmax, "last step")->capture_default_str();
        s->add_option("--trunc-terms", schedule->trunc, "product truncation depth")
            ->capture_default_str();
        s->callback([s, schedule] { apply_config(*s, schedule->c.config); run_schedule(*schedule); });
    }

    auto induction = std::make_shared<InductionOpts>();
    {
        CLI::App* s = app.add_subcommand(
            "induction", "Monte Carlo rehearsal of one renormalization step");
        add_common(s, induction->c);
        s->add_option("--alpha", induction->alpha, "distance exponent")->capture_default_str();
        s->add_option("--beta", induction->beta, "inverse temperature")->capture_default_str();
        s->add_option("--q", induction->q, "cluster weight")->capture_default_str();
        s->add_option("--delta", induction->delta, "sprinkle intensity")->capture_default_str();
        s->add_option("--gamma", induction->gamma, "goodness exponent")->capture_default_str();
        s->add_option("--gamma-prime", induction->gamma_prime,
                      "coarse exponent (0: midpoint of (alpha/2, gamma))");
        s->add_option("--eps", induction->eps, "target failure budget")->capture_default_str();
        s->add_option("--c0", induction->c0, "scale floor")->capture_default_str();
        s->add_option("--m1", induction->m1, "base block size (0: c0)")->capture_default_str();
        s->add_option("--L", induction->L, "boundary padding")->capture_default_str();
        s->add_option("--nmax", induction->nmax, "schedule length")->capture_default_str();
        s->add_option("--n", induction->n, "step index (>= 2)")->capture_default_str();
        s->add_option("--replicas", induction->replicas, "replicas")->capture_default_str();
        s->add_option("--m-prev", induction->m_prev, "override M_{n-1} (with --c-n)");
        s->add_option("--c-n", induction->c_n, "override c_n (with --m-prev)");
        s->callback([s, induction] { apply_config(*s, induction->c.config); run_induction(*induction); });
    }

    auto dominate = std::make_shared<DominateOpts>();
    {
        CLI::App* s = app.add_subcommand(
            "dominate", "exact stochastic-domination corpus checks");
        add_common(s, dominate->c);
        s->add_option("--in", dominate->in, "corpus file (default: built-in corpus)");
        s->add_option("--alpha", dominate->alpha, "default distance exponent")
            ->capture_default_str();
        s->add_option("--beta", dominate->beta, "default inverse temperature")
            ->capture_default_str();
        s->add_option("--q", dominate->q, "default cluster weight")->capture_default_str();
        s->callback([s, dominate] { apply_config(*s, dominate->c.config); run_dominate(*dominate); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
