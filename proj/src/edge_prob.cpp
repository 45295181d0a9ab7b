#include "dyson/edge_prob.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dyson {

void validate(const ModelParams& p) {
    if (!(p.alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
    if (!(p.beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
    if (!(p.q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    if (!(p.delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
}

EdgeProbFn::EdgeProbFn(DysonProb d) : v_(d) {
    if (!(d.alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(d.beta >= 0)) throw std::invalid_argument("beta must be nonnegative");
}
EdgeProbFn::EdgeProbFn(ConstantProb c) : v_(c) {
    if (!(c.p >= 0.0 && c.p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
}
EdgeProbFn::EdgeProbFn(RestrictedProb r) : v_(std::move(r)) {}

EdgeProbFn dyson_prob(double beta, double alpha) { return DysonProb{beta, alpha}; }
EdgeProbFn constant_prob(double p) { return ConstantProb{p}; }
EdgeProbFn restricted_prob(EdgeProbFn inner, Interval window) {
    return RestrictedProb{std::make_shared<EdgeProbFn>(std::move(inner)), window};
}

double edge_prob(const EdgeProbFn& f, Vertex i, Vertex j) {
    if (i == j) throw std::invalid_argument("self-loop");
    const auto& v = f.variant();
    if (const auto* d = std::get_if<DysonProb>(&v)) {
        double dist = static_cast<double>(i > j ? i - j : j - i);
        return -std::expm1(-d->beta * std::pow(dist, -d->alpha));
    }
    if (const auto* c = std::get_if<ConstantProb>(&v)) return c->p;
    const auto& r = std::get<RestrictedProb>(v);
    if (!r.window.contains(i) || !r.window.contains(j)) return 0.0;
    return edge_prob(*r.inner, i, j);
}

double FlatProb::prob_at(Vertex dist) const {
    if (is_dyson) return -std::expm1(-beta * std::pow(static_cast<double>(dist), -alpha));
    return p;
}

double FlatProb::log_one_minus_at(Vertex dist) const {
    if (is_dyson) return -beta * std::pow(static_cast<double>(dist), -alpha);
    return std::log1p(-p);
}

FlatProb flatten(const EdgeProbFn& f, Interval domain) {
    const auto& v = f.variant();
    if (const auto* d = std::get_if<DysonProb>(&v))
        return FlatProb{true, d->beta, d->alpha, 0.0, domain};
    if (const auto* c = std::get_if<ConstantProb>(&v))
        return FlatProb{false, 0.0, 0.0, c->p, domain};
    const auto& r = std::get<RestrictedProb>(v);
    Interval w{std::max(domain.lo, r.window.lo), std::min(domain.hi, r.window.hi)};
    if (w.lo > w.hi) w = Interval{domain.lo, domain.lo};
    return flatten(*r.inner, w);
}

} // namespace dyson
