#pragma once

#include <memory>
#include <variant>

#include "dyson/interval.hpp"

namespace dyson {

// Parameter bundle for all samplers: interaction exponent alpha, inverse
// temperature beta, cluster weight q, sprinkling strength delta.
struct ModelParams {
    double alpha = 1.5;
    double beta = 0.0;
    double q = 1.0;
    double delta = 0.0;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const ModelParams& p);

struct DysonProb {
    double beta;
    double alpha;
};
struct ConstantProb {
    double p;
};
class EdgeProbFn;
struct RestrictedProb {
    std::shared_ptr<const EdgeProbFn> inner;
    Interval window; // probability forced to 0 unless both endpoints lie here
};

// Edge probability as a function of a vertex pair. dyson(beta, alpha) is
// p(ij) = 1 - exp(-beta |i-j|^-alpha).
class EdgeProbFn {
  public:
    EdgeProbFn(DysonProb d);      // NOLINT(google-explicit-constructor)
    EdgeProbFn(ConstantProb c);   // NOLINT(google-explicit-constructor)
    EdgeProbFn(RestrictedProb r); // NOLINT(google-explicit-constructor)

    const std::variant<DysonProb, ConstantProb, RestrictedProb>& variant() const {
        return v_;
    }

  private:
    std::variant<DysonProb, ConstantProb, RestrictedProb> v_;
};

EdgeProbFn dyson_prob(double beta, double alpha);
EdgeProbFn constant_prob(double p);
EdgeProbFn restricted_prob(EdgeProbFn inner, Interval window);

// Probability of the pair {i, j}; throws "self-loop" when i == j.
double edge_prob(const EdgeProbFn& f, Vertex i, Vertex j);

// Flattened view used by the distance-major sampler: a distance-homogeneous
// core plus the window where it applies (the full support for unrestricted
// functions).
struct FlatProb {
    bool is_dyson; // else constant
    double beta = 0, alpha = 0, p = 0;
    Interval window; // pairs outside have probability 0
    double prob_at(Vertex dist) const;
    // log(1 - p_d); -inf when p_d == 1, 0 when p_d == 0.
    double log_one_minus_at(Vertex dist) const;
};
FlatProb flatten(const EdgeProbFn& f, Interval domain);

} // namespace dyson
