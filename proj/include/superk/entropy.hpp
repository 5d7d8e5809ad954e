#pragma once

#include <stdexcept>

#include "superk/distribution.hpp"
#include "superk/efflog.hpp"

namespace superk {

/// Thrown when a relative entropy is requested with q(x) = 0 somewhere
/// p(x) > 0.
struct support_error : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultSeriesTerms = 30;

/// H_kind(p) = -sum_x p(x) eff_log(kind, p(x)); zero-probability outcomes
/// contribute 0 (their limit value).
double entropy(LogKind kind, const Distribution& p);

/// Series form -sum_x sum_{k=1..k_max} s_k [p ln p]^k / k!.
double entropy_series(LogKind kind, const Distribution& p,
                      int k_max = kDefaultSeriesTerms);

/// Relative entropy with the source sign convention:
///   H(p||q) = -sum p eff_log(kind, p) + sum p eff_log(kind, q).
/// For kind Natural this equals -KL(p||q). p and q must share the outcome
/// list; q(x) = 0 with p(x) > 0 raises support_error.
double rel_entropy(LogKind kind, const Distribution& p, const Distribution& q);

/// Literal double-series variant:
///   -sum_x sum_k s_k [p ln p]^k/k!  +  sum_x sum_k s_k [p ln q]^k/k!.
double rel_entropy_series(LogKind kind, const Distribution& p,
                          const Distribution& q,
                          int k_max = kDefaultSeriesTerms);

struct PerturbationGap {
  double entropy_gap;  // |H(p) - H(p')|
  double l1_distance;  // sum |p - p'|
};

/// Numerical continuity probe: entropy gap next to the l1 distance between
/// two distributions over the same outcomes.
PerturbationGap perturbation_gap(LogKind kind, const Distribution& p,
                                 const Distribution& p_prime);

}  // namespace superk
