#pragma once

#include <cstdint>
#include <vector>

namespace tpart {

struct BoundResult {
  double bound;      // probability in [0, 1] (may underflow to 0)
  double log_bound;  // natural log of the bound, exact in log-space
  double threshold;  // the event boundary the bound concerns
};

enum class Tail { lower, upper };

/// Failure bound exp(-eta1/8*eta2) for X < eta2*l, where X is a sum of
/// independent variables taking values 0 or m_j with m_j <= eta2*l,
/// sum m_j >= eta1*l and success probability >= 1/2 each.
/// Requires eta1 > 4*eta2 > 0.
BoundResult hoeffding_bound(double eta1, double eta2);

/// For independent 0,1-variables with Pr[X_i = 1] >= 1 - eta^2:
/// Pr[sum >= (1-eta)r] >= 1 - eta. Requires 0 < eta < 1, r >= 0.
BoundResult markov_bound(double eta, long long r);

/// Pr[X <= (1-d)mu] <= exp(-d^2 mu/2); Pr[X >= (1+d)mu] <= exp(-d^2 mu/3).
/// Requires mu >= 0 and 0 <= delta <= 1.
BoundResult chernoff_bound(double mu, double delta, Tail tail);

/// Monte Carlo scenario matching one of the bound calculators; used to
/// validate that empirical failure frequency never exceeds the bound.
struct Scenario {
  enum class Kind { hoeffding, markov, chernoff_lower, chernoff_upper };
  Kind kind;

  // hoeffding: variables take values 0 or m[j] with success probability p.
  std::vector<double> m;
  double ell = 0;
  double eta1 = 0, eta2 = 0;
  double p = 0.5;

  // markov: r variables, success probability exactly 1 - eta^2.
  long long r = 0;
  double eta = 0;

  // chernoff: X ~ Binomial(bin_n, bin_p), mu = bin_n * bin_p.
  int bin_n = 0;
  double bin_p = 0;
  double delta = 0;

  static Scenario make_hoeffding(std::vector<double> m, double ell, double eta1, double eta2, double p = 0.5);
  static Scenario make_markov(long long r, double eta);
  static Scenario make_chernoff(int n, double p, double delta, Tail tail);

  /// The analytic bound this scenario validates.
  BoundResult analytic() const;
};

/// Empirical failure frequency over `trials` seeded trials; deterministic
/// per seed. Requires trials >= 1.
double monte_carlo_validate(const Scenario& sc, long long trials, uint64_t seed);

}  // namespace tpart
