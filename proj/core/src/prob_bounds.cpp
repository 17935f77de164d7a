#include "tpart/prob_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "tpart/rng.hpp"

namespace tpart {

BoundResult hoeffding_bound(double eta1, double eta2) {
  if (!(eta2 > 0) || !(eta1 > 4 * eta2)) throw std::invalid_argument("hoeffding_bound: requires eta1 > 4*eta2 > 0");
  double log_b = -eta1 / (8 * eta2);
  return {std::exp(log_b), log_b, eta2};
}

BoundResult markov_bound(double eta, long long r) {
  if (!(eta > 0) || !(eta < 1)) throw std::invalid_argument("markov_bound: requires 0 < eta < 1");
  if (r < 0) throw std::invalid_argument("markov_bound: requires r >= 0");
  return {eta, std::log(eta), (1 - eta) * static_cast<double>(r)};
}

BoundResult chernoff_bound(double mu, double delta, Tail tail) {
  if (!(mu >= 0)) throw std::invalid_argument("chernoff_bound: requires mu >= 0");
  if (!(delta >= 0) || !(delta <= 1)) throw std::invalid_argument("chernoff_bound: requires 0 <= delta <= 1");
  double denom = tail == Tail::lower ? 2.0 : 3.0;
  double log_b = -delta * delta * mu / denom;
  double thr = tail == Tail::lower ? (1 - delta) * mu : (1 + delta) * mu;
  return {std::exp(log_b), log_b, thr};
}

Scenario Scenario::make_hoeffding(std::vector<double> m, double ell, double eta1, double eta2, double p) {
  double sum = 0;
  for (double x : m) {
    if (x < 0 || x > eta2 * ell) throw std::invalid_argument("scenario: m_j outside [0, eta2*ell]");
    sum += x;
  }
  if (sum < eta1 * ell) throw std::invalid_argument("scenario: sum of m_j below eta1*ell");
  if (p < 0.5) throw std::invalid_argument("scenario: success probability below 1/2");
  Scenario s;
  s.kind = Kind::hoeffding;
  s.m = std::move(m);
  s.ell = ell;
  s.eta1 = eta1;
  s.eta2 = eta2;
  s.p = p;
  return s;
}

Scenario Scenario::make_markov(long long r, double eta) {
  Scenario s;
  s.kind = Kind::markov;
  s.r = r;
  s.eta = eta;
  return s;
}

Scenario Scenario::make_chernoff(int n, double p, double delta, Tail tail) {
  Scenario s;
  s.kind = tail == Tail::lower ? Kind::chernoff_lower : Kind::chernoff_upper;
  s.bin_n = n;
  s.bin_p = p;
  s.delta = delta;
  return s;
}

BoundResult Scenario::analytic() const {
  switch (kind) {
    case Kind::hoeffding:
      return hoeffding_bound(eta1, eta2);
    case Kind::markov:
      return markov_bound(eta, r);
    case Kind::chernoff_lower:
      return chernoff_bound(static_cast<double>(bin_n) * bin_p, delta, Tail::lower);
    case Kind::chernoff_upper:
    default:
      return chernoff_bound(static_cast<double>(bin_n) * bin_p, delta, Tail::upper);
  }
}

double monte_carlo_validate(const Scenario& sc, long long trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_validate: trials must be >= 1");
  long long failures = 0;
  for (long long tr = 0; tr < trials; ++tr) {
    Rng rng(substream(seed, static_cast<uint64_t>(tr)));
    switch (sc.kind) {
      case Scenario::Kind::hoeffding: {
        double x = 0;
        for (double mj : sc.m)
          if (rng.uniform() < sc.p) x += mj;
        if (x < sc.eta2 * sc.ell) ++failures;
        break;
      }
      case Scenario::Kind::markov: {
        double q = 1 - sc.eta * sc.eta;
        long long x = 0;
        for (long long i = 0; i < sc.r; ++i)
          if (rng.uniform() < q) ++x;
        if (static_cast<double>(x) < (1 - sc.eta) * static_cast<double>(sc.r)) ++failures;
        break;
      }
      case Scenario::Kind::chernoff_lower:
      case Scenario::Kind::chernoff_upper: {
        long long x = 0;
        for (int i = 0; i < sc.bin_n; ++i)
          if (rng.uniform() < sc.bin_p) ++x;
        double mu = static_cast<double>(sc.bin_n) * sc.bin_p;
        if (sc.kind == Scenario::Kind::chernoff_lower) {
          if (static_cast<double>(x) <= (1 - sc.delta) * mu) ++failures;
        } else {
          if (static_cast<double>(x) >= (1 + sc.delta) * mu) ++failures;
        }
        break;
      }
    }
  }
  return static_cast<double>(failures) / static_cast<double>(trials);
}

}  // namespace tpart
