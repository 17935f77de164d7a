#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tpart {

/// Runtime constants for the partition pipeline. Absolute literals of the
/// original formulas (degree multipliers, reservoir fractions, ...) are
/// profile fields so that verification stays meaningful at small scale;
/// the "paper" preset restores the literal values.
struct ConstantsProfile {
  std::string name = "custom";

  double rho = 6;
  double sigma1 = 64;
  double sigma2 = 8;
  double sigma3 = 2;
  double tau1 = 32;
  double tau2 = 8;
  double tau3 = 2;

  // Scaled absolute literals.
  double degree_mult_small = 4;      // 10^11 in the full-scale formulas
  double degree_mult_big = 8;        // 10^12
  double class_reservoir_div = 4;    // eligible reservoir: n/4
  double block_reservoir_div = 10;   // per-block reservoir: n/10
  double part_reservoir_div = 100;   // per-part reservoir: n/100
  double extend_reservoir_div = 1000;  // extension reservoir: n/1000
  double z_set_mult = 2;             // 10^10 multiplier on |Z|
  double z_degree_mult = 4;          // 100 multiplier on kt

  // Derived cascade.
  double phi0() const { return tau1 / 4; }
  double phi1() const { return phi0() / (64 * rho); }
  double phi2() const { return phi1() / (16384 * rho * rho); }
  double phi3() const { return phi2() / (16384 * rho * rho); }
  double phi() const { return 16 * sigma3; }

  /// True iff the preset matches the full-scale constants.
  bool paper_faithful() const;

  /// Violated separation assumptions (tau1 >> tau2 >> tau3 >> rho, sigmas),
  /// reported as human-readable warnings; never silently assumed.
  std::vector<std::string> warnings() const;

  static ConstantsProfile desk();
  static ConstantsProfile paper();
};

/// Integer count threshold for a real bound like phi1*k*t: values below one
/// vertex clamp to 1 (recorded via `clamped` when given).
int count_threshold(double x, bool* clamped = nullptr);

void to_json(nlohmann::json& j, const ConstantsProfile& p);
void from_json(const nlohmann::json& j, ConstantsProfile& p);

}  // namespace tpart
