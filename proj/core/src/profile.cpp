#include "tpart/profile.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace tpart {

bool ConstantsProfile::paper_faithful() const {
  return rho == 1e4 && sigma1 == 1e60 && sigma2 == 1e4 && sigma3 == 10 && tau1 >= 100 * tau2 && tau2 >= 100 * tau3 &&
         tau3 >= 100 * std::max({rho, sigma2, sigma3});
}

std::vector<std::string> ConstantsProfile::warnings() const {
  std::vector<std::string> w;
  auto sep = [&](double big, double small, const std::string& msg) {
    if (!(big >= 100 * small)) w.push_back(msg);
  };
  sep(tau1, tau2, "tau1 is not well separated from tau2 (expected tau1 >> tau2)");
  sep(tau2, tau3, "tau2 is not well separated from tau3 (expected tau2 >> tau3)");
  sep(tau3, rho, "tau3 is not well separated from rho (expected tau3 >> rho)");
  sep(tau3, sigma2, "tau3 is not well separated from sigma2 (expected tau3 >> sigma2)");
  sep(tau3, sigma3, "tau3 is not well separated from sigma3 (expected tau3 >> sigma3)");
  if (!(tau1 >= rho * sigma1)) w.push_back("tau1 < rho*sigma1: the disjoint-path stage is not guaranteed");
  if (phi3() < 1) w.push_back("phi3 is below one vertex; cascade thresholds clamp to 1");
  return w;
}

ConstantsProfile ConstantsProfile::desk() {
  ConstantsProfile p;
  p.name = "desk";
  return p;  // defaults are the desk values
}

ConstantsProfile ConstantsProfile::paper() {
  ConstantsProfile p;
  p.name = "paper";
  p.rho = 1e4;
  p.sigma1 = 1e60;
  p.sigma2 = 1e4;
  p.sigma3 = 10;
  p.tau1 = 1e80;
  p.tau2 = 1e75;
  p.tau3 = 1e70;
  p.degree_mult_small = 1e11;
  p.degree_mult_big = 1e12;
  p.class_reservoir_div = 4;
  p.block_reservoir_div = 10;
  p.part_reservoir_div = 100;
  p.extend_reservoir_div = 1000;
  p.z_set_mult = 1e10;
  p.z_degree_mult = 100;
  return p;
}

int count_threshold(double x, bool* clamped) {
  if (x < 1) {
    if (clamped) *clamped = true;
    return 1;
  }
  if (clamped) *clamped = false;
  double c = std::ceil(x);
  if (c > 1e9) return 1000000000;  // saturate; such thresholds are unmeetable anyway
  return static_cast<int>(c);
}

void to_json(nlohmann::json& j, const ConstantsProfile& p) {
  j = nlohmann::json{{"name", p.name},
                     {"rho", p.rho},
                     {"sigma1", p.sigma1},
                     {"sigma2", p.sigma2},
                     {"sigma3", p.sigma3},
                     {"tau1", p.tau1},
                     {"tau2", p.tau2},
                     {"tau3", p.tau3},
                     {"degree_mult_small", p.degree_mult_small},
                     {"degree_mult_big", p.degree_mult_big},
                     {"class_reservoir_div", p.class_reservoir_div},
                     {"block_reservoir_div", p.block_reservoir_div},
                     {"part_reservoir_div", p.part_reservoir_div},
                     {"extend_reservoir_div", p.extend_reservoir_div},
                     {"z_set_mult", p.z_set_mult},
                     {"z_degree_mult", p.z_degree_mult}};
}

void from_json(const nlohmann::json& j, ConstantsProfile& p) {
  p = ConstantsProfile{};
  if (j.contains("name")) j.at("name").get_to(p.name);
  auto opt = [&](const char* key, double& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  opt("rho", p.rho);
  opt("sigma1", p.sigma1);
  opt("sigma2", p.sigma2);
  opt("sigma3", p.sigma3);
  opt("tau1", p.tau1);
  opt("tau2", p.tau2);
  opt("tau3", p.tau3);
  opt("degree_mult_small", p.degree_mult_small);
  opt("degree_mult_big", p.degree_mult_big);
  opt("class_reservoir_div", p.class_reservoir_div);
  opt("block_reservoir_div", p.block_reservoir_div);
  opt("part_reservoir_div", p.part_reservoir_div);
  opt("extend_reservoir_div", p.extend_reservoir_div);
  opt("z_set_mult", p.z_set_mult);
  opt("z_degree_mult", p.z_degree_mult);
}

}  // namespace tpart
