#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tpart/availability.hpp"
#include "tpart/completion.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/generators.hpp"
#include "tpart/oracle.hpp"
#include "tpart/prob_bounds.hpp"
#include "tpart/profile.hpp"

using nlohmann::json;
using namespace tpart;

namespace {

[[noreturn]] void die(const std::string& error, const std::string& detail) {
  json j{{"error", error}, {"detail", detail}};
  std::cerr << j.dump() << "\n";
  std::exit(1);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die("io", "cannot open " + path + " for writing");
  out << content;
}

ConstantsProfile load_profile(const std::string& spec) {
  if (spec.empty() || spec == "desk") return ConstantsProfile::desk();
  if (spec == "paper") return ConstantsProfile::paper();
  std::ifstream in(spec);
  if (!in) die("io", "cannot read profile " + spec);
  ConstantsProfile p;
  try {
    json j;
    in >> j;
    p = j.get<ConstantsProfile>();
  } catch (const std::exception& e) {
    die("profile", e.what());
  }
  return p;
}

json witness_json(const CutWitness& w) {
  json j;
  j["kind"] = w.kind == CutWitness::Kind::too_few_vertices ? "too_few_vertices" : "separator";
  j["separator"] = w.separator.universe() ? w.separator.to_vector() : std::vector<Vertex>{};
  j["separated_pair"] = {w.separated_pair.first, w.separated_pair.second};
  return j;
}

json failure_json(const StageFailure& f, const StageLog& log) {
  json j{{"version", 1},
         {"error", "stage-failure"},
         {"stage", f.stage},
         {"needed", f.needed},
         {"achieved", f.achieved},
         {"rounds", f.rounds},
         {"detail", f.detail}};
  j["transcript"] = json::array();
  for (const auto& e : log)
    j["transcript"].push_back({{"stage", e.stage}, {"round", e.round}, {"status", e.status}, {"detail", e.detail}});
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament partition toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a tournament");
  std::string model = "uniform", out_path;
  int n = 0, k = 1, t = 2;
  uint64_t seed = 1;
  int max_tries = 1000;
  gen->add_option("--model", model)->check(CLI::IsMember({"uniform", "rotational", "kconn"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k);
  gen->add_option("--seed", seed);
  gen->add_option("--max-tries", max_tries);
  gen->add_option("-o,--output", out_path);

  // conn
  auto* conn = app.add_subcommand("conn", "connectivity of a tournament");
  std::string in_path;
  std::optional<int> conn_k;
  bool want_witness = false;
  conn->add_option("file", in_path)->required();
  conn->add_option("--k", conn_k);
  conn->add_flag("--witness", want_witness);

  // partition
  auto* part = app.add_subcommand("partition", "partition into k-connected parts");
  std::string prof_spec = "desk";
  int max_rounds = 16;
  part->add_option("file", in_path)->required();
  part->add_option("--k", k)->required();
  part->add_option("--t", t)->required();
  part->add_option("--profile", prof_spec);
  part->add_option("--seed", seed);
  part->add_option("--max-rounds", max_rounds);
  part->add_option("-o,--output", out_path);

  // verify
  auto* ver = app.add_subcommand("verify", "verify a partition certificate");
  std::string cert_path;
  ver->add_option("certificate", cert_path)->required();
  ver->add_option("file", in_path)->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "exhaustive partition search");
  long long budget = 10000;
  orc->add_option("file", in_path)->required();
  orc->add_option("--k", k)->required();
  orc->add_option("--t", t)->required();
  orc->add_option("--budget", budget);

  // experiment
  auto* exp = app.add_subcommand("experiment", "threshold experiment table");
  int seeds = 10;
  std::string mode = "exact";
  exp->add_option("--n", n)->required();
  exp->add_option("--k", k)->required();
  exp->add_option("--t", t)->required();
  exp->add_option("--seeds", seeds)->required();
  exp->add_option("--budget", budget);
  exp->add_option("--seed", seed);
  exp->add_option("--mode", mode)->check(CLI::IsMember({"exact", "pipeline"}));
  exp->add_option("--profile", prof_spec);
  exp->add_option("-o,--output", out_path);

  // bounds
  auto* bnd = app.add_subcommand("bounds", "analytic concentration bounds");
  std::string bound_kind, tail = "lower";
  double eta1 = 0, eta2 = 0, eta = 0, mu = 0, delta = 0;
  long long r = 0;
  bnd->add_option("kind", bound_kind)->required()->check(CLI::IsMember({"hoeffding", "markov", "chernoff"}));
  bnd->add_option("--eta1", eta1);
  bnd->add_option("--eta2", eta2);
  bnd->add_option("--eta", eta);
  bnd->add_option("--r", r);
  bnd->add_option("--mu", mu);
  bnd->add_option("--delta", delta);
  bnd->add_option("--tail", tail)->check(CLI::IsMember({"lower", "upper"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Tournament trn;
      if (model == "uniform") {
        trn = random_tournament(n, seed);
      } else if (model == "rotational") {
        trn = rotational_tournament(n);
      } else {
        auto r2 = random_k_connected(n, k, seed, max_tries);
        if (!r2.tournament) die("generation", "no k-connected tournament found in " + std::to_string(r2.tries) + " tries");
        trn = *r2.tournament;
      }
      write_output(out_path, to_trn(trn));
      return 0;
    }

    if (*conn) {
      Tournament trn = read_trn_file(in_path);
      if (!conn_k) {
        std::cout << connectivity(trn) << "\n";
        return 0;
      }
      CutWitness w;
      bool ok = is_k_connected(trn, *conn_k, &w);
      json j{{"version", 1}, {"k", *conn_k}, {"k_connected", ok}};
      if (!ok && want_witness) j["witness"] = witness_json(w);
      std::cout << j.dump() << "\n";
      return ok ? 0 : 1;
    }

    if (*part) {
      ConstantsProfile prof = load_profile(prof_spec);
      if (prof.name == "paper")
        die("infeasible",
            "the full-scale profile needs more than 2*sigma1*k*t vertices, beyond any real input; use the desk "
            "profile or a custom one");
      Tournament trn = read_trn_file(in_path);
      StageLog log;
      auto res = partition_tournament(trn, k, t, prof, seed, max_rounds, &log);
      if (!res.ok()) {
        std::cerr << failure_json(res.failure, log).dump() << "\n";
        return 1;
      }
      write_output(out_path, certificate_to_json(*res.value).dump(2) + "\n");
      return 0;
    }

    if (*ver) {
      Tournament trn = read_trn_file(in_path);
      std::ifstream in(cert_path);
      if (!in) die("io", "cannot read " + cert_path);
      json j;
      in >> j;
      int ck = j.at("k");
      std::vector<VertexSet> parts;
      for (const auto& pv : j.at("parts")) parts.push_back(VertexSet::of(trn.size(), pv.get<std::vector<Vertex>>()));
      PartitionReport rep = verify_partition(trn, parts, ck);
      json out{{"version", 1}, {"valid", rep.valid}, {"disjoint", rep.disjoint}, {"covers", rep.covers}};
      out["failing_parts"] = json::array();
      for (const auto& f : rep.failures)
        out["failing_parts"].push_back({{"part", f.part_index}, {"witness", witness_json(f.witness)}});
      std::cout << out.dump() << "\n";
      return rep.valid ? 0 : 1;
    }

    if (*orc) {
      Tournament trn = read_trn_file(in_path);
      OracleResult res = bruteforce_partition(trn, k, t, budget);
      json j{{"version", 1}, {"elapsed_ms", res.elapsed_ms}};
      if (res.status == OracleResult::Status::found) {
        j["status"] = "found";
        j["parts"] = json::array();
        for (const auto& p : res.parts) j["parts"].push_back(p.to_vector());
        bool confirmed = verify_partition(trn, res.parts, k).valid;
        j["verified"] = confirmed;
        std::cout << j.dump() << "\n";
        return confirmed ? 0 : 1;
      }
      j["status"] = res.status == OracleResult::Status::none ? "none" : "timeout";
      j["searched_fraction"] = res.searched_fraction;
      std::cout << j.dump() << "\n";
      return res.status == OracleResult::Status::none ? 0 : 3;
    }

    if (*exp) {
      ConstantsProfile prof = load_profile(prof_spec);
      auto rows = threshold_experiment(n, k, t, seeds, budget, seed,
                                       mode == "exact" ? ExperimentMode::exact : ExperimentMode::pipeline, prof);
      write_output(out_path, experiment_csv(rows));
      return 0;
    }

    if (*bnd) {
      BoundResult b;
      if (bound_kind == "hoeffding")
        b = hoeffding_bound(eta1, eta2);
      else if (bound_kind == "markov")
        b = markov_bound(eta, r);
      else
        b = chernoff_bound(mu, delta, tail == "lower" ? Tail::lower : Tail::upper);
      json j{{"version", 1}, {"bound", b.bound}, {"log_bound", b.log_bound}, {"threshold", b.threshold}};
      std::cout << j.dump() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    die("exception", e.what());
  }
  return 1;
}
