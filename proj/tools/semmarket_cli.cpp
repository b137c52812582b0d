// Copyright 2026 The semmarket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// semmarket: command-line front end.
//
// Exit codes: 0 success, 1 property or contract failure, 2 usage error.
// Market settings resolve as: command-line flag > config file > default,
// where the config file comes from --config or $SEMMARKET_CONFIG and the
// default is the instance's own config (or the built-in one for
// `generate`).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semmarket/auction/vcg.hpp"
#include "semmarket/experiments.hpp"
#include "semmarket/instance_io.hpp"
#include "semmarket/scenario.hpp"
#include "semmarket/semval.hpp"
#include "semmarket/verification.hpp"

namespace sm = semmarket;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::string config_path;
  std::optional<std::int32_t> channels;
  std::optional<std::string> mode;
  std::optional<double> channel_cost;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, const char* channels_flag) {
  cmd->add_option("--config", f.config_path, "JSON file with market settings (partial allowed)")
      ->envname("SEMMARKET_CONFIG");
  cmd->add_option(channels_flag, f.channels, "Channel budget B")->check(CLI::NonNegativeNumber);
  cmd->add_option("--mode", f.mode, "Welfare mode")
      ->check(CLI::IsMember({"literal", "value_aware"}));
  cmd->add_option("--channel-cost", f.channel_cost, "Fixed channel cost paid by the provider")
      ->check(CLI::NonNegativeNumber);
}

sm::MarketConfig resolve_config(sm::MarketConfig base, const ConfigFlags& f) {
  if (!f.config_path.empty()) base = sm::merge_config(base, sm::read_json_file(f.config_path));
  if (f.channels) base.num_channels = *f.channels;
  if (f.mode) base.welfare_mode = sm::parse_welfare_mode(*f.mode);
  if (f.channel_cost) base.channel_cost = *f.channel_cost;
  return base;
}

// Bids depend on these settings; the auction settings (B, mode, channel
// cost) do not.
bool same_bid_inputs(const sm::MarketConfig& a, const sm::MarketConfig& b) {
  return a.channel_rate_kbps == b.channel_rate_kbps &&
         a.freshness_threshold_s == b.freshness_threshold_s && a.w_min == b.w_min &&
         a.value_size_basis == b.value_size_basis;
}

std::string num(double x) { return sm::format_double(x); }

std::string id_list(const std::vector<sm::DeviceId>& ids) {
  std::string out;
  for (auto id : ids) out += (out.empty() ? "" : " ") + std::to_string(id);
  return out;
}

void require_valid(const sm::Instance& instance, const std::string& what) {
  const auto report = sm::validate_instance(instance);
  if (report.ok()) return;
  std::string msg = what + " is not a valid instance:";
  for (const auto& v : report.violations) msg += "\n  " + v;
  throw sm::ContractViolation(msg);
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::int32_t n = 0;
  std::uint64_t seed = 42;
  std::string out;
  std::string profiles;
  bool wide_demand = false;
  ConfigFlags config;
};

int run_generate(const GenerateArgs& a) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const sm::MarketConfig config = resolve_config(sm::default_market_config(0), a.config);
  const sm::ProfileTable profiles =
      a.profiles.empty() ? sm::default_profile_table() : sm::read_profile_table(a.profiles);
  const sm::Instance instance =
      sm::generate_population(a.n, a.seed, config, profiles,
                              a.wide_demand ? sm::GeneratorParams::wide_demand()
                                            : sm::GeneratorParams{});
  require_valid(instance, "generated population");
  sm::write_instance(instance, a.out);

  std::int64_t demanded = 0;
  for (const auto& b : *instance.bids) demanded += b.channel_demand;
  std::cout << "wrote " << a.out << ": N=" << instance.devices.size()
            << ", channels demanded " << demanded << ", B=" << config.num_channels
            << ", mode " << sm::to_string(config.welfare_mode) << "\n";
  return kOk;
}

// ---- auction ---------------------------------------------------------------

struct AuctionArgs {
  std::string instance;
  std::string solver = "exact_dp";
  std::string transmission = "semantic";
  std::string json_out;
  bool payments = false;
  bool no_payments = false;
  ConfigFlags config;
};

int run_auction(const AuctionArgs& a) {
  const sm::SolverKind solver = sm::parse_solver_kind(a.solver);
  if (a.payments && !sm::is_exact(solver))
    throw UsageError("payments require an exact solver; " + a.solver +
                     " outcomes carry no payments");
  const bool with_payments = sm::is_exact(solver) && !a.no_payments;

  const sm::Instance instance = sm::read_instance(a.instance);
  require_valid(instance, a.instance);
  sm::Instance effective = instance;
  effective.config = resolve_config(instance.config, a.config);

  const auto mode = sm::parse_transmission(a.transmission);
  std::vector<sm::SealedBid> bids;
  if (mode == sm::Transmission::semantic && instance.bids &&
      same_bid_inputs(instance.config, effective.config))
    bids = *instance.bids;
  else
    bids = sm::derive_bids(effective, mode);

  const auto book = sm::make_bid_book<double>(bids);
  const auto params = sm::params_from<double>(effective.config);
  const auto outcome = sm::to_outcome(sm::settle(book, params, solver, with_payments));

  std::cout << "solver " << a.solver << ", mode " << sm::to_string(params.mode) << ", B "
            << params.budget << ", transmission " << a.transmission << ", N " << bids.size()
            << "\n";
  if (outcome.winners.empty()) {
    std::cout << "no winners\n";
  } else {
    std::cout << "winners: " << id_list(outcome.winners) << "\n";
    std::cout << "device,bid,value,channels" << (outcome.has_payments() ? ",payment,utility" : "")
              << "\n";
    for (auto k : outcome.winners) {
      const auto& b = bids[static_cast<std::size_t>(k)];
      std::cout << k << ',' << num(b.bid) << ',' << num(b.semantic_value) << ','
                << b.channel_demand;
      if (outcome.has_payments())
        std::cout << ',' << num(outcome.payments[k]) << ',' << num(outcome.device_utilities[k]);
      std::cout << "\n";
    }
  }
  std::cout << "social welfare " << num(outcome.social_welfare) << "\n";
  if (outcome.has_payments())
    std::cout << "provider utility " << num(outcome.vsp_utility) << "\n";
  else if (!sm::is_exact(solver))
    std::cout << "note: no payments; VCG payments need the exact optimum and " << a.solver
              << " does not guarantee it\n";

  if (!a.json_out.empty()) sm::write_text_file(a.json_out, sm::to_json(outcome).dump(2) + "\n");
  return kOk;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::string which;
  std::string range;
  std::string out;
  std::string instance;
  std::string fixture = "gap";
  std::uint64_t seed = 42;
  std::int32_t n = 20;
  std::int32_t group1_objects = 3;
  std::int32_t group2_objects = 1;
  std::string profiles;
};

int run_experiment(const ExperimentArgs& a) {
  std::string csv;
  std::string range_text = a.range;
  if (a.which == "solver-gap") {
    if (range_text.empty()) range_text = "5:40:5";
    const sm::Instance instance = !a.instance.empty() ? sm::read_instance(a.instance)
                                  : a.fixture == "drop" ? sm::winner_drop_fixture()
                                                        : sm::solver_gap_fixture();
    require_valid(instance, "experiment instance");
    csv = sm::to_csv(sm::solver_gap_sweep(instance, sm::parse_budget_range(range_text)));
  } else if (a.which == "transmission") {
    if (range_text.empty()) range_text = "10:40";
    if (a.n < 1) throw UsageError("--n must be at least 1");
    const sm::Instance instance = !a.instance.empty()
                                      ? sm::read_instance(a.instance)
                                      : sm::generate_population(a.n, a.seed,
                                                                sm::default_market_config(0));
    require_valid(instance, "experiment instance");
    csv = sm::to_csv(sm::transmission_compare(instance, sm::parse_budget_range(range_text)));
  } else {
    if (range_text.empty()) range_text = "3:21:3";
    if (a.group1_objects < 0 || a.group2_objects < 0)
      throw UsageError("object counts must be non-negative");
    const sm::ProfileTable profiles =
        a.profiles.empty() ? sm::default_profile_table() : sm::read_profile_table(a.profiles);
    csv = sm::to_csv(sm::winner_list_experiment(sm::parse_budget_range(range_text),
                                                a.group1_objects, a.group2_objects, profiles));
  }

  if (a.out.empty() || a.out == "-") {
    std::cout << csv;
  } else {
    sm::write_text_file(a.out, csv);
    const auto rows = std::count(csv.begin(), csv.end(), '\n') - 1;
    std::cout << "wrote " << a.out << ": " << a.which << ", B " << range_text << ", " << rows
              << " rows\n";
  }
  return kOk;
}

// ---- fixture ---------------------------------------------------------------

int run_fixture(const std::string& name, const std::string& out) {
  const sm::Instance instance = name == "solver-gap"    ? sm::solver_gap_fixture()
                                : name == "winner-drop" ? sm::winner_drop_fixture()
                                                        : sm::table1_fixture();
  sm::write_instance(instance, out);
  std::cout << "wrote " << out << ": " << name << ", N=" << instance.devices.size() << ", B="
            << instance.config.num_channels << "\n";
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  int trials = 100;
  std::uint64_t seed = 7;
  std::int32_t n_max = 12;
  std::int32_t budget_max = 40;
  std::string out_dir = ".";
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.n_max > sm::kBruteForceMaxBidders)
    throw UsageError("refusing --n-max " + std::to_string(a.n_max) +
                     ": brute-force oracle is limited to N <= " +
                     std::to_string(sm::kBruteForceMaxBidders));
  if (a.n_max < 1 || a.trials < 0 || a.budget_max < 0)
    throw UsageError("--n-max must be >= 1; --trials and --budget-max must be >= 0");

  sm::VerificationOptions options;
  options.trials = a.trials;
  options.seed = a.seed;
  options.n_max = a.n_max;
  options.budget_max = a.budget_max;
  if (a.inject_fault) {
    // Pay-as-bid: the winner receives exactly its reward plus its bid.
    options.payment_rule = [](Eigen::Index k, const sm::BidBookd& book,
                              const sm::AuctionParams<double>&, const sm::Allocation&,
                              sm::SolverKind) { return book.value(k) + book.bid(k); };
  }
  const auto r = sm::run_verification(options);

  std::cout << "instances " << r.instances << " (seed " << a.seed << ", N <= " << a.n_max
            << ", B <= " << a.budget_max << ")\n"
            << "oracle: " << (r.oracle_failures ? "FAIL" : "ok") << " (" << r.oracle_failures
            << " mismatches)\n"
            << "ic: " << (r.ic_failures ? "FAIL" : "ok") << " (" << r.deviations
            << " deviations, max gain " << num(r.max_ic_gain) << ")\n"
            << "ir: " << (r.ir_failures ? "FAIL" : "ok") << " (" << r.winners
            << " winners, min utility " << num(r.min_winner_utility) << ", identity error "
            << num(r.max_ir_identity_error) << ")\n";
  if (r.passed()) return kOk;

  const auto& cx = *r.counterexample;
  const std::filesystem::path path =
      std::filesystem::path(a.out_dir) / ("counterexample-" + cx.suite + ".json");
  std::filesystem::create_directories(a.out_dir);
  sm::write_instance(cx.instance, path);
  std::cout << "counterexample (" << cx.suite << "): " << cx.detail << "\n"
            << "instance written to " << path.string() << "\n";
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic data market: VCG reverse auction over wireless channels"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a random device population");
  generate->add_option("--n", gen.n, "Number of devices")->required();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output instance JSON")->required();
  generate->add_option("--profiles", gen.profiles, "Algorithm profile table JSON");
  generate->add_flag("--wide-demand", gen.wide_demand, "Use 1-60 kb semantic payloads");
  add_config_flags(generate, gen.config, "--channels");

  AuctionArgs auc;
  auto* auction = app.add_subcommand("auction", "Run one auction round on an instance");
  auction->add_option("--instance", auc.instance, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  auction->add_option("--solver", auc.solver, "Winner determination solver")
      ->check(CLI::IsMember({"exact_dp", "branch_bound", "greedy", "brute_force"}))
      ->capture_default_str();
  auction->add_option("--transmission", auc.transmission, "What devices send")
      ->check(CLI::IsMember({"semantic", "raw"}))
      ->capture_default_str();
  auction->add_option("--json", auc.json_out, "Write the outcome as JSON");
  auto* pay = auction->add_flag("--payments", auc.payments, "Require VCG payments");
  auction->add_flag("--no-payments", auc.no_payments, "Skip payment computation")
      ->excludes(pay);
  add_config_flags(auction, auc.config, "--B");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a budget sweep and write CSV");
  experiment->add_option("which", exp.which, "solver-gap | transmission | winner-list")
      ->required()
      ->check(CLI::IsMember({"solver-gap", "transmission", "winner-list"}));
  experiment->add_option("--b", exp.range, "Budget range start:stop[:step]");
  experiment->add_option("--out", exp.out, "Output CSV (stdout if omitted)");
  experiment->add_option("--instance", exp.instance, "Instance JSON instead of the default")
      ->check(CLI::ExistingFile);
  experiment->add_option("--fixture", exp.fixture, "solver-gap fixture")
      ->check(CLI::IsMember({"gap", "drop"}))
      ->capture_default_str();
  experiment->add_option("--seed", exp.seed, "transmission: population seed")
      ->capture_default_str();
  experiment->add_option("--n", exp.n, "transmission: population size")->capture_default_str();
  experiment->add_option("--group1-objects", exp.group1_objects, "winner-list: objects per group-1 scene")
      ->capture_default_str();
  experiment->add_option("--group2-objects", exp.group2_objects, "winner-list: objects per group-2 scene")
      ->capture_default_str();
  experiment->add_option("--profiles", exp.profiles, "winner-list: algorithm profile table JSON");

  std::string fixture_name;
  std::string fixture_out;
  auto* fixture = app.add_subcommand("fixture", "Write one of the built-in fixtures");
  fixture->add_option("name", fixture_name, "solver-gap | winner-drop | table1")
      ->required()
      ->check(CLI::IsMember({"solver-gap", "winner-drop", "table1"}));
  fixture->add_option("--out", fixture_out, "Output instance JSON")->required();

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Randomized oracle, IC and IR audits");
  verify->add_option("--trials", ver.trials, "Number of random instances")->capture_default_str();
  verify->add_option("--seed", ver.seed, "RNG seed")->capture_default_str();
  verify->add_option("--n-max", ver.n_max, "Largest N drawn")->capture_default_str();
  verify->add_option("--budget-max", ver.budget_max, "Largest B drawn")->capture_default_str();
  verify->add_option("--out-dir", ver.out_dir, "Where counterexamples are written")
      ->capture_default_str();
  verify->add_flag("--inject-payment-fault", ver.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*auction) return run_auction(auc);
    if (*experiment) return run_experiment(exp);
    if (*verify) return run_verify(ver);
    if (*fixture) return run_fixture(fixture_name, fixture_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
