// Command-line front end: evaluate strategy profiles, compute best
// responses, solve for equilibria, run grid sweeps, and execute the
// invariant check suites. JSON goes to stdout (or --out); sweeps emit CSV.
//
// Exit codes: 0 success, 1 check-suite failure, 2 validation error,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psg/check.hpp"
#include "psg/equilibrium.hpp"
#include "psg/io.hpp"
#include "psg/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string& flag,
                                  const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliError(flag + ": cannot parse '" + item + "' as a number");
    }
  }
  return values;
}

struct CommonOptions {
  std::string prior_text;
  double rho = 1.0;
  int encoder_grid = 100;
  int decoder_grid = 20;
  std::string tie_break_text = "lex";
  double tol = 1e-9;
  std::string out_path;
  std::string format = "json";
};

void add_common_flags(CLI::App* cmd, CommonOptions* opts, bool needs_prior) {
  auto* prior = cmd->add_option("--prior", opts->prior_text,
                                "Joint prior a,b,c or a,b,c,d");
  if (needs_prior) prior->required();
  cmd->add_option("--rho", opts->rho, "Privacy weight (>= 0)");
  cmd->add_option("--encoder-grid", opts->encoder_grid,
                  "Encoder grid resolution (>= 2)");
  cmd->add_option("--decoder-grid", opts->decoder_grid,
                  "Decoder grid resolution (>= 2)");
  cmd->add_option("--tie-break", opts->tie_break_text,
                  "Tie-break policy: lex or seed:<N>");
  cmd->add_option("--tol", opts->tol, "Comparison tolerance in (0, 1e-3]");
  cmd->add_option("--out", opts->out_path, "Output path (default stdout)");
  cmd->add_option("--format", opts->format, "Output format: json or csv");
}

psg::JointPrior parse_prior(const CommonOptions& opts) {
  const std::vector<double> v = parse_numbers("--prior", opts.prior_text);
  if (v.size() == 3) return psg::make_prior(v[0], v[1], v[2]);
  if (v.size() == 4) return psg::make_prior(v[0], v[1], v[2], v[3]);
  throw CliError("--prior expects 3 or 4 comma-separated values");
}

psg::TieBreak parse_tie_break(const CommonOptions& opts) {
  if (opts.tie_break_text == "lex") return psg::TieBreak::lexicographic();
  if (opts.tie_break_text.rfind("seed:", 0) == 0) {
    try {
      return psg::TieBreak::seeded(std::stoull(opts.tie_break_text.substr(5)));
    } catch (const std::exception&) {
      throw CliError("--tie-break: bad seed in '" + opts.tie_break_text + "'");
    }
  }
  throw CliError("--tie-break must be 'lex' or 'seed:<N>'");
}

void validate_grids_and_tol(const CommonOptions& opts) {
  if (opts.encoder_grid < 2) throw CliError("--encoder-grid must be >= 2");
  if (opts.decoder_grid < 2) throw CliError("--decoder-grid must be >= 2");
  if (!(opts.tol > 0.0 && opts.tol <= 1e-3)) {
    throw CliError("--tol must lie in (0, 1e-3]");
  }
}

psg::EncoderStrategy parse_encoder(const std::string& text) {
  const std::vector<double> v = parse_numbers("--enc", text);
  if (v.size() == 2) return psg::symmetric_encoder(v[0], v[1]);
  if (v.size() == 4) return psg::general_encoder(v[0], v[1], v[2], v[3]);
  throw CliError("--enc expects 2 (symmetric) or 4 (general) values");
}

psg::DecoderYStrategy parse_decoder_y(const std::string& text) {
  const std::vector<double> v = parse_numbers("--dec-y", text);
  if (v.size() != 2) throw CliError("--dec-y expects 2 values");
  return psg::make_decoder_y(v[0], v[1]);
}

psg::DecoderXStrategy parse_decoder_x(const std::string& text) {
  const std::vector<double> v = parse_numbers("--dec-x", text);
  if (v.size() != 2) throw CliError("--dec-x expects 2 values");
  return psg::make_decoder_x(v[0], v[1]);
}

void write_output(const CommonOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output path: " + opts.out_path);
  file << payload;
  if (!file) throw IoError("write failed: " + opts.out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary privacy signaling game solver"};
  app.require_subcommand(1);

  CommonOptions eval_opts;
  std::string eval_enc, eval_dy, eval_dx;
  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate a strategy profile");
  add_common_flags(cmd_eval, &eval_opts, true);
  cmd_eval->add_option("--enc", eval_enc, "Encoder kappa1,kappa2[,kappa3,kappa4]")
      ->required();
  cmd_eval->add_option("--dec-y", eval_dy, "Decoder-y delta1,delta2")->required();
  cmd_eval->add_option("--dec-x", eval_dx, "Decoder-x eps1,eps2")->required();

  CommonOptions br_opts;
  std::string br_player, br_enc, br_dy, br_dx;
  CLI::App* cmd_br =
      app.add_subcommand("best-response", "Best response for one player");
  add_common_flags(cmd_br, &br_opts, true);
  cmd_br->add_option("--player", br_player,
                     "encoder, decoder-y, or decoder-x")
      ->required();
  cmd_br->add_option("--enc", br_enc, "Encoder kappa1,kappa2 (decoder players)");
  cmd_br->add_option("--dec-y", br_dy, "Decoder-y delta1,delta2 (encoder player)");
  cmd_br->add_option("--dec-x", br_dx, "Decoder-x eps1,eps2 (encoder player)");

  CommonOptions stack_opts;
  CLI::App* cmd_stack =
      app.add_subcommand("stackelberg", "Leader-commitment equilibrium");
  add_common_flags(cmd_stack, &stack_opts, true);

  CommonOptions nash_opts;
  CLI::App* cmd_nash =
      app.add_subcommand("nash", "Pure simultaneous-move equilibria");
  add_common_flags(cmd_nash, &nash_opts, true);

  CommonOptions sweep_opts;
  std::string sweep_dy, sweep_dx;
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "Payoff surface over the encoder grid (CSV)");
  add_common_flags(cmd_sweep, &sweep_opts, true);
  cmd_sweep->add_option("--dec-y", sweep_dy,
                        "Fix decoder-y (otherwise best response)");
  cmd_sweep->add_option("--dec-x", sweep_dx,
                        "Fix decoder-x (otherwise best response)");

  CommonOptions hist_opts;
  std::string hist_player = "encoder";
  CLI::App* cmd_hist =
      app.add_subcommand("br-hist", "Best-response histograms over grids");
  add_common_flags(cmd_hist, &hist_opts, true);
  cmd_hist->add_option("--player", hist_player, "encoder or decoder");

  CommonOptions check_opts;
  long check_trials = 1000;
  std::uint64_t check_seed = 42;
  CLI::App* cmd_check =
      app.add_subcommand("check", "Run the invariant suites");
  add_common_flags(cmd_check, &check_opts, false);
  cmd_check->add_option("--trials", check_trials, "Trials per randomized suite");
  cmd_check->add_option("--seed", check_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (cmd_eval->parsed()) {
      validate_grids_and_tol(eval_opts);
      const psg::PayoffPair pp = psg::evaluate_profile(
          parse_prior(eval_opts), parse_encoder(eval_enc),
          parse_decoder_y(eval_dy), parse_decoder_x(eval_dx),
          psg::make_privacy_weight(eval_opts.rho));
      write_output(eval_opts, psg::payoff_json(pp));
    } else if (cmd_br->parsed()) {
      validate_grids_and_tol(br_opts);
      const psg::JointPrior prior = parse_prior(br_opts);
      const psg::TieBreak tb = parse_tie_break(br_opts);
      psg::BestResponse br;
      if (br_player == "encoder") {
        if (br_dy.empty() || br_dx.empty()) {
          throw CliError("--player encoder needs --dec-y and --dec-x");
        }
        br = psg::encoder_best_response(prior, parse_decoder_y(br_dy),
                                        parse_decoder_x(br_dx),
                                        psg::make_privacy_weight(br_opts.rho),
                                        tb);
      } else if (br_player == "decoder-y" || br_player == "decoder-x") {
        if (br_enc.empty()) {
          throw CliError("--player " + br_player + " needs --enc");
        }
        const psg::EncoderStrategy enc = parse_encoder(br_enc);
        br = br_player == "decoder-y"
                 ? psg::decoder_y_best_response(prior, enc, tb)
                 : psg::decoder_x_best_response(prior, enc);
      } else {
        throw CliError("--player must be encoder, decoder-y, or decoder-x");
      }
      write_output(br_opts, psg::best_response_json(br_player, br));
    } else if (cmd_stack->parsed() || cmd_nash->parsed()) {
      CommonOptions& opts = cmd_stack->parsed() ? stack_opts : nash_opts;
      validate_grids_and_tol(opts);
      const psg::JointPrior prior = parse_prior(opts);
      const psg::PrivacyWeight rho = psg::make_privacy_weight(opts.rho);
      const psg::TieBreak tb = parse_tie_break(opts);
      const psg::EquilibriumResult result =
          cmd_stack->parsed() ? psg::stackelberg_solve(prior, rho, tb)
                              : psg::nash_solve(prior, rho, tb);
      write_output(opts, psg::equilibrium_json(result));
    } else if (cmd_sweep->parsed()) {
      validate_grids_and_tol(sweep_opts);
      const psg::JointPrior prior = parse_prior(sweep_opts);
      std::optional<psg::oracle::FixedFollower> fixed;
      if (!sweep_dy.empty() || !sweep_dx.empty()) {
        if (sweep_dy.empty() || sweep_dx.empty()) {
          throw CliError("fixed sweeps need both --dec-y and --dec-x");
        }
        fixed = psg::oracle::FixedFollower{parse_decoder_y(sweep_dy),
                                           parse_decoder_x(sweep_dx)};
      }
      const std::vector<psg::oracle::SweepRow> rows = psg::oracle::payoff_surface(
          prior, psg::make_privacy_weight(sweep_opts.rho),
          sweep_opts.encoder_grid, fixed);
      write_output(sweep_opts, psg::sweep_csv(rows));
    } else if (cmd_hist->parsed()) {
      validate_grids_and_tol(hist_opts);
      const psg::JointPrior prior = parse_prior(hist_opts);
      const psg::TieBreak tb = parse_tie_break(hist_opts);
      if (hist_player == "encoder") {
        const psg::oracle::Histogram hist = psg::oracle::grid_encoder_br_histogram(
            prior, psg::make_privacy_weight(hist_opts.rho),
            hist_opts.decoder_grid, tb);
        write_output(hist_opts, psg::histogram_json(hist));
      } else if (hist_player == "decoder") {
        const psg::oracle::DecoderBrHistograms hists =
            psg::oracle::grid_decoder_br_histograms(prior,
                                                    hist_opts.encoder_grid, tb);
        if (hist_opts.format == "csv") {
          write_output(hist_opts, psg::epsilon_map_csv(hists));
        } else {
          write_output(hist_opts, psg::decoder_histograms_json(hists));
        }
      } else {
        throw CliError("--player must be encoder or decoder");
      }
    } else if (cmd_check->parsed()) {
      validate_grids_and_tol(check_opts);
      if (check_trials < 1) throw CliError("--trials must be >= 1");
      psg::CheckConfig config;
      config.trials = check_trials;
      config.seed = check_seed;
      config.tol = check_opts.tol;
      bool all_passed = true;
      std::string report;
      for (const psg::SuiteResult& suite : psg::run_check_suites(config)) {
        report += std::string(suite.passed ? "[PASS] " : "[FAIL] ") +
                  suite.name + ": " + suite.detail + "\n";
        all_passed = all_passed && suite.passed;
      }
      write_output(check_opts, report);
      if (!all_passed) return kExitCheckFailed;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const psg::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
