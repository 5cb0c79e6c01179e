#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "psg/check.hpp"
#include "psg/equilibrium.hpp"
#include "psg/oracle.hpp"

using namespace psg;
using oracle::DecoderBrHistograms;
using oracle::Histogram;
using oracle::NashOracleResult;
using oracle::SweepRow;

namespace {

const JointPrior kStudyPrior = make_prior(0.3, 0.1, 0.2, 0.4);
const std::set<std::string> kExtremeKeys = {"00", "01", "10", "11"};

bool support_within_extremes(const Histogram& hist) {
  for (const auto& [key, count] : hist.counts) {
    if (count > 0 && kExtremeKeys.count(key) == 0) return false;
  }
  return true;
}

std::set<std::string> support(const Histogram& hist) {
  std::set<std::string> keys;
  for (const auto& [key, count] : hist.counts) {
    if (count > 0) keys.insert(key);
  }
  return keys;
}

}  // namespace

TEST_CASE("tiny encoder histogram only ever picks extremes") {
  const Histogram hist = oracle::grid_encoder_br_histogram_serial(
      kStudyPrior, PrivacyWeight{1.0}, 2, TieBreak::seeded(3));
  CHECK(hist.trials == 16);
  std::uint64_t total = 0;
  for (const auto& [key, count] : hist.counts) total += count;
  CHECK(total == hist.trials);
  CHECK(support_within_extremes(hist));
}

TEST_CASE("smoke-scale histograms reproduce the support structure") {
  const Histogram enc_hist = oracle::grid_encoder_br_histogram_serial(
      kStudyPrior, PrivacyWeight{1.0}, 8, TieBreak::seeded(5));
  CHECK(enc_hist.trials == 4096);
  CHECK(support_within_extremes(enc_hist));

  const DecoderBrHistograms dec = oracle::grid_decoder_br_histograms_serial(
      kStudyPrior, 8, TieBreak::seeded(5));
  CHECK(dec.delta_hist.trials == 64);
  CHECK(support(dec.delta_hist) == std::set<std::string>{"01", "10"});
  const std::set<std::string> eps = support(dec.epsilon_hist);
  CHECK(eps.count("11") == 0);
}

TEST_CASE("parallel kernels match their serial references") {
  const TieBreak tb = TieBreak::seeded(17);
  const Histogram enc_serial = oracle::grid_encoder_br_histogram_serial(
      kStudyPrior, PrivacyWeight{1.5}, 5, tb);
  const Histogram enc_parallel =
      oracle::grid_encoder_br_histogram(kStudyPrior, PrivacyWeight{1.5}, 5, tb);
  CHECK(enc_serial.trials == enc_parallel.trials);
  CHECK(enc_serial.counts == enc_parallel.counts);

  const DecoderBrHistograms dec_serial =
      oracle::grid_decoder_br_histograms_serial(kStudyPrior, 23, tb);
  const DecoderBrHistograms dec_parallel =
      oracle::grid_decoder_br_histograms(kStudyPrior, 23, tb);
  CHECK(dec_serial.delta_hist.counts == dec_parallel.delta_hist.counts);
  CHECK(dec_serial.epsilon_hist.counts == dec_parallel.epsilon_hist.counts);
  CHECK(dec_serial.epsilon_map == dec_parallel.epsilon_map);

  const std::vector<SweepRow> surf_serial = oracle::payoff_surface_serial(
      kStudyPrior, PrivacyWeight{2.0}, 31, std::nullopt);
  const std::vector<SweepRow> surf_parallel = oracle::payoff_surface(
      kStudyPrior, PrivacyWeight{2.0}, 31, std::nullopt);
  REQUIRE(surf_serial.size() == surf_parallel.size());
  for (std::size_t i = 0; i < surf_serial.size(); ++i) {
    REQUIRE(surf_serial[i].encoder_payoff == surf_parallel[i].encoder_payoff);
    REQUIRE(surf_serial[i].mutual_info == surf_parallel[i].mutual_info);
  }
}

TEST_CASE("zero weight restricts winners to information maximizers") {
  const Histogram hist = oracle::grid_encoder_br_histogram_serial(
      kStudyPrior, PrivacyWeight{0.0}, 4, TieBreak::seeded(11));
  // With any informative decoder the information maximizers are 01 and 10;
  // blind decoder rows tie all four. Winners must stay inside the encoder
  // best-response optima for every tuple, so in aggregate the support is all
  // four labels but 01/10 dominate.
  CHECK(support_within_extremes(hist));
  std::uint64_t informative = 0;
  std::uint64_t total = 0;
  for (const auto& [key, count] : hist.counts) {
    total += count;
    if (key == "01" || key == "10") informative += count;
  }
  CHECK(total == 256);
  CHECK(informative > total / 2);
}

TEST_CASE("epsilon decision map agrees with the closed-form table") {
  const int n = 30;
  const DecoderBrHistograms dec = oracle::grid_decoder_br_histograms_serial(
      kStudyPrior, n, TieBreak::seeded(19));
  REQUIRE(dec.epsilon_map.size() == static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const EncoderStrategy enc = symmetric_encoder(
          static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1));
      const BestResponse br = decoder_x_best_response(kStudyPrior, enc);
      REQUIRE(dec.epsilon_map[static_cast<std::size_t>(i) * n + j] ==
              br.chosen);
    }
  }
}

TEST_CASE("payoff surface rows satisfy the payoff identities") {
  const std::vector<SweepRow> rows = oracle::payoff_surface_serial(
      kStudyPrior, PrivacyWeight{2.0}, 2, std::nullopt);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].kappa1 == 0.0);
  CHECK(rows[3].kappa1 == 1.0);
  for (const SweepRow& row : rows) {
    CHECK(row.encoder_payoff == row.mutual_info + 2.0 * row.distortion);
    CHECK(row.decoder_payoff == row.mutual_info - row.distortion);
  }
}

TEST_CASE("best-response surface peaks at the revealing corners") {
  const std::vector<SweepRow> rows = oracle::payoff_surface(
      kStudyPrior, PrivacyWeight{2.0}, 101, std::nullopt);
  REQUIRE(rows.size() == 10201);
  double best = 0.0;
  for (const SweepRow& row : rows) best = std::max(best, row.encoder_payoff);
  CHECK(best == doctest::Approx(1.6).epsilon(1e-9));
  std::set<std::pair<double, double>> argmax;
  for (const SweepRow& row : rows) {
    if (row.encoder_payoff > best - 1e-9) {
      argmax.insert({row.kappa1, row.kappa2});
    }
  }
  CHECK(argmax == std::set<std::pair<double, double>>{{0.0, 1.0}, {1.0, 0.0}});
  for (const SweepRow& row : rows) {
    if (row.kappa1 == 0.0 && row.kappa2 == 1.0) {
      CHECK(row.mutual_info == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(row.distortion == doctest::Approx(0.3).epsilon(1e-12));
    }
  }
}

TEST_CASE("fixed-follower surface uses the given decoders") {
  const oracle::FixedFollower fixed{DecoderYStrategy{0.5, 0.5},
                                    DecoderXStrategy{0.0, 0.0}};
  for (const SweepRow& row : oracle::payoff_surface_serial(
           kStudyPrior, PrivacyWeight{1.0}, 5, fixed)) {
    CHECK(row.mutual_info <= 1e-12);
    CHECK(row.distortion == doctest::Approx(0.4).epsilon(1e-12));
  }
}

TEST_CASE("deviation oracle rejects every profile on the study prior") {
  const NashOracleResult result =
      oracle::nash_oracle(kStudyPrior, PrivacyWeight{1.0}, 21);
  CHECK_FALSE(result.exists);
  CHECK(result.profiles.empty());
}

TEST_CASE("deviation oracle finds the two known profiles") {
  const NashOracleResult result =
      oracle::nash_oracle(make_prior(0.1, 0.2, 0.3, 0.4), PrivacyWeight{1.0}, 21);
  REQUIRE(result.exists);
  const std::set<std::pair<ExtremeLabel, ExtremeLabel>> profiles(
      result.profiles.begin(), result.profiles.end());
  CHECK(profiles == std::set<std::pair<ExtremeLabel, ExtremeLabel>>{
                        {ExtremeLabel::b01, ExtremeLabel::b00},
                        {ExtremeLabel::b10, ExtremeLabel::b00}});
}

TEST_CASE("the uniform prior keeps only the informative rows") {
  // With equal priors x and y are independent, so the uninformative encoder
  // rows 00/11 are strictly improved by switching to 01/10 (one extra bit);
  // the eight informative-row profiles survive at rho = 1 because their
  // distortion is 1/2 in every column.
  const NashOracleResult result = oracle::nash_oracle(
      make_prior(0.25, 0.25, 0.25, 0.25), PrivacyWeight{1.0}, 9);
  REQUIRE(result.exists);
  std::set<std::pair<ExtremeLabel, ExtremeLabel>> expected;
  for (ExtremeLabel row : {ExtremeLabel::b01, ExtremeLabel::b10}) {
    for (ExtremeLabel col : kExtremeLabels) expected.insert({row, col});
  }
  CHECK(std::set<std::pair<ExtremeLabel, ExtremeLabel>>(
            result.profiles.begin(), result.profiles.end()) == expected);
}

TEST_CASE("solvers agree with the grid oracles over random instances") {
  std::mt19937_64 rng(51);
  const TieBreak lex = TieBreak::lexicographic();
  int verdict_mismatches = 0;
  double worst_gap = 0.0;
  for (int t = 0; t < 100; ++t) {
    const JointPrior prior = random_prior(rng);
    if (is_uniform(prior)) continue;
    for (double rho : {0.5, 1.0, 2.0, 20.0}) {
      const PrivacyWeight w{rho};
      const bool solver_exists = !nash_solve(prior, w, lex).profiles.empty();
      if (solver_exists != oracle::nash_oracle(prior, w, 9).exists) {
        ++verdict_mismatches;
      }
      const EquilibriumResult stack = stackelberg_solve(prior, w, lex);
      for (const SweepRow& row :
           oracle::payoff_surface(prior, w, 41, std::nullopt)) {
        worst_gap = std::max(worst_gap,
                             row.encoder_payoff -
                                 stack.profiles.front().payoffs.encoder_payoff);
      }
    }
  }
  CHECK(verdict_mismatches == 0);
  CHECK(worst_gap < 1e-6);
}
