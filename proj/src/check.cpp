#include "psg/check.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "psg/analysis.hpp"
#include "psg/best_response.hpp"
#include "psg/equilibrium.hpp"
#include "psg/objectives.hpp"
#include "psg/oracle.hpp"

namespace psg {

namespace {

double uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

// Interior point of the (p1, p2, q1) domain with margins wide enough for
// stable finite differences.
struct MassPoint {
  double p1, p2, q1;
};

MassPoint random_interior_masses(std::mt19937_64& rng) {
  const double q1 = 0.15 + 0.7 * uniform01(rng);
  const double p1 = 0.05 + (q1 - 0.1) * uniform01(rng);
  const double p2 = 0.05 + (1.0 - q1 - 0.1) * uniform01(rng);
  return {p1, p2, q1};
}

// Profile whose induced masses sit away from every boundary, so the
// curvature matrices are finite and finite differences are well-conditioned.
struct InteriorProfile {
  JointPrior prior;
  EncoderStrategy enc;
  DecoderYStrategy dy;
};

InteriorProfile random_interior_profile(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    double raw[4];
    double sum = 0.0;
    for (double& v : raw) {
      v = 0.05 + uniform01(rng);
      sum += v;
    }
    const JointPrior prior =
        make_prior(raw[0] / sum, raw[1] / sum, raw[2] / sum, raw[3] / sum);
    const double d1 = uniform01(rng);
    double d2 = uniform01(rng);
    if (std::abs(d1 - d2) < 0.2) continue;
    const EncoderStrategy enc = symmetric_encoder(0.1 + 0.8 * uniform01(rng),
                                                  0.1 + 0.8 * uniform01(rng));
    const DecoderYStrategy dy{d1, d2};
    const DerivedQuantities dq =
        derived_quantities(prior, enc, dy, DecoderXStrategy{});
    const double margin =
        std::min({dq.p1, dq.q1 - dq.p1, dq.p2, (1.0 - dq.q1) - dq.p2,
                  dq.p1 + dq.p2, 1.0 - (dq.p1 + dq.p2)});
    if (margin > 0.01) return {prior, enc, dy};
  }
  throw std::runtime_error("failed to sample an interior profile");
}

SuiteResult suite_oracle_equivalence(const CheckConfig& config) {
  std::mt19937_64 rng(config.seed ^ 0x1);
  double worst = 0.0;
  for (long t = 0; t < config.trials; ++t) {
    const JointPrior prior = random_prior(rng);
    const EncoderStrategy enc = random_general_encoder(rng);
    const DecoderYStrategy dy = random_decoder_y(rng);
    worst = std::max(worst, std::abs(mutual_information(prior, enc, dy) -
                                     mutual_information_oracle(prior, enc, dy)));
  }
  return {"closed-form-vs-oracle", worst < config.tol,
          "max |closed - oracle| = " + fmt(worst) + " over " +
              std::to_string(config.trials) + " trials"};
}

SuiteResult suite_psd(const CheckConfig& config) {
  double min_eig = 0.0;
  double min_diag = 1e300;
  // 0.02-step grid over the strictly interior (q1, p1, p2) domain.
  for (int qi = 1; qi < 50; ++qi) {
    const double q1 = 0.02 * qi;
    for (int i = 1; 0.02 * i < q1 - 1e-12; ++i) {
      const double p1 = 0.02 * i;
      for (int j = 1; 0.02 * j < 1.0 - q1 - 1e-12; ++j) {
        const double p2 = 0.02 * j;
        const Matrix2 h = hessian_I_in_P(p1, p2, q1);
        min_eig = std::min(min_eig, symmetric_eigenvalues(h)[0]);
        min_diag = std::min({min_diag, h.m11, h.m22});
      }
    }
  }
  // Pushed-forward curvature at random interior profiles.
  std::mt19937_64 rng(config.seed ^ 0x2);
  const long trials = std::min(config.trials, 500L);
  for (long t = 0; t < trials; ++t) {
    const InteriorProfile ip = random_interior_profile(rng);
    const Matrix2 h = hessian_I_in_kappa(ip.prior, ip.enc, ip.dy);
    min_eig = std::min(min_eig, symmetric_eigenvalues(h)[0]);
  }
  const bool ok = min_eig >= -config.tol && min_diag > 0.0;
  return {"hessian-psd", ok,
          "min eigenvalue = " + fmt(min_eig) + ", min diagonal = " +
              fmt(min_diag)};
}

SuiteResult suite_finite_difference(const CheckConfig& config) {
  std::mt19937_64 rng(config.seed ^ 0x3);
  const long trials = std::min(config.trials, 100L);
  double worst_grad = 0.0;
  for (long t = 0; t < trials; ++t) {
    const MassPoint mp = random_interior_masses(rng);
    const std::array<double, 2> g = grad_I_in_P(mp.p1, mp.p2, mp.q1);
    const double h = 1e-5;
    const double fd1 = (mutual_information_from_masses(mp.p1 + h, mp.p2, mp.q1) -
                        mutual_information_from_masses(mp.p1 - h, mp.p2, mp.q1)) /
                       (2.0 * h);
    const double fd2 = (mutual_information_from_masses(mp.p1, mp.p2 + h, mp.q1) -
                        mutual_information_from_masses(mp.p1, mp.p2 - h, mp.q1)) /
                       (2.0 * h);
    worst_grad = std::max({worst_grad, std::abs(fd1 - g[0]),
                           std::abs(fd2 - g[1])});
  }

  double worst_hess = 0.0;
  for (long t = 0; t < trials; ++t) {
    const InteriorProfile ip = random_interior_profile(rng);
    const Matrix2 an = hessian_I_in_kappa(ip.prior, ip.enc, ip.dy);
    const double h = 1e-4;
    const double k1 = ip.enc.kappa1();
    const double k2 = ip.enc.kappa2();
    const auto f = [&](double u, double v) {
      return mutual_information(ip.prior, symmetric_encoder(u, v), ip.dy);
    };
    const double f0 = f(k1, k2);
    const double fd11 = (f(k1 + h, k2) - 2.0 * f0 + f(k1 - h, k2)) / (h * h);
    const double fd22 = (f(k1, k2 + h) - 2.0 * f0 + f(k1, k2 - h)) / (h * h);
    const double fd12 = (f(k1 + h, k2 + h) - f(k1 + h, k2 - h) -
                         f(k1 - h, k2 + h) + f(k1 - h, k2 - h)) /
                        (4.0 * h * h);
    const auto rel = [](double fd, double an_value) {
      return std::abs(fd - an_value) / std::max(1.0, std::abs(an_value));
    };
    worst_hess = std::max({worst_hess, rel(fd11, an.m11), rel(fd22, an.m22),
                           rel(fd12, an.m12)});
  }
  const bool ok = worst_grad < 1e-6 && worst_hess < 1e-4;
  return {"finite-difference", ok,
          "max gradient error = " + fmt(worst_grad) +
              ", max relative curvature error = " + fmt(worst_hess)};
}

SuiteResult suite_best_response(const CheckConfig& config) {
  std::mt19937_64 rng(config.seed ^ 0x4);
  const long trials = std::min(config.trials, 200L);
  const TieBreak lex = TieBreak::lexicographic();
  double worst_margin = 0.0;   // grid payoff above best extreme
  double worst_equal = 0.0;    // |I(01) - I(10)| and table-vs-min mismatch
  for (long t = 0; t < trials; ++t) {
    const JointPrior prior = random_prior(rng);
    const DecoderYStrategy dy = random_decoder_y(rng);
    const DecoderXStrategy dx = random_decoder_x(rng);
    const PrivacyWeight rho{4.0 * uniform01(rng)};

    const BestResponse enc_br = encoder_best_response(prior, dy, dx, rho, lex);
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const EncoderStrategy enc =
            symmetric_encoder((i + 0.5) / 50.0, (j + 0.5) / 50.0);
        const double value =
            evaluate_profile(prior, enc, dy, dx, rho).encoder_payoff;
        worst_margin = std::max(worst_margin, value - enc_br.value);
      }
    }

    const EncoderStrategy enc =
        symmetric_encoder(uniform01(rng), uniform01(rng));
    worst_equal = std::max(
        worst_equal,
        std::abs(mutual_information(prior, enc, DecoderYStrategy{0.0, 1.0}) -
                 mutual_information(prior, enc, DecoderYStrategy{1.0, 0.0})));
    const BestResponse dec_x = decoder_x_best_response(prior, enc);
    const DerivedQuantities dq =
        derived_quantities(prior, enc, DecoderYStrategy{}, DecoderXStrategy{});
    const double closed_min =
        std::min({prior.a + prior.b, prior.c + prior.d, dq.theta,
                  1.0 - dq.theta});
    worst_equal = std::max(worst_equal, std::abs(dec_x.value - closed_min));
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const DecoderXStrategy probe{(i + 0.5) / 50.0, (j + 0.5) / 50.0};
        worst_margin = std::max(
            worst_margin, dec_x.value - hamming_distortion(prior, enc, probe));
      }
    }
  }
  const bool ok = worst_margin < config.tol && worst_equal < 1e-12;
  return {"best-response-extremality", ok,
          "max grid improvement = " + fmt(worst_margin) +
              ", max identity error = " + fmt(worst_equal)};
}

SuiteResult suite_solver_vs_oracle(const CheckConfig& config) {
  std::mt19937_64 rng(config.seed ^ 0x5);
  const TieBreak lex = TieBreak::lexicographic();
  const std::array<double, 4> rhos = {0.5, 1.0, 2.0, 20.0};

  long mismatches = 0;
  double worst_gap = 0.0;
  const long grid_trials = std::min(config.trials, 100L);
  for (long t = 0; t < grid_trials; ++t) {
    const JointPrior prior = random_prior(rng);
    if (is_uniform(prior)) continue;
    for (double rho : rhos) {
      const PrivacyWeight w{rho};
      const EquilibriumResult nash = nash_solve(prior, w, lex);
      const oracle::NashOracleResult ground = oracle::nash_oracle(prior, w, 9);
      if (ground.exists != !nash.profiles.empty()) ++mismatches;

      const EquilibriumResult stack = stackelberg_solve(prior, w, lex);
      double best_row = 0.0;
      for (const oracle::SweepRow& row :
           oracle::payoff_surface(prior, w, 41, std::nullopt)) {
        best_row = std::max(best_row, row.encoder_payoff);
      }
      worst_gap = std::max(
          worst_gap, best_row - stack.profiles.front().payoffs.encoder_payoff);
    }
  }

  // Existence against the closed-form condition, and the shared-strategy
  // property between the two solution concepts.
  long condition_mismatches = 0;
  long coincidence_failures = 0;
  for (long t = 0; t < config.trials; ++t) {
    const JointPrior prior = random_prior(rng);
    if (is_uniform(prior)) continue;
    const PrivacyWeight w{1.0};
    const double mass0 = prior.a + prior.b;
    const double mass1 = prior.c + prior.d;
    const double min_pair =
        std::min({mass0, mass1, prior.a + prior.d, prior.b + prior.c});
    const bool closed_form_exists =
        mass0 <= min_pair + kTieTol || mass1 <= min_pair + kTieTol;
    const EquilibriumResult nash = nash_solve(prior, w, lex);
    if (closed_form_exists != !nash.profiles.empty()) ++condition_mismatches;
    if (!nash.profiles.empty()) {
      const EquilibriumResult stack = stackelberg_solve(prior, w, lex);
      for (const EquilibriumProfile& np : nash.profiles) {
        bool contained = false;
        for (const EquilibriumProfile& sp : stack.profiles) {
          const bool same_encoder = sp.encoder_label.has_value() &&
                                    *sp.encoder_label == *np.encoder_label;
          const bool eps_included =
              std::find(sp.decoder_x_ties.begin(), sp.decoder_x_ties.end(),
                        np.decoder_x) != sp.decoder_x_ties.end();
          if (same_encoder && eps_included) contained = true;
        }
        if (!contained) ++coincidence_failures;
      }
    }
  }

  const bool ok = mismatches == 0 && worst_gap < 1e-6 &&
                  condition_mismatches == 0 && coincidence_failures == 0;
  return {"solver-vs-oracle", ok,
          std::to_string(mismatches) + " oracle mismatches, " +
              std::to_string(condition_mismatches) + " condition mismatches, " +
              std::to_string(coincidence_failures) +
              " coincidence failures, max surface gap = " + fmt(worst_gap)};
}

}  // namespace

JointPrior random_prior(std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  double raw[4];
  double sum = 0.0;
  for (double& v : raw) {
    v = exp1(rng);
    sum += v;
  }
  return make_prior(raw[0] / sum, raw[1] / sum, raw[2] / sum, raw[3] / sum);
}

EncoderStrategy random_general_encoder(std::mt19937_64& rng) {
  return general_encoder(uniform01(rng), uniform01(rng), uniform01(rng),
                         uniform01(rng));
}

DecoderYStrategy random_decoder_y(std::mt19937_64& rng) {
  return {uniform01(rng), uniform01(rng)};
}

DecoderXStrategy random_decoder_x(std::mt19937_64& rng) {
  return {uniform01(rng), uniform01(rng)};
}

std::vector<SuiteResult> run_check_suites(const CheckConfig& config) {
  return {suite_oracle_equivalence(config), suite_psd(config),
          suite_finite_difference(config), suite_best_response(config),
          suite_solver_vs_oracle(config)};
}

}  // namespace psg
