#include "psg/equilibrium.hpp"

#include <algorithm>
#include <cmath>

namespace psg {

namespace {

constexpr double kDedupTol = 1e-12;

EquilibriumProfile make_profile(const JointPrior& prior, double k1, double k2,
                                std::optional<ExtremeLabel> enc_label,
                                PrivacyWeight rho, const TieBreak& tb,
                                std::uint64_t salt) {
  const EncoderStrategy enc = symmetric_encoder(k1, k2);
  EquilibriumProfile p;
  p.kappa1 = k1;
  p.kappa2 = k2;
  p.encoder_label = enc_label;
  p.decoder_y_class = {ExtremeLabel::b01, ExtremeLabel::b10};
  p.decoder_y = p.decoder_y_class[tb.pick(2, salt)];
  const BestResponse xr = decoder_x_best_response(prior, enc);
  p.decoder_x = xr.chosen;
  p.decoder_x_ties = xr.optima;
  const auto [d1, d2] = label_coords(p.decoder_y);
  const auto [e1, e2] = label_coords(p.decoder_x);
  p.payoffs = evaluate_profile(prior, enc, DecoderYStrategy{d1, d2},
                               DecoderXStrategy{e1, e2}, rho);
  return p;
}

}  // namespace

std::string to_string(GameKind kind) {
  return kind == GameKind::stackelberg ? "Stackelberg" : "Nash";
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::c1: return "C1";
    case CaseLabel::c2_small_rho: return "C2-small-rho";
    case CaseLabel::c2_large_rho: return "C2-large-rho";
    case CaseLabel::no_pure_nash: return "NoPureNash";
    case CaseLabel::degenerate_uniform: return "DegenerateUniform";
  }
  return "?";
}

NormalFormTable normal_form_table(const JointPrior& prior, PrivacyWeight rho) {
  const double mass0 = prior.a + prior.b;
  const double mass1 = prior.c + prior.d;
  const double cross10 = prior.a + prior.d;  // distortion of (01, 10) cell
  const double cross01 = prior.b + prior.c;  // distortion of (01, 01) cell
  const double m = binary_entropy(std::clamp(mass0, 0.0, 1.0)) +
                   xlog2(prior.a) + xlog2(prior.b) + xlog2(prior.c) +
                   xlog2(prior.d);
  const double r = rho.rho;

  NormalFormTable table;
  table.m_constant = m;
  auto& cells = table.cells;
  // Rows 00 and 11 lose m bits of information; their distortion columns are
  // the 01/10 rows mirrored.
  cells[0] = {{{m + r * mass0, mass0},
               {m, 0.0},
               {m + r, 1.0},
               {m + r * mass1, mass1}}};
  cells[1] = {{{r * mass0, mass0},
               {r * cross01, cross01},
               {r * cross10, cross10},
               {r * mass1, mass1}}};
  cells[2] = {{{r * mass0, mass0},
               {r * cross10, cross10},
               {r * cross01, cross01},
               {r * mass1, mass1}}};
  cells[3] = {{{m + r * mass0, mass0},
               {m + r, 1.0},
               {m, 0.0},
               {m + r * mass1, mass1}}};
  return table;
}

EquilibriumResult nash_solve(const JointPrior& prior, PrivacyWeight rho,
                             const TieBreak& tb) {
  EquilibriumResult result;
  result.kind = GameKind::nash;
  if (is_uniform(prior)) {
    result.case_label = CaseLabel::degenerate_uniform;
    return result;
  }

  const NormalFormTable table = normal_form_table(prior, rho);
  std::array<double, 4> col_max{};
  std::array<double, 4> row_min{};
  for (int c = 0; c < 4; ++c) {
    col_max[c] = table.cells[0][c].shifted_encoder_payoff;
    for (int r = 1; r < 4; ++r) {
      col_max[c] = std::max(col_max[c], table.cells[r][c].shifted_encoder_payoff);
    }
  }
  for (int r = 0; r < 4; ++r) {
    row_min[r] = table.cells[r][0].distortion;
    for (int c = 1; c < 4; ++c) {
      row_min[r] = std::min(row_min[r], table.cells[r][c].distortion);
    }
  }

  std::uint64_t salt = 0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const NormalFormCell& cell = table.cells[r][c];
      const bool encoder_stable =
          cell.shifted_encoder_payoff >= col_max[c] - kTieTol;
      const bool decoder_stable = cell.distortion <= row_min[r] + kTieTol;
      if (encoder_stable && decoder_stable) {
        const auto [k1, k2] = label_coords(kExtremeLabels[r]);
        EquilibriumProfile p = make_profile(prior, k1, k2, kExtremeLabels[r],
                                            rho, tb, salt++);
        // The equilibrium pins the decoder-x column; the follower table may
        // report a different tied row, so override with the cell's column.
        p.decoder_x = kExtremeLabels[c];
        p.decoder_x_ties = {kExtremeLabels[c]};
        const auto [d1, d2] = label_coords(p.decoder_y);
        const auto [e1, e2] = label_coords(p.decoder_x);
        p.payoffs = evaluate_profile(prior, symmetric_encoder(k1, k2),
                                     DecoderYStrategy{d1, d2},
                                     DecoderXStrategy{e1, e2}, rho);
        result.profiles.push_back(std::move(p));
      }
    }
  }
  result.case_label =
      result.profiles.empty() ? CaseLabel::no_pure_nash : CaseLabel::c1;
  return result;
}

EquilibriumResult stackelberg_solve(const JointPrior& prior, PrivacyWeight rho,
                                    const TieBreak& tb) {
  const double mass0 = prior.a + prior.b;
  const double mass1 = prior.c + prior.d;
  const double cross10 = prior.a + prior.d;
  const double cross01 = prior.b + prior.c;

  struct Candidate {
    double k1, k2;
    std::optional<ExtremeLabel> label;
  };
  std::vector<Candidate> candidates;
  for (ExtremeLabel label : kExtremeLabels) {
    const auto [k1, k2] = label_coords(label);
    candidates.push_back({k1, k2, label});
  }

  // Intersections of theta(kappa) = level with the square's edges. theta is
  // linear with gradient (cross10, cross01); a vanishing coefficient makes
  // the level set parallel to that edge, contributing no new vertex.
  const auto add_point = [&](double k1, double k2) {
    if (k1 < -kDedupTol || k1 > 1.0 + kDedupTol) return;
    if (k2 < -kDedupTol || k2 > 1.0 + kDedupTol) return;
    k1 = std::clamp(k1, 0.0, 1.0);
    k2 = std::clamp(k2, 0.0, 1.0);
    for (const Candidate& cand : candidates) {
      if (std::abs(cand.k1 - k1) <= kDedupTol &&
          std::abs(cand.k2 - k2) <= kDedupTol) {
        return;
      }
    }
    candidates.push_back({k1, k2, std::nullopt});
  };
  for (double level : {mass0, mass1, 1.0 - mass0, 1.0 - mass1}) {
    if (cross10 > kDedupTol) {
      add_point(level / cross10, 0.0);                    // edge kappa2 = 0
      add_point((level - cross01) / cross10, 1.0);        // edge kappa2 = 1
    }
    if (cross01 > kDedupTol) {
      add_point(0.0, level / cross01);                    // edge kappa1 = 0
      add_point(1.0, (level - cross10) / cross01);        // edge kappa1 = 1
    }
  }

  const DecoderYStrategy informative{1.0, 0.0};
  std::vector<double> payoff(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const EncoderStrategy enc =
        symmetric_encoder(candidates[i].k1, candidates[i].k2);
    const double info = mutual_information(prior, enc, informative);
    const double follower_distortion =
        decoder_x_best_response(prior, enc).value;
    payoff[i] = info + rho.rho * follower_distortion;
  }
  const double best = *std::max_element(payoff.begin(), payoff.end());

  EquilibriumResult result;
  result.kind = GameKind::stackelberg;
  std::uint64_t salt = 0;
  bool corner_01_10_wins = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (payoff[i] < best - kTieTol) continue;
    const Candidate& cand = candidates[i];
    if (cand.label == ExtremeLabel::b01 || cand.label == ExtremeLabel::b10) {
      corner_01_10_wins = true;
    }
    result.profiles.push_back(make_profile(prior, cand.k1, cand.k2, cand.label,
                                           rho, tb, salt++));
  }

  const double min_pair = std::min({mass0, mass1, cross10, cross01});
  const bool marginal_pair_smallest =
      mass0 <= min_pair + kTieTol || mass1 <= min_pair + kTieTol;
  if (marginal_pair_smallest) {
    result.case_label = CaseLabel::c1;
  } else {
    result.case_label = corner_01_10_wins ? CaseLabel::c2_small_rho
                                          : CaseLabel::c2_large_rho;
  }
  return result;
}

}  // namespace psg
