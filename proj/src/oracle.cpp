#include "psg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace psg::oracle {

namespace {

constexpr int kSafetyGridN = 21;

double grid_point(int i, int n) { return static_cast<double>(i) / (n - 1); }

std::string coord_key(double k1, double k2) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f,%.6f", k1, k2);
  return buf;
}

struct PointCandidate {
  double u = 0.0;
  double v = 0.0;
  int extreme = -1;  // index into kExtremeLabels, or -1 for grid points
};

// The four extremes first, then the safety grid with exact corners removed.
std::vector<PointCandidate> extremes_plus_safety_grid() {
  std::vector<PointCandidate> cands;
  for (int i = 0; i < 4; ++i) {
    const auto [u, v] = label_coords(kExtremeLabels[i]);
    cands.push_back({u, v, i});
  }
  for (int i = 0; i < kSafetyGridN; ++i) {
    for (int j = 0; j < kSafetyGridN; ++j) {
      const bool corner = (i == 0 || i == kSafetyGridN - 1) &&
                          (j == 0 || j == kSafetyGridN - 1);
      if (corner) continue;
      cands.push_back({grid_point(i, kSafetyGridN), grid_point(j, kSafetyGridN),
                       -1});
    }
  }
  return cands;
}

double encoder_payoff_at(const JointPrior& pr, double k1, double k2, double d1,
                         double d2, double e1, double e2, double rho) {
  const double k3 = 1.0 - k2;
  const double k4 = 1.0 - k1;
  const double t1 = d1 * k1 + d2 * (1.0 - k1);
  const double t2 = d1 * k2 + d2 * (1.0 - k2);
  const double t3 = d1 * k3 + d2 * (1.0 - k3);
  const double t4 = d1 * k4 + d2 * (1.0 - k4);
  const double p1 = pr.a * t1 + pr.c * t3;
  const double p2 = pr.b * t2 + pr.d * t4;
  const double info = mutual_information_from_masses(p1, p2, pr.q1());
  const double n1 = e1 * k1 + e2 * (1.0 - k1);
  const double n2 = e1 * k2 + e2 * (1.0 - k2);
  const double n3 = e1 * k3 + e2 * (1.0 - k3);
  const double n4 = e1 * k4 + e2 * (1.0 - k4);
  const double dist = pr.a * (1.0 - n1) + pr.b * (1.0 - n2) + pr.c * n3 +
                      pr.d * n4;
  return info + rho * dist;
}

double mutual_info_at(const JointPrior& pr, double k1, double k2, double d1,
                      double d2) {
  const double k3 = 1.0 - k2;
  const double k4 = 1.0 - k1;
  const double t1 = d1 * k1 + d2 * (1.0 - k1);
  const double t2 = d1 * k2 + d2 * (1.0 - k2);
  const double t3 = d1 * k3 + d2 * (1.0 - k3);
  const double t4 = d1 * k4 + d2 * (1.0 - k4);
  const double p1 = pr.a * t1 + pr.c * t3;
  const double p2 = pr.b * t2 + pr.d * t4;
  return mutual_information_from_masses(p1, p2, pr.q1());
}

double distortion_at(const JointPrior& pr, double k1, double k2, double e1,
                     double e2) {
  const double theta = k1 * (pr.a + pr.d) + k2 * (pr.b + pr.c);
  const double mass0 = pr.a + pr.b;
  const double mass1 = pr.c + pr.d;
  return mass0 + e1 * (mass1 - theta) + e2 * (theta - mass0);
}

// Winner of one encoder best-response trial: evaluates every candidate,
// prefers tied extremes (one always attains the maximum), and falls back to
// the full tied set only if the safety grid ever beat all extremes.
std::string encoder_winner(const JointPrior& prior, double rho,
                           const std::vector<PointCandidate>& cands,
                           std::vector<double>& values, double d1, double d2,
                           double e1, double e2, const TieBreak& tb,
                           std::uint64_t salt) {
  values.resize(cands.size());
  double best = -1.0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    values[i] = encoder_payoff_at(prior, cands[i].u, cands[i].v, d1, d2, e1,
                                  e2, rho);
    best = std::max(best, values[i]);
  }
  int tied_extremes[4];
  int n_tied_extremes = 0;
  for (int i = 0; i < 4; ++i) {
    if (values[i] >= best - kTieTol) tied_extremes[n_tied_extremes++] = i;
  }
  if (n_tied_extremes > 0) {
    const int pick = tied_extremes[tb.pick(n_tied_extremes, salt)];
    return to_string(kExtremeLabels[pick]);
  }
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (values[i] >= best - kTieTol) tied.push_back(i);
  }
  const PointCandidate& w = cands[tied[tb.pick(tied.size(), salt)]];
  return coord_key(w.u, w.v);
}

// Winner of one decoder-y best-response trial. The informative extremes 01
// and 10 always attain the maximum (they tie with each other exactly), so
// the winner is drawn from that pair; the grid scan guards the claim.
std::string decoder_y_winner(const JointPrior& prior,
                             const std::vector<PointCandidate>& cands,
                             std::vector<double>& values, double k1, double k2,
                             const TieBreak& tb, std::uint64_t salt) {
  values.resize(cands.size());
  double best = -1.0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    values[i] = mutual_info_at(prior, k1, k2, cands[i].u, cands[i].v);
    best = std::max(best, values[i]);
  }
  int tied_informative[2];
  int n_tied = 0;
  if (values[1] >= best - kTieTol) tied_informative[n_tied++] = 1;  // 01
  if (values[2] >= best - kTieTol) tied_informative[n_tied++] = 2;  // 10
  if (n_tied > 0) {
    const int pick = tied_informative[tb.pick(n_tied, salt)];
    return to_string(kExtremeLabels[pick]);
  }
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (values[i] >= best - kTieTol) tied.push_back(i);
  }
  const PointCandidate& w = cands[tied[tb.pick(tied.size(), salt)]];
  if (w.extreme >= 0) return to_string(kExtremeLabels[w.extreme]);
  return coord_key(w.u, w.v);
}

// Exact affine minimization over the four decoder-x extremes; first tied
// label in order, matching the closed-form decision table on boundaries.
ExtremeLabel decoder_x_winner(const JointPrior& prior, double k1, double k2) {
  double best = 2.0;
  std::array<double, 4> dist{};
  for (int i = 0; i < 4; ++i) {
    const auto [e1, e2] = label_coords(kExtremeLabels[i]);
    dist[i] = distortion_at(prior, k1, k2, e1, e2);
    best = std::min(best, dist[i]);
  }
  for (int i = 0; i < 4; ++i) {
    if (dist[i] <= best + kTieTol) return kExtremeLabels[i];
  }
  return ExtremeLabel::b00;
}

SweepRow sweep_row_at(const JointPrior& prior, double rho, double k1,
                      double k2, const std::optional<FixedFollower>& fixed) {
  SweepRow row;
  row.kappa1 = k1;
  row.kappa2 = k2;
  if (fixed.has_value()) {
    const PayoffPair pp =
        evaluate_profile(prior, symmetric_encoder(k1, k2), fixed->dy,
                         fixed->dx, PrivacyWeight{rho});
    row.mutual_info = pp.mutual_info;
    row.distortion = pp.distortion;
  } else {
    const EncoderStrategy enc = symmetric_encoder(k1, k2);
    row.mutual_info = mutual_information(prior, enc, DecoderYStrategy{1.0, 0.0});
    row.distortion = decoder_x_best_response(prior, enc).value;
  }
  row.encoder_payoff = row.mutual_info + rho * row.distortion;
  row.decoder_payoff = row.mutual_info - row.distortion;
  return row;
}

}  // namespace

Histogram grid_encoder_br_histogram_serial(const JointPrior& prior,
                                           PrivacyWeight rho,
                                           int decoder_grid_n,
                                           const TieBreak& tb) {
  const int n = decoder_grid_n;
  const std::vector<PointCandidate> cands = extremes_plus_safety_grid();
  std::vector<double> values;
  Histogram hist;
  std::uint64_t salt = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const std::string key = encoder_winner(
              prior, rho.rho, cands, values, grid_point(i, n),
              grid_point(j, n), grid_point(k, n), grid_point(l, n), tb, salt);
          ++hist.counts[key];
          ++salt;
        }
      }
    }
  }
  hist.trials = salt;
  return hist;
}

Histogram grid_encoder_br_histogram(const JointPrior& prior, PrivacyWeight rho,
                                    int decoder_grid_n, const TieBreak& tb) {
  const int n = decoder_grid_n;
  const std::vector<PointCandidate> cands = extremes_plus_safety_grid();
  const std::int64_t trials =
      static_cast<std::int64_t>(n) * n * n * n;
  Histogram hist;
  hist.trials = static_cast<std::uint64_t>(trials);
#pragma omp parallel
  {
    Histogram local;
    std::vector<double> values;
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < trials; ++t) {
      std::int64_t rest = t;
      const int l = static_cast<int>(rest % n); rest /= n;
      const int k = static_cast<int>(rest % n); rest /= n;
      const int j = static_cast<int>(rest % n); rest /= n;
      const int i = static_cast<int>(rest);
      const std::string key = encoder_winner(
          prior, rho.rho, cands, values, grid_point(i, n), grid_point(j, n),
          grid_point(k, n), grid_point(l, n), tb,
          static_cast<std::uint64_t>(t));
      ++local.counts[key];
    }
#pragma omp critical
    {
      for (const auto& [key, count] : local.counts) hist.counts[key] += count;
    }
  }
  return hist;
}

DecoderBrHistograms grid_decoder_br_histograms_serial(const JointPrior& prior,
                                                      int encoder_grid_n,
                                                      const TieBreak& tb) {
  const int n = encoder_grid_n;
  const std::vector<PointCandidate> cands = extremes_plus_safety_grid();
  std::vector<double> values;
  DecoderBrHistograms out;
  out.grid_n = n;
  out.epsilon_map.resize(static_cast<std::size_t>(n) * n);
  std::uint64_t salt = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double k1 = grid_point(i, n);
      const double k2 = grid_point(j, n);
      ++out.delta_hist.counts[decoder_y_winner(prior, cands, values, k1, k2,
                                               tb, salt)];
      const ExtremeLabel eps = decoder_x_winner(prior, k1, k2);
      out.epsilon_map[salt] = eps;
      ++out.epsilon_hist.counts[to_string(eps)];
      ++salt;
    }
  }
  out.delta_hist.trials = salt;
  out.epsilon_hist.trials = salt;
  return out;
}

DecoderBrHistograms grid_decoder_br_histograms(const JointPrior& prior,
                                               int encoder_grid_n,
                                               const TieBreak& tb) {
  const int n = encoder_grid_n;
  const std::vector<PointCandidate> cands = extremes_plus_safety_grid();
  const std::int64_t trials = static_cast<std::int64_t>(n) * n;
  DecoderBrHistograms out;
  out.grid_n = n;
  out.epsilon_map.resize(static_cast<std::size_t>(trials));
  out.delta_hist.trials = static_cast<std::uint64_t>(trials);
  out.epsilon_hist.trials = static_cast<std::uint64_t>(trials);
#pragma omp parallel
  {
    Histogram delta_local;
    Histogram eps_local;
    std::vector<double> values;
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < trials; ++t) {
      const double k1 = grid_point(static_cast<int>(t / n), n);
      const double k2 = grid_point(static_cast<int>(t % n), n);
      ++delta_local.counts[decoder_y_winner(prior, cands, values, k1, k2, tb,
                                            static_cast<std::uint64_t>(t))];
      const ExtremeLabel eps = decoder_x_winner(prior, k1, k2);
      out.epsilon_map[static_cast<std::size_t>(t)] = eps;
      ++eps_local.counts[to_string(eps)];
    }
#pragma omp critical
    {
      for (const auto& [key, count] : delta_local.counts) {
        out.delta_hist.counts[key] += count;
      }
      for (const auto& [key, count] : eps_local.counts) {
        out.epsilon_hist.counts[key] += count;
      }
    }
  }
  return out;
}

std::vector<SweepRow> payoff_surface_serial(
    const JointPrior& prior, PrivacyWeight rho, int grid_n,
    const std::optional<FixedFollower>& fixed) {
  const int n = grid_n;
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows.push_back(sweep_row_at(prior, rho.rho, grid_point(i, n),
                                  grid_point(j, n), fixed));
    }
  }
  return rows;
}

std::vector<SweepRow> payoff_surface(const JointPrior& prior,
                                     PrivacyWeight rho, int grid_n,
                                     const std::optional<FixedFollower>& fixed) {
  const int n = grid_n;
  const std::int64_t total = static_cast<std::int64_t>(n) * n;
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) {
    rows[static_cast<std::size_t>(t)] =
        sweep_row_at(prior, rho.rho, grid_point(static_cast<int>(t / n), n),
                     grid_point(static_cast<int>(t % n), n), fixed);
  }
  return rows;
}

NashOracleResult nash_oracle(const JointPrior& prior, PrivacyWeight rho,
                             int grid_n) {
  const int n = grid_n;
  NashOracleResult result;
  for (int r = 0; r < 4; ++r) {
    const auto [k1, k2] = label_coords(kExtremeLabels[r]);
    for (int c = 0; c < 4; ++c) {
      const auto [e1, e2] = label_coords(kExtremeLabels[c]);
      const double base_payoff =
          encoder_payoff_at(prior, k1, k2, 1.0, 0.0, e1, e2, rho.rho);
      const double base_info = mutual_info_at(prior, k1, k2, 1.0, 0.0);
      const double base_dist = distortion_at(prior, k1, k2, e1, e2);

      double max_encoder = base_payoff;
      double max_info = base_info;
      double min_dist = base_dist;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double u = grid_point(i, n);
          const double v = grid_point(j, n);
          max_encoder = std::max(
              max_encoder,
              encoder_payoff_at(prior, u, v, 1.0, 0.0, e1, e2, rho.rho));
          max_info = std::max(max_info, mutual_info_at(prior, k1, k2, u, v));
          min_dist = std::min(min_dist, distortion_at(prior, k1, k2, u, v));
        }
      }
      for (ExtremeLabel label : kExtremeLabels) {
        const auto [u, v] = label_coords(label);
        max_encoder = std::max(
            max_encoder,
            encoder_payoff_at(prior, u, v, 1.0, 0.0, e1, e2, rho.rho));
        max_info = std::max(max_info, mutual_info_at(prior, k1, k2, u, v));
        min_dist = std::min(min_dist, distortion_at(prior, k1, k2, u, v));
      }

      const bool encoder_stable = max_encoder <= base_payoff + kTieTol;
      const bool decoder_stable =
          max_info - min_dist <= base_info - base_dist + kTieTol;
      if (encoder_stable && decoder_stable) {
        result.profiles.emplace_back(kExtremeLabels[r], kExtremeLabels[c]);
      }
    }
  }
  result.exists = !result.profiles.empty();
  return result;
}

}  // namespace psg::oracle
