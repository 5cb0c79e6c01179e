#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psg/best_response.hpp"
#include "psg/model.hpp"
#include "psg/objectives.hpp"

// Equilibrium solvers. Both games share the same reduced structure: the
// decoder-y component always best-responds with one of the two equivalent
// informative extremes {01, 10}, so the strategic interaction collapses to
// the encoder corner (rows) against the decoder-x corner (columns) with the
// encoder payoff shifted by the constant H(q1).

namespace psg {

struct NormalFormCell {
  double shifted_encoder_payoff = 0.0;  // encoder payoff minus H(q1)
  double distortion = 0.0;
};

// The 4x4 bimatrix of (shifted encoder payoff, distortion), rows = encoder
// corners, columns = decoder-x corners, plus the nonpositive constant
//   m = H(a+b) + a log a + b log b + c log c + d log d
// that appears in the uninformative rows 00 and 11.
struct NormalFormTable {
  std::array<std::array<NormalFormCell, 4>, 4> cells{};
  double m_constant = 0.0;

  const NormalFormCell& at(ExtremeLabel row, ExtremeLabel col) const {
    return cells[static_cast<int>(row)][static_cast<int>(col)];
  }
};

NormalFormTable normal_form_table(const JointPrior& prior, PrivacyWeight rho);

enum class GameKind { stackelberg, nash };

enum class CaseLabel {
  c1,                  // min pair mass is a+b or c+d: corner optimum, Nash exists
  c2_small_rho,        // cross pair smallest, corner 01/10 still wins
  c2_large_rho,        // cross pair smallest, winner on a theta-band boundary
  no_pure_nash,
  degenerate_uniform,  // equal priors: every strategy pair is an equilibrium
};

std::string to_string(GameKind kind);
std::string to_string(CaseLabel label);

struct EquilibriumProfile {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  std::optional<ExtremeLabel> encoder_label;  // set when kappa is a corner
  ExtremeLabel decoder_y = ExtremeLabel::b01;
  std::vector<ExtremeLabel> decoder_y_class;  // payoff-equivalent labels
  ExtremeLabel decoder_x = ExtremeLabel::b00;
  std::vector<ExtremeLabel> decoder_x_ties;
  PayoffPair payoffs;
};

struct EquilibriumResult {
  GameKind kind = GameKind::nash;
  CaseLabel case_label = CaseLabel::no_pure_nash;
  std::vector<EquilibriumProfile> profiles;
};

// Pure-strategy equilibria of the simultaneous game by exhaustive bimatrix
// enumeration: cell (r, c) survives iff r maximizes the first coordinate in
// column c and c minimizes the distortion in row r, both within kTieTol.
// A uniform prior short-circuits to the degenerate case.
EquilibriumResult nash_solve(const JointPrior& prior, PrivacyWeight rho,
                             const TieBreak& tb);

// Leader-commitment solution. The leader payoff I(kappa) + rho * E*(kappa),
// with E* the follower's minimized distortion, is convex on each region where
// E* is linear in theta, so the search reduces to a finite vertex set: the
// four square corners plus every intersection of the lines theta = a+b, c+d,
// 1-(a+b), 1-(c+d) with the square's edges. All candidates are evaluated
// exactly and the maximizer set is returned.
EquilibriumResult stackelberg_solve(const JointPrior& prior, PrivacyWeight rho,
                                    const TieBreak& tb);

}  // namespace psg
