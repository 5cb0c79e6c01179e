#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "psg/model.hpp"
#include "psg/objectives.hpp"

// Optimal replies for each player given the others' strategies. Every best
// response here lives on the vertices of the unit square of the player's two
// free parameters, labelled by two bits (first bit = first parameter).

namespace psg {

enum class ExtremeLabel : int { b00 = 0, b01 = 1, b10 = 2, b11 = 3 };

inline constexpr std::array<ExtremeLabel, 4> kExtremeLabels = {
    ExtremeLabel::b00, ExtremeLabel::b01, ExtremeLabel::b10,
    ExtremeLabel::b11};

std::string to_string(ExtremeLabel label);
std::pair<double, double> label_coords(ExtremeLabel label);

// Payoff differences below this are treated as ties when collecting optima.
inline constexpr double kTieTol = 1e-9;

// Deterministic selection among tied optima. Lexicographic picks the first
// optimum in the fixed candidate order; seeded picks uniformly with a
// generator derived from (seed, salt), so grid sweeps stay reproducible
// regardless of evaluation order.
class TieBreak {
 public:
  static TieBreak lexicographic() { return TieBreak(false, 0); }
  static TieBreak seeded(std::uint64_t seed) { return TieBreak(true, seed); }

  std::size_t pick(std::size_t count, std::uint64_t salt = 0) const;
  bool is_seeded() const { return seeded_; }
  std::uint64_t seed() const { return seed_; }

 private:
  TieBreak(bool seeded, std::uint64_t seed) : seeded_(seeded), seed_(seed) {}
  bool seeded_;
  std::uint64_t seed_;
};

struct BestResponse {
  ExtremeLabel chosen = ExtremeLabel::b00;
  std::vector<ExtremeLabel> optima;  // all labels within kTieTol of value
  double value = 0.0;
};

// Maximizes the encoder payoff I + rho*E over the four symmetric-encoder
// extremes. The decoder strategies may be arbitrary points of [0,1]^2.
BestResponse encoder_best_response(const JointPrior& prior,
                                   const DecoderYStrategy& dy,
                                   const DecoderXStrategy& dx,
                                   PrivacyWeight rho, const TieBreak& tb);

// Maximizes I(y;yhat) over the four decoder-y extremes. For an informative
// encoder the optima are always {01, 10}; when the encoder makes z
// independent of y every extreme ties at zero and all four are reported.
// Requires a symmetric-kind encoder.
BestResponse decoder_y_best_response(const JointPrior& prior,
                                     const EncoderStrategy& enc,
                                     const TieBreak& tb);

// Minimizes the expected Hamming distortion via the closed-form decision
// table on theta = kappa1*(a+d) + kappa2*(b+c):
//   a+b <= theta <= c+d            -> 00, distortion a+b
//   theta <= a+b and theta <= c+d  -> 01, distortion theta
//   theta >= a+b and theta >= c+d  -> 10, distortion 1-theta
//   a+b >= theta >= c+d            -> 11, distortion c+d
// Rows are checked in this order with comparisons slack by kTieTol; `chosen`
// is the first matching row and `optima` collects every matching row (their
// distortions agree on the overlaps). The returned value is the exact
// min{a+b, c+d, theta, 1-theta}. Requires a symmetric-kind encoder.
BestResponse decoder_x_best_response(const JointPrior& prior,
                                     const EncoderStrategy& enc);

}  // namespace psg
