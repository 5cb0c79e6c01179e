#include "psg/best_response.hpp"

#include <algorithm>
#include <random>

namespace psg {

std::string to_string(ExtremeLabel label) {
  switch (label) {
    case ExtremeLabel::b00: return "00";
    case ExtremeLabel::b01: return "01";
    case ExtremeLabel::b10: return "10";
    case ExtremeLabel::b11: return "11";
  }
  return "??";
}

std::pair<double, double> label_coords(ExtremeLabel label) {
  const int bits = static_cast<int>(label);
  return {bits & 2 ? 1.0 : 0.0, bits & 1 ? 1.0 : 0.0};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_symmetric(const EncoderStrategy& enc, const char* where) {
  if (enc.kind != EncoderKind::symmetric) {
    throw NotSymmetricError(std::string(where) +
                            " requires a symmetric-kind encoder");
  }
}

BestResponse argmax_over_extremes(const std::array<double, 4>& values,
                                  const TieBreak& tb) {
  const double best = *std::max_element(values.begin(), values.end());
  BestResponse br;
  br.value = best;
  for (int i = 0; i < 4; ++i) {
    if (values[i] >= best - kTieTol) br.optima.push_back(kExtremeLabels[i]);
  }
  br.chosen = br.optima[tb.pick(br.optima.size())];
  return br;
}

}  // namespace

std::size_t TieBreak::pick(std::size_t count, std::uint64_t salt) const {
  if (count <= 1) return 0;
  if (!seeded_) return 0;
  std::mt19937_64 gen(splitmix64(seed_ ^ splitmix64(salt)));
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(gen);
}

BestResponse encoder_best_response(const JointPrior& prior,
                                   const DecoderYStrategy& dy,
                                   const DecoderXStrategy& dx,
                                   PrivacyWeight rho, const TieBreak& tb) {
  std::array<double, 4> values{};
  for (int i = 0; i < 4; ++i) {
    const auto [k1, k2] = label_coords(kExtremeLabels[i]);
    values[i] =
        evaluate_profile(prior, symmetric_encoder(k1, k2), dy, dx, rho)
            .encoder_payoff;
  }
  return argmax_over_extremes(values, tb);
}

BestResponse decoder_y_best_response(const JointPrior& prior,
                                     const EncoderStrategy& enc,
                                     const TieBreak& tb) {
  require_symmetric(enc, "decoder_y_best_response");
  std::array<double, 4> values{};
  for (int i = 0; i < 4; ++i) {
    const auto [d1, d2] = label_coords(kExtremeLabels[i]);
    values[i] = mutual_information(prior, enc, DecoderYStrategy{d1, d2});
  }
  return argmax_over_extremes(values, tb);
}

BestResponse decoder_x_best_response(const JointPrior& prior,
                                     const EncoderStrategy& enc) {
  require_symmetric(enc, "decoder_x_best_response");
  const double mass0 = prior.a + prior.b;  // P(x=0)
  const double mass1 = prior.c + prior.d;  // P(x=1)
  const double theta = enc.kappa1() * (prior.a + prior.d) +
                       enc.kappa2() * (prior.b + prior.c);

  const std::array<bool, 4> matches = {
      mass0 <= theta + kTieTol && theta <= mass1 + kTieTol,
      theta <= mass0 + kTieTol && theta <= mass1 + kTieTol,
      theta >= mass0 - kTieTol && theta >= mass1 - kTieTol,
      mass0 >= theta - kTieTol && theta >= mass1 - kTieTol,
  };

  BestResponse br;
  br.value = std::min({mass0, mass1, theta, 1.0 - theta});
  for (int i = 0; i < 4; ++i) {
    if (matches[i]) br.optima.push_back(kExtremeLabels[i]);
  }
  br.chosen = br.optima.front();
  return br;
}

}  // namespace psg
