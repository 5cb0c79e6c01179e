#include <cmath>
#include <random>

#include "doctest.h"
#include "psg/check.hpp"
#include "psg/objectives.hpp"

using namespace psg;

namespace {

const JointPrior kStudyPrior = make_prior(0.3, 0.1, 0.2, 0.4);

}  // namespace

TEST_CASE("binary entropy reference points") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.4) ==
        doctest::Approx(0.970950594454669).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(1.2), OutOfRangeError);
  CHECK_THROWS_AS(binary_entropy(-0.1), OutOfRangeError);
}

TEST_CASE("induced distributions at a fully revealing profile") {
  const InducedDistributions id = induced_distributions(
      kStudyPrior, symmetric_encoder(0.0, 1.0), DecoderYStrategy{1.0, 0.0});
  CHECK(id.py[0] == doctest::Approx(0.5));
  CHECK(id.py[1] == doctest::Approx(0.5));
  CHECK(id.px_given_y[0][0] == doctest::Approx(0.6));
  CHECK(id.px_given_y[1][0] == doctest::Approx(0.4));
  CHECK(id.px_given_y[0][1] == doctest::Approx(0.2));
  CHECK(id.px_given_y[1][1] == doctest::Approx(0.8));
  CHECK(id.pyhat_given_y[0][0] == doctest::Approx(0.0));
  CHECK(id.pyhat_given_y[1][0] == doctest::Approx(1.0));
  CHECK(id.pyhat_given_y[0][1] == doctest::Approx(1.0));
  CHECK(id.pyhat_given_y[1][1] == doctest::Approx(0.0));
  CHECK(id.pyhat[0] == doctest::Approx(0.5));
  CHECK(id.pyhat[1] == doctest::Approx(0.5));
}

TEST_CASE("equal decoder-y parameters decouple the estimate") {
  const InducedDistributions id = induced_distributions(
      kStudyPrior, symmetric_encoder(0.7, 0.2), DecoderYStrategy{0.3, 0.3});
  CHECK(id.pyhat[0] == doctest::Approx(0.3));
  CHECK(id.pyhat_given_y[0][0] == doctest::Approx(0.3));
  CHECK(id.pyhat_given_y[0][1] == doctest::Approx(0.3));
}

TEST_CASE("half-mixing encoder splits the conditional evenly") {
  const InducedDistributions id =
      induced_distributions(make_prior(0.25, 0.25, 0.25, 0.25),
                            symmetric_encoder(1.0, 1.0), DecoderYStrategy{1.0, 0.0});
  CHECK(id.pyhat_given_y[0][0] == doctest::Approx(0.5));
}

TEST_CASE("induced distributions reject a degenerate public marginal") {
  const JointPrior degenerate = make_prior(0.0, 0.5, 0.0, 0.5);
  CHECK_THROWS_AS(induced_distributions(degenerate, symmetric_encoder(0.5, 0.5),
                                        DecoderYStrategy{1.0, 0.0}),
                  DegenerateMarginalError);
  CHECK(mutual_information(degenerate, symmetric_encoder(0.5, 0.5),
                           DecoderYStrategy{1.0, 0.0}) == 0.0);
}

TEST_CASE("induced distribution columns are normalized on random inputs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const JointPrior prior = random_prior(rng);
    if (prior.q1() < 1e-6 || prior.q1() > 1.0 - 1e-6) continue;
    const InducedDistributions id = induced_distributions(
        prior, random_general_encoder(rng), random_decoder_y(rng));
    CHECK(id.py[0] + id.py[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(id.pyhat[0] + id.pyhat[1] == doctest::Approx(1.0).epsilon(1e-9));
    for (int col = 0; col < 2; ++col) {
      CHECK(id.px_given_y[0][col] + id.px_given_y[1][col] ==
            doctest::Approx(1.0).epsilon(1e-9));
      CHECK(id.pyhat_given_y[0][col] + id.pyhat_given_y[1][col] ==
            doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("mutual information at the revealing and hiding extremes") {
  // Revealing: the z-channel copies y, so the information hits its ceiling
  // H(q1) = 1 bit. Hiding pair (0,0): value frozen from the brute-force pmf
  // oracle.
  const DecoderYStrategy informative{1.0, 0.0};
  CHECK(mutual_information(kStudyPrior, symmetric_encoder(0.0, 1.0),
                           informative) == doctest::Approx(1.0).epsilon(1e-12));
  const double hiding = mutual_information(
      kStudyPrior, symmetric_encoder(0.0, 0.0), informative);
  CHECK(hiding == doctest::Approx(0.124511249783653).epsilon(1e-9));
  CHECK(hiding ==
        doctest::Approx(mutual_information_oracle(
                            kStudyPrior, symmetric_encoder(0.0, 0.0),
                            informative))
            .epsilon(1e-9));
  CHECK(mutual_information(kStudyPrior, symmetric_encoder(0.3, 0.9),
                           DecoderYStrategy{0.4, 0.4}) <= 1e-12);
}

TEST_CASE("closed form matches the pmf-summation oracle on random inputs") {
  std::mt19937_64 rng(42);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const JointPrior prior = random_prior(rng);
    const EncoderStrategy enc = random_general_encoder(rng);
    const DecoderYStrategy dy = random_decoder_y(rng);
    worst = std::max(worst, std::abs(mutual_information(prior, enc, dy) -
                                     mutual_information_oracle(prior, enc, dy)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("mutual information stays between zero and the source entropy") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const JointPrior prior = random_prior(rng);
    const double info = mutual_information(prior, random_general_encoder(rng),
                                           random_decoder_y(rng));
    CHECK(info >= 0.0);
    CHECK(info <= binary_entropy(std::min(1.0, prior.q1())) + 1e-12);
  }
}

TEST_CASE("complement symmetry of the information in the encoder pair") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const DecoderYStrategy informative{1.0, 0.0};
  for (int t = 0; t < 500; ++t) {
    const JointPrior prior = random_prior(rng);
    const double k1 = unit(rng);
    const double k2 = unit(rng);
    const double lhs =
        mutual_information(prior, symmetric_encoder(k1, k2), informative);
    const double rhs = mutual_information(
        prior, symmetric_encoder(1.0 - k1, 1.0 - k2), informative);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("swapping the decoder-y pair while complementing kappas is neutral") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const JointPrior prior = random_prior(rng);
    const EncoderStrategy enc = random_general_encoder(rng);
    const EncoderStrategy flipped =
        general_encoder(1.0 - enc.kappa1(), 1.0 - enc.kappa2(),
                        1.0 - enc.kappa3(), 1.0 - enc.kappa4());
    const double d1 = unit(rng);
    const double d2 = unit(rng);
    const double lhs = mutual_information(prior, enc, DecoderYStrategy{d1, d2});
    const double rhs =
        mutual_information(prior, flipped, DecoderYStrategy{d2, d1});
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("distortion closed forms at the decoder-x extremes") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const EncoderStrategy enc = random_general_encoder(rng);
    CHECK(hamming_distortion(kStudyPrior, enc, DecoderXStrategy{0.0, 0.0}) ==
          doctest::Approx(0.4).epsilon(1e-12));
    CHECK(hamming_distortion(kStudyPrior, enc, DecoderXStrategy{1.0, 1.0}) ==
          doctest::Approx(0.6).epsilon(1e-12));
  }
  CHECK(hamming_distortion(kStudyPrior, symmetric_encoder(0.0, 1.0),
                           DecoderXStrategy{0.0, 1.0}) ==
        doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("distortion is affine in each strategy pair") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const JointPrior prior = random_prior(rng);
    const DecoderXStrategy dx = random_decoder_x(rng);
    const double u1 = unit(rng), u2 = unit(rng);
    const double v1 = unit(rng), v2 = unit(rng);
    const double mid_kappa = hamming_distortion(
        prior, symmetric_encoder(0.5 * (u1 + v1), 0.5 * (u2 + v2)), dx);
    const double avg_kappa =
        0.5 * (hamming_distortion(prior, symmetric_encoder(u1, u2), dx) +
               hamming_distortion(prior, symmetric_encoder(v1, v2), dx));
    CHECK(std::abs(mid_kappa - avg_kappa) < 1e-12);

    const EncoderStrategy enc = random_general_encoder(rng);
    const double mid_eps = hamming_distortion(
        prior, enc, DecoderXStrategy{0.5 * (u1 + v1), 0.5 * (u2 + v2)});
    const double avg_eps =
        0.5 * (hamming_distortion(prior, enc, DecoderXStrategy{u1, u2}) +
               hamming_distortion(prior, enc, DecoderXStrategy{v1, v2}));
    CHECK(std::abs(mid_eps - avg_eps) < 1e-12);
  }
}

TEST_CASE("payoff pairs combine the two terms") {
  const DecoderYStrategy informative{1.0, 0.0};
  const PayoffPair revealing =
      encoder_payoff(kStudyPrior, symmetric_encoder(0.0, 1.0), informative,
                     DecoderXStrategy{0.0, 1.0}, PrivacyWeight{1.0});
  CHECK(revealing.encoder_payoff == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(revealing.decoder_payoff == doctest::Approx(0.7).epsilon(1e-12));

  const PayoffPair hiding =
      encoder_payoff(kStudyPrior, symmetric_encoder(0.0, 0.0), informative,
                     DecoderXStrategy{0.0, 0.0}, PrivacyWeight{1.0});
  CHECK(hiding.encoder_payoff ==
        doctest::Approx(0.524511249783653).epsilon(1e-9));

  const PayoffPair no_weight =
      encoder_payoff(kStudyPrior, symmetric_encoder(0.4, 0.8), informative,
                     DecoderXStrategy{0.3, 0.9}, PrivacyWeight{0.0});
  CHECK(no_weight.encoder_payoff == no_weight.mutual_info);
}

TEST_CASE("payoff pair identities hold exactly by construction") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double rho = 5.0 * unit(rng);
    const PayoffPair pp = evaluate_profile(
        random_prior(rng), random_general_encoder(rng), random_decoder_y(rng),
        random_decoder_x(rng), PrivacyWeight{rho});
    CHECK(pp.encoder_payoff == pp.mutual_info + rho * pp.distortion);
    CHECK(pp.decoder_payoff == pp.mutual_info - pp.distortion);
  }
}

TEST_CASE("decoder payoff examples") {
  const PayoffPair blind = decoder_payoff(
      kStudyPrior, symmetric_encoder(0.6, 0.1), DecoderYStrategy{0.2, 0.2},
      DecoderXStrategy{0.0, 0.0});
  CHECK(blind.decoder_payoff == doctest::Approx(-0.4).epsilon(1e-12));

  const PayoffPair mismatched = decoder_payoff(
      kStudyPrior, symmetric_encoder(0.0, 1.0), DecoderYStrategy{1.0, 0.0},
      DecoderXStrategy{1.0, 0.0});
  CHECK(mismatched.distortion == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(mismatched.decoder_payoff == doctest::Approx(0.3).epsilon(1e-12));
}
