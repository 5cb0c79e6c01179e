// Times the OpenMP sweep kernels against their serial references on the
// common study configuration and verifies that both produce identical
// results. Usage: psg_bench [decoder_grid] [encoder_grid] [surface_grid]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "psg/io.hpp"
#include "psg/oracle.hpp"

namespace {

template <typename F>
double time_seconds(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

bool equal_histograms(const psg::oracle::Histogram& lhs,
                      const psg::oracle::Histogram& rhs) {
  return lhs.trials == rhs.trials && lhs.counts == rhs.counts;
}

}  // namespace

int main(int argc, char** argv) {
  const int decoder_grid = argc > 1 ? std::atoi(argv[1]) : 12;
  const int encoder_grid = argc > 2 ? std::atoi(argv[2]) : 100;
  const int surface_grid = argc > 3 ? std::atoi(argv[3]) : 301;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const psg::JointPrior prior = psg::make_prior(0.3, 0.1, 0.2);
  const psg::PrivacyWeight rho{1.0};
  const psg::TieBreak tb = psg::TieBreak::seeded(7);

  psg::oracle::Histogram enc_serial, enc_parallel;
  const double t1s = time_seconds([&] {
    enc_serial = psg::oracle::grid_encoder_br_histogram_serial(
        prior, rho, decoder_grid, tb);
  });
  const double t1p = time_seconds([&] {
    enc_parallel =
        psg::oracle::grid_encoder_br_histogram(prior, rho, decoder_grid, tb);
  });
  std::printf("encoder-br-histogram (decoder grid %d^4): serial %.3fs, "
              "openmp %.3fs, speedup %.2fx, identical %s\n",
              decoder_grid, t1s, t1p, t1s / t1p,
              equal_histograms(enc_serial, enc_parallel) ? "yes" : "NO");

  psg::oracle::DecoderBrHistograms dec_serial, dec_parallel;
  const double t2s = time_seconds([&] {
    dec_serial = psg::oracle::grid_decoder_br_histograms_serial(
        prior, encoder_grid, tb);
  });
  const double t2p = time_seconds([&] {
    dec_parallel =
        psg::oracle::grid_decoder_br_histograms(prior, encoder_grid, tb);
  });
  const bool dec_same =
      equal_histograms(dec_serial.delta_hist, dec_parallel.delta_hist) &&
      equal_histograms(dec_serial.epsilon_hist, dec_parallel.epsilon_hist) &&
      dec_serial.epsilon_map == dec_parallel.epsilon_map;
  std::printf("decoder-br-histograms (encoder grid %d^2): serial %.3fs, "
              "openmp %.3fs, speedup %.2fx, identical %s\n",
              encoder_grid, t2s, t2p, t2s / t2p, dec_same ? "yes" : "NO");

  std::vector<psg::oracle::SweepRow> surf_serial, surf_parallel;
  const double t3s = time_seconds([&] {
    surf_serial =
        psg::oracle::payoff_surface_serial(prior, rho, surface_grid, std::nullopt);
  });
  const double t3p = time_seconds([&] {
    surf_parallel =
        psg::oracle::payoff_surface(prior, rho, surface_grid, std::nullopt);
  });
  const bool surf_same = psg::sweep_csv(surf_serial) == psg::sweep_csv(surf_parallel);
  std::printf("payoff-surface (grid %d^2, follower best response): serial "
              "%.3fs, openmp %.3fs, speedup %.2fx, identical %s\n",
              surface_grid, t3s, t3p, t3s / t3p, surf_same ? "yes" : "NO");

  return 0;
}
