#pragma once

#include <string>
#include <vector>

#include "psg/best_response.hpp"
#include "psg/equilibrium.hpp"
#include "psg/oracle.hpp"

// Serialization for the CLI: flat JSON objects for scalar results, CSV for
// grids. All floating-point values are printed with %.16e (17 significant
// digits), which round-trips doubles exactly and keeps output byte-identical
// across runs.

namespace psg {

std::string format_double(double v);

std::string payoff_json(const PayoffPair& pp);

std::string best_response_json(const std::string& player,
                               const BestResponse& br);

std::string equilibrium_json(const EquilibriumResult& result);

std::string histogram_json(const oracle::Histogram& hist);

std::string decoder_histograms_json(const oracle::DecoderBrHistograms& hists);

// Header kappa1,kappa2,mutual_info,distortion,encoder_payoff,decoder_payoff;
// one line per row, LF endings.
std::string sweep_csv(const std::vector<oracle::SweepRow>& rows);

// Header kappa1,kappa2,epsilon; the decision map in row-major grid order.
std::string epsilon_map_csv(const oracle::DecoderBrHistograms& hists);

}  // namespace psg
