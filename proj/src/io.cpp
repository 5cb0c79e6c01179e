#include "psg/io.hpp"

#include <cstdio>

namespace psg {

namespace {

void append_labels(std::string& out, const std::vector<ExtremeLabel>& labels) {
  out += '[';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += '"';
    out += to_string(labels[i]);
    out += '"';
  }
  out += ']';
}

void append_counts(std::string& out, const oracle::Histogram& hist) {
  out += '{';
  bool first = true;
  for (const auto& [key, count] : hist.counts) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += key;  // keys are labels or numeric pairs; no escaping needed
    out += "\":";
    out += std::to_string(count);
  }
  out += '}';
}

void append_payoffs(std::string& out, const PayoffPair& pp) {
  out += "\"mutual_info\":" + format_double(pp.mutual_info) +
         ",\"distortion\":" + format_double(pp.distortion) +
         ",\"encoder_payoff\":" + format_double(pp.encoder_payoff) +
         ",\"decoder_payoff\":" + format_double(pp.decoder_payoff);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string payoff_json(const PayoffPair& pp) {
  std::string out = "{";
  append_payoffs(out, pp);
  out += "}\n";
  return out;
}

std::string best_response_json(const std::string& player,
                               const BestResponse& br) {
  std::string out = "{\"player\":\"" + player + "\",\"chosen\":\"" +
                    to_string(br.chosen) + "\",\"optima\":";
  append_labels(out, br.optima);
  out += ",\"value\":" + format_double(br.value) + "}\n";
  return out;
}

std::string equilibrium_json(const EquilibriumResult& result) {
  std::string kind = to_string(result.kind);
  if (result.kind == GameKind::nash && result.profiles.empty()) {
    kind = "none";
  }
  std::string out = "{\"kind\":\"" + kind + "\",\"case\":\"" +
                    to_string(result.case_label) + "\",\"profiles\":[";
  for (std::size_t i = 0; i < result.profiles.size(); ++i) {
    const EquilibriumProfile& p = result.profiles[i];
    if (i > 0) out += ',';
    out += "{\"kappa1\":" + format_double(p.kappa1) +
           ",\"kappa2\":" + format_double(p.kappa2) + ",\"encoder_label\":";
    out += p.encoder_label ? "\"" + to_string(*p.encoder_label) + "\"" : "null";
    out += ",\"decoder_y\":\"" + to_string(p.decoder_y) +
           "\",\"decoder_y_class\":";
    append_labels(out, p.decoder_y_class);
    out += ",\"decoder_x\":\"" + to_string(p.decoder_x) +
           "\",\"decoder_x_ties\":";
    append_labels(out, p.decoder_x_ties);
    out += ',';
    append_payoffs(out, p.payoffs);
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string histogram_json(const oracle::Histogram& hist) {
  std::string out = "{\"trials\":" + std::to_string(hist.trials) +
                    ",\"counts\":";
  append_counts(out, hist);
  out += "}\n";
  return out;
}

std::string decoder_histograms_json(const oracle::DecoderBrHistograms& hists) {
  std::string out = "{\"trials\":" + std::to_string(hists.delta_hist.trials) +
                    ",\"delta_counts\":";
  append_counts(out, hists.delta_hist);
  out += ",\"epsilon_counts\":";
  append_counts(out, hists.epsilon_hist);
  out += "}\n";
  return out;
}

std::string sweep_csv(const std::vector<oracle::SweepRow>& rows) {
  std::string out =
      "kappa1,kappa2,mutual_info,distortion,encoder_payoff,decoder_payoff\n";
  for (const oracle::SweepRow& row : rows) {
    out += format_double(row.kappa1) + ',' + format_double(row.kappa2) + ',' +
           format_double(row.mutual_info) + ',' +
           format_double(row.distortion) + ',' +
           format_double(row.encoder_payoff) + ',' +
           format_double(row.decoder_payoff) + '\n';
  }
  return out;
}

std::string epsilon_map_csv(const oracle::DecoderBrHistograms& hists) {
  std::string out = "kappa1,kappa2,epsilon\n";
  const std::size_t n = static_cast<std::size_t>(hists.grid_n);
  for (std::size_t t = 0; t < hists.epsilon_map.size(); ++t) {
    const double k1 = static_cast<double>(t / n) / static_cast<double>(n - 1);
    const double k2 = static_cast<double>(t % n) / static_cast<double>(n - 1);
    out += format_double(k1) + ',' + format_double(k2) + ',' +
           to_string(hists.epsilon_map[t]) + '\n';
  }
  return out;
}

}  // namespace psg
