#include "xrsim/la.hpp"

#include <algorithm>
#include <stdexcept>

namespace xrsim {

void OllaState::apply_feedback(int transmitted_rank, Verdict v) {
  if (transmitted_rank < 1 || transmitted_rank > max_rank_)
    throw std::invalid_argument("OLLA feedback rank out of range");
  const size_t idx =
      mode_ == LaMode::SingleOlla ? 0 : static_cast<size_t>(transmitted_rank - 1);
  double& off = offsets_[idx];
  off += is_ack(v) ? -delta_down() : delta_up();
  off = std::clamp(off, cfg_.clamp_lo_db, cfg_.clamp_hi_db);
}

double effective_sinr_db(const CqiReport& report, const OllaState& olla, int rank) {
  if (rank < 1 || rank > report.max_rank)
    throw std::invalid_argument("effective_sinr_db: rank beyond report");
  return report.gamma_db[static_cast<size_t>(rank - 1)] - olla.offset(rank);
}

LaDecision select_rank_mcs(const CqiReport& report, const OllaState& olla,
                           const McsTable& table, int reference_prbs,
                           int data_res_per_prb, int max_rank) {
  LaDecision best;
  best.rank = 1;
  best.mcs = 0;
  best.feasible = false;
  best.predicted_bits = 0.0;
  best.effective_sinr_db = effective_sinr_db(report, olla, 1);

  const int ranks = std::min(max_rank, report.max_rank);
  for (int r = 1; r <= ranks; ++r) {
    const double eff_sinr = effective_sinr_db(report, olla, r);
    for (int m = 0; m < table.size(); ++m) {
      if (table.bler(eff_sinr, m) > olla.tbler_target()) continue;
      const double bits = static_cast<double>(
          tb_info_bits(reference_prbs, table.entry(m), r, data_res_per_prb));
      if (!best.feasible || bits > best.predicted_bits) {
        best.rank = r;
        best.mcs = m;
        best.predicted_bits = bits;
        best.effective_sinr_db = eff_sinr;
        best.feasible = true;
      }
    }
  }
  return best;
}

int select_mcs_for_rank(const CqiReport& report, const OllaState& olla,
                        const McsTable& table, int rank) {
  const double eff_sinr = effective_sinr_db(report, olla, rank);
  int best = 0;
  for (int m = table.size() - 1; m >= 0; --m) {
    if (table.bler(eff_sinr, m) <= olla.tbler_target()) {
      best = m;
      break;
    }
  }
  return best;
}

std::array<double, 4> tgr_reported_sinr(const CqiReport& report_x,
                                        const std::optional<CqiReport>& report_t,
                                        CsiScheme scheme) {
  if (scheme == CsiScheme::CsiUeX) return report_x.gamma_db;
  if (!report_t.has_value())
    throw std::invalid_argument("CsiBest requires a report from UE-T");
  std::array<double, 4> out{};
  for (size_t r = 0; r < out.size(); ++r) {
    out[r] = std::max(report_x.gamma_db[r], report_t->gamma_db[r]);
  }
  return out;
}

}  // namespace xrsim
