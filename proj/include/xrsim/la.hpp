#pragma once

#include <array>
#include <optional>

#include "xrsim/config.hpp"
#include "xrsim/mcs.hpp"
#include "xrsim/types.hpp"

namespace xrsim {

// Periodic CSI report: per-rank SINRs measured at `measured_tick`, usable by
// the scheduler from `available_tick` on.
struct CqiReport {
  Tick measured_tick = 0;
  Tick available_tick = 0;
  int max_rank = 1;
  std::array<double, 4> gamma_db{};  // gamma^r for r = 1..max_rank
};

// Outer-loop offset state. Single-offset mode applies one scalar to every
// rank; per-rank mode (MOOLLA) keeps an independent offset per rank and only
// the transmitted rank's offset moves on feedback.
class OllaState {
 public:
  OllaState() = default;
  OllaState(LaMode mode, int max_rank, const LaConfig& cfg)
      : mode_(mode), max_rank_(max_rank), cfg_(cfg) {
    offsets_.fill(0.0);
  }

  LaMode mode() const { return mode_; }
  int max_rank() const { return max_rank_; }
  double delta_up() const { return cfg_.delta_up_db; }
  double delta_down() const { return cfg_.delta_down_db(); }
  double tbler_target() const { return cfg_.tbler_target; }

  double offset(int rank) const {
    return mode_ == LaMode::SingleOlla ? offsets_[0] : offsets_[static_cast<size_t>(rank - 1)];
  }

  // ACK steps the offset down by delta_down, NACK up by delta_up.
  void apply_feedback(int transmitted_rank, Verdict v);

 private:
  LaMode mode_ = LaMode::SingleOlla;
  int max_rank_ = 1;
  LaConfig cfg_;
  std::array<double, 4> offsets_{};
};

double effective_sinr_db(const CqiReport& report, const OllaState& olla, int rank);

struct LaDecision {
  int rank = 1;
  int mcs = 0;
  double predicted_bits = 0.0;   // info bits over the reference allocation
  double effective_sinr_db = 0.0;
  bool feasible = false;         // false -> fallback (rank 1, MCS 0)
};

// Exhaustive (rank, MCS) search under the BLER target: among pairs with
// predicted BLER <= target, picks the throughput maximizer; ties go to the
// lower rank, then the lower MCS. Falls back to (1, 0) if nothing fits.
LaDecision select_rank_mcs(const CqiReport& report, const OllaState& olla,
                           const McsTable& table, int reference_prbs,
                           int data_res_per_prb, int max_rank);

// MCS re-selection at transmission time for an already-held rank.
int select_mcs_for_rank(const CqiReport& report, const OllaState& olla,
                        const McsTable& table, int rank);

// Combines the TGr members' reports according to the CSI scheme: CsiBest is
// the elementwise max, CsiUeX passes UE-X's report through.
std::array<double, 4> tgr_reported_sinr(const CqiReport& report_x,
                                        const std::optional<CqiReport>& report_t,
                                        CsiScheme scheme);

}  // namespace xrsim
