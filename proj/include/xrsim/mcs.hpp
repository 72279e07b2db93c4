#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xrsim {

struct McsEntry {
  int index = 0;
  int mod_order = 2;        // bits per symbol: 2/4/6/8 (QPSK..256QAM)
  double code_rate = 0.0;   // in (0, 1)
  double efficiency = 0.0;  // information bits per RE
  double gamma_th_db = 0.0; // SINR at which BLER = 0.5
};

// SINR -> BLER link abstraction: one logistic curve per MCS index.
class McsTable {
 public:
  // 28-entry table, QPSK..256QAM, thresholds uniform over [-6, 22] dB.
  static McsTable nr_default(double bler_slope = 1.5);

  // CSV columns: index,mod_order,code_rate,efficiency,gamma_th_db
  static McsTable from_csv(const std::string& path, double bler_slope = 1.5);

  int size() const { return static_cast<int>(entries_.size()); }
  const McsEntry& entry(int mcs) const;

  // BLER = 1 / (1 + exp(k * (gamma - gamma_th))), decreasing in gamma.
  double bler(double gamma_db, int mcs) const;

  double bler_slope() const { return slope_; }

  void validate() const;  // monotone efficiency and thresholds, mod orders

 private:
  std::vector<McsEntry> entries_;
  double slope_ = 1.5;
};

// Information bits carried by a TB: floor(prbs * REs/PRB * efficiency * rank).
std::int64_t tb_info_bits(int prbs, const McsEntry& mcs, int rank, int data_res_per_prb);

// Coded (channel) bits of the same TB: prbs * REs/PRB * mod_order * rank.
std::int64_t tb_coded_bits(int prbs, const McsEntry& mcs, int rank, int data_res_per_prb);

}  // namespace xrsim
