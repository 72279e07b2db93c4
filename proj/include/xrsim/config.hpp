#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "xrsim/trunc_normal.hpp"
#include "xrsim/types.hpp"

namespace xrsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrafficConfig {
  double fps = 60.0;
  TruncNormal jitter_ms{0.0, 2.0, -4.0, 4.0};
  TruncNormal size_kb{93.0, 10.0, 46.0, 141.0};
  std::int64_t max_sdu_bytes = 1500;
};

struct RadioConfig {
  double carrier_ghz = 4.0;
  double pl0_db = 0.0;  // 0 -> derived as 32.4 + 20 log10(carrier_ghz)
  double pathloss_exp = 1.73;
  double shadowing_sigma_db = 3.0;
  double shadowing_corr_tgr = 0.8;
  double fading_sigma_db = 2.0;
  double fading_rho_slot = 0.98;
  double fading_corr_tgr = 0.8;
  double tx_power_dbm = 31.0;
  double noise_figure_db = 9.0;
  double bler_slope = 1.5;  // logistic steepness, 1/dB
  std::string mcs_csv;      // optional CSV override of the built-in table
  std::array<double, 4> rank_penalty_legacy_db{0.0, 1.0, 2.5, 4.5};
  std::array<double, 4> rank_penalty_tgr_db{0.0, 0.5, 1.25, 2.25};
  double intra_tgr_distance_m = 1.0;
  double gnb_height_m = 3.0;
  double ue_height_m = 1.5;
  double hall_x_m = 120.0;
  double hall_y_m = 50.0;
  double isd_m = 20.0;

  double effective_pl0_db() const;
};

struct LaConfig {
  double delta_up_db = 0.5;
  double tbler_target = 0.1;
  double clamp_lo_db = -10.0;
  double clamp_hi_db = 10.0;
  CsiScheme csi_scheme = CsiScheme::CsiUeX;
  double cqi_period_ms = 2.0;
  double cqi_delay_ms = 2.0;

  double delta_down_db() const { return delta_up_db * tbler_target / (1.0 - tbler_target); }
};

struct HarqConfig {
  int num_processes = 16;
  int max_retx = 3;  // retransmissions after the initial one
  int ue_rx_proc_symbols = 6;
  double gnb_proc_symbols = 2.75;
};

struct SchedConfig {
  int pf_tau_slots = 100;
  int total_prbs = 273;  // 100 MHz @ 30 kHz SCS
  int s_slot_data_symbols = 10;
  int dmrs_overhead_re = 48;  // REs removed per PRB per slot for DMRS etc.
  std::int64_t buffer_cap_bytes = 0;  // 0 = unbounded
};

struct TetherConfig {
  double dbps = 0.0;  // data bits per OFDM symbol; 0 -> derived from tl_mode
  double t_ofdm_us = 13.6;
  int cw_min = 15;
  int cw_max = 1023;
  int n_max = 3;
  double slot_us = 9.0;
  double sifs_us = 16.0;
  double difs_us = 34.0;
  double t_rts_us = 27.0;
  double t_cts_us = 19.0;
  double t_phy_us = 120.0;
  int header_bytes = 36;
  double p_c = 0.10;
  double t_ack_us = 32.0;
};

struct CoopConfig {
  int quant_bits = 5;  // LLR quantization for forwarded soft TBs
  int pdcch_mcs = 0;   // control channel decoded against this MCS's curve
};

struct SimConfig {
  int num_cells = 12;
  int ues_per_cell = 5;
  DeviceMode device_mode = DeviceMode::Tgr;
  TlMode tl_mode = TlMode::Ideal;
  LaMode la_mode = LaMode::Moolla;
  int max_rank = 4;
  double warmup_s = 9.0;
  double measure_s = 9.0;
  double drain_s = 0.1;
  int drops = 10;
  double pdb_ms = 10.0;
  std::uint64_t master_seed = 1;

  TrafficConfig traffic;
  RadioConfig radio;
  LaConfig la;
  HarqConfig harq;
  SchedConfig sched;
  TetherConfig tether;
  CoopConfig coop;

  void validate() const;  // throws ConfigError naming the offending key
};

// Sets one "section.key = value" entry; throws ConfigError on unknown keys
// or unparsable values.
void set_config_key(SimConfig& cfg, const std::string& section,
                    const std::string& key, const std::string& value);

// Applies "section.key=value" (CLI override syntax).
void apply_override(SimConfig& cfg, const std::string& assignment);

// INI-style text: [section] headers, key = value lines, '#'/';' comments.
void parse_config_text(SimConfig& cfg, const std::string& text);
SimConfig parse_config_file(const std::string& path);

std::string to_string(DeviceMode m);
std::string to_string(TlMode m);
std::string to_string(LaMode m);
std::string to_string(CsiScheme m);

}  // namespace xrsim
