#include "xrsim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace xrsim {

double RadioConfig::effective_pl0_db() const {
  if (pl0_db != 0.0) return pl0_db;
  return 32.4 + 20.0 * std::log10(carrier_ghz);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void bad_value(const std::string& section, const std::string& key,
                            const std::string& value) {
  throw ConfigError("invalid value '" + value + "' for config key '" + section + "." + key + "'");
}

double parse_double(const std::string& section, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) bad_value(section, key, v);
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    bad_value(section, key, v);
  }
}

std::int64_t parse_int(const std::string& section, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const std::int64_t i = std::stoll(v, &pos);
    if (pos != v.size()) bad_value(section, key, v);
    return i;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    bad_value(section, key, v);
  }
}

std::uint64_t parse_u64(const std::string& section, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const std::uint64_t i = std::stoull(v, &pos);
    if (pos != v.size()) bad_value(section, key, v);
    return i;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    bad_value(section, key, v);
  }
}

std::array<double, 4> parse_vec4(const std::string& section, const std::string& key,
                                 const std::string& v) {
  std::array<double, 4> out{};
  std::stringstream ss(v);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 4) bad_value(section, key, v);
    out[n++] = parse_double(section, key, trim(item));
  }
  if (n != 4) bad_value(section, key, v);
  return out;
}

}  // namespace

std::string to_string(DeviceMode m) { return m == DeviceMode::Legacy ? "legacy" : "tgr"; }

std::string to_string(TlMode m) {
  switch (m) {
    case TlMode::Ideal: return "ideal";
    case TlMode::WiFi5: return "wifi5";
    case TlMode::WiFi6: return "wifi6";
    default: return "wifi7";
  }
}

std::string to_string(LaMode m) { return m == LaMode::SingleOlla ? "single" : "moolla"; }

std::string to_string(CsiScheme m) { return m == CsiScheme::CsiUeX ? "uex" : "best"; }

void set_config_key(SimConfig& cfg, const std::string& section_in,
                    const std::string& key_in, const std::string& value_in) {
  const std::string section = lower(trim(section_in));
  const std::string key = lower(trim(key_in));
  const std::string value = trim(value_in);
  const std::string lv = lower(value);

  auto d = [&] { return parse_double(section, key, value); };
  auto i = [&] { return parse_int(section, key, value); };

  if (section == "sim") {
    if (key == "num_cells") cfg.num_cells = static_cast<int>(i());
    else if (key == "ues_per_cell") cfg.ues_per_cell = static_cast<int>(i());
    else if (key == "device_mode") {
      if (lv == "legacy") cfg.device_mode = DeviceMode::Legacy;
      else if (lv == "tgr") cfg.device_mode = DeviceMode::Tgr;
      else bad_value(section, key, value);
    } else if (key == "tl_mode") {
      if (lv == "ideal") cfg.tl_mode = TlMode::Ideal;
      else if (lv == "wifi5") cfg.tl_mode = TlMode::WiFi5;
      else if (lv == "wifi6") cfg.tl_mode = TlMode::WiFi6;
      else if (lv == "wifi7") cfg.tl_mode = TlMode::WiFi7;
      else bad_value(section, key, value);
    } else if (key == "la_mode") {
      if (lv == "single") cfg.la_mode = LaMode::SingleOlla;
      else if (lv == "moolla") cfg.la_mode = LaMode::Moolla;
      else bad_value(section, key, value);
    } else if (key == "max_rank") cfg.max_rank = static_cast<int>(i());
    else if (key == "warmup_s") cfg.warmup_s = d();
    else if (key == "measure_s") cfg.measure_s = d();
    else if (key == "drain_s") cfg.drain_s = d();
    else if (key == "drops") cfg.drops = static_cast<int>(i());
    else if (key == "pdb_ms") cfg.pdb_ms = d();
    else if (key == "master_seed") cfg.master_seed = parse_u64(section, key, value);
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "traffic") {
    if (key == "fps") cfg.traffic.fps = d();
    else if (key == "jitter_mean_ms") cfg.traffic.jitter_ms.mean = d();
    else if (key == "jitter_std_ms") cfg.traffic.jitter_ms.stddev = d();
    else if (key == "jitter_low_ms") cfg.traffic.jitter_ms.low = d();
    else if (key == "jitter_high_ms") cfg.traffic.jitter_ms.high = d();
    else if (key == "size_mean_kb") cfg.traffic.size_kb.mean = d();
    else if (key == "size_std_kb") cfg.traffic.size_kb.stddev = d();
    else if (key == "size_low_kb") cfg.traffic.size_kb.low = d();
    else if (key == "size_high_kb") cfg.traffic.size_kb.high = d();
    else if (key == "max_sdu_bytes") cfg.traffic.max_sdu_bytes = i();
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "radio") {
    if (key == "carrier_ghz") cfg.radio.carrier_ghz = d();
    else if (key == "pl0_db") cfg.radio.pl0_db = d();
    else if (key == "pathloss_exp") cfg.radio.pathloss_exp = d();
    else if (key == "shadowing_sigma_db") cfg.radio.shadowing_sigma_db = d();
    else if (key == "shadowing_corr_tgr") cfg.radio.shadowing_corr_tgr = d();
    else if (key == "fading_sigma_db") cfg.radio.fading_sigma_db = d();
    else if (key == "fading_rho_slot") cfg.radio.fading_rho_slot = d();
    else if (key == "fading_corr_tgr") cfg.radio.fading_corr_tgr = d();
    else if (key == "tx_power_dbm") cfg.radio.tx_power_dbm = d();
    else if (key == "noise_figure_db") cfg.radio.noise_figure_db = d();
    else if (key == "bler_slope") cfg.radio.bler_slope = d();
    else if (key == "mcs_csv") cfg.radio.mcs_csv = value;
    else if (key == "rank_penalty_legacy_db")
      cfg.radio.rank_penalty_legacy_db = parse_vec4(section, key, value);
    else if (key == "rank_penalty_tgr_db")
      cfg.radio.rank_penalty_tgr_db = parse_vec4(section, key, value);
    else if (key == "intra_tgr_distance_m") cfg.radio.intra_tgr_distance_m = d();
    else if (key == "gnb_height_m") cfg.radio.gnb_height_m = d();
    else if (key == "ue_height_m") cfg.radio.ue_height_m = d();
    else if (key == "hall_x_m") cfg.radio.hall_x_m = d();
    else if (key == "hall_y_m") cfg.radio.hall_y_m = d();
    else if (key == "isd_m") cfg.radio.isd_m = d();
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "la") {
    if (key == "delta_up_db") cfg.la.delta_up_db = d();
    else if (key == "tbler_target") cfg.la.tbler_target = d();
    else if (key == "clamp_lo_db") cfg.la.clamp_lo_db = d();
    else if (key == "clamp_hi_db") cfg.la.clamp_hi_db = d();
    else if (key == "csi_scheme") {
      if (lv == "uex") cfg.la.csi_scheme = CsiScheme::CsiUeX;
      else if (lv == "best") cfg.la.csi_scheme = CsiScheme::CsiBest;
      else bad_value(section, key, value);
    } else if (key == "cqi_period_ms") cfg.la.cqi_period_ms = d();
    else if (key == "cqi_delay_ms") cfg.la.cqi_delay_ms = d();
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "harq") {
    if (key == "num_processes") cfg.harq.num_processes = static_cast<int>(i());
    else if (key == "max_retx") cfg.harq.max_retx = static_cast<int>(i());
    else if (key == "ue_rx_proc_symbols") cfg.harq.ue_rx_proc_symbols = static_cast<int>(i());
    else if (key == "gnb_proc_symbols") cfg.harq.gnb_proc_symbols = d();
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "sched") {
    if (key == "pf_tau_slots") cfg.sched.pf_tau_slots = static_cast<int>(i());
    else if (key == "total_prbs") cfg.sched.total_prbs = static_cast<int>(i());
    else if (key == "s_slot_data_symbols") cfg.sched.s_slot_data_symbols = static_cast<int>(i());
    else if (key == "dmrs_overhead_re") cfg.sched.dmrs_overhead_re = static_cast<int>(i());
    else if (key == "buffer_cap_bytes") cfg.sched.buffer_cap_bytes = i();
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "tether") {
    if (key == "dbps") cfg.tether.dbps = d();
    else if (key == "t_ofdm_us") cfg.tether.t_ofdm_us = d();
    else if (key == "cw_min") cfg.tether.cw_min = static_cast<int>(i());
    else if (key == "cw_max") cfg.tether.cw_max = static_cast<int>(i());
    else if (key == "n_max") cfg.tether.n_max = static_cast<int>(i());
    else if (key == "slot_us") cfg.tether.slot_us = d();
    else if (key == "sifs_us") cfg.tether.sifs_us = d();
    else if (key == "difs_us") cfg.tether.difs_us = d();
    else if (key == "t_rts_us") cfg.tether.t_rts_us = d();
    else if (key == "t_cts_us") cfg.tether.t_cts_us = d();
    else if (key == "t_phy_us") cfg.tether.t_phy_us = d();
    else if (key == "header_bytes") cfg.tether.header_bytes = static_cast<int>(i());
    else if (key == "p_c") cfg.tether.p_c = d();
    else if (key == "t_ack_us") cfg.tether.t_ack_us = d();
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else if (section == "coop") {
    if (key == "quant_bits") cfg.coop.quant_bits = static_cast<int>(i());
    else if (key == "pdcch_mcs") cfg.coop.pdcch_mcs = static_cast<int>(i());
    else throw ConfigError("unknown config key '" + section + "." + key + "'");
  } else {
    throw ConfigError("unknown config section '" + section + "' (key '" + section + "." + key + "')");
  }
}

void apply_override(SimConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("override must have the form section.key=value: '" + assignment + "'");
  }
  const std::string path = trim(assignment.substr(0, eq));
  const std::string value = assignment.substr(eq + 1);
  const auto dot = path.find('.');
  if (dot == std::string::npos) {
    throw ConfigError("override key must be section.key: '" + path + "'");
  }
  set_config_key(cfg, path.substr(0, dot), path.substr(dot + 1), value);
}

void parse_config_text(SimConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("malformed section header at line " + std::to_string(lineno));
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected key = value at line " + std::to_string(lineno));
    }
    if (section.empty()) {
      throw ConfigError("key outside any [section] at line " + std::to_string(lineno));
    }
    set_config_key(cfg, section, line.substr(0, eq), line.substr(eq + 1));
  }
}

SimConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  SimConfig cfg;
  parse_config_text(cfg, ss.str());
  cfg.validate();
  return cfg;
}

void SimConfig::validate() const {
  auto fail = [](const std::string& key, const std::string& why) {
    throw ConfigError("config key '" + key + "' " + why);
  };
  if (num_cells < 1) fail("sim.num_cells", "must be >= 1");
  if (ues_per_cell < 1) fail("sim.ues_per_cell", "must be >= 1");
  if (max_rank < 1 || max_rank > 4) fail("sim.max_rank", "must be in [1, 4]");
  if (warmup_s < 0.0) fail("sim.warmup_s", "must be >= 0");
  if (measure_s <= 0.0) fail("sim.measure_s", "must be > 0");
  if (drops < 1) fail("sim.drops", "must be >= 1");
  if (pdb_ms <= 0.0) fail("sim.pdb_ms", "must be > 0");
  if (traffic.fps <= 0.0) fail("traffic.fps", "must be > 0");
  if (traffic.max_sdu_bytes <= 0) fail("traffic.max_sdu_bytes", "must be > 0");
  try {
    traffic.jitter_ms.validate();
  } catch (const std::exception& e) {
    fail("traffic.jitter_*_ms", e.what());
  }
  try {
    traffic.size_kb.validate();
  } catch (const std::exception& e) {
    fail("traffic.size_*_kb", e.what());
  }
  if (radio.pathloss_exp <= 0.0) fail("radio.pathloss_exp", "must be > 0");
  if (radio.shadowing_sigma_db < 0.0) fail("radio.shadowing_sigma_db", "must be >= 0");
  for (int r = 1; r < 4; ++r) {
    if (radio.rank_penalty_legacy_db[r] < radio.rank_penalty_legacy_db[r - 1])
      fail("radio.rank_penalty_legacy_db", "must be non-decreasing in rank");
    if (radio.rank_penalty_tgr_db[r] < radio.rank_penalty_tgr_db[r - 1])
      fail("radio.rank_penalty_tgr_db", "must be non-decreasing in rank");
  }
  if (radio.rank_penalty_legacy_db[0] != 0.0) fail("radio.rank_penalty_legacy_db", "rho1 must be 0");
  if (radio.rank_penalty_tgr_db[0] != 0.0) fail("radio.rank_penalty_tgr_db", "rho1 must be 0");
  if (la.tbler_target <= 0.0 || la.tbler_target >= 1.0) fail("la.tbler_target", "must be in (0, 1)");
  if (la.delta_up_db <= 0.0) fail("la.delta_up_db", "must be > 0");
  if (la.clamp_lo_db >= la.clamp_hi_db) fail("la.clamp_lo_db", "must be < la.clamp_hi_db");
  if (la.cqi_period_ms <= 0.0) fail("la.cqi_period_ms", "must be > 0");
  if (la.cqi_delay_ms < 0.0) fail("la.cqi_delay_ms", "must be >= 0");
  if (harq.num_processes < 1) fail("harq.num_processes", "must be >= 1");
  if (harq.max_retx < 0) fail("harq.max_retx", "must be >= 0");
  if (sched.total_prbs < 1) fail("sched.total_prbs", "must be >= 1");
  if (sched.pf_tau_slots < 1) fail("sched.pf_tau_slots", "must be >= 1");
  if (sched.s_slot_data_symbols < 0 || sched.s_slot_data_symbols > kSymbolsPerSlot)
    fail("sched.s_slot_data_symbols", "must be in [0, 14]");
  if (sched.dmrs_overhead_re < 0 || sched.dmrs_overhead_re >= 12 * kSymbolsPerSlot)
    fail("sched.dmrs_overhead_re", "must be in [0, 168)");
  if (tether.p_c < 0.0 || tether.p_c >= 1.0) fail("tether.p_c", "must be in [0, 1)");
  if (tether.n_max < 0) fail("tether.n_max", "must be >= 0");
  if (tether.cw_min < 1) fail("tether.cw_min", "must be >= 1");
  if (tether.cw_max < tether.cw_min) fail("tether.cw_max", "must be >= tether.cw_min");
  if (tether.t_ofdm_us <= 0.0) fail("tether.t_ofdm_us", "must be > 0");
  if (tether.dbps < 0.0) fail("tether.dbps", "must be >= 0");
  if (coop.quant_bits < 1) fail("coop.quant_bits", "must be >= 1");
}

}  // namespace xrsim
