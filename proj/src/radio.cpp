#include "xrsim/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace xrsim {

double distance_3d(const Position& a, const Position& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double pathloss_db(double pl0_db, double alpha, double dist_m) {
  const double d = std::max(dist_m, 1.0);
  return pl0_db + 10.0 * alpha * std::log10(d);
}

double per_layer_sinr_db(double wideband_db, int rank, const std::array<double, 4>& penalty_db) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("rank must be in [1, 4]");
  return wideband_db - 10.0 * std::log10(static_cast<double>(rank)) -
         penalty_db[static_cast<size_t>(rank - 1)];
}

double lin_from_db(double db) { return std::pow(10.0, db / 10.0); }
double db_from_lin(double lin) { return 10.0 * std::log10(lin); }

double soft_combined_sinr_db(double gamma_x_db, double gamma_t_db) {
  return db_from_lin(lin_from_db(gamma_x_db) + lin_from_db(gamma_t_db));
}

std::vector<Position> cell_grid(const RadioConfig& cfg, int num_cells) {
  std::vector<Position> out;
  out.reserve(static_cast<size_t>(num_cells));
  if (num_cells == 1) {
    out.push_back({cfg.hall_x_m / 2.0, cfg.hall_y_m / 2.0, cfg.gnb_height_m});
    return out;
  }
  const int cols = (num_cells + 1) / 2;
  const double x0 = cfg.hall_x_m / 2.0 - (cols - 1) * cfg.isd_m / 2.0;
  const double y_lo = cfg.hall_y_m / 2.0 - cfg.isd_m / 2.0;
  const double y_hi = cfg.hall_y_m / 2.0 + cfg.isd_m / 2.0;
  for (int i = 0; i < num_cells; ++i) {
    const int col = i % cols;
    const bool upper = i >= cols;
    out.push_back({x0 + col * cfg.isd_m, upper ? y_hi : y_lo, cfg.gnb_height_m});
  }
  return out;
}

RadioModel::RadioModel(const RadioConfig& cfg, int num_cells, int entities_per_cell,
                       bool with_partner, int total_prbs, std::uint64_t master_seed,
                       std::uint64_t drop)
    : cfg_(cfg), with_partner_(with_partner) {
  const double bandwidth_hz = static_cast<double>(total_prbs) * 12.0 * 30e3;
  noise_dbm_ = -174.0 + 10.0 * std::log10(bandwidth_hz) + cfg.noise_figure_db;

  cell_pos_ = cell_grid(cfg, num_cells);
  const int n = num_cells * entities_per_cell;
  ue_x_.resize(static_cast<size_t>(n));
  ue_t_.resize(static_cast<size_t>(n));
  ar_x_.assign(static_cast<size_t>(n), 0.0);
  ar_t_.assign(static_cast<size_t>(n), 0.0);
  activity_.assign(static_cast<size_t>(num_cells), 0.0);

  fad_rng_x_.reserve(static_cast<size_t>(n));
  fad_rng_t_.reserve(static_cast<size_t>(n));
  int entity = 0;
  for (int c = 0; c < num_cells; ++c) {
    for (int u = 0; u < entities_per_cell; ++u, ++entity) {
      RngStream place(master_seed, drop, static_cast<std::uint64_t>(c),
                      static_cast<std::uint64_t>(u), RngPurpose::Placement);
      place_entity(entity, c, place);
      fad_rng_x_.emplace_back(master_seed, drop, static_cast<std::uint64_t>(c),
                              static_cast<std::uint64_t>(u), RngPurpose::FadingX);
      fad_rng_t_.emplace_back(master_seed, drop, static_cast<std::uint64_t>(c),
                              static_cast<std::uint64_t>(u), RngPurpose::FadingT);
      // stationary start
      ar_x_[static_cast<size_t>(entity)] = fad_rng_x_.back().normal();
      ar_t_[static_cast<size_t>(entity)] = fad_rng_t_.back().normal();
      RngStream shad_x(master_seed, drop, static_cast<std::uint64_t>(c),
                       static_cast<std::uint64_t>(u), RngPurpose::ShadowingX);
      RngStream shad_t(master_seed, drop, static_cast<std::uint64_t>(c),
                       static_cast<std::uint64_t>(u), RngPurpose::ShadowingT);

      auto& x = ue_x_[static_cast<size_t>(entity)];
      auto& t = ue_t_[static_cast<size_t>(entity)];
      const double pl0 = cfg_.effective_pl0_db();
      x.rx_dbm.resize(cell_pos_.size());
      t.rx_dbm.resize(cell_pos_.size());
      const double corr = cfg_.shadowing_corr_tgr;
      for (size_t cc = 0; cc < cell_pos_.size(); ++cc) {
        const double sx = shad_x.normal(0.0, cfg_.shadowing_sigma_db);
        const double st_own = shad_t.normal(0.0, cfg_.shadowing_sigma_db);
        const double st = corr * sx + std::sqrt(std::max(0.0, 1.0 - corr * corr)) * st_own;
        x.rx_dbm[cc] = cfg_.tx_power_dbm -
                       pathloss_db(pl0, cfg_.pathloss_exp, distance_3d(x.pos, cell_pos_[cc])) - sx;
        t.rx_dbm[cc] = cfg_.tx_power_dbm -
                       pathloss_db(pl0, cfg_.pathloss_exp, distance_3d(t.pos, cell_pos_[cc])) - st;
      }
      // strongest mean power wins; the partner inherits UE-X's serving cell
      int best = 0;
      for (size_t cc = 1; cc < cell_pos_.size(); ++cc) {
        if (x.rx_dbm[cc] > x.rx_dbm[static_cast<size_t>(best)]) best = static_cast<int>(cc);
      }
      x.serving_cell = best;
      t.serving_cell = best;
      x.fading_db = cfg_.fading_sigma_db * ar_x_[static_cast<size_t>(entity)];
      const double fc = cfg_.fading_corr_tgr;
      t.fading_db = cfg_.fading_sigma_db *
                    (fc * ar_x_[static_cast<size_t>(entity)] +
                     std::sqrt(std::max(0.0, 1.0 - fc * fc)) * ar_t_[static_cast<size_t>(entity)]);
    }
  }
}

void RadioModel::place_entity(int entity, int cell, RngStream& rng) {
  auto& x = ue_x_[static_cast<size_t>(entity)];
  auto& t = ue_t_[static_cast<size_t>(entity)];
  (void)cell;  // placement is uniform over the hall; association picks the cell
  x.pos = {rng.uniform(0.0, cfg_.hall_x_m), rng.uniform(0.0, cfg_.hall_y_m), cfg_.ue_height_m};
  const double bearing = rng.uniform(0.0, 2.0 * M_PI);
  t.pos = {x.pos.x + cfg_.intra_tgr_distance_m * std::cos(bearing),
           x.pos.y + cfg_.intra_tgr_distance_m * std::sin(bearing), cfg_.ue_height_m};
}

void RadioModel::step_fading() {
  const double rho = cfg_.fading_rho_slot;
  const double mix = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  const double fc = cfg_.fading_corr_tgr;
  const double fmix = std::sqrt(std::max(0.0, 1.0 - fc * fc));
  for (size_t i = 0; i < ue_x_.size(); ++i) {
    ar_x_[i] = rho * ar_x_[i] + mix * fad_rng_x_[i].normal();
    ar_t_[i] = rho * ar_t_[i] + mix * fad_rng_t_[i].normal();
    ue_x_[i].fading_db = cfg_.fading_sigma_db * ar_x_[i];
    ue_t_[i].fading_db = cfg_.fading_sigma_db * (fc * ar_x_[i] + fmix * ar_t_[i]);
  }
}

void RadioModel::set_activity(const std::vector<double>& activity) {
  if (activity.size() != activity_.size())
    throw std::invalid_argument("activity vector size mismatch");
  activity_ = activity;
}

double RadioModel::wideband_sinr_db(const UeLinkState& ue) const {
  const double serving_lin =
      lin_from_db(ue.rx_dbm[static_cast<size_t>(ue.serving_cell)] + ue.fading_db);
  double denom = lin_from_db(noise_dbm_);
  for (size_t c = 0; c < ue.rx_dbm.size(); ++c) {
    if (static_cast<int>(c) == ue.serving_cell) continue;
    denom += lin_from_db(ue.rx_dbm[c]) * activity_[c];
  }
  return db_from_lin(serving_lin / denom);
}

}  // namespace xrsim
