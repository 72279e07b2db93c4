#pragma once

#include <array>
#include <vector>

#include "xrsim/config.hpp"
#include "xrsim/rng.hpp"
#include "xrsim/types.hpp"

namespace xrsim {

struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double distance_3d(const Position& a, const Position& b);

// Log-distance pathloss, InH-like: PL(d) = PL0 + 10 * alpha * log10(d / 1 m).
double pathloss_db(double pl0_db, double alpha, double dist_m);

// Equal power split across layers plus a rank-dependent receiver penalty.
double per_layer_sinr_db(double wideband_db, int rank, const std::array<double, 4>& penalty_db);

// Chase-combining style linear SINR addition.
double soft_combined_sinr_db(double gamma_x_db, double gamma_t_db);

double lin_from_db(double db);
double db_from_lin(double lin);

// Per-UE link state towards every cell. Fading is a slot-correlated AR(1)
// term on the serving link; interference couples through per-cell activity.
struct UeLinkState {
  Position pos;
  int serving_cell = 0;
  std::vector<double> rx_dbm;  // mean received power per cell (pathloss + shadowing)
  double fading_db = 0.0;      // current fast-fading value
};

class RadioModel {
 public:
  // Builds the deployment for one drop: cell anchors, UE placement,
  // shadowing, association. One entity = one legacy UE or one TGr; for a
  // TGr both members are placed and associated together.
  RadioModel(const RadioConfig& cfg, int num_cells, int entities_per_cell,
             bool with_partner, int total_prbs, std::uint64_t master_seed,
             std::uint64_t drop);

  int num_cells() const { return static_cast<int>(cell_pos_.size()); }
  const Position& cell_position(int cell) const { return cell_pos_[cell]; }

  int num_entities() const { return static_cast<int>(ue_x_.size()); }
  const UeLinkState& ue_x(int entity) const { return ue_x_[entity]; }
  const UeLinkState& ue_t(int entity) const { return ue_t_[entity]; }
  bool with_partner() const { return with_partner_; }

  // Advances every UE's fading process by one slot.
  void step_fading();

  // Previous-slot PRB utilization per cell, in [0, 1].
  void set_activity(const std::vector<double>& activity);

  double wideband_sinr_db(const UeLinkState& ue) const;

  double noise_dbm() const { return noise_dbm_; }

 private:
  void place_entity(int entity, int cell, RngStream& place_rng);

  RadioConfig cfg_;
  bool with_partner_;
  double noise_dbm_;
  std::vector<Position> cell_pos_;
  std::vector<UeLinkState> ue_x_;
  std::vector<UeLinkState> ue_t_;  // unused when with_partner_ is false
  std::vector<double> activity_;
  // AR(1) states (unit variance); partner fading mixes in the X component.
  std::vector<double> ar_x_, ar_t_;
  std::vector<RngStream> fad_rng_x_, fad_rng_t_;
};

// Cell anchor grid: two rows across the hall, `isd` apart, centered.
std::vector<Position> cell_grid(const RadioConfig& cfg, int num_cells);

}  // namespace xrsim
