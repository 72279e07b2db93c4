#include "xrsim/mcs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xrsim {

namespace {

struct ModRate {
  int mod;
  double rate_x1024;
};

// 3GPP NR PDSCH MCS table with 256QAM, 28 indices.
constexpr ModRate kNrTable2[28] = {
    {2, 120.0},   {2, 193.0},   {2, 308.0},   {2, 449.0},   {2, 602.0},
    {4, 378.0},   {4, 434.0},   {4, 490.0},   {4, 553.0},   {4, 616.0},
    {4, 658.0},   {6, 466.0},   {6, 517.0},   {6, 567.0},   {6, 616.0},
    {6, 666.0},   {6, 719.0},   {6, 772.0},   {6, 822.0},   {6, 873.0},
    {8, 682.5},   {8, 711.0},   {8, 754.0},   {8, 797.0},   {8, 841.0},
    {8, 885.0},   {8, 916.5},   {8, 948.0},
};

}  // namespace

McsTable McsTable::nr_default(double bler_slope) {
  McsTable t;
  t.slope_ = bler_slope;
  t.entries_.reserve(28);
  for (int i = 0; i < 28; ++i) {
    McsEntry e;
    e.index = i;
    e.mod_order = kNrTable2[i].mod;
    e.code_rate = kNrTable2[i].rate_x1024 / 1024.0;
    e.efficiency = e.mod_order * e.code_rate;
    e.gamma_th_db = -6.0 + static_cast<double>(i) * 28.0 / 27.0;
    t.entries_.push_back(e);
  }
  t.validate();
  return t;
}

McsTable McsTable::from_csv(const std::string& path, double bler_slope) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open MCS table '" + path + "'");
  McsTable t;
  t.slope_ = bler_slope;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    // skip a header row
    if (line.find_first_not_of("0123456789.,- \t") != std::string::npos) continue;
    std::stringstream ss(line);
    std::string field;
    McsEntry e;
    int col = 0;
    while (std::getline(ss, field, ',')) {
      switch (col++) {
        case 0: e.index = std::stoi(field); break;
        case 1: e.mod_order = std::stoi(field); break;
        case 2: e.code_rate = std::stod(field); break;
        case 3: e.efficiency = std::stod(field); break;
        case 4: e.gamma_th_db = std::stod(field); break;
        default: break;
      }
    }
    if (col < 5) throw std::runtime_error("MCS table row needs 5 columns: " + line);
    t.entries_.push_back(e);
  }
  t.validate();
  return t;
}

const McsEntry& McsTable::entry(int mcs) const {
  if (mcs < 0 || mcs >= size()) throw std::out_of_range("MCS index out of range");
  return entries_[static_cast<size_t>(mcs)];
}

double McsTable::bler(double gamma_db, int mcs) const {
  const double x = slope_ * (gamma_db - entry(mcs).gamma_th_db);
  if (x > 40.0) return 0.0;
  if (x < -40.0) return 1.0;
  return 1.0 / (1.0 + std::exp(x));
}

void McsTable::validate() const {
  if (entries_.empty()) throw std::runtime_error("MCS table is empty");
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.mod_order != 2 && e.mod_order != 4 && e.mod_order != 6 && e.mod_order != 8)
      throw std::runtime_error("MCS mod_order must be 2/4/6/8");
    if (e.code_rate <= 0.0 || e.code_rate >= 1.0)
      throw std::runtime_error("MCS code_rate must be in (0, 1)");
    if (i > 0) {
      if (entries_[i].efficiency <= entries_[i - 1].efficiency)
        throw std::runtime_error("MCS efficiency must be strictly increasing");
      if (entries_[i].gamma_th_db <= entries_[i - 1].gamma_th_db)
        throw std::runtime_error("MCS gamma_th must be strictly increasing");
    }
  }
}

std::int64_t tb_info_bits(int prbs, const McsEntry& mcs, int rank, int data_res_per_prb) {
  const double bits = static_cast<double>(prbs) * data_res_per_prb * mcs.efficiency * rank;
  return static_cast<std::int64_t>(std::floor(bits + 1e-9));
}

std::int64_t tb_coded_bits(int prbs, const McsEntry& mcs, int rank, int data_res_per_prb) {
  return static_cast<std::int64_t>(prbs) * data_res_per_prb * mcs.mod_order * rank;
}

}  // namespace xrsim
