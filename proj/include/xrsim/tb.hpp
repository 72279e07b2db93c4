#pragma once

#include <cstdint>
#include <vector>

#include "xrsim/types.hpp"

namespace xrsim {

// Byte range of one application frame carried inside a TB.
struct FrameChunk {
  std::int64_t frame_id = 0;
  std::int64_t bytes = 0;
};

// One scheduled downlink data unit. For a TGr the same TB reaches both
// members over a single PRB allocation (PTM).
struct TransportBlock {
  std::int64_t tb_id = 0;
  int entity = 0;     // owner UE / TGr (global index)
  int harq_id = 0;
  int rank = 1;
  int mcs = 0;
  int prbs = 0;
  std::int64_t info_bits = 0;
  std::int64_t coded_bits = 0;
  std::int64_t carried_bytes = 0;  // payload actually drained from the buffer
  Tick first_tx_tick = 0;
  bool is_retx = false;
  std::vector<FrameChunk> chunks;
};

}  // namespace xrsim
