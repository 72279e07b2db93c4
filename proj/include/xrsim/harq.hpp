#pragma once

#include <optional>
#include <vector>

#include "xrsim/clock.hpp"
#include "xrsim/tb.hpp"
#include "xrsim/types.hpp"

namespace xrsim {

enum class SawState { Free, AwaitingFeedback, AwaitingRetx };

// One stop-and-wait HARQ process. Holds the TB across retransmissions and
// the chase-combining energy accumulated at each receiver.
struct SawProcess {
  SawState state = SawState::Free;
  TransportBlock tb;
  int tx_count = 0;            // transmissions so far (1 = initial)
  double acc_lin_x = 0.0;      // accumulated linear SINR at UE-X
  double acc_lin_t = 0.0;      // accumulated linear SINR at UE-T
  Tick retx_ready_tick = 0;    // earliest grant for the pending retransmission
  bool awaiting_x2 = false;    // delayed second feedback still in flight
};

// Fixed pool of SAW channels for one UE / TGr. A TB occupies exactly one
// process from first transmission until final ACK or drop.
class SawChannelPool {
 public:
  explicit SawChannelPool(int num_processes) : procs_(static_cast<size_t>(num_processes)) {}

  // First free process, marked AwaitingFeedback; nullopt when exhausted.
  std::optional<int> allocate();

  void release(int id);

  SawProcess& at(int id) { return procs_[static_cast<size_t>(id)]; }
  const SawProcess& at(int id) const { return procs_[static_cast<size_t>(id)]; }

  int size() const { return static_cast<int>(procs_.size()); }
  int occupied() const;
  double load() const { return static_cast<double>(occupied()) / size(); }

 private:
  std::vector<SawProcess> procs_;
};

// First HARQ feedback opportunity for a TB whose last data symbol is
// tx_end_tick: the start of the earliest U slot at or after tx_end + the UE
// processing time. Feedback occasions sit at U-slot starts.
Tick first_feedback_tick(Tick tx_end_tick, const TddPattern& tdd, int ue_rx_proc_symbols = 6);

}  // namespace xrsim
