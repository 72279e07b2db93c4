#pragma once

#include <cmath>

#include "xrsim/types.hpp"

namespace xrsim {

enum class SlotKind { Downlink, Special, Uplink };

// 5-slot DDDSU cycle. D slots carry a full 14-symbol PDSCH region, the S
// slot a reduced one (default 10 symbols, remainder guard + UL control),
// U slots carry feedback only.
class TddPattern {
 public:
  explicit TddPattern(int special_data_symbols = 10)
      : special_data_symbols_(special_data_symbols) {}

  static constexpr int kCycleSlots = 5;

  SlotKind kind(Slot slot) const {
    switch (slot % kCycleSlots) {
      case 3: return SlotKind::Special;
      case 4: return SlotKind::Uplink;
      default: return SlotKind::Downlink;
    }
  }

  bool carries_data(Slot slot) const { return kind(slot) != SlotKind::Uplink; }

  int data_symbols(Slot slot) const {
    switch (kind(slot)) {
      case SlotKind::Downlink: return kSymbolsPerSlot;
      case SlotKind::Special: return special_data_symbols_;
      default: return 0;
    }
  }

  // Last tick of the PDSCH region of a data slot.
  Tick data_end_tick(Slot slot) const {
    return slot_start(slot) + data_symbols(slot) - 1;
  }

  // Feedback occasions sit at the first symbol of each U slot.
  Tick next_uplink_start(Tick at_or_after) const {
    const Slot slot = at_or_after <= 0 ? 0 : slot_of(at_or_after);
    const Slot cycle = slot / kCycleSlots;
    const Tick u = slot_start(cycle * kCycleSlots + 4);
    return u >= at_or_after ? u : u + kCycleSlots * kSymbolsPerSlot;
  }

  // First D or S slot whose start tick is >= the given tick.
  Slot next_data_slot(Tick at_or_after) const {
    Slot slot = at_or_after <= 0 ? 0 : (at_or_after + kSymbolsPerSlot - 1) / kSymbolsPerSlot;
    while (!carries_data(slot)) ++slot;
    return slot;
  }

 private:
  int special_data_symbols_;
};

inline Tick ticks_from_seconds_ceil(double seconds) {
  return static_cast<Tick>(std::ceil(seconds / kSymbolSeconds - 1e-12));
}

inline Tick ticks_from_seconds_round(double seconds) {
  return static_cast<Tick>(std::llround(seconds / kSymbolSeconds));
}

}  // namespace xrsim
