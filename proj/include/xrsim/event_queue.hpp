#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "xrsim/types.hpp"

namespace xrsim {

// Deterministic event queue: events fire in (tick, insertion order).
class EventQueue {
 public:
  using Handler = std::function<void()>;

  Tick now() const { return now_; }

  std::uint64_t schedule(Tick tick, Handler fn) {
    if (tick < now_) {
      throw std::invalid_argument("EventQueue: cannot schedule event in the past");
    }
    const std::uint64_t seq = next_seq_++;
    heap_.push(Entry{tick, seq, std::move(fn)});
    return seq;
  }

  bool empty() const { return heap_.empty(); }

  Tick next_tick() const { return heap_.top().tick; }

  // Pops and runs the next event; returns false when the queue is empty.
  bool run_next() {
    if (heap_.empty()) return false;
    Entry e = heap_.top();
    heap_.pop();
    now_ = e.tick;
    e.fn();
    return true;
  }

  // Runs every event with tick <= end (inclusive).
  void run_until(Tick end) {
    while (!heap_.empty() && heap_.top().tick <= end) {
      run_next();
    }
    if (now_ < end) now_ = end;
  }

 private:
  struct Entry {
    Tick tick;
    std::uint64_t seq;
    Handler fn;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.tick != b.tick) return a.tick > b.tick;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  Tick now_ = 0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace xrsim
