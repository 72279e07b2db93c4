#pragma once

#include <cstdint>

namespace xrsim {

// Simulation time base: one tick = one OFDM symbol at 30 kHz SCS.
using Tick = std::int64_t;
using Slot = std::int64_t;

inline constexpr int kSymbolsPerSlot = 14;
inline constexpr double kSlotSeconds = 0.5e-3;
inline constexpr double kSymbolSeconds = kSlotSeconds / kSymbolsPerSlot;

inline constexpr Slot slot_of(Tick tick) { return tick / kSymbolsPerSlot; }
inline constexpr Tick slot_start(Slot slot) { return slot * kSymbolsPerSlot; }

inline constexpr double tick_to_seconds(Tick t) { return static_cast<double>(t) * kSymbolSeconds; }

enum class DeviceMode { Legacy, Tgr };
enum class TlMode { Ideal, WiFi5, WiFi6, WiFi7 };
enum class LaMode { SingleOlla, Moolla };
enum class CsiScheme { CsiUeX, CsiBest };

enum class Verdict : std::uint8_t { Nack = 0, Ack = 1 };

inline constexpr bool is_ack(Verdict v) { return v == Verdict::Ack; }

}  // namespace xrsim
