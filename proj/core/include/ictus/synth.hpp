#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ictus/signal.hpp"

namespace ictus {

// Test-data generator: 1/f-shaped background noise on every channel, plus a
// rhythmic component on selected channels during ictal intervals.
struct SynthesisConfig {
  int channel_count = 4;
  double sample_rate_hz = 1000.0;
  double duration_s = 0.0;        // 0: run to the end of the schedule
  double noise_floor = 1e-4;      // noise RMS, volts
  bool pink_noise = true;         // false: white noise
  double rhythm_hz = 3.0;
  double rhythm_amp_ratio = 5.0;  // rhythm amplitude as multiple of noise_floor
  std::vector<int> rhythm_channels{0};
  std::map<int, double> channel_amp_ratio;  // per-channel ratio overrides
  std::vector<LabeledInterval> schedule;

  void validate() const;  // throws ConfigError
};

// Deterministic given (config, seed); labels mirror the schedule.
SignalRecording synthesize_recording(const SynthesisConfig& config, std::uint64_t seed);

}  // namespace ictus
