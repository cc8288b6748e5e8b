#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ictus/brain_state.hpp"

namespace ictus {

struct LabeledInterval {
  double start_s = 0.0;
  double end_s = 0.0;
  BrainState state = BrainState::Interictal;

  double duration_s() const { return end_s - start_s; }
};

struct ChannelTrace {
  std::string name;
  std::vector<double> samples;
};

// Multichannel sampled recording with optional state labels. All channels
// share the sample rate and length.
struct SignalRecording {
  double sample_rate_hz = 0.0;
  std::vector<ChannelTrace> channels;
  double duration_s = 0.0;
  std::vector<LabeledInterval> labels;

  std::size_t sample_count() const {
    return channels.empty() ? 0 : channels.front().samples.size();
  }
  int channel_count() const { return static_cast<int>(channels.size()); }

  // Throws std::invalid_argument when an invariant is broken: mismatched
  // channel lengths, duration/sample-count disagreement beyond one sample,
  // non-finite samples, or overlapping/out-of-range labels.
  void validate(bool check_finite = true) const;
};

struct MontageSpec {
  std::vector<std::pair<std::string, std::string>> pairs;  // (anode, cathode)
};

// The standard 22-pair bipolar temporal-central-parasagittal montage over
// 10-20 electrode names. Overridable wherever a MontageSpec is accepted.
MontageSpec tcp_ar_montage();

// Output channel i = anode_i - cathode_i, sample-wise. Channel names become
// "ANODE-CATHODE". Throws std::invalid_argument naming any missing electrode.
SignalRecording apply_montage(const SignalRecording& rec, const MontageSpec& spec);

struct Window {
  int channel_index = -1;  // -1: applies to every channel
  double start_s = 0.0;
  double length_s = 5.0;
  BrainState state = BrainState::Interictal;
};

// Non-overlapping contiguous windows tiled inside each labeled interval.
// Partial tail windows are dropped; each window inherits its interval state.
std::vector<Window> extract_windows(const SignalRecording& rec, double length_s);

// Sample slice of one channel covered by a window.
std::span<const double> window_samples(const SignalRecording& rec, const Window& w,
                                       int channel);

// Patient-inclusion predicate: at least `min_ictal_s` of labeled ictal time
// and `min_interictal_s` of labeled inter-ictal time.
bool meets_inclusion_criteria(const SignalRecording& rec, double min_ictal_s = 60.0,
                              double min_interictal_s = 60.0);

}  // namespace ictus
