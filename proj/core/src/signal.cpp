#include "ictus/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ictus {

void SignalRecording::validate(bool check_finite) const {
  if (sample_rate_hz <= 0.0) throw std::invalid_argument("non-positive sample rate");
  const std::size_t n = sample_count();
  for (const auto& ch : channels) {
    if (ch.samples.size() != n)
      throw std::invalid_argument("inconsistent channel lengths: '" + ch.name + "'");
    if (check_finite) {
      for (double v : ch.samples)
        if (!std::isfinite(v))
          throw std::invalid_argument("non-finite sample in channel '" + ch.name + "'");
    }
  }
  if (std::abs(duration_s * sample_rate_hz - static_cast<double>(n)) > 1.0)
    throw std::invalid_argument("duration and sample count disagree by more than one sample");

  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledInterval& a, const LabeledInterval& b) { return a.start_s < b.start_s; });
  const double eps = 0.5 / sample_rate_hz;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& iv = sorted[i];
    if (!(iv.start_s < iv.end_s)) throw std::invalid_argument("labeled interval with start >= end");
    if (iv.start_s < -eps || iv.end_s > duration_s + eps)
      throw std::invalid_argument("labeled interval outside [0, duration]");
    if (i > 0 && iv.start_s < sorted[i - 1].end_s - eps)
      throw std::invalid_argument("overlapping labeled intervals");
  }
}

MontageSpec tcp_ar_montage() {
  return MontageSpec{{
      {"FP1", "F7"}, {"F7", "T3"},  {"T3", "T5"},  {"T5", "O1"},
      {"FP2", "F8"}, {"F8", "T4"},  {"T4", "T6"},  {"T6", "O2"},
      {"A1", "T3"},  {"T3", "C3"},  {"C3", "CZ"},  {"CZ", "C4"},
      {"C4", "T4"},  {"T4", "A2"},  {"FP1", "F3"}, {"F3", "C3"},
      {"C3", "P3"},  {"P3", "O1"},  {"FP2", "F4"}, {"F4", "C4"},
      {"C4", "P4"},  {"P4", "O2"},
  }};
}

SignalRecording apply_montage(const SignalRecording& rec, const MontageSpec& spec) {
  std::unordered_map<std::string, const ChannelTrace*> by_name;
  for (const auto& ch : rec.channels) by_name.emplace(ch.name, &ch);

  auto find = [&](const std::string& name) -> const ChannelTrace& {
    auto it = by_name.find(name);
    if (it == by_name.end())
      throw std::invalid_argument("montage electrode '" + name + "' not found in recording");
    return *it->second;
  };

  SignalRecording out;
  out.sample_rate_hz = rec.sample_rate_hz;
  out.duration_s = rec.duration_s;
  out.labels = rec.labels;
  out.channels.reserve(spec.pairs.size());
  for (const auto& [anode, cathode] : spec.pairs) {
    const auto& a = find(anode);
    const auto& c = find(cathode);
    ChannelTrace ch;
    ch.name = anode + "-" + cathode;
    ch.samples.resize(a.samples.size());
    for (std::size_t i = 0; i < ch.samples.size(); ++i)
      ch.samples[i] = a.samples[i] - c.samples[i];
    out.channels.push_back(std::move(ch));
  }
  return out;
}

std::vector<Window> extract_windows(const SignalRecording& rec, double length_s) {
  if (length_s <= 0.0) throw std::invalid_argument("window length must be positive");
  std::vector<Window> out;
  auto sorted = rec.labels;
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledInterval& a, const LabeledInterval& b) { return a.start_s < b.start_s; });
  for (const auto& iv : sorted) {
    // Tolerate float schedules like 0.1+0.2; never emit a window past end_s.
    const double span = iv.end_s - iv.start_s;
    auto count = static_cast<std::size_t>(std::floor(span / length_s + 1e-9));
    while (count > 0 && iv.start_s + static_cast<double>(count) * length_s >
                            iv.end_s + 1e-9 * length_s)
      --count;
    for (std::size_t k = 0; k < count; ++k) {
      Window w;
      w.start_s = iv.start_s + static_cast<double>(k) * length_s;
      w.length_s = length_s;
      w.state = iv.state;
      out.push_back(w);
    }
  }
  return out;
}

std::span<const double> window_samples(const SignalRecording& rec, const Window& w,
                                       int channel) {
  if (channel < 0 || channel >= rec.channel_count())
    throw std::invalid_argument("channel index out of range");
  const auto& samples = rec.channels[static_cast<std::size_t>(channel)].samples;
  auto begin = static_cast<std::size_t>(std::llround(w.start_s * rec.sample_rate_hz));
  auto end = static_cast<std::size_t>(std::llround((w.start_s + w.length_s) * rec.sample_rate_hz));
  begin = std::min(begin, samples.size());
  end = std::min(end, samples.size());
  return std::span<const double>(samples.data() + begin, end - begin);
}

bool meets_inclusion_criteria(const SignalRecording& rec, double min_ictal_s,
                              double min_interictal_s) {
  double ictal = 0.0, interictal = 0.0;
  for (const auto& iv : rec.labels)
    (iv.state == BrainState::Ictal ? ictal : interictal) += iv.duration_s();
  return ictal >= min_ictal_s && interictal >= min_interictal_s;
}

}  // namespace ictus
