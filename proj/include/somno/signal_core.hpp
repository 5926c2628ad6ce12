#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "somno/common.hpp"

namespace somno {

// Labeled multichannel EEG block. Samples are microvolts, one row per
// channel, one column per sample. `reference` is "raw" for true potentials or
// the name of the common reference subtracted from every channel.
struct MultiChannelRecord {
  std::vector<std::string> channels;
  Eigen::MatrixXd samples;
  double rate_hz = 0.0;
  std::string reference = "raw";

  // Row index of `name`, or -1.
  Eigen::Index channel_index(const std::string& name) const;
  // Throws Error if any invariant is violated (shape, rate, duplicate names).
  void validate() const;
};

struct SingleChannelSignal {
  std::string name;
  Eigen::ArrayXd samples;
  double rate_hz = 0.0;
};

inline constexpr double kEpochSeconds = 30.0;
inline constexpr double kStagingRateHz = 100.0;
inline constexpr int kEpochSamples = 3000;  // 30 s at 100 Hz

// One 30-s staging window: exactly rate_hz * 30 samples.
struct Epoch {
  Eigen::ArrayXd samples;
  int index = 0;
  double rate_hz = kStagingRateHz;
};

// Linear-phase Kaiser-windowed-sinc low-pass used before downsampling by
// `factor`. Passband edge at 0.8x the output Nyquist, stopband from the
// output Nyquist, 70 dB design attenuation, taps normalized to unity DC gain.
// For factor 10 at 1000 Hz that is 40 Hz pass / 50 Hz stop. Odd length, so
// the group delay is an integer sample count and can be compensated exactly.
Eigen::ArrayXd design_decimation_lowpass(int factor);

// Anti-aliased downsampling by an integer factor. Output rate is
// rate_hz / factor and output length floor(n / factor); reflect padding at
// both ends keeps the output aligned with the input timebase (no startup
// transient, no group delay).
SingleChannelSignal decimate(const SingleChannelSignal& signal, int factor);

// Subtracts channel `new_ref` from every channel; the target channel itself
// becomes all zeros and the record's reference metadata is updated.
MultiChannelRecord rereference(const MultiChannelRecord& record, const std::string& new_ref);

// The derived bipolar staging channel: potential(Pz) - potential(Oz). Any
// common reference cancels in the subtraction, so the result is independent
// of the record's reference.
SingleChannelSignal derive_pz_oz(const MultiChannelRecord& record);

// Consecutive non-overlapping 30-s windows; a trailing partial window is
// discarded. Requires a 100 Hz signal.
std::vector<Epoch> epoch_split(const SingleChannelSignal& signal);

}  // namespace somno
