#include "somno/signal_core.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace somno {

namespace {

// Zeroth-order modified Bessel function of the first kind (power series).
double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double q = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

}  // namespace

Eigen::Index MultiChannelRecord::channel_index(const std::string& name) const {
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i] == name) return static_cast<Eigen::Index>(i);
  }
  return -1;
}

void MultiChannelRecord::validate() const {
  if (rate_hz <= 0.0) throw Error("record rate_hz must be positive");
  if (samples.rows() != static_cast<Eigen::Index>(channels.size())) {
    throw Error("record has " + std::to_string(channels.size()) + " channel names but " +
                std::to_string(samples.rows()) + " sample rows");
  }
  std::set<std::string> seen;
  for (const auto& c : channels) {
    if (!seen.insert(c).second) throw Error("duplicate channel name: " + c);
  }
  if (reference != "raw" && channel_index(reference) < 0) {
    // A record re-referenced to one of its own channels keeps that channel
    // (as zeros); an external reference like FCz is also legal as long as it
    // is declared. Nothing to check beyond non-empty.
    if (reference.empty()) throw Error("empty reference name");
  }
}

Eigen::ArrayXd design_decimation_lowpass(int factor) {
  if (factor < 2) throw Error("decimation factor must be >= 2 to need a filter");
  // Band edges normalized to the input rate.
  const double nyq_out = 0.5 / factor;
  const double pass = 0.8 * nyq_out;
  const double stop = nyq_out;
  const double atten_db = 70.0;

  const double delta_w = 2.0 * M_PI * (stop - pass);
  const double beta = 0.1102 * (atten_db - 8.7);
  int n = static_cast<int>(std::ceil((atten_db - 7.95) / (2.285 * delta_w))) + 1;
  if (n % 2 == 0) ++n;  // odd length -> integer group delay

  const double fc = 0.5 * (pass + stop);  // cutoff at mid-transition
  const int mid = (n - 1) / 2;
  Eigen::ArrayXd taps(n);
  const double i0_beta = bessel_i0(beta);
  for (int i = 0; i < n; ++i) {
    const int m = i - mid;
    const double sinc = (m == 0) ? 2.0 * fc : std::sin(2.0 * M_PI * fc * m) / (M_PI * m);
    const double r = static_cast<double>(i) / (n - 1);
    const double w = bessel_i0(beta * std::sqrt(1.0 - (2.0 * r - 1.0) * (2.0 * r - 1.0))) / i0_beta;
    taps(i) = sinc * w;
  }
  taps /= taps.sum();  // exact unity gain at DC
  return taps;
}

SingleChannelSignal decimate(const SingleChannelSignal& signal, int factor) {
  if (factor < 1) throw Error("decimation factor must be >= 1");
  if (signal.rate_hz <= 0.0) throw Error("signal rate_hz must be positive");
  const double out_rate = signal.rate_hz / factor;
  if (std::abs(out_rate - std::round(out_rate)) > 1e-9) {
    throw Error("non-integer decimation: rate " + std::to_string(signal.rate_hz) +
                " Hz is not divisible by factor " + std::to_string(factor));
  }
  const Eigen::Index n = signal.samples.size();
  if (n == 0) throw Error("cannot decimate an empty signal");
  if (factor == 1) return signal;

  const Eigen::ArrayXd taps = design_decimation_lowpass(factor);
  const Eigen::Index len = taps.size();
  if (n < len) {
    throw Error("signal too short to decimate: " + std::to_string(n) + " samples < filter length " +
                std::to_string(len));
  }
  const Eigen::Index pad = (len - 1) / 2;

  // Reflect padding about the edge samples (edge sample not repeated).
  Eigen::ArrayXd ext(n + 2 * pad);
  ext.segment(pad, n) = signal.samples;
  for (Eigen::Index i = 0; i < pad; ++i) {
    ext(pad - 1 - i) = signal.samples(std::min<Eigen::Index>(i + 1, n - 1));
    ext(pad + n + i) = signal.samples(std::max<Eigen::Index>(n - 2 - i, 0));
  }

  const Eigen::Index out_n = n / factor;
  Eigen::ArrayXd out(out_n);
  const Eigen::VectorXd h = taps.matrix();
  const double* base = ext.data();
  for (Eigen::Index j = 0; j < out_n; ++j) {
    out(j) = h.dot(Eigen::Map<const Eigen::VectorXd>(base + j * factor, len));
  }

  SingleChannelSignal result;
  result.name = signal.name;
  result.samples = std::move(out);
  result.rate_hz = out_rate;
  return result;
}

MultiChannelRecord rereference(const MultiChannelRecord& record, const std::string& new_ref) {
  record.validate();
  const Eigen::Index ref = record.channel_index(new_ref);
  if (ref < 0) {
    std::ostringstream msg;
    msg << "unknown reference channel '" << new_ref << "'; available:";
    for (const auto& c : record.channels) msg << ' ' << c;
    throw Error(msg.str());
  }
  MultiChannelRecord out = record;
  const Eigen::RowVectorXd ref_row = record.samples.row(ref);
  out.samples = record.samples.rowwise() - ref_row;
  out.reference = new_ref;
  return out;
}

SingleChannelSignal derive_pz_oz(const MultiChannelRecord& record) {
  record.validate();
  const Eigen::Index pz = record.channel_index("Pz");
  const Eigen::Index oz = record.channel_index("Oz");
  if (pz < 0 || oz < 0) {
    throw Error(std::string("cannot derive Pz-Oz: missing ") +
                (pz < 0 ? (oz < 0 ? "Pz and Oz" : "Pz") : "Oz"));
  }
  SingleChannelSignal out;
  out.name = "Pz-Oz";
  out.samples = (record.samples.row(pz) - record.samples.row(oz)).transpose().array();
  out.rate_hz = record.rate_hz;
  return out;
}

std::vector<Epoch> epoch_split(const SingleChannelSignal& signal) {
  if (std::abs(signal.rate_hz - kStagingRateHz) > 1e-9) {
    throw Error("epoch_split expects a " + std::to_string(static_cast<int>(kStagingRateHz)) +
                " Hz signal, got " + std::to_string(signal.rate_hz));
  }
  const Eigen::Index n = signal.samples.size();
  const Eigen::Index count = n / kEpochSamples;
  std::vector<Epoch> epochs;
  epochs.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index k = 0; k < count; ++k) {
    Epoch e;
    e.samples = signal.samples.segment(k * kEpochSamples, kEpochSamples);
    e.index = static_cast<int>(k);
    e.rate_hz = signal.rate_hz;
    epochs.push_back(std::move(e));
  }
  return epochs;
}

}  // namespace somno
