#pragma once

#include <Eigen/Dense>

#include <complex>

namespace somno {

// Forward DFT of a real signal; returns all n complex bins.
Eigen::ArrayXcd fft(const Eigen::ArrayXd& x);

// One-sided Welch power spectral density estimate in units of power/Hz.
// Periodic Hann window, segments of `seg_len` samples advanced by `hop`;
// a trailing partial segment is discarded. Returns seg_len/2 + 1 bins,
// bin k at frequency k * rate_hz / seg_len.
Eigen::ArrayXd welch_psd(const Eigen::ArrayXd& x, double rate_hz, int seg_len, int hop);

// Integral of the PSD over [lo_hz, hi_hz): sum of bin * bin_width for bins
// whose center frequency lies in the half-open band.
double band_power(const Eigen::ArrayXd& psd, double rate_hz, int seg_len, double lo_hz,
                  double hi_hz);

}  // namespace somno
