#ifndef SCG_FFT_HPP
#define SCG_FFT_HPP

#include <complex>
#include <vector>

namespace scg::fft {

// Complex DFT, any length >= 1. `inverse` includes the 1/N factor so that
// inverse(forward(x)) == x up to roundoff.
std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& x);

// Discrete analytic signal of a real series (frequency-domain construction);
// |result| is the upper envelope.
std::vector<std::complex<double>> analytic_signal(const std::vector<double>& x);

}  // namespace scg::fft

#endif
