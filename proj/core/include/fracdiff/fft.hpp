#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fracdiff {

bool is_power_of_two(std::size_t n);

// Smallest power of two >= n.
std::size_t next_power_of_two(std::size_t n);

// In-place iterative radix-2 transform over a power-of-two length.
// inverse=true applies the conjugate transform and the 1/N scaling.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> a);
std::vector<std::complex<double>> ifft(std::vector<std::complex<double>> a);

}  // namespace fracdiff
