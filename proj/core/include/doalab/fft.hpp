// core/include/doalab/fft.hpp

// Copyright 2026  The doalab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DOALAB_FFT_HPP_
#define DOALAB_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace doalab {

size_t next_pow2(size_t n);

// In-place iterative radix-2 transform; a.size() must be a power of two.
// The inverse transform includes the 1/N normalization.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Full linear convolution via FFT, output length a.size() + b.size() - 1.
std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace doalab

#endif  // DOALAB_FFT_HPP_
