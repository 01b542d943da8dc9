// include/asrlab/base/rng.h

// Copyright 2026  ASRLab Authors

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

#ifndef ASRLAB_BASE_RNG_H_
#define ASRLAB_BASE_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace asrlab {

// Deterministic random source. std::mt19937_64 is fully specified by the
// standard, and all transforms below are hand-rolled (the std distributions
// are implementation-defined), so identical seeds give identical streams on
// every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform over {0, ..., n-1}, n >= 1.
  int uniform_int(int n) {
    int v = static_cast<int>(uniform() * n);
    return v >= n ? n - 1 : v;
  }

  // Standard normal via Box-Muller; pairs are cached so draws stay aligned.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// 64-bit FNV-1a.
uint64_t hash64(std::string_view s);

// Derives a component seed from a global one; used so that one experiment
// seed fans out to decorrelated per-component streams.
uint64_t derive_seed(uint64_t seed, std::string_view tag);

}  // namespace asrlab

#endif  // ASRLAB_BASE_RNG_H_
