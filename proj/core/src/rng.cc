// Copyright 2026 The QRS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrs/rng.h"

#include <algorithm>

namespace qrs {
namespace {

std::mt19937_64 MakeEngine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32),
                    0x51525353u};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(MakeEngine(seed, stream_id)) {}

double RngStream::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::Normal(double stddev) {
  if (stddev == 0.0) return 0.0;
  return std::normal_distribution<double>(0.0, stddev)(engine_);
}

bool RngStream::Bernoulli(double p) {
  return Uniform() < std::clamp(p, 0.0, 1.0);
}

std::int64_t RngStream::Binomial(std::int64_t n, double p) {
  return std::binomial_distribution<std::int64_t>(n, std::clamp(p, 0.0, 1.0))(engine_);
}

std::uint64_t RngStream::UniformIndex(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

}  // namespace qrs
