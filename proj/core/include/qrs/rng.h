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

#ifndef QRS_RNG_H_
#define QRS_RNG_H_

#include <cstdint>
#include <random>

namespace qrs {

// A reproducible random stream addressed by (seed, stream_id). Identical
// pairs yield identical sequences; Monte Carlo trial i uses stream_id = i so
// that parallel runs are bit-identical to serial ones.
//
// Not thread-safe: one stream per thread of execution.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Normal(0, stddev^2). stddev == 0 returns exactly 0.
  double Normal(double stddev);
  bool Bernoulli(double p);
  std::int64_t Binomial(std::int64_t n, double p);
  // Uniform integer on [0, n).
  std::uint64_t UniformIndex(std::uint64_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace qrs

#endif  // QRS_RNG_H_
