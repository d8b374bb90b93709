/**
 * Copyright 2026 bunchkit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BUNCHKIT_NUMKIT_RNG_HPP
#define BUNCHKIT_NUMKIT_RNG_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace bunchkit {

/**
 * @brief Counter-based pseudo-random stream with explicit splitting.
 *
 * A stream is fully determined by (master_seed, stream_index): the raw 64-bit
 * output is a pure integer function of those two words and a running counter
 * (SplitMix64 finalizer), so trial i of a Monte Carlo run can be computed on
 * any thread, in any order, with identical results. Floating-point outputs
 * inherit that determinism up to the platform libm for log/cos/sin.
 */
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64();
    /// Uniform double in [0, 1).
    double next_double();
    /// Uniform integer in [0, bound), rejection-sampled (bound >= 1).
    std::uint64_t next_below(std::uint64_t bound);
    /// Standard normal N(0,1), Box-Muller.
    double next_gaussian();
    /// Standard complex normal: real and imaginary parts ~ N(0, 1/2).
    std::complex<double> next_complex_gaussian();

    /// Uniformly random k-subset of {0,...,m-1}, returned sorted.
    std::vector<int> sample_subset(int m, int k);

    /// Child stream derived from this stream's identity and the given index.
    RngStream substream(std::uint64_t index) const;

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t state_;
    std::uint64_t counter_ = 0;
    bool has_cached_gaussian_ = false;
    double cached_gaussian_ = 0.0;
};

}  // namespace bunchkit

#endif
