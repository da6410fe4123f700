// Copyright 2026 The su4geom Authors
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

#ifndef SU4GEOM_SAMPLING_HPP
#define SU4GEOM_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "su4geom/gate_algebra.hpp"
#include "su4geom/invariants.hpp"

namespace su4geom {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
class Philox4x32 {
   public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

/// Deterministic random stream identified by (seed, stream index).
///
/// The key is the seed; the high half of the counter is the stream index, the
/// low half counts 128-bit blocks. Streams with different indices never overlap.
class RandomStream {
   public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();

    /// Child stream derived from this stream's identity and `index`.
    RandomStream split(std::uint64_t index) const;

    std::uint64_t seed() const {
        return seed_;
    }
    std::uint64_t stream_index() const {
        return stream_;
    }

   private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

enum class SamplingMethod {
    /// Inverse-CDF / rejection sampling of the Haar density in Cartan coordinates.
    coordinate_density,
    /// QR of a complex Ginibre matrix, projected to SU(4).
    matrix_oracle,
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    unsigned worker_count = 1;
    SamplingMethod method = SamplingMethod::matrix_oracle;

    /// Throws ArgumentError if worker_count == 0.
    void validate() const;
};

/// Samples per stream; block b of a run always uses RandomStream(seed, b).
inline constexpr std::uint64_t kSampleBlockSize = 4096;

/// Solves (alpha - sin alpha) / 4pi = u on [0, 4pi]. u must lie in [0, 1].
double alpha_inverse_cdf(double u);

Su2Params sample_su2_params(RandomStream &stream);

/// Rejection sampler for the Weyl chamber density. When `proposals` is given it
/// is incremented by the number of proposals drawn.
CanonicalCoords sample_weyl_chamber(RandomStream &stream, std::uint64_t *proposals = nullptr);

GateMatrix sample_gate(RandomStream &stream, SamplingMethod method);

/// Runs `work(block, begin, count, stream)` for every block of [0, n) across
/// worker_count threads. Each block has its own stream, so the work done for a
/// block does not depend on the worker count.
void run_sample_blocks(std::uint64_t n, const SamplerConfig &cfg,
                       const std::function<void(std::uint64_t block, std::uint64_t begin, std::uint64_t count,
                                                RandomStream &stream)> &work);

/// n gates delivered to `sink` in index order. Memory use is bounded by one
/// wave of worker_count blocks.
void for_each_gate(std::uint64_t n, const SamplerConfig &cfg,
                   const std::function<void(std::uint64_t index, const GateMatrix &gate)> &sink);

/// Weyl chamber points of n Haar-random gates. For coordinate_density this
/// samples the chamber point directly, so it consumes the stream differently
/// from for_each_gate.
std::vector<CanonicalCoords> sample_classes(std::uint64_t n, const SamplerConfig &cfg);

}  // namespace su4geom

#endif
