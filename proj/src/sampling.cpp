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

#include "su4geom/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "su4geom/error.hpp"
#include "su4geom/geometry.hpp"

namespace su4geom {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr double kTwoPi = 2.0 * kPi;

// Tetrahedron vertices of the Weyl chamber.
constexpr std::array<std::array<double, 3>, 4> kChamberVertices{{
    {0.0, 0.0, 0.0},
    {kPi, 0.0, 0.0},
    {kPi / 2, kPi / 2, 0.0},
    {kPi / 2, kPi / 2, kPi / 2},
}};

ComplexMatrix4 ginibre_q(RandomStream &stream) {
    ComplexMatrix4 z;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            const double re = stream.normal();
            const double im = stream.normal();
            z(r, c) = Complex(re, im);
        }
    }
    // Modified Gram-Schmidt on columns; R then has a positive real diagonal.
    for (int c = 0; c < 4; c++) {
        for (int p = 0; p < c; p++) {
            Complex proj = 0.0;
            for (int r = 0; r < 4; r++) {
                proj += std::conj(z(r, p)) * z(r, c);
            }
            for (int r = 0; r < 4; r++) {
                z(r, c) -= proj * z(r, p);
            }
        }
        double nrm = 0.0;
        for (int r = 0; r < 4; r++) {
            nrm += std::norm(z(r, c));
        }
        nrm = std::sqrt(nrm);
        for (int r = 0; r < 4; r++) {
            z(r, c) /= nrm;
        }
    }
    return z;
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
    for (int round = 0; round < 10; round++) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index) : seed_(seed), stream_(stream_index) {
}

std::uint32_t RandomStream::next_u32() {
    if (used_ == 4) {
        const Philox4x32::Counter ctr{static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
                                      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        buffer_ = Philox4x32::block(ctr, {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        counter_++;
        used_ = 0;
    }
    return buffer_[used_++];
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

RandomStream RandomStream::split(std::uint64_t index) const {
    return RandomStream(seed_, splitmix64(stream_ ^ splitmix64(index + 1)));
}

void SamplerConfig::validate() const {
    if (worker_count == 0) {
        throw ArgumentError("worker_count must be at least 1");
    }
}

double alpha_inverse_cdf(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw ArgumentError("alpha_inverse_cdf: u must lie in [0, 1]");
    }
    if (u == 0.0 || u == 1.0) {
        return 4.0 * kPi * u;
    }
    const double target = 4.0 * kPi * u;  // alpha - sin(alpha) = target
    double lo = 0.0, hi = 4.0 * kPi;
    // Small-alpha expansion alpha^3 / 6 gives a good start near 0 and 4pi.
    double x = target < kPi ? std::cbrt(6.0 * target) : target;
    if (4.0 * kPi - target < kPi) {
        x = 4.0 * kPi - std::cbrt(6.0 * (4.0 * kPi - target));
    }
    x = std::clamp(x, lo, hi);
    for (int it = 0; it < 64; it++) {
        const double f = x - std::sin(x) - target;
        if (f > 0) {
            hi = x;
        } else {
            lo = x;
        }
        const double df = 1.0 - std::cos(x);
        double next = df > 0 ? x - f / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 1e-12 || hi - lo <= 1e-12) {
            return next;
        }
        x = next;
    }
    return x;
}

Su2Params sample_su2_params(RandomStream &stream) {
    Su2Params v;
    v.alpha = alpha_inverse_cdf(stream.uniform());
    v.theta = std::acos(std::clamp(1.0 - 2.0 * stream.uniform(), -1.0, 1.0));
    v.phi = kTwoPi * stream.uniform();
    return v;
}

CanonicalCoords sample_weyl_chamber(RandomStream &stream, std::uint64_t *proposals) {
    while (true) {
        std::array<double, 3> s{stream.uniform(), stream.uniform(), stream.uniform()};
        std::sort(s.begin(), s.end());
        const std::array<double, 4> w{s[0], s[1] - s[0], s[2] - s[1], 1.0 - s[2]};
        std::array<double, 3> p{};
        for (int v = 0; v < 4; v++) {
            for (int a = 0; a < 3; a++) {
                p[a] += w[v] * kChamberVertices[v][a];
            }
        }
        if (proposals != nullptr) {
            (*proposals)++;
        }
        const double accept = weyl_density(p[0], p[1], p[2]) / kWeylDensityMax;
        if (stream.uniform() < accept) {
            return {p[0], p[1], p[2]};
        }
    }
}

GateMatrix sample_gate(RandomStream &stream, SamplingMethod method) {
    if (method == SamplingMethod::coordinate_density) {
        FullCoords x;
        x.c = sample_weyl_chamber(stream);
        x.a1 = sample_su2_params(stream);
        x.b1 = sample_su2_params(stream);
        x.a2 = sample_su2_params(stream);
        x.b2 = sample_su2_params(stream);
        return assemble(x);
    }
    return project_su4(ginibre_q(stream)).gate;
}

void run_sample_blocks(std::uint64_t n, const SamplerConfig &cfg,
                       const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, RandomStream &)> &work) {
    cfg.validate();
    const std::uint64_t blocks = (n + kSampleBlockSize - 1) / kSampleBlockSize;
    auto run_block = [&](std::uint64_t b) {
        RandomStream stream(cfg.seed, b);
        const std::uint64_t begin = b * kSampleBlockSize;
        work(b, begin, std::min(kSampleBlockSize, n - begin), stream);
    };
    const unsigned width = static_cast<unsigned>(std::min<std::uint64_t>(cfg.worker_count, std::max<std::uint64_t>(blocks, 1)));
    if (width <= 1) {
        for (std::uint64_t b = 0; b < blocks; b++) {
            run_block(b);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(width);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < width; w++) {
            pool.emplace_back([&, w] {
                try {
                    for (std::uint64_t b = w; b < blocks; b += width) {
                        run_block(b);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

void for_each_gate(std::uint64_t n, const SamplerConfig &cfg,
                   const std::function<void(std::uint64_t, const GateMatrix &)> &sink) {
    cfg.validate();
    const std::uint64_t wave = kSampleBlockSize * cfg.worker_count;
    std::vector<std::optional<GateMatrix>> buf;
    for (std::uint64_t start = 0; start < n; start += wave) {
        const std::uint64_t count = std::min(wave, n - start);
        buf.assign(count, std::nullopt);
        const std::uint64_t first_block = start / kSampleBlockSize;
        // Blocks of this wave keep their global index so streams match a single pass.
        run_sample_blocks(count, cfg, [&](std::uint64_t b, std::uint64_t begin, std::uint64_t cnt, RandomStream &) {
            RandomStream stream(cfg.seed, first_block + b);
            for (std::uint64_t i = 0; i < cnt; i++) {
                buf[begin + i].emplace(sample_gate(stream, cfg.method));
            }
        });
        for (std::uint64_t i = 0; i < count; i++) {
            sink(start + i, *buf[i]);
        }
    }
}

std::vector<CanonicalCoords> sample_classes(std::uint64_t n, const SamplerConfig &cfg) {
    std::vector<CanonicalCoords> out(n);
    run_sample_blocks(n, cfg, [&](std::uint64_t, std::uint64_t begin, std::uint64_t count, RandomStream &stream) {
        for (std::uint64_t i = 0; i < count; i++) {
            out[begin + i] = cfg.method == SamplingMethod::coordinate_density
                                 ? sample_weyl_chamber(stream)
                                 : canonical_coords(sample_gate(stream, cfg.method));
        }
    });
    return out;
}

}  // namespace su4geom
