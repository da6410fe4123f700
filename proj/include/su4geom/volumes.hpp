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

#ifndef SU4GEOM_VOLUMES_HPP
#define SU4GEOM_VOLUMES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "su4geom/gate_algebra.hpp"
#include "su4geom/quadrature.hpp"
#include "su4geom/sampling.hpp"

namespace su4geom {

using Triple = std::array<double, 3>;

enum class ClipMode {
    /// Integrate |density| over the whole cube, including parts outside the chamber.
    unclipped_abs_density,
    /// Integrate only over the cube's intersection with the Weyl chamber.
    chamber_clipped,
};

enum class VolumeMethod { closed_form, quadrature, monte_carlo };

std::string_view method_name(VolumeMethod m);
std::string_view clip_mode_name(ClipMode m);
ClipMode parse_clip_mode(std::string_view s);

/// Volume as a fraction of the total Haar volume.
struct VolumeResult {
    double value = 0.0;
    VolumeMethod method = VolumeMethod::closed_form;
    double error_estimate = 0.0;
};

struct PeRegion {};
struct ChamberRegion {};
struct CubeC {
    Triple center{};
    double side = 0.0;
    ClipMode clip = ClipMode::unclipped_abs_density;
};
struct CubeG {
    Triple center{};
    double side = 0.0;
};
/// Axis parallel to g3.
struct CylinderG {
    Triple center{};
    double radius = 0.0;
    double height = 0.0;
};
struct SphereG {
    Triple center{};
    double radius = 0.0;
};
using Region = std::variant<PeRegion, ChamberRegion, CubeC, CubeG, CylinderG, SphereG>;

/// Throws ArgumentError for non-positive or non-finite sizes.
void validate_region(const Region &r);

/// Throws DomainError when c is outside the chamber.
bool is_perfect_entangler(const CanonicalCoords &c);

inline constexpr double kPerfectEntanglerVolume = 8.0 / (3.0 * kPi);

/// Quadrature options used for chamber-scale integrals: resolution 300 over (pi, pi/2, pi/2).
QuadratureOptions chamber_quadrature_options(unsigned workers = 1);

/// closed_form or quadrature; monte_carlo goes through region_volume_mc.
VolumeResult pe_volume(VolumeMethod method, const QuadratureOptions &opts = chamber_quadrature_options());

/// Weyl density integrated over the whole chamber.
VolumeResult chamber_volume_quadrature(const QuadratureOptions &opts = chamber_quadrature_options());

enum class NamedGate { identity, swap, sqrt_swap, b_gate, cnot, cphase, dcnot };

/// Accepts identity, swap, sqrt-swap, b-gate, cnot, cphase, dcnot. Throws ArgumentError otherwise.
NamedGate parse_named_gate(std::string_view name);
std::string_view gate_name(NamedGate g);
CanonicalCoords named_gate_point(NamedGate g);

enum class CubeFormula {
    identity_swap,
    sqrt_swap,
    b_gate,
    cnot_dcnot,
    /// The centre (pi/2, pi/4, pi/4).
    edge_point,
    /// Centres (c1, 0, 0) with 0 < c1 <= pi/2.
    c1_axis,
    /// Cubes contained in the closed chamber.
    interior,
};

struct CubeFormulaInfo {
    CubeFormula formula;
    /// Largest side for which the formula holds.
    double max_side;
};

/// Which closed form covers a cube of side a at `center`, if any.
std::optional<CubeFormulaInfo> cube_formula_for(const Triple &center, double a);

/// Printed closed form matching the centre. Throws RangeError when no formula
/// covers (center, a); use cube_volume_quadrature there.
VolumeResult cube_volume_closed(const Triple &center, double a);
VolumeResult cube_volume_closed(NamedGate gate, double a);

/// Integrates the |product| density over the cube, split along the planes
/// where the density has kinks.
VolumeResult cube_volume_quadrature(const Triple &center, double a, ClipMode clip,
                                    const QuadratureOptions &opts = {});

/// Cylinder of radius R and height h around the g3-parallel line through center.
VolumeResult cylinder_volume_g(const Triple &center, double radius, double height);

/// Adaptive polar quadrature of (3/pi)/rho over the cylinder's disc, times h.
VolumeResult cylinder_volume_g_quadrature(const Triple &center, double radius, double height);

enum class OriginRegionKind { cube, cylinder, sphere };
OriginRegionKind parse_origin_region_kind(std::string_view s);

/// Closed forms for regions centred on the g3 axis. `height` is used by the cylinder only.
VolumeResult origin_region_volume_g(OriginRegionKind kind, double size, double height = 0.0);

/// 3D quadrature in cylindrical coordinates, where the measure is (3/pi) drho dphi dz.
VolumeResult origin_region_volume_g_quadrature(OriginRegionKind kind, double size, double height = 0.0);

/// Fraction of n Haar samples falling in the region, with standard error.
///
/// Unclipped c-space cubes count every image of the sample's canonical point under
/// the density's symmetry group (coordinate permutations, sign flips and shifts by
/// pi), halved because the chamber holds two fundamental domains of that group.
VolumeResult region_volume_mc(const Region &region, std::uint64_t n, const SamplerConfig &cfg);

/// Images of c under the symmetry group lying in the closed box [lo, hi].
int symmetry_image_count(const CanonicalCoords &c, const Triple &lo, const Triple &hi);

}  // namespace su4geom

#endif
