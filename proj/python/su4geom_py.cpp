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

// Python bindings. Matrices cross the boundary as complex128 arrays of shape (4, 4).

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "su4geom/error.hpp"
#include "su4geom/gate_algebra.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/invariants.hpp"
#include "su4geom/sampling.hpp"
#include "su4geom/volumes.hpp"

namespace py = pybind11;
using namespace su4geom;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix4 to_matrix(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4) {
        throw ValidationError("expected a 4x4 complex array");
    }
    const auto v = a.unchecked<2>();
    ComplexMatrix4 m;
    for (py::ssize_t r = 0; r < 4; r++) {
        for (py::ssize_t c = 0; c < 4; c++) {
            m(r, c) = v(r, c);
        }
    }
    return m;
}

ComplexArray to_array(const ComplexMatrix4 &m) {
    ComplexArray a({4, 4});
    auto v = a.mutable_unchecked<2>();
    for (py::ssize_t r = 0; r < 4; r++) {
        for (py::ssize_t c = 0; c < 4; c++) {
            v(r, c) = m(r, c);
        }
    }
    return a;
}

py::tuple triple(const std::array<double, 3> &t) {
    return py::make_tuple(t[0], t[1], t[2]);
}

py::tuple invariants_tuple(const LocalInvariants &g) {
    return py::make_tuple(g.g1, g.g2, g.g3);
}

LocalInvariants invariants_from(const std::array<double, 3> &g) {
    return {g[0], g[1], g[2]};
}

CanonicalCoords coords_from(const std::array<double, 3> &c) {
    return {c[0], c[1], c[2]};
}

py::dict volume_dict(const VolumeResult &r) {
    py::dict d;
    d["value"] = r.value;
    d["method"] = std::string(method_name(r.method));
    d["error_estimate"] = r.error_estimate;
    return d;
}

SamplingMethod parse_sampler(const std::string &s) {
    if (s == "oracle") {
        return SamplingMethod::matrix_oracle;
    }
    if (s == "coordinate") {
        return SamplingMethod::coordinate_density;
    }
    throw ArgumentError("sampler must be 'oracle' or 'coordinate'");
}

}  // namespace

PYBIND11_MODULE(su4geom, m) {
    m.doc() = "Two-qubit gate classes: invariants, Weyl chamber coordinates and Haar volumes";

    // Translators run newest first, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidInvariantsError>(m, "InvalidInvariantsError", PyExc_ValueError);

    m.attr("PERFECT_ENTANGLER_VOLUME") = kPerfectEntanglerVolume;

    m.def(
        "abelian_gate", [](double c1, double c2, double c3) { return to_array(abelian_gate(c1, c2, c3)); },
        py::arg("c1"), py::arg("c2"), py::arg("c3"), "exp(-i/2 sum_j c_j sigma_j x sigma_j)");
    m.def(
        "named_gate",
        [](const std::string &name) {
            return to_array(abelian_gate(named_gate_point(parse_named_gate(name))));
        },
        py::arg("name"), "Canonical representative of a named gate class");
    m.def(
        "makhlin_invariants", [](const ComplexArray &u) { return invariants_tuple(makhlin_invariants(GateMatrix(to_matrix(u)))); },
        py::arg("u"), "(g1, g2, g3) of a unitary");
    m.def(
        "canonical_coords", [](const ComplexArray &u) { return triple(canonical_coords(GateMatrix(to_matrix(u))).as_array()); },
        py::arg("u"), "Weyl chamber coordinates (c1, c2, c3) of a unitary");
    m.def(
        "global_phase", [](const ComplexArray &u) { return project_su4(to_matrix(u)).phase.chi; }, py::arg("u"),
        "chi with u = exp(i chi) v, v in SU(4)");
    m.def(
        "g_from_c", [](const std::array<double, 3> &c) { return invariants_tuple(g_from_c(coords_from(c))); },
        py::arg("c"));
    m.def(
        "c_from_g", [](const std::array<double, 3> &g) { return triple(c_from_g(invariants_from(g)).as_array()); },
        py::arg("g"));
    m.def(
        "locally_equivalent",
        [](const ComplexArray &u, const ComplexArray &v, double tol) {
            return locally_equivalent(GateMatrix(to_matrix(u)), GateMatrix(to_matrix(v)), tol);
        },
        py::arg("u"), py::arg("v"), py::arg("tol") = 1e-9);
    m.def(
        "in_chamber", [](const std::array<double, 3> &c) { return coords_from(c).in_chamber(); }, py::arg("c"));
    m.def(
        "is_perfect_entangler", [](const std::array<double, 3> &c) { return is_perfect_entangler(coords_from(c)); },
        py::arg("c"));
    m.def(
        "weyl_density", [](const std::array<double, 3> &c) { return weyl_density(coords_from(c)); }, py::arg("c"),
        "Haar density of gate classes on the chamber");
    m.def(
        "makhlin_density", [](const std::array<double, 3> &g) { return makhlin_density(invariants_from(g)); },
        py::arg("g"));

    m.def(
        "pe_volume",
        [](const std::string &method, unsigned workers) {
            VolumeMethod vm;
            if (method == "closed") {
                vm = VolumeMethod::closed_form;
            } else if (method == "quadrature") {
                vm = VolumeMethod::quadrature;
            } else {
                throw ArgumentError("method must be 'closed' or 'quadrature'");
            }
            return volume_dict(pe_volume(vm, chamber_quadrature_options(workers)));
        },
        py::arg("method") = "closed", py::arg("workers") = 1);
    m.def(
        "cube_volume",
        [](const std::array<double, 3> &center, double side, const std::string &method, const std::string &clip,
           int resolution, unsigned workers) {
            if (method == "closed") {
                return volume_dict(cube_volume_closed(center, side));
            }
            if (method != "quadrature") {
                throw ArgumentError("method must be 'closed' or 'quadrature'");
            }
            QuadratureOptions o;
            o.resolution = resolution;
            o.workers = workers;
            return volume_dict(cube_volume_quadrature(center, side, parse_clip_mode(clip), o));
        },
        py::arg("center"), py::arg("side"), py::arg("method") = "closed", py::arg("clip") = "unclipped",
        py::arg("resolution") = 300, py::arg("workers") = 1);
    m.def(
        "cylinder_volume_g",
        [](const std::array<double, 3> &center, double radius, double height, const std::string &method) {
            if (method == "closed") {
                return volume_dict(cylinder_volume_g(center, radius, height));
            }
            if (method != "quadrature") {
                throw ArgumentError("method must be 'closed' or 'quadrature'");
            }
            return volume_dict(cylinder_volume_g_quadrature(center, radius, height));
        },
        py::arg("center"), py::arg("radius"), py::arg("height"), py::arg("method") = "closed");

    m.def(
        "sample_coords",
        [](std::uint64_t n, std::uint64_t seed, const std::string &sampler, unsigned workers) {
            std::vector<CanonicalCoords> cs;
            {
                py::gil_scoped_release release;
                cs = sample_classes(n, {seed, workers, parse_sampler(sampler)});
            }
            py::array_t<double> out({static_cast<py::ssize_t>(n), py::ssize_t{3}});
            auto v = out.mutable_unchecked<2>();
            for (py::ssize_t i = 0; i < static_cast<py::ssize_t>(n); i++) {
                v(i, 0) = cs[i].c1;
                v(i, 1) = cs[i].c2;
                v(i, 2) = cs[i].c3;
            }
            return out;
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("sampler") = "oracle", py::arg("workers") = 1,
        "Canonical coordinates of n Haar-random gates, shape (n, 3)");
    m.def(
        "random_gate",
        [](std::uint64_t seed, std::uint64_t stream, const std::string &sampler) {
            RandomStream rng(seed, stream);
            return to_array(sample_gate(rng, parse_sampler(sampler)).matrix());
        },
        py::arg("seed") = 0, py::arg("stream") = 0, py::arg("sampler") = "oracle");
}
