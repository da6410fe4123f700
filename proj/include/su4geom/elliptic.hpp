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

#ifndef SU4GEOM_ELLIPTIC_HPP
#define SU4GEOM_ELLIPTIC_HPP

namespace su4geom {

/// Complete elliptic integral of the first kind, modulus convention, k in [0, 1).
/// Throws DomainError outside that range.
double elliptic_K(double k);

/// Complete elliptic integral of the second kind, modulus convention, k in [0, 1].
double elliptic_E(double k);

}  // namespace su4geom

#endif
