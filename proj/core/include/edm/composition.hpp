// Copyright 2026 The edmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDM_COMPOSITION_HPP_
#define EDM_COMPOSITION_HPP_

#include <cstddef>

#include "edm/edm_core.hpp"
#include "edm/spherical.hpp"

namespace edm {

// E_m kron D2 + D1 kron E_n: the EDM of the product configuration
// {(p, q) : p generates D1, q generates D2}. Row s = a * n + b pairs point a
// of D1 with point b of D2, so D2's index runs fastest.
//
// Throws NotEdm if either factor is not an EDM, TooLarge if m * n exceeds
// max_order.
DistanceMatrix KronSumEdm(const DistanceMatrix& d1, const DistanceMatrix& d2,
                          Tolerance tol = {},
                          std::size_t max_order = kDefaultMaxOrder);

// Radii add in quadrature and minimal shifts add. The center is left unset.
SphereInfo ComposedSphere(const SphereInfo& s1, const SphereInfo& s2);

}  // namespace edm

#endif  // EDM_COMPOSITION_HPP_
