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


#ifndef EDM_EDM_HPP_
#define EDM_EDM_HPP_

#include "edm/composition.hpp"
#include "edm/edm_core.hpp"
#include "edm/errors.hpp"
#include "edm/generators.hpp"
#include "edm/matrix_kernel.hpp"
#include "edm/qap.hpp"
#include "edm/random.hpp"
#include "edm/spherical.hpp"

#endif  // EDM_EDM_HPP_
