// Copyright 2026 The grpinv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.
#ifndef GRPINV_GRPINV_HPP_
#define GRPINV_GRPINV_HPP_

#include "grpinv/corpus.hpp"
#include "grpinv/cover.hpp"
#include "grpinv/errors.hpp"
#include "grpinv/ext_nat.hpp"
#include "grpinv/group.hpp"
#include "grpinv/group_spec.hpp"
#include "grpinv/invariants.hpp"
#include "grpinv/iso.hpp"
#include "grpinv/lattice.hpp"
#include "grpinv/report.hpp"
#include "grpinv/theorems.hpp"
#include "grpinv/verify.hpp"

#endif  // GRPINV_GRPINV_HPP_
