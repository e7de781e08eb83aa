// Copyright 2026 The eaqecc Authors
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

#ifndef EAQECC_EAQECC_HPP
#define EAQECC_EAQECC_HPP

#include "eaqecc/additive_code.hpp"
#include "eaqecc/catalog.hpp"
#include "eaqecc/ea_params.hpp"
#include "eaqecc/gf2_matrix.hpp"
#include "eaqecc/gf4.hpp"
#include "eaqecc/io.hpp"
#include "eaqecc/linear_code.hpp"
#include "eaqecc/min_weight.hpp"
#include "eaqecc/performance.hpp"
#include "eaqecc/symplectic.hpp"
#include "eaqecc/theorem43.hpp"
#include "eaqecc/vectors.hpp"

#endif
