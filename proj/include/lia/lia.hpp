// Copyright 2026 The LIA Kernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIA_LIA_HPP_
#define LIA_LIA_HPP_

#include "lia/conformance.hpp"
#include "lia/environment.hpp"
#include "lia/eval.hpp"
#include "lia/expr.hpp"
#include "lia/format.hpp"
#include "lia/fp_core.hpp"
#include "lia/interval.hpp"
#include "lia/ops.hpp"
#include "lia/rounding.hpp"
#include "lia/trap.hpp"
#include "lia/value.hpp"

#endif  // LIA_LIA_HPP_
