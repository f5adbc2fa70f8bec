// Copyright 2026 The asymlp Authors
//
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

#ifndef ASYMLP_ASYMLP_HPP
#define ASYMLP_ASYMLP_HPP

#include "asymlp/bounded_domain.hpp"
#include "asymlp/criteria.hpp"
#include "asymlp/error.hpp"
#include "asymlp/examples.hpp"
#include "asymlp/family.hpp"
#include "asymlp/fnorms.hpp"
#include "asymlp/grid.hpp"
#include "asymlp/io.hpp"
#include "asymlp/measurable_set.hpp"
#include "asymlp/nets.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/parallel.hpp"
#include "asymlp/quadrature.hpp"
#include "asymlp/resample.hpp"
#include "asymlp/tail.hpp"
#include "asymlp/transform.hpp"

#endif  // ASYMLP_ASYMLP_HPP
