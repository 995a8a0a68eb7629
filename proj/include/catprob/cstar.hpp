// Copyright 2026 The catprob Authors
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

#ifndef CATPROB_CSTAR_HPP
#define CATPROB_CSTAR_HPP

#include "catprob/cstar/effect.hpp"
#include "catprob/cstar/element.hpp"
#include "catprob/cstar/functional_calculus.hpp"
#include "catprob/cstar/pu_map.hpp"
#include "catprob/cstar/random.hpp"
#include "catprob/cstar/shape.hpp"
#include "catprob/cstar/structure.hpp"

#endif // CATPROB_CSTAR_HPP
