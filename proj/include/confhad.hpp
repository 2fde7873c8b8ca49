// Copyright 2026 The confhad Authors
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

#pragma once

#include "confhad/catalog.hpp"
#include "confhad/classify.hpp"
#include "confhad/constructions.hpp"
#include "confhad/cyclotomic.hpp"
#include "confhad/equivalence.hpp"
#include "confhad/error.hpp"
#include "confhad/evaluate.hpp"
#include "confhad/fingerprint.hpp"
#include "confhad/gaussian_int.hpp"
#include "confhad/io.hpp"
#include "confhad/laurent_poly.hpp"
#include "confhad/matrix.hpp"
#include "confhad/monomial.hpp"
#include "confhad/recipe.hpp"
#include "confhad/search.hpp"
#include "confhad/verify.hpp"
