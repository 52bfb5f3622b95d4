// Copyright 2026 The Snarkforge Authors.
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

// Everything except the CLI driver.

#pragma once

#include "snarkforge/analyzer.hpp"
#include "snarkforge/certificate.hpp"
#include "snarkforge/coloring.hpp"
#include "snarkforge/constructions.hpp"
#include "snarkforge/errors.hpp"
#include "snarkforge/graph.hpp"
#include "snarkforge/graph6.hpp"
#include "snarkforge/isomorphism.hpp"
#include "snarkforge/kempe.hpp"
#include "snarkforge/klein.hpp"
#include "snarkforge/ledger.hpp"
#include "snarkforge/orthogonality.hpp"
#include "snarkforge/psi.hpp"
#include "snarkforge/recipe.hpp"
