// segeval/segeval.hpp

// Copyright 2026  The segeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#ifndef SEGEVAL_SEGEVAL_HPP_
#define SEGEVAL_SEGEVAL_HPP_

#include "segeval/core.hpp"      // IWYU pragma: export
#include "segeval/corpus.hpp"    // IWYU pragma: export
#include "segeval/extract.hpp"   // IWYU pragma: export
#include "segeval/jsonl.hpp"     // IWYU pragma: export
#include "segeval/metrics.hpp"   // IWYU pragma: export
#include "segeval/objective.hpp" // IWYU pragma: export
#include "segeval/rng.hpp"       // IWYU pragma: export
#include "segeval/synth.hpp"     // IWYU pragma: export

#endif  // SEGEVAL_SEGEVAL_HPP_
