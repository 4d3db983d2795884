// Copyright 2026 The eqforge Authors
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

#ifndef EQFORGE_CERTIFY_H_
#define EQFORGE_CERTIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "eqforge/game.h"
#include "eqforge/valuation.h"

namespace eqforge {

enum class CertificateVerdict { kCertified, kUndecided };

std::string CertificateVerdictName(CertificateVerdict v);

struct NonExistenceCertificate {
  CertificateVerdict verdict;
  double epsilon;
  int64_t explored_boxes = 0;
  int max_depth_reached = 0;
  // Boxes examined at each depth.
  std::vector<int64_t> depth_histogram;
};

// Branch-and-prune over pairs of boxes in the two strategy simplices. A box
// is discarded when it misses a simplex, or when some pure deviation of a
// player costs less than that player's cheapest cost in the box by more than
// `eps`. Certified means every box was discarded, so no profile is an
// eps-equilibrium. Undecided is returned as soon as a box survives at
// `max_depth`. Needs a unimodal valuation.
NonExistenceCertificate CertifyNoFEquilibrium(const TwoValuesGame& g,
                                              const Valuation& v,
                                              double eps = 1e-6,
                                              int max_depth = 40);

}  // namespace eqforge

#endif  // EQFORGE_CERTIFY_H_
