#pragma once

#include <string>
#include <vector>

#include "lcconn/gadgets.hpp"
#include "lcconn/label_cover.hpp"
#include "lcconn/network.hpp"

namespace lcconn {

struct Claim {
  std::string name;
  bool pass = false;
  std::string measured;
  std::string formula;
};

// Invariants that can be checked from the network alone: well-formedness,
// Menger duality per demand, terminal degrees for rooted kinds, uniform
// requirements, and the trivial all/nothing selections.
std::vector<Claim> network_claims(const NetworkInstance& net);

// Parameter rules relating a gadget to its source instance (k formulas).
std::vector<Claim> gadget_claims(const LabelCoverInstance& source, const GadgetResult& gadget);

// Bound on merged demand pairs: |classes| <= 2 Delta^2.
Claim merge_claim(const LabelCoverInstance& source, const MergedInstance& merged);

bool all_pass(const std::vector<Claim>& claims);

}  // namespace lcconn
