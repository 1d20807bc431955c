#pragma once

#include "lcconn/label_cover.hpp"

namespace lcconn::fixtures {

// One arc, |L1| = 2, |L2| = 1: every labeling covers it.
inline LabelCoverInstance k1(Rational c1 = 1, Rational c2 = 1) {
  LabelCoverInstance lc;
  lc.left_count = 1;
  lc.right_count = 1;
  lc.left_labels = 2;
  lc.right_labels = 1;
  lc.arcs = {{0, 0, {0, 0}}};
  lc.left_cost = c1;
  lc.right_cost = c2;
  return lc;
}

inline LabelCoverInstance identity_arc() {
  LabelCoverInstance lc;
  lc.left_count = 1;
  lc.right_count = 1;
  lc.left_labels = 2;
  lc.right_labels = 2;
  lc.arcs = {{0, 0, {0, 1}}};
  lc.left_cost = 1;
  lc.right_cost = 1;
  return lc;
}

// K_{2,2} over L = {0,1}; identity projections except (1,1), which swaps.
// Best labeling covers 3 of 4 arcs, min cost 5.
inline LabelCoverInstance k3() {
  LabelCoverInstance lc;
  lc.left_count = 2;
  lc.right_count = 2;
  lc.left_labels = 2;
  lc.right_labels = 2;
  lc.arcs = {{0, 0, {0, 1}}, {0, 1, {0, 1}}, {1, 0, {0, 1}}, {1, 1, {1, 0}}};
  lc.left_cost = 1;
  lc.right_cost = 1;
  return lc;
}

// Two disjoint identity arcs (2K2).
inline LabelCoverInstance two_k2() {
  LabelCoverInstance lc;
  lc.left_count = 2;
  lc.right_count = 2;
  lc.left_labels = 2;
  lc.right_labels = 2;
  lc.arcs = {{0, 0, {0, 1}}, {1, 1, {0, 1}}};
  lc.left_cost = 1;
  lc.right_cost = 1;
  return lc;
}

}  // namespace lcconn::fixtures
