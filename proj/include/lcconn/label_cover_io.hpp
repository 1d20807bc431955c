#pragma once

#include <iosfwd>
#include <string>

#include "lcconn/label_cover.hpp"

namespace lcconn {

// `labelcover v1` text format:
//
//   labelcover v1
//   labels <|L1|> <|L2|>
//   costs <c1num>/<c1den> <c2num>/<c2den>     (optional)
//   left <|U|>
//   right <|W|>
//   multiarc                                  (optional: parallel arcs allowed)
//   planted left <f1(0)> ... right <f2(0)> ...  (optional)
//   arc <u> <w> <pi(0)> <pi(1)> ... <pi(|L1|-1)>
//
// '#' starts a comment. Indices are 0-based.
LabelCoverInstance read_label_cover(std::istream& in);
LabelCoverInstance read_label_cover_file(const std::string& path);

void write_label_cover(std::ostream& out, const LabelCoverInstance& instance);
std::string to_text(const LabelCoverInstance& instance);

}  // namespace lcconn
