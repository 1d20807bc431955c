#pragma once

#include <string>
#include <string_view>

#include "lcconn/label_cover.hpp"
#include "lcconn/network.hpp"

namespace lcconn {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

// Digests of the canonical text serializations.
std::string digest_of(const LabelCoverInstance& instance);
std::string digest_of(const NetworkInstance& net);

}  // namespace lcconn
