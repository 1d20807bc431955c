#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace lcconn::text {

// Whitespace-separated tokens of `line` with any '#' comment removed.
std::vector<std::string> tokens(std::string_view line);

int to_int(const std::string& token, int line);
long long to_int64(const std::string& token, int line);

// Next non-empty, comment-stripped line as tokens; false at end of input.
bool next_line(std::istream& in, std::vector<std::string>& out, int& line_number);

}  // namespace lcconn::text
