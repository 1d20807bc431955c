#include "lcconn/text_util.hpp"

#include <charconv>

#include "lcconn/errors.hpp"

namespace lcconn::text {

std::vector<std::string> tokens(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int64(const std::string& token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  return value;
}

int to_int(const std::string& token, int line) {
  const long long v = to_int64(token, line);
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError("integer out of range '" + token + "'", line);
  return static_cast<int>(v);
}

bool next_line(std::istream& in, std::vector<std::string>& out, int& line_number) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_number;
    out = tokens(raw);
    if (!out.empty()) return true;
  }
  return false;
}

}  // namespace lcconn::text
