#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcconn/gap.hpp"
#include "lcconn/network.hpp"
#include "lcconn/strong_coloring.hpp"
#include "lcconn/transforms.hpp"

namespace lcconn {

inline constexpr const char* kToolVersion = "lcconn 0.3.0";

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const DegreeProfile& p);
Json to_json(const PassTrace& trace);
Json to_json(const StrongColoring& coloring);
Json to_json(const GapReport& report);
Json layout_summary(const GadgetLayout& layout);

// Replayable record of one command. Timings live under "timing" only, so
// stripping that key leaves a seed-determined document.
class RunReport {
 public:
  RunReport(const std::vector<std::string>& argv);

  void seed(const std::string& name, std::uint64_t value);
  void input(const std::string& path, const std::string& digest);
  void output(const std::string& path, const std::string& digest);
  void trace(const PassTrace& t);
  void coloring(const StrongColoring& c);
  void layout(const GadgetLayout& l);
  void gap(const GapReport& g);
  // One invariant: name, verdict, measured value and (optionally) the
  // formula it was compared against.
  void check(const std::string& name, bool pass, Json measured, const std::string& formula = "");
  void set(const std::string& key, Json value);
  void stage(const std::string& name, double seconds);

  bool all_checks_pass() const;
  const Json& json() const { return doc_; }
  std::string text() const { return doc_.dump(2) + "\n"; }

 private:
  Json doc_;
};

}  // namespace lcconn
