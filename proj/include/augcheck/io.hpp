#pragma once

#include <string>
#include <vector>

#include "augcheck/checker.hpp"
#include "augcheck/green.hpp"
#include "augcheck/monoid.hpp"

namespace augcheck {

/// On-disk monoid description: degree plus generator image arrays.
struct MonoidFile {
  size_t degree = 0;
  std::vector<std::vector<uint32_t>> generators;
  bool partial_with_sink = false;

  static MonoidFile parse(const std::string& text);  // strict: rejects unknown fields
  std::string serialize() const;
  MonoidData to_monoid(const Limits& limits = Limits()) const;
  static MonoidFile from_monoid(const MonoidData& m, bool partial_with_sink);
};

/// Builds the monoid described by a structure file (kind tag plus payload)
/// and reports whether it encodes partial maps with the sink at index 0.
struct ConstructResult {
  MonoidData monoid;
  bool partial_with_sink = false;
  std::string kind;
};
ConstructResult construct_from_structure(const std::string& json_text,
                                         const Limits& limits = Limits());

std::string report_to_json(const MonoidData& m, const CheckReport& rep);
std::string report_to_text(const MonoidData& m, const CheckReport& rep);
std::string green_report_json(const MonoidData& m, const GreenData& g);
std::string green_report_text(const MonoidData& m, const GreenData& g);

}  // namespace augcheck
