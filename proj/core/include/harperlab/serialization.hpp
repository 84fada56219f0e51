// Bit-exact JSON serialization for families and reports.
//
// The family document is
//   { "n": <int>, "vertices": [ascending masks], "label": <optional string> }
// with every mask below 2^n, strictly ascending, no duplicates. A
// human-readable variant with "sets": [[coordinates...], ...] is accepted
// on input only; emission always uses integer masks.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harperlab/classifier.hpp"
#include "harperlab/cube.hpp"
#include "harperlab/extremality.hpp"

namespace harperlab {

struct FamilyDocument {
  int n = 0;
  std::vector<std::uint32_t> vertices;  // ascending
  std::optional<std::string> label;
};

// Raised for malformed documents; the message pins down the position
// (byte offset for JSON syntax, vertex index for semantic errors).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

FamilyDocument family_to_document(const Family& family,
                                  std::optional<std::string> label = {});
Family document_to_family(const FamilyDocument& doc);

// Strict: validates the invariants, throws ParseError.
FamilyDocument parse_family_document(const std::string& json_text);
Family parse_family(const std::string& json_text);

// Deterministic, byte-stable output (sorted keys, two-space indent,
// trailing newline).
std::string emit_family(const Family& family,
                        std::optional<std::string> label = {});
std::string emit_family_document(const FamilyDocument& doc);

std::string extremality_report_to_json(const ExtremalityReport& report);
std::string extremality_report_to_csv(const ExtremalityReport& report);

std::string classification_to_json(const ClassificationResult& result);
std::string classification_to_csv(const ClassificationResult& result);

// The self-contained run report emitted by the verify and iso subcommands.
struct RunReport {
  std::vector<std::string> argv;
  std::string subcommand;
  std::string parameters_json;  // pre-rendered parameter object
  bool verified = false;
  std::string details;
  std::vector<std::pair<std::string, std::int64_t>> stats;
  std::vector<FamilyDocument> witnesses;
  std::int64_t timing_ms = 0;
};

std::string run_report_to_json(const RunReport& report);
std::string run_report_to_csv(const RunReport& report);

const char* library_version();

}  // namespace harperlab
