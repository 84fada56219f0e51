#include "harperlab/serialization.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

namespace harperlab {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

const char* library_version() { return kVersion; }

FamilyDocument family_to_document(const Family& family,
                                  std::optional<std::string> label) {
  FamilyDocument doc;
  doc.n = family.dim();
  doc.vertices = family.members();
  doc.label = std::move(label);
  return doc;
}

Family document_to_family(const FamilyDocument& doc) {
  Family out(doc.n);
  for (auto m : doc.vertices) out.insert(m);
  return out;
}

namespace {

FamilyDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("family document: not a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("family document: missing integer field 'n'");
  }
  FamilyDocument doc;
  doc.n = j["n"].get<int>();
  if (doc.n < 1 || doc.n > kMaxDimension) {
    throw ParseError("family document: n out of range [1, 20]");
  }
  const bool has_masks = j.contains("vertices");
  const bool has_sets = j.contains("sets");
  if (has_masks == has_sets) {
    throw ParseError(
        "family document: exactly one of 'vertices' or 'sets' required");
  }
  const std::uint64_t limit = std::uint64_t{1} << doc.n;
  if (has_masks) {
    const json& verts = j["vertices"];
    if (!verts.is_array()) {
      throw ParseError("family document: 'vertices' must be an array");
    }
    for (std::size_t idx = 0; idx < verts.size(); ++idx) {
      const json& entry = verts[idx];
      if (!entry.is_number_unsigned() && !entry.is_number_integer()) {
        throw ParseError("family document: vertex " + std::to_string(idx) +
                         " is not an integer");
      }
      const std::int64_t raw = entry.get<std::int64_t>();
      if (raw < 0 || static_cast<std::uint64_t>(raw) >= limit) {
        throw ParseError("family document: vertex " + std::to_string(idx) +
                         " (mask " + std::to_string(raw) + ") out of range");
      }
      const auto mask = static_cast<std::uint32_t>(raw);
      if (!doc.vertices.empty() && mask <= doc.vertices.back()) {
        throw ParseError("family document: vertex " + std::to_string(idx) +
                         " breaks the strictly-ascending order");
      }
      doc.vertices.push_back(mask);
    }
  } else {
    // Subset-list form, input only: "sets": [[1,2],[3],...]
    const json& sets = j["sets"];
    if (!sets.is_array()) {
      throw ParseError("family document: 'sets' must be an array");
    }
    std::vector<std::uint32_t> masks;
    for (std::size_t idx = 0; idx < sets.size(); ++idx) {
      const json& entry = sets[idx];
      if (!entry.is_array()) {
        throw ParseError("family document: set " + std::to_string(idx) +
                         " is not an array of coordinates");
      }
      std::uint32_t mask = 0;
      for (const json& coord : entry) {
        if (!coord.is_number_integer()) {
          throw ParseError("family document: set " + std::to_string(idx) +
                           " holds a non-integer coordinate");
        }
        const std::int64_t c = coord.get<std::int64_t>();
        if (c < 1 || c > doc.n) {
          throw ParseError("family document: set " + std::to_string(idx) +
                           " coordinate " + std::to_string(c) +
                           " out of [1, n]");
        }
        mask |= std::uint32_t{1} << (c - 1);
      }
      masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    for (std::size_t idx = 1; idx < masks.size(); ++idx) {
      if (masks[idx] == masks[idx - 1]) {
        throw ParseError("family document: duplicate set at sorted index " +
                         std::to_string(idx));
      }
    }
    doc.vertices = std::move(masks);
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      throw ParseError("family document: 'label' must be a string");
    }
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

}  // namespace

FamilyDocument parse_family_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("family document: ") + err.what());
  }
  return document_from_json(j);
}

Family parse_family(const std::string& json_text) {
  return document_to_family(parse_family_document(json_text));
}

namespace {

json document_to_json(const FamilyDocument& doc) {
  json j;
  j["n"] = doc.n;
  j["vertices"] = doc.vertices;
  if (doc.label) j["label"] = *doc.label;
  return j;
}

}  // namespace

std::string emit_family_document(const FamilyDocument& doc) {
  return dump(document_to_json(doc));
}

std::string emit_family(const Family& family, std::optional<std::string> label) {
  return emit_family_document(family_to_document(family, std::move(label)));
}

std::string extremality_report_to_json(const ExtremalityReport& report) {
  json j;
  j["n"] = report.n;
  j["size"] = report.size;
  j["strong_extremal"] = report.strong_extremal;
  j["weak_extremal"] = report.weak_extremal;
  j["forward_only"] = report.forward_only;
  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["t"] = row.t;
    r["forward_size"] = row.forward_size;
    r["forward_min"] = row.forward_min;
    r["forward_ok"] = row.forward_ok;
    r["backward_size"] = row.backward_size;
    r["backward_min"] = row.backward_min;
    r["backward_ok"] = row.backward_ok;
    j["rows"].push_back(std::move(r));
  }
  j["version"] = kVersion;
  return dump(j);
}

std::string extremality_report_to_csv(const ExtremalityReport& report) {
  std::string out =
      "t,forward_size,forward_min,forward_ok,backward_size,backward_min,"
      "backward_ok\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.t) + "," + std::to_string(row.forward_size) +
           "," + std::to_string(row.forward_min) + "," +
           (row.forward_ok ? "1" : "0") + "," +
           std::to_string(row.backward_size) + "," +
           std::to_string(row.backward_min) + "," +
           (row.backward_ok ? "1" : "0") + "\n";
  }
  return out;
}

namespace {

json class_record_to_json(const ClassRecord& record) {
  json c;
  c["vertices"] = record.representative.members();
  c["label"] = record.label;
  if (record.matched) {
    json m;
    m["r"] = record.matched->r;
    m["k"] = record.matched->k;
    m["i"] = record.matched->i;
    m["complemented"] = record.matched->complemented;
    c["matched"] = std::move(m);
  }
  return c;
}

}  // namespace

std::string classification_to_json(const ClassificationResult& result) {
  json j;
  j["n"] = result.n;
  j["size"] = result.size;
  j["mode"] = result.mode == EnumerationMode::kFull ? "full" : "sandwich";
  j["weak"] = result.weak;
  j["window_r"] = result.window_r;
  j["normalized_by_complement"] = result.normalized_by_complement;
  j["classes"] = json::array();
  for (const auto& record : result.classes) {
    j["classes"].push_back(class_record_to_json(record));
  }
  if (result.theorem2_verified) {
    j["theorem2_verified"] = *result.theorem2_verified;
  }
  json stats;
  stats["candidates"] = result.stats.candidates;
  stats["t1_survivors"] = result.stats.t1_survivors;
  stats["extremal"] = result.stats.extremal;
  j["stats"] = std::move(stats);
  if (!result.notes.empty()) j["notes"] = result.notes;
  j["version"] = kVersion;
  return dump(j);
}

std::string classification_to_csv(const ClassificationResult& result) {
  std::string out = "class,label,vertices\n";
  for (std::size_t idx = 0; idx < result.classes.size(); ++idx) {
    out += std::to_string(idx) + "," + result.classes[idx].label + ",\"";
    const auto members = result.classes[idx].representative.members();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j) out += " ";
      out += std::to_string(members[j]);
    }
    out += "\"\n";
  }
  return out;
}

std::string run_report_to_json(const RunReport& report) {
  json j;
  j["command"] = report.subcommand;
  j["argv"] = report.argv;
  j["parameters"] = json::parse(report.parameters_json.empty()
                                    ? "{}"
                                    : report.parameters_json);
  j["verified"] = report.verified;
  j["details"] = report.details;
  json stats = json::object();
  for (const auto& [key, value] : report.stats) stats[key] = value;
  j["stats"] = std::move(stats);
  j["witnesses"] = json::array();
  for (const auto& doc : report.witnesses) {
    j["witnesses"].push_back(document_to_json(doc));
  }
  j["timing_ms"] = report.timing_ms;
  j["version"] = kVersion;
  return dump(j);
}

std::string run_report_to_csv(const RunReport& report) {
  std::string out = "key,value\n";
  out += "command," + report.subcommand + "\n";
  out += "verified," + std::string(report.verified ? "1" : "0") + "\n";
  for (const auto& [key, value] : report.stats) {
    out += key + "," + std::to_string(value) + "\n";
  }
  out += "timing_ms," + std::to_string(report.timing_ms) + "\n";
  return out;
}

}  // namespace harperlab
