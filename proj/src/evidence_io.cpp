#include "qsl/evidence_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qsl/error.hpp"

namespace qsl {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(std::string_view where, std::string_view what) {
  throw Error(ErrorCode::ParseError, fmt::format("{}: {}", where, what));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) {
      msg = msg.substr(pos);
    }
    parse_fail(fmt::format("{}:{}:{}", origin, line, col), msg);
  } catch (const json::exception& e) {
    parse_fail(origin, e.what());
  }
}

double number_field(const json& obj, const char* key, std::string_view where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    parse_fail(fmt::format("{}.{}", where, key), "expected a number");
  }
  return v.get<double>();
}

void check_keys(const json& obj, std::string_view where,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) parse_fail(fmt::format("{}.{}", where, key), "unknown key");
  }
}

ProbabilityRecord parse_probability(const json& obj, const std::string& where) {
  const bool cartesian = obj.contains("re") || obj.contains("im");
  const bool polar = obj.contains("amplitude") || obj.contains("angle_rad");
  if (cartesian && polar) {
    parse_fail(where, "mixes cartesian (re, im) and polar (amplitude, angle_rad) fields");
  }
  if (!cartesian && !polar) {
    parse_fail(where, "needs either re and im, or amplitude and angle_rad");
  }
  ProbabilityRecord rec;
  rec.location = where;
  const char* k1 = cartesian ? "re" : "amplitude";
  const char* k2 = cartesian ? "im" : "angle_rad";
  for (const char* k : {k1, k2}) {
    if (!obj.contains(k)) parse_fail(where, fmt::format("missing field '{}'", k));
  }
  rec.form = cartesian ? ProbabilityRecord::Form::Cartesian
                       : ProbabilityRecord::Form::Polar;
  rec.first = number_field(obj, k1, where);
  rec.second = number_field(obj, k2, where);
  return rec;
}

const json& top_level_array(const json& doc, const char* key, std::string_view origin) {
  if (!doc.is_object()) parse_fail(origin, "top level must be an object");
  if (!doc.contains(key)) parse_fail(origin, fmt::format("missing top-level '{}' list", key));
  const json& arr = doc.at(key);
  if (!arr.is_array()) parse_fail(fmt::format("{}: {}", origin, key), "expected a list");
  return arr;
}

std::string label_field(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key)) parse_fail(where, fmt::format("missing field '{}'", key));
  const auto& v = obj.at(key);
  if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
    parse_fail(fmt::format("{}.{}", where, key), "expected a non-empty string");
  }
  return v.get<std::string>();
}

}  // namespace

QuantumProbability ProbabilityRecord::to_probability() const {
  try {
    return form == Form::Cartesian ? QuantumProbability::from_cartesian(first, second)
                                   : QuantumProbability::from_polar(first, second);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", location, e.what()));
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, fmt::format("{}: cannot open file", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DocumentKind detect_document_kind(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (doc.is_object() && doc.contains("sources")) return DocumentKind::Evidence;
  if (doc.is_object() && doc.contains("masses")) return DocumentKind::MassFunction;
  parse_fail(origin, "expected a top-level 'sources' or 'masses' key");
}

std::vector<EvidenceRecord> parse_evidence_records(std::string_view text,
                                                   std::string_view origin) {
  const json doc = parse_json(text, origin);
  const json& sources = top_level_array(doc, "sources", origin);
  check_keys(doc, origin, {"sources"});

  std::vector<EvidenceRecord> records;
  records.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::string where = fmt::format("{}: sources[{}]", origin, i);
    const json& src = sources[i];
    if (!src.is_object()) parse_fail(where, "expected an object");
    check_keys(src, where, {"label", "re", "im", "amplitude", "angle_rad"});
    EvidenceRecord rec;
    rec.label = label_field(src, "label", where);
    rec.value = parse_probability(src, where);
    rec.value.location = fmt::format("{} ('{}')", where, rec.label);
    records.push_back(std::move(rec));
  }
  return records;
}

EvidenceSet evidence_from_records(const std::vector<EvidenceRecord>& records) {
  std::vector<EvidenceEntry> entries;
  entries.reserve(records.size());
  for (const auto& rec : records) {
    entries.push_back({rec.label, rec.value.to_probability()});
  }
  return EvidenceSet(std::move(entries));
}

EvidenceSet parse_evidence(std::string_view text, std::string_view origin) {
  return evidence_from_records(parse_evidence_records(text, origin));
}

EvidenceSet load_evidence(const std::filesystem::path& path) {
  return parse_evidence(read_text_file(path), path.string());
}

std::string to_evidence_document(const EvidenceSet& evidence) {
  json sources = json::array();
  for (const auto& e : evidence.entries()) {
    json rec = json::object();
    rec["label"] = e.label;
    rec["re"] = e.probability.re();
    rec["im"] = e.probability.im();
    sources.push_back(std::move(rec));
  }
  json doc = json::object();
  doc["sources"] = std::move(sources);
  return doc.dump(2) + "\n";
}

MassDocument parse_mass_document(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  const json& masses = top_level_array(doc, "masses", origin);
  const json& frame = top_level_array(doc, "frame", origin);
  check_keys(doc, origin, {"frame", "masses"});

  MassDocument out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!frame[i].is_string()) {
      parse_fail(fmt::format("{}: frame[{}]", origin, i), "expected a string");
    }
    out.frame.push_back(frame[i].get<std::string>());
  }

  std::set<std::set<std::string>> seen;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string where = fmt::format("{}: masses[{}]", origin, i);
    const json& m = masses[i];
    if (!m.is_object()) parse_fail(where, "expected an object");
    check_keys(m, where, {"subset", "re", "im", "amplitude", "angle_rad"});
    if (!m.contains("subset") || !m.at("subset").is_array()) {
      parse_fail(where, "missing 'subset' list");
    }
    MassRecord rec;
    for (const auto& s : m.at("subset")) {
      if (!s.is_string()) parse_fail(fmt::format("{}.subset", where), "expected strings");
      rec.subset.push_back(s.get<std::string>());
    }
    if (!seen.insert({rec.subset.begin(), rec.subset.end()}).second) {
      parse_fail(where, "subset assigned more than once");
    }
    rec.value = parse_probability(m, where);
    out.masses.push_back(std::move(rec));
  }
  return out;
}

QuantumMassFunction mass_function_from_document(const MassDocument& doc) {
  QuantumMassFunction m{FrameOfDiscernment(doc.frame)};
  for (const auto& rec : doc.masses) {
    m.assign(m.subset_of(rec.subset), rec.value.to_probability());
  }
  return m;
}

QuantumMassFunction load_mass_function(const std::filesystem::path& path) {
  return mass_function_from_document(
      parse_mass_document(read_text_file(path), path.string()));
}

}  // namespace qsl
