#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qsl/evidence.hpp"
#include "qsl/mass_function.hpp"
#include "qsl/quantum_probability.hpp"

// JSON documents for evidence sets and mass functions.
//
// Evidence:
//   {"sources": [{"label": "p1", "re": 0.3, "im": -0.7},
//                {"label": "p2", "amplitude": 0.5, "angle_rad": 1.2}]}
//
// Mass function:
//   {"frame": ["A", "B"],
//    "masses": [{"subset": ["A"], "re": 0.7071, "im": 0.0}, ...]}
//
// Each record carries exactly one of the cartesian (re, im) or polar
// (amplitude, angle_rad) pairs. Angles are radians. Unknown keys are
// rejected.

namespace qsl {

/// A probability as written in a document, before the |p| <= 1 check.
struct ProbabilityRecord {
  enum class Form { Cartesian, Polar };

  Form form = Form::Cartesian;
  double first = 0.0;   // re or amplitude
  double second = 0.0;  // im or angle_rad
  std::string location;  // e.g. "evidence.json: sources[2]"

  /// Throws the QuantumProbability construction errors, with the location
  /// prefixed to the message.
  QuantumProbability to_probability() const;
};

struct EvidenceRecord {
  std::string label;
  ProbabilityRecord value;
};

struct MassRecord {
  std::vector<std::string> subset;
  ProbabilityRecord value;
};

struct MassDocument {
  std::vector<std::string> frame;
  std::vector<MassRecord> masses;
};

enum class DocumentKind { Evidence, MassFunction };

std::string read_text_file(const std::filesystem::path& path);

/// Decides by top-level key: "sources" or "masses". Throws Error(ParseError).
DocumentKind detect_document_kind(std::string_view text, std::string_view origin);

/// Structural parse only. Throws Error(ParseError) with line:column for
/// malformed JSON and a field path for schema violations.
std::vector<EvidenceRecord> parse_evidence_records(std::string_view text,
                                                   std::string_view origin);

/// Enforces every EvidenceSet invariant; ModulusExceedsOne names the record.
EvidenceSet evidence_from_records(const std::vector<EvidenceRecord>& records);

EvidenceSet parse_evidence(std::string_view text, std::string_view origin = "<input>");
EvidenceSet load_evidence(const std::filesystem::path& path);

/// Cartesian form, shortest round-trip number formatting, so loading the
/// output reproduces the set exactly.
std::string to_evidence_document(const EvidenceSet& evidence);

MassDocument parse_mass_document(std::string_view text, std::string_view origin);
QuantumMassFunction mass_function_from_document(const MassDocument& doc);
QuantumMassFunction load_mass_function(const std::filesystem::path& path);

}  // namespace qsl
