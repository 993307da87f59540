#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dissect/involution.hpp"

namespace dissect {

/// One enumerated pair of commuting involutions with its derived data.
struct TripleRecord {
  std::string algebra_id;           // e.g. "so(2,3)"
  std::string tau_desc, sigma_desc; // e.g. "signs(+--)"
  std::size_t dim_hl = 0, dim_hm = 0, dim_ql = 0, dim_qm = 0;
  bool dissecting = false;
  std::optional<ElementType> x0_type;
  int equivalence_class = -1;       // among dissecting records; -1 otherwise
};

/// Structured result of one named check; failures always carry a witness.
struct VerificationReport {
  std::string name;
  std::string params;
  bool pass = false;
  std::string witness;
  long long millis = 0;
};

struct ReportDocument {
  std::string version;
  std::string input_digest;
  std::vector<VerificationReport> reports;
  std::vector<TripleRecord> records;
  int exit_status = 0;
};

std::string emit_json(const ReportDocument& doc);
std::string emit_text(const ReportDocument& doc);
ReportDocument parse_json_document(const std::string& text);

inline const char* tool_version() { return "0.1.0"; }

/// FNV-1a digest of the input text, hex encoded.
std::string digest(const std::string& text);

}  // namespace dissect
