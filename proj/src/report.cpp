#include "dissect/report.hpp"

#include <cstdint>
#include <json.hpp>
#include <sstream>

namespace dissect {

namespace {

using json = nlohmann::ordered_json;

json record_json(const TripleRecord& r) {
  json j;
  j["algebra"] = r.algebra_id;
  j["tau"] = r.tau_desc;
  j["sigma"] = r.sigma_desc;
  j["dims"] = {{"h_l", r.dim_hl}, {"h_m", r.dim_hm}, {"q_l", r.dim_ql}, {"q_m", r.dim_qm}};
  j["dissecting"] = r.dissecting;
  if (r.x0_type)
    j["x0_type"] = to_string(*r.x0_type);
  else
    j["x0_type"] = nullptr;
  j["equivalence_class"] = r.equivalence_class;
  return j;
}

TripleRecord record_from_json(const json& j) {
  TripleRecord r;
  r.algebra_id = j.at("algebra").get<std::string>();
  r.tau_desc = j.at("tau").get<std::string>();
  r.sigma_desc = j.at("sigma").get<std::string>();
  r.dim_hl = j.at("dims").at("h_l").get<std::size_t>();
  r.dim_hm = j.at("dims").at("h_m").get<std::size_t>();
  r.dim_ql = j.at("dims").at("q_l").get<std::size_t>();
  r.dim_qm = j.at("dims").at("q_m").get<std::size_t>();
  r.dissecting = j.at("dissecting").get<bool>();
  if (!j.at("x0_type").is_null()) {
    std::string s = j.at("x0_type").get<std::string>();
    for (ElementType t : {ElementType::Zero, ElementType::Elliptic, ElementType::Hyperbolic,
                          ElementType::Nilpotent, ElementType::Mixed,
                          ElementType::Indeterminate})
      if (to_string(t) == s) r.x0_type = t;
  }
  r.equivalence_class = j.at("equivalence_class").get<int>();
  return r;
}

json report_json(const VerificationReport& r) {
  json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["pass"] = r.pass;
  j["witness"] = r.witness;
  // Wall-clock time is reported in the text format only, so that identical
  // inputs always produce byte-identical JSON.
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.name = j.at("name").get<std::string>();
  r.params = j.at("params").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.witness = j.at("witness").get<std::string>();
  return r;
}

}  // namespace

std::string emit_json(const ReportDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["input_digest"] = doc.input_digest;
  j["exit_status"] = doc.exit_status;
  j["reports"] = json::array();
  for (const auto& r : doc.reports) j["reports"].push_back(report_json(r));
  j["records"] = json::array();
  for (const auto& r : doc.records) j["records"].push_back(record_json(r));
  return j.dump(2) + "\n";
}

ReportDocument parse_json_document(const std::string& text) {
  json j = json::parse(text);
  ReportDocument doc;
  doc.version = j.at("version").get<std::string>();
  doc.input_digest = j.at("input_digest").get<std::string>();
  doc.exit_status = j.at("exit_status").get<int>();
  for (const auto& r : j.at("reports")) doc.reports.push_back(report_from_json(r));
  for (const auto& r : j.at("records")) doc.records.push_back(record_from_json(r));
  return doc;
}

std::string emit_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "dissect " << doc.version << "  input " << doc.input_digest << "\n";
  if (!doc.records.empty()) {
    os << "\nalgebra    tau            sigma          h_l h_m q_l q_m  dissecting  x0        class\n";
    for (const auto& r : doc.records) {
      auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
      };
      os << pad(r.algebra_id, 11) << pad(r.tau_desc, 15) << pad(r.sigma_desc, 15)
         << pad(std::to_string(r.dim_hl), 4) << pad(std::to_string(r.dim_hm), 4)
         << pad(std::to_string(r.dim_ql), 4) << pad(std::to_string(r.dim_qm), 5)
         << pad(r.dissecting ? "yes" : "no", 12)
         << pad(r.x0_type ? to_string(*r.x0_type) : "-", 10);
      if (r.equivalence_class >= 0)
        os << r.equivalence_class;
      else
        os << "-";
      os << "\n";
    }
  }
  if (!doc.reports.empty()) {
    os << "\n";
    for (const auto& r : doc.reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.params.empty()) os << " [" << r.params << "]";
      if (!r.witness.empty()) os << "  (" << r.witness << ")";
      os << "  " << r.millis << "ms\n";
    }
  }
  os << "\nexit status " << doc.exit_status << "\n";
  return os.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace dissect
