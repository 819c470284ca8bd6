#include "holecert/certificate_io.hpp"

#include <sstream>

#include "json.hpp"

namespace holecert {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> int_array(const nlohmann::json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw CertificateFormatError(std::string("missing field \"") + field + "\"");
  if (!it->is_array()) throw CertificateFormatError(std::string("field \"") + field + "\" is not an array");
  std::vector<int> out;
  for (const auto& x : *it) {
    if (!x.is_number_integer()) {
      throw CertificateFormatError(std::string("field \"") + field + "\" holds a non-integer");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  ordered_json doc;
  doc["kind"] = std::string(kind_name(kind_of(cert)));
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, CliqueWitness>) {
          doc["vertices"] = w.vertices;
        } else if constexpr (std::is_same_v<T, HighOddHoleWitness>) {
          doc["cycle"] = w.cycle;
        } else {
          doc["position_map"] = w.position_map;
        }
      },
      cert);
  return doc.dump();
}

Certificate deserialize_certificate(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateFormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CertificateFormatError("certificate must be a JSON object");
  const auto kind = doc.find("kind");
  if (kind == doc.end() || !kind->is_string()) {
    throw CertificateFormatError("certificate has no string field \"kind\"");
  }
  const std::string k = kind->get<std::string>();
  if (k == "clique") return CliqueWitness{int_array(doc, "vertices")};
  if (k == "high_odd_hole") return HighOddHoleWitness{int_array(doc, "cycle")};
  if (k == "c7_complement") return ExceptionalC7Complement{int_array(doc, "position_map")};
  throw CertificateFormatError("unknown certificate kind \"" + k + "\"");
}

std::string describe_certificate(const Certificate& cert) {
  auto list = [](const std::vector<int>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    return os.str();
  };
  return std::visit(
      [&](const auto& w) -> std::string {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, CliqueWitness>) {
          return "clique of size " + std::to_string(w.vertices.size()) + ": " + list(w.vertices);
        } else if constexpr (std::is_same_v<T, HighOddHoleWitness>) {
          return "high odd hole of length " + std::to_string(w.cycle.size()) + ": " +
                 list(w.cycle);
        } else {
          return "exceptional graph (complement of C7), positions: " + list(w.position_map);
        }
      },
      cert);
}

}  // namespace holecert
