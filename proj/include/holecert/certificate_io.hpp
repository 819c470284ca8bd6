#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "holecert/certificate.hpp"

namespace holecert {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One-line JSON: {"kind":"clique","vertices":[...]},
/// {"kind":"high_odd_hole","cycle":[...]} or
/// {"kind":"c7_complement","position_map":[...]}.
std::string serialize_certificate(const Certificate& cert);

Certificate deserialize_certificate(std::string_view text);

/// Human-readable one-liner.
std::string describe_certificate(const Certificate& cert);

}  // namespace holecert
