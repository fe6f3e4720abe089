#pragma once

#include "plg/certificate.hpp"

namespace plg::detail {

struct CertificateIssuer {
  static Certificate issue(CertKind kind, nlohmann::json payload, std::vector<std::string> log) {
    return Certificate(kind, std::move(payload), std::move(log));
  }
  static Certificate inconclusive(const std::string& reason, nlohmann::json extra = nlohmann::json::object(),
                                  std::vector<std::string> log = {}) {
    extra["reason"] = reason;
    return Certificate(CertKind::Inconclusive, std::move(extra), std::move(log));
  }
};

}  // namespace plg::detail
