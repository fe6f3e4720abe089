#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace plg {

enum class CertKind { Abelian, ZkWitness, Relation, Free, Inconclusive };

std::string to_string(CertKind k);
CertKind cert_kind_from_string(const std::string& s);

namespace detail {
struct CertificateIssuer;
}

/// Outcome record of a certifying operation. Only the operations that verify
/// a payload can create one; every payload can be re-verified from its JSON.
class Certificate {
 public:
  CertKind kind() const noexcept { return kind_; }
  bool inconclusive() const noexcept { return kind_ == CertKind::Inconclusive; }
  const nlohmann::json& payload() const noexcept { return payload_; }
  const std::vector<std::string>& verification_log() const noexcept { return log_; }

  /// {"kind": ..., "payload": ..., "verification_log": [...]}
  nlohmann::json to_json() const;

 private:
  friend struct detail::CertificateIssuer;
  Certificate(CertKind kind, nlohmann::json payload, std::vector<std::string> log)
      : kind_(kind), payload_(std::move(payload)), log_(std::move(log)) {}

  CertKind kind_;
  nlohmann::json payload_;
  std::vector<std::string> log_;
};

/// Result of replaying a serialized certificate.
struct VerifyReport {
  bool ok = false;
  std::vector<std::string> log;
};

}  // namespace plg
