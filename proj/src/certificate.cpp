#include "plg/certificate.hpp"

#include "plg/errors.hpp"

namespace plg {

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::Abelian: return "AbelianCert";
    case CertKind::ZkWitness: return "ZkWitnessCert";
    case CertKind::Relation: return "RelationCert";
    case CertKind::Free: return "FreeCert";
    default: return "Inconclusive";
  }
}

CertKind cert_kind_from_string(const std::string& s) {
  for (CertKind k : {CertKind::Abelian, CertKind::ZkWitness, CertKind::Relation, CertKind::Free,
                     CertKind::Inconclusive}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown certificate kind \"" + s + "\"");
}

nlohmann::json Certificate::to_json() const {
  return {{"kind", to_string(kind_)}, {"payload", payload_}, {"verification_log", log_}};
}

}  // namespace plg
