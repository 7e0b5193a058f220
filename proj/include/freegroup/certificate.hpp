#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "freegroup/basis.hpp"
#include "freegroup/whitehead.hpp"

namespace freegroup {

// Certificates are JSON objects with a "kind" field:
//
//   minimization         input word, each move with the cyclic length after it,
//                        and the minimal word
//   basis-completion     input word and a basis starting with it
//   orbit-equivalence    two words and a chain carrying one core to the other
//
// Words are written in the standard syntax, moves in the move syntax.

nlohmann::json minimization_certificate(const MinimizationResult& result);
nlohmann::json basis_certificate(const Word& input, const WordTuple& basis);
nlohmann::json orbit_certificate(const Word& u, const Word& v, const AutomorphismChain& chain);

struct CertificateCheck {
  bool valid = false;
  std::string kind;
  std::vector<std::string> problems;
};

/// Replays a certificate from scratch. Malformed documents are reported as
/// problems, not thrown.
CertificateCheck check_certificate(const nlohmann::json& doc);

}  // namespace freegroup
