#include "freegroup/certificate.hpp"

#include "freegroup/word_io.hpp"

namespace freegroup {

using nlohmann::json;

json minimization_certificate(const MinimizationResult& result) {
  json steps = json::array();
  for (const auto& step : result.steps) {
    steps.push_back({{"move", format_move(step.move)}, {"length", step.length}});
  }
  return {
      {"kind", "minimization"},
      {"rank", result.input.rank().value()},
      {"input", format_cyclic(result.input)},
      {"input_length", result.input.length()},
      {"steps", std::move(steps)},
      {"minimal", format_cyclic(result.minimal)},
  };
}

json basis_certificate(const Word& input, const WordTuple& basis) {
  json words = json::array();
  for (const auto& w : basis.words()) words.push_back(format_word(w));
  return {
      {"kind", "basis-completion"},
      {"rank", input.rank().value()},
      {"input", format_word(input)},
      {"basis", std::move(words)},
  };
}

json orbit_certificate(const Word& u, const Word& v, const AutomorphismChain& chain) {
  json moves = json::array();
  for (const auto& m : chain.moves()) moves.push_back(format_move(m));
  return {
      {"kind", "orbit-equivalence"},
      {"rank", u.rank().value()},
      {"first", format_word(u)},
      {"second", format_word(v)},
      {"moves", std::move(moves)},
  };
}

namespace {

void check_minimization(const json& doc, Rank rank, CertificateCheck& out) {
  CyclicWord current = cyclic_reduce(parse_word(doc.at("input").get<std::string>(), rank)).core;
  if (doc.contains("input_length") && doc.at("input_length").get<std::size_t>() != current.length()) {
    out.problems.push_back("input_length does not match the input's cyclic length");
  }
  std::size_t step_no = 0;
  for (const auto& step : doc.at("steps")) {
    ++step_no;
    WhiteheadAut move = parse_move(step.at("move").get<std::string>(), rank);
    CyclicWord next = apply_to_cyclic(move, current);
    auto claimed = step.at("length").get<std::size_t>();
    if (next.length() != claimed) {
      out.problems.push_back("step " + std::to_string(step_no) + ": length " + std::to_string(next.length()) +
                             " but certificate claims " + std::to_string(claimed));
    }
    if (next.length() >= current.length()) {
      out.problems.push_back("step " + std::to_string(step_no) + ": length does not strictly decrease");
    }
    current = std::move(next);
  }
  CyclicWord minimal = cyclic_reduce(parse_word(doc.at("minimal").get<std::string>(), rank)).core;
  if (minimal != current) out.problems.push_back("replayed chain does not end at the stated minimal word");
  if (!is_type2_fixed_point(minimal)) out.problems.push_back("minimal word can still be shortened");
}

void check_basis(const json& doc, Rank rank, CertificateCheck& out) {
  Word input = parse_word(doc.at("input").get<std::string>(), rank);
  std::vector<Word> words;
  for (const auto& w : doc.at("basis")) words.push_back(parse_word(w.get<std::string>(), rank));
  WordTuple basis(rank, std::move(words));
  if (basis.size() == 0 || basis[0] != input) out.problems.push_back("basis does not start with the input word");
  if (!is_basis(basis)) out.problems.push_back("tuple is not a basis");
}

void check_orbit(const json& doc, Rank rank, CertificateCheck& out) {
  Word u = parse_word(doc.at("first").get<std::string>(), rank);
  Word v = parse_word(doc.at("second").get<std::string>(), rank);
  AutomorphismChain chain(rank);
  for (const auto& m : doc.at("moves")) chain.push_back(parse_move(m.get<std::string>(), rank));
  if (compose(chain, cyclic_reduce(u).core) != cyclic_reduce(v).core) {
    out.problems.push_back("chain does not carry the first word's cyclic core to the second's");
  }
}

}  // namespace

CertificateCheck check_certificate(const json& doc) {
  CertificateCheck out;
  try {
    out.kind = doc.at("kind").get<std::string>();
    Rank rank(doc.at("rank").get<int>());
    if (out.kind == "minimization") {
      check_minimization(doc, rank, out);
    } else if (out.kind == "basis-completion") {
      check_basis(doc, rank, out);
    } else if (out.kind == "orbit-equivalence") {
      check_orbit(doc, rank, out);
    } else {
      out.problems.push_back("unknown certificate kind \"" + out.kind + "\"");
    }
  } catch (const json::exception& e) {
    out.problems.push_back(std::string("malformed certificate: ") + e.what());
  } catch (const DomainError& e) {
    out.problems.push_back(std::string("invalid certificate content: ") + e.what());
  }
  out.valid = out.problems.empty();
  return out;
}

}  // namespace freegroup
