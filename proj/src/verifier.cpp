#include "freegroup/verifier.hpp"

#include <sstream>

#include "freegroup/automorphism.hpp"
#include "freegroup/certificate.hpp"
#include "freegroup/whitehead.hpp"
#include "freegroup/word_io.hpp"

namespace freegroup {

using nlohmann::json;

bool VerificationReport::passed() const {
  if (claims.empty()) return false;
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

json VerificationReport::to_json() const {
  json claims_json = json::array();
  for (const auto& c : claims) {
    claims_json.push_back({{"id", c.id},
                           {"description", c.description},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"pass", c.pass},
                           {"certificate", c.certificate}});
  }
  return {{"title", title}, {"claims", std::move(claims_json)}, {"pass", passed()}, {"interpretation", interpretation}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << title << "\n";
  for (const auto& c : claims) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.description << "\n"
        << "       expected: " << c.expected << "\n"
        << "       computed: " << c.computed << "\n";
  }
  out << "overall: " << (passed() ? "PASS" : "FAIL") << "\n";
  if (!interpretation.empty()) {
    out << "interpretation (cited, not computed):\n";
    for (const auto& line : interpretation) out << "  - " << line << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> family_dictionary() {
  return {
      "a realization of the generic type in F_n corresponds to a primitive element",
      "an independent set of such realizations corresponds to a subset of a basis",
      "b_i^-1 g being non-primitive is the combinatorial witness that g forks with b_i",
      "with C1-C3 this is the computational content behind weight >= n for the generic type",
  };
}

std::string describe(bool primitive) { return primitive ? "primitive" : "not primitive"; }

Word power_product(Rank rank, const std::vector<int>& exponents, int first_index) {
  Word w(rank);
  for (std::size_t t = 0; t < exponents.size(); ++t) {
    w = multiply(w, Word::generator(rank, first_index + static_cast<int>(t), exponents[t]));
  }
  return w;
}

// Tail a_from^3 ... a_n^3.
Word cube_tail(Rank rank, int from) {
  Word w(rank);
  for (int j = from; j <= rank.value(); ++j) w = multiply(w, Word::generator(rank, j, 3));
  return w;
}

}  // namespace

std::vector<Word> closed_form_differences(Rank rank) {
  std::vector<Word> out{cube_tail(rank, 2)};
  for (int i = 2; i <= rank.value(); ++i) {
    out.push_back(multiply(Word::generator(rank, i, 2), cube_tail(rank, i + 1)));
  }
  return out;
}

WitnessInstance build_instance(int n) {
  if (n < 2) throw PreconditionError("the witness family needs rank n >= 2");
  Rank rank(n);
  Word a1 = Word::generator(rank, 1);
  Word g = multiply(a1, cube_tail(rank, 2));

  std::vector<Word> b{a1, multiply(a1, Word::generator(rank, 2))};
  for (int i = 3; i <= n; ++i) {
    Word prefix = a1;
    for (int j = 2; j < i; ++j) prefix = multiply(prefix, Word::generator(rank, j, 3));
    b.push_back(multiply(prefix, Word::generator(rank, i)));
  }

  std::vector<Word> differences;
  for (const auto& bi : b) differences.push_back(multiply(invert(bi), g));
  if (differences != closed_form_differences(rank)) {
    throw VerificationFailure("b_i^-1 g does not match its closed form");
  }
  return {rank, std::move(g), WordTuple(rank, std::move(b)), std::move(differences)};
}

VerificationReport verify_power_product(int n, const std::vector<int>& exponents) {
  if (n < 1) throw PreconditionError("rank must be at least 1");
  if (exponents.empty() || exponents.size() > static_cast<std::size_t>(n)) {
    throw PreconditionError("need 1 <= m <= n exponents");
  }
  for (int k : exponents) {
    if (k <= 1) throw PreconditionError("every exponent must be > 1 (got " + std::to_string(k) + ")");
  }
  Rank rank(n);
  Word w = power_product(rank, exponents, 1);
  std::string shown = format_word(w);

  VerificationReport report;
  report.title = "power product " + shown + " in F_" + std::to_string(n);

  PrimitivityVerdict verdict = is_primitive(w);
  report.claims.push_back({"non-primitive", shown + " is not primitive", describe(false),
                           describe(verdict.primitive) + " (minimal cyclic length " +
                               std::to_string(verdict.witness.minimal.length()) + ")",
                           !verdict.primitive, minimization_certificate(verdict.witness)});

  CyclicWord cw = cyclic_reduce(w).core;
  std::size_t checked = 0, shortening = 0;
  auto inspect = [&](const WhiteheadAut& move) {
    ++checked;
    if (apply_to_cyclic(move, cw).length() < cw.length()) ++shortening;
  };
  for (const auto& p : enumerate_type1(rank)) inspect(p);
  for (const auto& m : enumerate_type2(rank)) inspect(m);
  report.claims.push_back({"no-shortening-move", "no single Whitehead move shortens " + shown,
                           "0 shortening moves", std::to_string(shortening) + " of " + std::to_string(checked) +
                                                     " moves shorten",
                           shortening == 0, json{{"moves_checked", checked}, {"shortening", shortening}}});
  return report;
}

VerificationReport verify_witness_family(int n) { return verify_witness_family(build_instance(n)); }

VerificationReport verify_witness_family(const WitnessInstance& instance) {
  const Rank rank = instance.rank;
  const int n = rank.value();
  VerificationReport report;
  report.title = "witness family in F_" + std::to_string(n) + ": g = " + format_word(instance.g);

  auto expected = closed_form_differences(rank);
  std::string computed;
  bool forms_ok = instance.differences.size() == expected.size();
  for (std::size_t i = 0; i < instance.differences.size(); ++i) {
    if (i > 0) computed += "; ";
    computed += format_word(instance.differences[i]);
    if (i < expected.size() && instance.differences[i] != expected[i]) forms_ok = false;
  }
  report.claims.push_back({"C0", "b_i^-1 g equals a_i^2 a_{i+1}^3 ... a_n^3 (a_2^3 ... a_n^3 for i = 1)",
                           format_tuple(expected), computed, forms_ok, nullptr});

  PrimitivityVerdict g_verdict = is_primitive(instance.g);
  json g_cert = minimization_certificate(g_verdict.witness);
  if (g_verdict.primitive) g_cert = {{"minimization", g_cert}, {"basis", basis_certificate(instance.g, complete_to_basis(instance.g))}};
  report.claims.push_back({"C1", "g is primitive", describe(true), describe(g_verdict.primitive),
                           g_verdict.primitive, std::move(g_cert)});

  bool b_ok = is_basis(instance.b);
  report.claims.push_back({"C2", "{b_1, ..., b_n} is a basis", "basis", b_ok ? "basis" : "not a basis", b_ok,
                           json{{"tuple", format_tuple(instance.b.words())}}});

  json diff_certs = json::array();
  std::string diff_summary;
  bool all_non_primitive = instance.differences.size() == static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < instance.differences.size(); ++i) {
    PrimitivityVerdict v = is_primitive(instance.differences[i]);
    all_non_primitive = all_non_primitive && !v.primitive;
    if (i > 0) diff_summary += "; ";
    diff_summary += "i=" + std::to_string(i + 1) + ": " + describe(v.primitive);
    diff_certs.push_back(minimization_certificate(v.witness));
  }
  report.claims.push_back({"C3", "every b_i^-1 g is not primitive", "not primitive for all i", diff_summary,
                           all_non_primitive, std::move(diff_certs)});

  report.interpretation = family_dictionary();
  return report;
}

VerificationReport verify_basis_extension(int n, const Word& w) {
  if (n < 2) throw PreconditionError("basis extension check needs rank n >= 2");
  if (w.rank().value() != n) throw RankMismatch("word rank does not match --rank");
  VerificationReport report;
  std::string shown = format_word(w);
  report.title = "basis extension of " + shown + " in F_" + std::to_string(n);

  PrimitivityVerdict verdict = is_primitive(w);
  report.claims.push_back({"primitive", shown + " is primitive", describe(true), describe(verdict.primitive),
                           verdict.primitive, minimization_certificate(verdict.witness)});
  if (verdict.primitive) {
    WordTuple basis = complete_to_basis(w);
    bool ok = is_basis(basis) && basis[0] == w;
    report.claims.push_back({"extends-to-basis", shown + " is the first entry of a basis",
                             "verified basis", format_tuple(basis.words()), ok, basis_certificate(w, basis)});
  }
  report.interpretation = {
      "a realization of the generic type in F_n corresponds to a primitive element",
      "a maximal independent set of realizations corresponds to a basis",
  };
  return report;
}

}  // namespace freegroup
