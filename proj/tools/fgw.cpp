// fgw: command-line front end for the free group toolkit.
//
// Exit codes: 0 predicate true / verification passed, 1 predicate false /
// verification failed, 2 usage or parse error, 3 search budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freegroup/automorphism.hpp"
#include "freegroup/basis.hpp"
#include "freegroup/certificate.hpp"
#include "freegroup/verifier.hpp"
#include "freegroup/whitehead.hpp"
#include "freegroup/word.hpp"
#include "freegroup/word_io.hpp"

namespace {

using freegroup::Rank;
using freegroup::Syntax;
using freegroup::Word;
using nlohmann::json;

enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2, kExhausted = 3 };

struct GlobalOptions {
  std::optional<int> rank;
  std::string format = "text";
  bool shorthand = false;
  std::uint64_t seed = 0;
  std::size_t max_states = freegroup::SearchLimits{}.max_states;

  Syntax syntax() const { return shorthand ? Syntax::kShorthand : Syntax::kStandard; }
  bool json_output() const { return format == "json"; }
};

/// What a subcommand produced, before rendering.
struct Outcome {
  int exit_code = kTrue;
  json input;
  json result;
  json certificate;  // null when absent
  std::string text;
};

class Runner {
 public:
  explicit Runner(const GlobalOptions& opts) : opts_(opts) {}

  Rank rank_for(const std::vector<std::string>& inputs) const {
    if (opts_.rank) return Rank(*opts_.rank);
    int n = 1;
    for (const auto& s : inputs) n = std::max(n, freegroup::max_generator_index(s, opts_.syntax()));
    return Rank(n);
  }

  Rank required_rank(const char* command) const {
    if (!opts_.rank) throw freegroup::PreconditionError(std::string(command) + " requires --rank");
    return Rank(*opts_.rank);
  }

  Word word(const std::string& text, Rank rank) const { return freegroup::parse_word(text, rank, opts_.syntax()); }
  std::string show(const Word& w) const { return freegroup::format_word(w, opts_.syntax()); }
  std::string show(const freegroup::CyclicWord& w) const { return freegroup::format_cyclic(w, opts_.syntax()); }

  Outcome reduce(const std::string& text) const {
    Rank rank = rank_for({text});
    Word w = word(text, rank);
    Outcome out;
    out.input = text;
    out.result = show(w);
    out.text = show(w) + "\n";
    return out;
  }

  Outcome cyclic(const std::string& text) const {
    Rank rank = rank_for({text});
    auto red = freegroup::cyclic_reduce(word(text, rank));
    Outcome out;
    out.input = text;
    out.result = {{"core", show(red.core)},
                  {"conjugator", show(red.conjugator)},
                  {"rotation", red.rotation},
                  {"cyclic_length", red.core.length()}};
    out.text = "core: " + show(red.core) + "\nconjugator: " + show(red.conjugator) +
               "\nrotation: " + std::to_string(red.rotation) + "\ncyclic length: " +
               std::to_string(red.core.length()) + "\n";
    return out;
  }

  Outcome minimize(const std::string& text) const {
    Rank rank = rank_for({text});
    auto result = freegroup::minimize(freegroup::cyclic_reduce(word(text, rank)).core);
    Outcome out;
    out.input = text;
    out.result = {{"minimal", show(result.minimal)}, {"length", result.minimal.length()}};
    out.certificate = freegroup::minimization_certificate(result);
    std::ostringstream s;
    s << "start: " << show(result.input) << " (length " << result.input.length() << ")\n";
    for (const auto& step : result.steps) {
      s << "  " << freegroup::format_move(step.move) << "  -> length " << step.length << "\n";
    }
    s << "minimal: " << show(result.minimal) << " (length " << result.minimal.length() << ")\n";
    out.text = s.str();
    return out;
  }

  Outcome primitive(const std::string& text) const {
    Rank rank = rank_for({text});
    auto verdict = freegroup::is_primitive(word(text, rank));
    Outcome out;
    out.exit_code = verdict.primitive ? kTrue : kFalse;
    out.input = text;
    out.result = verdict.primitive;
    out.certificate = freegroup::minimization_certificate(verdict.witness);
    out.text = std::string(verdict.primitive ? "primitive" : "not primitive") + " (minimal cyclic word " +
               show(verdict.witness.minimal) + ")\n";
    return out;
  }

  Outcome orbit_eq(const std::string& a, const std::string& b) const {
    Rank rank = rank_for({a, b});
    Word u = word(a, rank), v = word(b, rank);
    auto eq = freegroup::orbit_equivalent(u, v, {opts_.max_states});
    Outcome out;
    out.exit_code = eq.equivalent ? kTrue : kFalse;
    out.input = {a, b};
    out.result = eq.equivalent;
    if (auto chain = eq.connecting_chain()) {
      out.certificate = freegroup::orbit_certificate(u, v, *chain);
    } else {
      out.certificate = json::array({freegroup::minimization_certificate(eq.first),
                                     freegroup::minimization_certificate(eq.second)});
    }
    out.text = std::string(eq.equivalent ? "equivalent" : "not equivalent") + " (minimal forms " +
               show(eq.first.minimal) + " and " + show(eq.second.minimal) + ")\n";
    return out;
  }

  Outcome basis(const std::string& text, bool print_graph) const {
    std::vector<std::string> parts;
    for (auto p : freegroup::split_tuple(text)) parts.emplace_back(p);
    Rank rank = rank_for(parts);
    freegroup::WordTuple tuple(rank, freegroup::parse_tuple(text, rank, opts_.syntax()));
    auto graph = freegroup::fold(tuple, opts_.seed == 0 ? std::nullopt : std::optional(opts_.seed));
    bool generating = graph.is_bouquet();
    bool basis = generating && tuple.size() == static_cast<std::size_t>(rank.value());
    Outcome out;
    out.exit_code = basis ? kTrue : kFalse;
    out.input = text;
    out.result = {{"basis", basis}, {"generating", generating}, {"size", tuple.size()}};
    if (tuple.size() == static_cast<std::size_t>(rank.value())) {
      out.result["abelian_determinant"] = freegroup::abelian_determinant(tuple);
    }
    out.text = std::string(basis ? "basis" : "not a basis") + (generating ? " (generates F_" : " (does not generate F_") +
               std::to_string(rank.value()) + ")\n";
    if (print_graph) {
      out.result["graph"] = graph.edge_list();
      out.text += graph.edge_list();
    }
    return out;
  }

  Outcome complete(const std::string& text) const {
    Rank rank = rank_for({text});
    Word w = word(text, rank);
    Outcome out;
    out.input = text;
    auto verdict = freegroup::is_primitive(w);
    if (!verdict.primitive) {
      out.exit_code = kFalse;
      out.result = nullptr;
      out.certificate = freegroup::minimization_certificate(verdict.witness);
      out.text = "not primitive; no basis contains " + show(w) + "\n";
      return out;
    }
    auto basis = freegroup::complete_to_basis(w);
    out.result = freegroup::format_tuple(basis.words(), opts_.syntax());
    out.certificate = freegroup::basis_certificate(w, basis);
    out.text = freegroup::format_tuple(basis.words(), opts_.syntax()) + "\n";
    return out;
  }

  Outcome enumerate(std::size_t max_len) const {
    Rank rank = required_rank("enumerate-primitives");
    auto words = freegroup::enumerate_primitives(rank, max_len, {opts_.max_states});
    Outcome out;
    out.input = {{"rank", rank.value()}, {"max_len", max_len}};
    json list = json::array();
    std::string text;
    for (const auto& w : words) {
      list.push_back(show(w));
      text += show(w) + "\n";
    }
    out.result = {{"count", words.size()}, {"words", std::move(list)}};
    out.text = text + "count: " + std::to_string(words.size()) + "\n";
    return out;
  }

  Outcome report(const freegroup::VerificationReport& r, json input) const {
    Outcome out;
    out.exit_code = r.passed() ? kTrue : kFalse;
    out.input = std::move(input);
    out.result = r.to_json();
    out.text = r.to_text();
    return out;
  }

  Outcome verify_fact(const std::vector<int>& exponents) const {
    int n = required_rank("verify fact1.1").value();
    return report(freegroup::verify_power_product(n, exponents), {{"rank", n}, {"exponents", exponents}});
  }

  Outcome verify_family() const {
    int n = required_rank("verify thm2.3").value();
    return report(freegroup::verify_witness_family(n), {{"rank", n}});
  }

  Outcome verify_extension(const std::string& text) const {
    Rank rank = required_rank("verify thm2.1");
    return report(freegroup::verify_basis_extension(rank.value(), word(text, rank)),
                  {{"rank", rank.value()}, {"word", text}});
  }

  Outcome check_certificate(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw freegroup::PreconditionError("cannot open " + path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw freegroup::ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<const json*> found;
    collect(doc, found);
    if (found.empty()) throw freegroup::PreconditionError("no certificate found in " + path);

    Outcome out;
    out.input = path;
    json checks = json::array();
    std::string text;
    bool all_valid = true;
    for (const json* cert : found) {
      auto check = freegroup::check_certificate(*cert);
      all_valid = all_valid && check.valid;
      checks.push_back({{"kind", check.kind}, {"valid", check.valid}, {"problems", check.problems}});
      text += (check.valid ? "[VALID]   " : "[INVALID] ") + check.kind + "\n";
      for (const auto& p : check.problems) text += "          " + p + "\n";
    }
    out.exit_code = all_valid ? kTrue : kFalse;
    out.result = {{"valid", all_valid}, {"certificates", std::move(checks)}};
    out.text = text + (all_valid ? "all certificates valid\n" : "certificate check FAILED\n");
    return out;
  }

 private:
  // Certificates may be nested inside command output or verification reports.
  static void collect(const json& node, std::vector<const json*>& found) {
    if (node.is_object()) {
      auto kind = node.find("kind");
      if (kind != node.end() && kind->is_string()) {
        found.push_back(&node);
        return;
      }
      for (const auto& [key, value] : node.items()) collect(value, found);
    } else if (node.is_array()) {
      for (const auto& value : node) collect(value, found);
    }
  }

  const GlobalOptions& opts_;
};

void emit(const GlobalOptions& opts, const Outcome& out, double ms) {
  if (opts.json_output()) {
    json doc{{"input", out.input}, {"result", out.result}, {"timing_ms", ms}};
    if (!out.certificate.is_null()) doc["certificate"] = out.certificate;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free group toolkit: Whitehead minimization, primitivity, bases"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--rank", opts.rank, "Rank n of F_n (inferred from the input when omitted)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--shorthand", opts.shorthand, "Letter syntax: a..z for a1..a26, upper case for inverses");
  app.add_option("--seed", opts.seed, "Seed for randomized processing order (0 = canonical order)");
  app.add_option("--max-states", opts.max_states, "Visited-state budget for searches")->check(CLI::PositiveNumber);

  std::string w1, w2;
  std::size_t max_len = 0;
  std::vector<int> exponents;
  bool print_graph = false;
  std::function<Outcome(const Runner&)> action;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  sub("reduce", "Freely reduce a word")->add_option("word", w1)->required();
  app.get_subcommand("reduce")->callback([&] { action = [&](const Runner& r) { return r.reduce(w1); }; });

  sub("cyclic", "Cyclic reduction and canonical rotation")->add_option("word", w1)->required();
  app.get_subcommand("cyclic")->callback([&] { action = [&](const Runner& r) { return r.cyclic(w1); }; });

  sub("minimize", "Whitehead minimization with certificate")->add_option("word", w1)->required();
  app.get_subcommand("minimize")->callback([&] { action = [&](const Runner& r) { return r.minimize(w1); }; });

  sub("primitive", "Decide whether a word is primitive")->add_option("word", w1)->required();
  app.get_subcommand("primitive")->callback([&] { action = [&](const Runner& r) { return r.primitive(w1); }; });

  auto* orbit = sub("orbit-eq", "Decide whether two words lie in one Aut(F_n)-orbit");
  orbit->add_option("first", w1)->required();
  orbit->add_option("second", w2)->required();
  orbit->callback([&] { action = [&](const Runner& r) { return r.orbit_eq(w1, w2); }; });

  auto* basis = sub("basis", "Decide whether a tuple (a1; a1^2 a2) is a basis");
  basis->add_option("tuple", w1)->required();
  basis->add_flag("--graph", print_graph, "Print the folded subgroup graph");
  basis->callback([&] { action = [&](const Runner& r) { return r.basis(w1, print_graph); }; });

  sub("complete", "Extend a primitive word to a basis")->add_option("word", w1)->required();
  app.get_subcommand("complete")->callback([&] { action = [&](const Runner& r) { return r.complete(w1); }; });

  auto* enumerate = sub("enumerate-primitives", "List primitive cyclic words up to a length");
  enumerate->add_option("--max-len", max_len, "Maximum cyclic length")->required()->check(CLI::PositiveNumber);
  enumerate->callback([&] { action = [&](const Runner& r) { return r.enumerate(max_len); }; });

  auto* verify = sub("verify", "Check the witness constructions");
  verify->require_subcommand(1);
  auto* fact = verify->add_subcommand("fact1.1", "a1^k1 ... am^km (all k > 1) is not primitive");
  fact->fallthrough();
  fact->add_option("--exponents", exponents, "Comma-separated exponents k1,k2,...")->required()->delimiter(',');
  fact->callback([&] { action = [&](const Runner& r) { return r.verify_fact(exponents); }; });
  auto* family = verify->add_subcommand("thm2.3", "Witness family g, b_1..b_n and the difference words");
  family->fallthrough();
  family->callback([&] { action = [&](const Runner& r) { return r.verify_family(); }; });
  auto* extension = verify->add_subcommand("thm2.1", "Extend a primitive word to an explicit basis");
  extension->fallthrough();
  extension->add_option("word", w1)->required();
  extension->callback([&] { action = [&](const Runner& r) { return r.verify_extension(w1); }; });

  auto* check = sub("check-certificate", "Re-verify certificates in a JSON file");
  check->add_option("file", w1)->required();
  check->callback([&] { action = [&](const Runner& r) { return r.check_certificate(w1); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kTrue : kUsage;
  }
  if (opts.shorthand && opts.rank && *opts.rank > 26) {
    std::cerr << "error: --shorthand supports rank at most 26\n";
    return kUsage;
  }

  Runner runner(opts);
  try {
    auto start = std::chrono::steady_clock::now();
    Outcome out = action(runner);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(opts, out, ms);
    return out.exit_code;
  } catch (const freegroup::ResourceExhausted& e) {
    std::cerr << "resource budget exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const freegroup::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const freegroup::VerificationFailure& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kFalse;
  }
}
