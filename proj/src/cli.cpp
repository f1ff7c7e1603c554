#include "fbc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fbc/brinkmann.hpp"
#include "fbc/centralizer.hpp"
#include "fbc/cfl.hpp"
#include "fbc/errors.hpp"
#include "fbc/oracle.hpp"
#include "fbc/parse.hpp"
#include "fbc/twisted.hpp"

namespace fbc {

namespace {

struct Printer {
  std::ostream& out;
  bool porcelain;

  // Porcelain lines are `key value`; human lines are `key: value`.
  void line(const std::string& key, const std::string& value) {
    out << key << (porcelain ? " " : ": ") << value << '\n';
  }
  // A bare outcome word in human mode, `key outcome` in porcelain.
  void outcome(const std::string& key, const std::string& value) {
    if (porcelain)
      out << key << ' ' << value << '\n';
    else
      out << value << '\n';
  }
};

int outcomeExit(Outcome o) { return o == Outcome::Unknown ? 2 : 0; }

std::string joinInts(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void printCentralizer(Printer& p, const CentralizerResult& C) {
  for (const auto& gen : C.generators)
    p.line("generator", formatElement(gen));
  p.line("status", C.status == CentralizerStatus::Exact ? "exact"
                                                        : "budget-limited");
  if (!C.report.empty()) p.line("report", C.report);
}

int centralizerExit(const CentralizerResult& C) {
  return C.status == CentralizerStatus::Exact ? 0 : 2;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"centralizers and conjugacy in free-by-cyclic groups F_n x| Z"};
  app.require_subcommand(1);
  // `h` is a positional name below, so keep help on --help only.
  app.set_help_flag("--help", "print help");
  auto addSub = [](CLI::App* parent, const std::string& name,
                   const std::string& desc) {
    CLI::App* sc = parent->add_subcommand(name, desc);
    sc->set_help_flag("--help", "print help");
    return sc;
  };

  std::string presentationPath;
  SearchBudget budget;
  bool porcelain = false;
  app.add_option("-p,--presentation", presentationPath,
                 "presentation file (rank/gens/phi lines)")
      ->required();
  app.add_option("--radius", budget.radius, "word-ball radius for searches");
  app.add_option("--kmax", budget.kmax, "largest |exponent| scanned");
  app.add_flag("--porcelain", porcelain, "stable `key value` output");

  std::string arg1, arg2, arg3;
  int argA = 0, argL = 0, argKmax = 0, power = 1;

  auto* nf = addSub(&app, "nf", "normal form of an element");
  nf->add_option("element", arg1)->required();
  auto* mul = addSub(&app, "mul", "product of two elements");
  mul->add_option("g", arg1)->required();
  mul->add_option("h", arg2)->required();
  auto* commute = addSub(&app, "commute", "do two elements commute?");
  commute->add_option("g", arg1)->required();
  commute->add_option("h", arg2)->required();
  auto* conjugacy =
      addSub(&app, "conjugacy", "are two elements conjugate?");
  conjugacy->add_option("g", arg1)->required();
  conjugacy->add_option("h", arg2)->required();
  auto* twisted = addSub(&app, 
      "twisted", "twisted conjugacy of two F_n words under phi^power");
  twisted->add_option("x", arg1)->required();
  twisted->add_option("y", arg2)->required();
  twisted->add_option("--power", power, "twisting power of phi (default 1)");
  auto* brinkmann = addSub(&app, 
      "brinkmann", "is some phi^k image of x conjugate to y?");
  brinkmann->add_option("x", arg1)->required();
  brinkmann->add_option("y", arg2)->required();
  auto* ea = addSub(&app, 
      "ea", "minimal positive exponent e_a for the word x and exponent a");
  ea->add_option("x", arg1)->required();
  ea->add_option("a", argA)->required();
  auto* centralizer =
      addSub(&app, "centralizer", "generators of the centralizer");
  centralizer->add_option("g", arg1)->required();
  auto* conj = addSub(&app, 
      "conjugators", "one conjugator plus the coset description of all");
  conj->add_option("g", arg1)->required();
  conj->add_option("h", arg2)->required();
  auto* cfCheck = addSub(&app, 
      "cf-check", "conjugacy of g,h constrained to a grammar-described set");
  cfCheck->add_option("g", arg1)->required();
  cfCheck->add_option("h", arg2)->required();
  cfCheck->add_option("grammar", arg3, "grammar file")->required();

  auto* oracle =
      addSub(&app, "oracle", "brute-force ground truth at desk scale");
  oracle->require_subcommand(1);
  auto* oBall = addSub(oracle, "ball", "enumerate the (A, L) ball");
  oBall->add_option("A", argA)->required();
  oBall->add_option("L", argL)->required();
  auto* oCent = addSub(oracle, 
      "centralizer", "ball elements commuting with g");
  oCent->add_option("g", arg1)->required();
  oCent->add_option("A", argA)->required();
  oCent->add_option("L", argL)->required();
  auto* oTwisted = addSub(oracle, 
      "twisted-class", "twisted conjugates of x over witnesses of length <= L");
  oTwisted->add_option("x", arg1)->required();
  oTwisted->add_option("L", argL)->required();
  oTwisted->add_option("--power", power, "twisting power of phi (default 1)");
  auto* oEa = addSub(oracle, 
      "ea", "exponents realized by witnesses of length <= L");
  oEa->add_option("x", arg1)->required();
  oEa->add_option("a", argA)->required();
  oEa->add_option("kmax", argKmax)->required();
  oEa->add_option("L", argL)->required();

  // Let global options (-p, --kmax, ...) appear after the subcommand too.
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) {
    sc->fallthrough();
    for (CLI::App* sub : sc->get_subcommands([](CLI::App*) { return true; }))
      sub->fallthrough();
  }

  std::vector<const char*> argv{"fbc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  Printer p{out, porcelain};
  try {
    GroupPresentation pres = parsePresentationFile(presentationPath);
    const Alphabet& alphabet = pres.alphabet();
    const Automorphism& phi = pres.phi();
    auto element = [&](const std::string& s) { return parseElement(pres, s); };
    auto word = [&](const std::string& s) { return parseWord(alphabet, s); };

    if (nf->parsed()) {
      p.outcome("nf", formatElement(element(arg1)));
      return 0;
    }
    if (mul->parsed()) {
      p.outcome("product", formatElement(fbcMul(element(arg1), element(arg2))));
      return 0;
    }
    if (commute->parsed()) {
      p.outcome("commute",
                fbcCommute(element(arg1), element(arg2)) ? "true" : "false");
      return 0;
    }
    if (conjugacy->parsed()) {
      auto dec = conjugators(element(arg1), element(arg2), budget);
      p.outcome("conjugate", outcomeName(dec.outcome));
      if (dec.isYes())
        p.line("witness", formatElement(dec.certificate->witness));
      return outcomeExit(dec.outcome);
    }
    if (twisted->parsed()) {
      auto dec = twistedConjugator(word(arg1), word(arg2), phi.toPower(power),
                                   budget.radius);
      p.outcome("twisted", outcomeName(dec.outcome));
      if (dec.isYes()) p.line("z", formatWord(alphabet, *dec.certificate));
      return outcomeExit(dec.outcome);
    }
    if (brinkmann->parsed()) {
      auto dec =
          brinkmannConjugacy(word(arg1), word(arg2), phi, budget.kmax);
      p.outcome("brinkmann", outcomeName(dec.outcome));
      if (dec.isYes()) p.line("k", std::to_string(*dec.certificate));
      return outcomeExit(dec.outcome);
    }
    if (ea->parsed()) {
      EaStatus st = computeEa(word(arg1), phi, argA, budget);
      p.line("ea", std::to_string(*st.ea));
      p.line("z", formatWord(alphabet, st.witness->z));
      if (!st.unresolvedDivisors.empty())
        p.line("unresolved", joinInts(st.unresolvedDivisors));
      p.line("status",
             st.unresolvedDivisors.empty() ? "exact" : "budget-limited");
      return st.unresolvedDivisors.empty() ? 0 : 2;
    }
    if (centralizer->parsed()) {
      CentralizerResult C = centralize(element(arg1), budget);
      printCentralizer(p, C);
      return centralizerExit(C);
    }
    if (conj->parsed()) {
      auto dec = conjugators(element(arg1), element(arg2), budget);
      p.outcome("conjugate", outcomeName(dec.outcome));
      if (!dec.isYes()) return outcomeExit(dec.outcome);
      p.line("witness", formatElement(dec.certificate->witness));
      printCentralizer(p, dec.certificate->centralizer);
      return centralizerExit(dec.certificate->centralizer);
    }
    if (cfCheck->parsed()) {
      std::ifstream in(arg3);
      if (!in) throw ParseError("cannot open grammar file '" + arg3 + "'");
      Cfg grammar = parseCfg(alphabet, in);
      p.line("note",
             "assumes the grammar generates the full word preimage of the "
             "constraint set; that hypothesis is not checkable");
      auto dec =
          constrainedConjugacy(element(arg1), element(arg2), grammar, budget);
      p.outcome("cf-conjugate", outcomeName(dec.outcome));
      if (dec.isYes()) p.line("witness", formatElement(*dec.certificate));
      return outcomeExit(dec.outcome);
    }
    if (oBall->parsed()) {
      Ball b = ball(pres, argA, argL);
      p.line("count", std::to_string(b.elements.size()));
      for (const auto& g : b.elements) p.line("element", formatElement(g));
      return 0;
    }
    if (oCent->parsed()) {
      for (const auto& g : bruteCentralizer(element(arg1), argA, argL))
        p.line("element", formatElement(g));
      return 0;
    }
    if (oTwisted->parsed()) {
      for (const auto& w :
           bruteTwistedClass(word(arg1), phi.toPower(power), argL))
        p.line("word", formatWord(alphabet, w));
      return 0;
    }
    if (oEa->parsed()) {
      p.line("ea", joinInts(bruteEa(word(arg1), phi, argA, argKmax, argL)));
      return 0;
    }
    err << "usage error: no subcommand selected\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fbc
