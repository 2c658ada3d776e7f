#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontologik/cli.hpp"

int main(int argc, char** argv) {
  using namespace ontologik::cli;

  CLI::App app{"Typed logical forms over a commonsense ontology"};
  app.require_subcommand(1);
  app.fallthrough();

  auto cfg = default_config();
  std::string ontology_path = cfg.ontology_path.string();
  std::string lexicon_path = cfg.lexicon_path.string();
  std::string format = "human";
  app.add_option("--ontology", ontology_path, "Ontology file")->capture_default_str();
  app.add_option("--lexicon", lexicon_path, "Lexicon file")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Type a sentence or '@lf:' logical form");
  analyze->add_option("input", input)->required();

  std::vector<std::string> adjectives;
  std::string noun;
  bool enumerate = false;
  auto* aor = app.add_subcommand("aor", "Check an adjective ordering (outermost first)");
  aor->add_option("adjectives", adjectives);
  aor->add_option("--noun", noun)->required();
  aor->add_flag("--enumerate", enumerate, "Rank every permutation of the adjectives");

  std::string h1;
  std::string h2;
  std::vector<std::string> observations;
  auto* hempel = app.add_subcommand("hempel", "Compare two hypotheses on observations");
  hempel->add_option("--h1", h1)->required();
  hempel->add_option("--h2", h2)->required();
  hempel->add_option("--observe", observations);

  std::string t1;
  std::string t2;
  auto* unify = app.add_subcommand("unify", "Unify two types");
  unify->add_option("t1", t1)->required();
  unify->add_option("t2", t2)->required();

  std::string sentence;
  auto* parse = app.add_subcommand("parse", "Print the untyped form of a sentence");
  parse->add_option("sentence", sentence)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseFailure;
  }

  cfg.ontology_path = ontology_path;
  cfg.lexicon_path = lexicon_path;
  cfg.mode = format == "structured" ? OutputMode::Structured : OutputMode::Human;

  if (analyze->parsed()) return cmd_analyze(cfg, input, std::cout, std::cerr);
  if (aor->parsed()) return cmd_aor(cfg, adjectives, noun, enumerate, std::cout, std::cerr);
  if (hempel->parsed()) return cmd_hempel(cfg, h1, h2, observations, std::cout, std::cerr);
  if (unify->parsed()) return cmd_unify(cfg, t1, t2, std::cout, std::cerr);
  return cmd_parse(cfg, sentence, std::cout, std::cerr);
}
