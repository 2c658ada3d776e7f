#pragma once

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ontologik/aor.hpp"
#include "ontologik/canonical.hpp"
#include "ontologik/confirm.hpp"
#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/logform.hpp"
#include "ontologik/nlparser.hpp"
#include "ontologik/ontology.hpp"
#include "ontologik/unifier.hpp"

#ifndef ONTOLOGIK_DEFAULT_FIXTURES
#define ONTOLOGIK_DEFAULT_FIXTURES "fixtures"
#endif

namespace ontologik::cli {

// Process exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kSemanticFailure = 2;
inline constexpr int kParseFailure = 3;

enum class OutputMode { Human, Structured };

struct SessionConfig {
  std::filesystem::path ontology_path;
  std::filesystem::path lexicon_path;
  OutputMode mode = OutputMode::Human;
};

// ONTOLOGIK_FIXTURES when set, else the fixture directory baked in at build time.
inline std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("ONTOLOGIK_FIXTURES"); env != nullptr && *env != '\0') {
    return env;
  }
  return ONTOLOGIK_DEFAULT_FIXTURES;
}

inline SessionConfig default_config() {
  const auto dir = fixture_dir();
  return SessionConfig{dir / "reference.ont", dir / "reference.lex", OutputMode::Human};
}

struct Session {
  Ontology ont;
  Lexicon lex;

  static Session open(const SessionConfig& cfg) {
    auto ont = Ontology::load_file(cfg.ontology_path.string());
    auto lex = Lexicon::load_file(cfg.lexicon_path.string(), ont);
    return Session{std::move(ont), std::move(lex)};
  }
};

namespace detail {

using json = nlohmann::json;

// Structured mode writes one JSON object per line with a fixed key set.
struct Record {
  std::string command;
  std::string status;
  std::string canonical;
  std::vector<std::string> trace;
  std::vector<std::string> glosses;
  json detail = json::object();

  void write(std::ostream& out) const {
    json j{{"command", command}, {"status", status},   {"canonical", canonical},
           {"trace", trace},     {"glosses", glosses}, {"detail", detail}};
    out << j.dump() << '\n';
  }
};

inline int fail(const SessionConfig& cfg, std::ostream& out, std::ostream& err,
                const std::string& command, const std::string& status, const std::string& what,
                int code) {
  err << command << ": " << what << '\n';
  if (cfg.mode == OutputMode::Structured) {
    Record r{command, status, {}, {}, {}};
    r.detail["error"] = what;
    r.write(out);
  }
  return code;
}

// Runs `body` with a loaded session, mapping errors to exit statuses.
template <class Body>
int with_session(const SessionConfig& cfg, std::ostream& out, std::ostream& err,
                 const std::string& command, Body&& body) {
  std::optional<Session> session;
  try {
    session.emplace(Session::open(cfg));
  } catch (const Error& e) {
    return fail(cfg, out, err, command, "load_error", e.what(), kParseFailure);
  }
  try {
    return body(*session);
  } catch (const TypeError& e) {
    return fail(cfg, out, err, command, "type_error", e.what(), kSemanticFailure);
  } catch (const Error& e) {
    return fail(cfg, out, err, command, "parse_error", e.what(), kParseFailure);
  }
}

constexpr std::string_view kLfPrefix = "@lf:";

inline bool is_lf_input(std::string_view input) { return input.substr(0, kLfPrefix.size()) == kLfPrefix; }

// Sentence or "@lf:"-prefixed logical form.
inline Form read_input(std::string_view input, const Session& s) {
  if (is_lf_input(input)) return parse_lf(input.substr(kLfPrefix.size()));
  return parse_sentence(input, s.lex, s.ont);
}

inline std::string chain(const std::vector<std::string>& types) {
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += " → ";
    out += t;
  }
  return out;
}

inline std::string describe(const AorVerdict& v, const std::vector<std::string>& adjectives) {
  if (const auto* a = std::get_if<AorAccepted>(&v)) {
    std::string out = "Accepted " + chain(a->running_types);
    for (const auto& note : a->coercion_notes) out += " [" + note + "]";
    return out;
  }
  if (const auto* x = std::get_if<AorViolation>(&v)) {
    return "Violation at '" + adjectives[x->at_index] + "' (index " +
           std::to_string(x->at_index) + "): expected " + x->expected + ", running " +
           x->running;
  }
  const auto& f = std::get<AorTypeFailure>(v);
  return "TypeFailure at '" + adjectives[f.at_index] + "' (index " +
         std::to_string(f.at_index) + ")";
}

inline std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace detail

/// `analyze <sentence | @lf:form>`: typed form, derivation trace and
/// missing-text report.
inline int cmd_analyze(const SessionConfig& cfg, std::string_view input, std::ostream& out,
                       std::ostream& err) {
  return detail::with_session(cfg, out, err, "analyze", [&](const Session& s) {
    const auto analyzed = analyze(detail::read_input(input, s), s.ont, s.lex);
    std::vector<std::string> steps;
    for (const auto& step : analyzed.trace) steps.push_back(step.subject + ": " + step.render());
    const auto report = missing_text_report(analyzed);

    if (cfg.mode == OutputMode::Structured) {
      detail::Record r{"analyze", "ok", pretty(analyzed.form), steps, analyzed.missing_text};
      r.detail["report"] = report;
      r.write(out);
      return kOk;
    }
    out << "form: " << pretty(analyzed.form) << '\n';
    out << "trace:\n";
    for (const auto& line : steps) out << "  " << line << '\n';
    out << "missing text:\n";
    for (const auto& line : text::split_lines(report)) {
      if (!line.empty()) out << "  " << line << '\n';
    }
    return kOk;
  });
}

/// `aor <adjective>... --noun <type>`: adjective-order verdict, or every
/// permutation when `enumerate` is set.
inline int cmd_aor(const SessionConfig& cfg, const std::vector<std::string>& adjectives,
                   const std::string& noun, bool enumerate, std::ostream& out,
                   std::ostream& err) {
  return detail::with_session(cfg, out, err, "aor", [&](const Session& s) {
    if (enumerate) {
      const auto ranked =
          preferred_orders(s.ont, s.lex, std::set<std::string>(adjectives.begin(), adjectives.end()), noun);
      bool any = false;
      detail::Record r{"aor", "ok", {}, {}, {}};
      r.detail["orders"] = detail::json::array();
      for (const auto& [order, verdict] : ranked) {
        any = any || accepted(verdict);
        const auto line = detail::describe(verdict, order);
        if (cfg.mode == OutputMode::Structured) {
          r.detail["orders"].push_back({{"order", order}, {"verdict", line}});
        } else {
          out << "[" << detail::join(order, " ") << "] " << line << '\n';
        }
      }
      if (!any) r.status = "rejected";
      if (cfg.mode == OutputMode::Structured) r.write(out);
      return any ? kOk : kSemanticFailure;
    }

    const auto verdict = check_order(s.ont, s.lex, adjectives, noun);
    const auto line = detail::describe(verdict, adjectives);
    if (cfg.mode == OutputMode::Structured) {
      detail::Record r{"aor", accepted(verdict) ? "ok" : "rejected", {}, {}, {}};
      r.detail["adjectives"] = adjectives;
      r.detail["noun"] = noun;
      r.detail["verdict"] = line;
      if (const auto* a = std::get_if<AorAccepted>(&verdict)) {
        r.detail["running"] = a->running_types;
      } else if (const auto* v = std::get_if<AorViolation>(&verdict)) {
        r.detail["index"] = v->at_index;
      } else {
        r.detail["index"] = std::get<AorTypeFailure>(verdict).at_index;
      }
      r.write(out);
    } else {
      out << line << '\n';
    }
    return accepted(verdict) ? kOk : kSemanticFailure;
  });
}

/// `hempel --h1 <text> --h2 <text> --observe <obs>...`: canonical forms of
/// both hypotheses, their equivalence and the verdict pair per observation.
inline int cmd_hempel(const SessionConfig& cfg, std::string_view h1, std::string_view h2,
                      const std::vector<std::string>& observations, std::ostream& out,
                      std::ostream& err) {
  return detail::with_session(cfg, out, err, "hempel", [&](const Session& s) {
    const auto as_lf = [&](std::string_view input) {
      return detail::is_lf_input(input) ? std::string(input.substr(detail::kLfPrefix.size()))
                                        : pretty(parse_sentence(input, s.lex, s.ont));
    };
    const auto eq = equivalence_check(as_lf(h1), as_lf(h2), s.ont, s.lex);
    bool agree = true;
    std::vector<std::string> lines;
    auto verdicts = detail::json::array();
    for (const auto& text : observations) {
      const auto obs = parse_observation(text, s.ont, s.lex);
      const auto v1 = evaluate(eq.first, obs, s.ont);
      const auto v2 = evaluate(eq.second, obs, s.ont);
      agree = agree && v1 == v2;
      lines.push_back("observe " + text + " => H1 " + to_string(v1) + ", H2 " + to_string(v2));
      verdicts.push_back({{"observation", text}, {"h1", to_string(v1)}, {"h2", to_string(v2)}});
    }
    const int code = eq.equivalent && agree ? kOk : kSemanticFailure;

    if (cfg.mode == OutputMode::Structured) {
      detail::Record r{"hempel", code == kOk ? "ok" : "disagree", eq.first.str(), {}, {}};
      r.detail["h1"] = eq.first.str();
      r.detail["h2"] = eq.second.str();
      r.detail["equivalent"] = eq.equivalent;
      r.detail["observations"] = verdicts;
      r.write(out);
      return code;
    }
    out << "H1: " << eq.first.str() << '\n';
    out << "H2: " << eq.second.str() << '\n';
    out << "equivalent: " << (eq.equivalent ? "true" : "false") << '\n';
    for (const auto& line : lines) out << line << '\n';
    return code;
  });
}

/// `unify <t1> <t2>`: outcome of t1 • t2.
inline int cmd_unify(const SessionConfig& cfg, const std::string& t1, const std::string& t2,
                     std::ostream& out, std::ostream& err) {
  return detail::with_session(cfg, out, err, "unify", [&](const Session& s) {
    const auto outcome = unify_types(s.ont, s.lex, t1, t2);
    const bool failed = std::holds_alternative<Failed>(outcome);
    if (cfg.mode == OutputMode::Structured) {
      detail::Record r{"unify", failed ? "failed" : "ok", {}, {}, {}};
      r.detail["outcome"] = describe(outcome);
      r.write(out);
    } else {
      out << describe(outcome) << '\n';
    }
    return failed ? kSemanticFailure : kOk;
  });
}

/// `parse <sentence>`: untyped logical form, for debugging the front end.
inline int cmd_parse(const SessionConfig& cfg, std::string_view sentence, std::ostream& out,
                     std::ostream& err) {
  return detail::with_session(cfg, out, err, "parse", [&](const Session& s) {
    const auto pattern = match_pattern(sentence, s.lex, s.ont);
    const auto lf = parse_sentence(sentence, s.lex, s.ont);
    if (cfg.mode == OutputMode::Structured) {
      detail::Record r{"parse", "ok", {}, {}, {}};
      r.detail["pattern"] = to_string(pattern.kind);
      r.detail["form"] = pretty(lf);
      r.write(out);
    } else {
      out << pretty(lf) << '\n';
    }
    return kOk;
  });
}

}  // namespace ontologik::cli
