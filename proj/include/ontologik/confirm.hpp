#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontologik/canonical.hpp"
#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/logform.hpp"
#include "ontologik/ontology.hpp"
#include "ontologik/text.hpp"

namespace ontologik {

struct Literal {
  std::string predicate;
  bool polarity = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// A partial description of one observed object.
struct Observation {
  std::string object_type;
  std::vector<Literal> literals;
};

enum class Confirmation { Confirms, Disconfirms, Neutral };

inline const char* to_string(Confirmation c) {
  switch (c) {
    case Confirmation::Confirms: return "Confirms";
    case Confirmation::Disconfirms: return "Disconfirms";
    case Confirmation::Neutral: return "Neutral";
  }
  return "?";
}

/// Parses `<type>: <pred>[=true|false][, ...]`, e.g. `ball: red, black=false`.
inline Observation parse_observation(std::string_view source, const Ontology& ont,
                                     const Lexicon& lex) {
  const auto colon = source.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected '<type>: <literals>'");
  Observation obs{text::trim(source.substr(0, colon)), {}};
  if (!ont.contains(obs.object_type)) throw UnknownName("type", obs.object_type);

  const auto rest = source.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    auto comma = rest.find(',', start);
    if (comma == std::string_view::npos) comma = rest.size();
    const auto item = text::trim(rest.substr(start, comma - start));
    const auto position = colon + 1 + start;
    start = comma + 1;
    if (item.empty()) {
      if (comma == rest.size() && obs.literals.empty()) break;
      throw ParseError(position, "empty literal");
    }
    Literal lit;
    const auto eq = item.find('=');
    lit.predicate = text::trim(item.substr(0, eq));
    if (eq != std::string::npos) {
      const auto value = text::trim(item.substr(eq + 1));
      if (value == "true") {
        lit.polarity = true;
      } else if (value == "false") {
        lit.polarity = false;
      } else {
        throw ParseError(position, "expected true or false, got '" + value + "'");
      }
    }
    const auto* sig = lex.find_predicate(lit.predicate);
    if (sig == nullptr) throw UnknownName("predicate", lit.predicate);
    if (sig->arity() != 1) throw ArityError("'" + lit.predicate + "' is not unary");
    for (const auto& seen : obs.literals) {
      if (seen.predicate == lit.predicate) {
        throw ParseError(position, "predicate '" + lit.predicate + "' observed twice");
      }
    }
    obs.literals.push_back(std::move(lit));
  }
  return obs;
}

/// Nicod-style verdict of a universal hypothesis `(A x :: T)(p(x))` on one
/// observation. Objects outside T are neutral whatever else is observed;
/// an instance of T confirms when p is observed true and disconfirms when
/// it is observed false. Anything but that hypothesis shape is rejected.
inline Confirmation evaluate(const CanonicalForm& hypothesis, const Observation& obs,
                             const Ontology& ont) {
  const auto* q = hypothesis.form().get_if<Quant>();
  if (q == nullptr || q->kind != QuantKind::Forall || !q->var.type) {
    throw ShapeError("hypothesis must be a restricted universal: " + hypothesis.str());
  }
  const auto* body = q->body.get_if<Atom>();
  if (body == nullptr || body->args.size() != 1 || !body->args[0].is_variable ||
      body->args[0].name != q->var.name) {
    throw ShapeError("hypothesis body must be a single unary literal: " + hypothesis.str());
  }
  if (!ont.subsumes(*q->var.type, obs.object_type)) return Confirmation::Neutral;
  for (const auto& lit : obs.literals) {
    if (lit.predicate == body->predicate) {
      return lit.polarity ? Confirmation::Confirms : Confirmation::Disconfirms;
    }
  }
  return Confirmation::Neutral;
}

struct Equivalence {
  bool equivalent;
  CanonicalForm first;
  CanonicalForm second;
};

// Parses, canonicalizes and alpha-compares two hypotheses in LF syntax.
inline Equivalence equivalence_check(std::string_view h1, std::string_view h2,
                                     const Ontology& ont, const Lexicon& lex) {
  auto c1 = canonicalize(parse_lf(h1), ont, lex);
  auto c2 = canonicalize(parse_lf(h2), ont, lex);
  const bool same = alpha_equal(c1, c2);
  return Equivalence{same, std::move(c1), std::move(c2)};
}

}  // namespace ontologik
