#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/logform.hpp"
#include "ontologik/ontology.hpp"
#include "ontologik/text.hpp"

namespace ontologik {

enum class PatternKind { Copular, Transitive, UniversalAffirmative, UniversalContrapositive };

inline const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Copular: return "Copular";
    case PatternKind::Transitive: return "Transitive";
    case PatternKind::UniversalAffirmative: return "UniversalAffirmative";
    case PatternKind::UniversalContrapositive: return "UniversalContrapositive";
  }
  return "?";
}

// A sentence matched against one of the controlled-English patterns. The
// slots hold lowercased content words, or the proper name as declared.
struct SentencePattern {
  PatternKind kind;
  std::string name;                          // Copular subject
  std::vector<std::string> subject_adjectives;
  std::string subject_noun;                  // may be empty for Copular
  std::string verb;                          // Transitive, lexicon form
  std::vector<std::string> object_adjectives;
  std::string object_noun;
  std::string adjective;                     // universals
};

namespace detail {

inline const std::map<std::string, std::string>& irregular_plurals() {
  static const std::map<std::string, std::string> table{
      {"people", "person"},
  };
  return table;
}

class SentenceReader {
 public:
  SentenceReader(const Lexicon& lex, const Ontology& ont) : lex_(lex), ont_(ont) {}

  SentencePattern read(std::string_view sentence) const {
    auto cleaned = text::trim(sentence);
    while (!cleaned.empty() && (cleaned.back() == '.' || cleaned.back() == '!' ||
                                cleaned.back() == '?')) {
      cleaned.pop_back();
    }
    const auto original = text::split_words(cleaned);
    std::vector<std::string> words;
    for (const auto& w : original) words.push_back(text::lowercase(w));
    if (words.empty()) throw ParseError(0, "empty sentence");

    if (words[0] == "all") {
      if (words.size() > 1 && words[1].rfind("non-", 0) == 0) return contrapositive(words);
      return affirmative(words);
    }
    if (words[0] == "the") return transitive(words);
    if (words.size() >= 3 && words[1] == "is") return copular(original, words);
    throw ParseError(0, "sentence matches no known pattern");
  }

 private:
  bool is_adjective(const std::string& w) const {
    const auto* sig = lex_.find_predicate(w);
    return sig != nullptr && sig->arity() == 1;
  }

  std::string adjective(const std::string& w) const {
    if (!is_adjective(w)) throw UnknownName("adjective", w);
    return w;
  }

  std::string noun(const std::string& w) const {
    if (!ont_.contains(w)) throw UnknownName("noun", w);
    return w;
  }

  std::string plural_noun(const std::string& w) const {
    if (const auto it = irregular_plurals().find(w); it != irregular_plurals().end()) {
      return noun(it->second);
    }
    if (w.size() < 2 || w.back() != 's') {
      throw ParseError(0, "'" + w + "' is not a regular plural and not in the plural table");
    }
    return noun(w.substr(0, w.size() - 1));
  }

  // "<adj>* <noun>" spanning words[begin, end).
  void noun_phrase(const std::vector<std::string>& words, std::size_t begin, std::size_t end,
                   std::vector<std::string>& adjectives, std::string& head) const {
    if (begin >= end) throw ParseError(0, "missing noun");
    for (std::size_t i = begin; i + 1 < end; ++i) adjectives.push_back(adjective(words[i]));
    head = noun(words[end - 1]);
  }

  // All <noun>s are <adj>
  SentencePattern affirmative(const std::vector<std::string>& w) const {
    if (w.size() != 4 || w[2] != "are") {
      throw ParseError(0, "expected 'All <noun>s are <adjective>'");
    }
    SentencePattern p{PatternKind::UniversalAffirmative, {}, {}, {}, {}, {}, {}, {}};
    p.subject_noun = plural_noun(w[1]);
    p.adjective = adjective(w[3]);
    return p;
  }

  // All non-<adj> things are non-<noun>s
  SentencePattern contrapositive(const std::vector<std::string>& w) const {
    if (w.size() != 5 || w[2] != "things" || w[3] != "are" || w[4].rfind("non-", 0) != 0) {
      throw ParseError(0, "expected 'All non-<adjective> things are non-<noun>s'");
    }
    SentencePattern p{PatternKind::UniversalContrapositive, {}, {}, {}, {}, {}, {}, {}};
    p.adjective = adjective(w[1].substr(4));
    p.subject_noun = plural_noun(w[4].substr(4));
    return p;
  }

  // The <adj>* <noun> <verb>s [a|an|another] <adj>* <noun>
  SentencePattern transitive(const std::vector<std::string>& w) const {
    SentencePattern p{PatternKind::Transitive, {}, {}, {}, {}, {}, {}, {}};
    std::size_t v = 1;
    while (v < w.size() && !is_transitive_verb(w[v])) ++v;
    if (v >= w.size()) throw ParseError(0, "no known verb in transitive sentence");
    noun_phrase(w, 1, v, p.subject_adjectives, p.subject_noun);
    p.verb = w[v].substr(0, w[v].size() - 1);
    std::size_t obj = v + 1;
    if (obj < w.size() && (w[obj] == "a" || w[obj] == "an" || w[obj] == "another")) ++obj;
    noun_phrase(w, obj, w.size(), p.object_adjectives, p.object_noun);
    return p;
  }

  bool is_transitive_verb(const std::string& w) const {
    if (w.size() < 2 || w.back() != 's') return false;
    const auto* sig = lex_.find_predicate(w.substr(0, w.size() - 1));
    return sig != nullptr && sig->arity() == 2;
  }

  // <Name> is [a|an] <adj>* [<noun>]
  SentencePattern copular(const std::vector<std::string>& original,
                          const std::vector<std::string>& w) const {
    const auto* decl = lex_.find_name_ignoring_case(original[0]);
    if (decl == nullptr) throw UnknownName("name", original[0]);
    SentencePattern p{PatternKind::Copular, decl->name, {}, {}, {}, {}, {}, {}};
    std::size_t i = 2;
    if (w[i] == "a" || w[i] == "an") ++i;
    if (i >= w.size()) throw ParseError(0, "missing predicate after 'is'");
    for (; i < w.size(); ++i) {
      if (i + 1 == w.size() && !is_adjective(w[i])) {
        p.subject_noun = noun(w[i]);
      } else {
        p.subject_adjectives.push_back(adjective(w[i]));
      }
    }
    return p;
  }

  const Lexicon& lex_;
  const Ontology& ont_;
};

// First letter of the noun, numbered on collision.
inline std::string variable_for(const std::string& noun, std::set<std::string>& used) {
  std::string base(1, noun.front());
  if (used.insert(base).second) return base;
  for (int n = 2;; ++n) {
    auto candidate = base + std::to_string(n);
    if (used.insert(candidate).second) return candidate;
  }
}

}  // namespace detail

inline SentencePattern match_pattern(std::string_view sentence, const Lexicon& lex,
                                     const Ontology& ont) {
  return detail::SentenceReader(lex, ont).read(sentence);
}

/// Translates one controlled-English sentence into an untyped logical form.
/// Nouns become type atoms for canonicalization to lift; a proper-name
/// subject is bound by a unique existential over the name itself.
inline Form parse_sentence(std::string_view sentence, const Lexicon& lex, const Ontology& ont) {
  const auto p = match_pattern(sentence, lex, ont);
  switch (p.kind) {
    case PatternKind::Copular: {
      const auto& v = p.name;
      std::vector<Form> conjuncts;
      if (!p.subject_noun.empty()) conjuncts.push_back(atom(p.subject_noun, {var(v)}));
      for (const auto& a : p.subject_adjectives) conjuncts.push_back(atom(a, {var(v)}));
      Form body = conjuncts.size() == 1 ? conjuncts.front() : conj(std::move(conjuncts));
      return quant(QuantKind::ExistsUnique, v, std::nullopt, std::move(body));
    }
    case PatternKind::Transitive: {
      std::set<std::string> used;
      const auto s = detail::variable_for(p.subject_noun, used);
      const auto o = detail::variable_for(p.object_noun, used);
      std::vector<Form> conjuncts{atom(p.subject_noun, {var(s)}), atom(p.object_noun, {var(o)})};
      for (const auto& a : p.subject_adjectives) conjuncts.push_back(atom(a, {var(s)}));
      for (const auto& a : p.object_adjectives) conjuncts.push_back(atom(a, {var(o)}));
      conjuncts.push_back(atom(p.verb, {var(s), var(o)}));
      return quant(QuantKind::Exists, s, std::nullopt,
                   quant(QuantKind::Exists, o, std::nullopt, conj(std::move(conjuncts))));
    }
    case PatternKind::UniversalAffirmative:
      return quant(QuantKind::Forall, "x", std::nullopt,
                   implies(atom(p.subject_noun, {var("x")}), atom(p.adjective, {var("x")})));
    case PatternKind::UniversalContrapositive:
      return quant(QuantKind::Forall, "x", std::nullopt,
                   implies(negate(atom(p.adjective, {var("x")})),
                           negate(atom(p.subject_noun, {var("x")}))));
  }
  throw ParseError(0, "unhandled sentence pattern");
}

}  // namespace ontologik
