#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ontologik/error.hpp"
#include "ontologik/ontology.hpp"
#include "ontologik/text.hpp"

namespace ontologik {

struct PredicateSignature {
  std::string name;
  std::vector<std::string> arg_types;

  std::size_t arity() const noexcept { return arg_types.size(); }
};

// Typed binary relation that licenses metonymic coercion, e.g.
// EATING(person, food). Priority is the declaration index.
struct SalientRelation {
  std::string name;
  std::string domain;
  std::string range;
  std::size_t priority = 0;

  friend bool operator==(const SalientRelation&, const SalientRelation&) = default;
};

struct NameDecl {
  std::string name;
  std::string type;
};

/// Predicate signatures, salient relations and proper names, validated
/// against one ontology at load time.
class Lexicon {
 public:
  static Lexicon load(std::string_view source, const Ontology& ont);
  static Lexicon load_file(const std::string& path, const Ontology& ont);

  const PredicateSignature* find_predicate(std::string_view name) const {
    const auto it = signatures_.find(std::string(name));
    return it == signatures_.end() ? nullptr : &it->second;
  }

  const SalientRelation* find_relation(std::string_view name) const {
    for (const auto& r : relations_) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

  const NameDecl* find_name(std::string_view name) const {
    const auto it = names_.find(std::string(name));
    return it == names_.end() ? nullptr : &it->second;
  }

  // Proper-name lookup ignoring case, for the sentence front end.
  const NameDecl* find_name_ignoring_case(std::string_view name) const {
    const auto wanted = text::lowercase(name);
    for (const auto& [key, decl] : names_) {
      if (text::lowercase(key) == wanted) return &decl;
    }
    return nullptr;
  }

  const std::map<std::string, PredicateSignature>& predicates() const noexcept {
    return signatures_;
  }
  const std::vector<SalientRelation>& relations() const noexcept { return relations_; }
  const std::map<std::string, NameDecl>& names() const noexcept { return names_; }

  // Declared type of argument slot `arg_index` (1-based).
  const std::string& expectation(std::string_view predicate, std::size_t arg_index) const {
    const auto* sig = find_predicate(predicate);
    if (sig == nullptr) throw UnknownName("predicate", std::string(predicate));
    if (arg_index < 1 || arg_index > sig->arity()) {
      throw ArityError("predicate '" + sig->name + "' has arity " +
                       std::to_string(sig->arity()) + ", no argument " +
                       std::to_string(arg_index));
    }
    return sig->arg_types[arg_index - 1];
  }

  // Relations whose domain is comparable with `target` and whose range is
  // comparable with `source`. Exact range matches first, then exact domain
  // matches, then declaration order.
  std::vector<SalientRelation> coercion_candidates(const Ontology& ont,
                                                   std::string_view target,
                                                   std::string_view source) const {
    if (!ont.contains(target)) throw UnknownName("type", std::string(target));
    if (!ont.contains(source)) throw UnknownName("type", std::string(source));
    std::vector<SalientRelation> out;
    for (const auto& r : relations_) {
      if (ont.comparable(r.domain, target) && ont.comparable(r.range, source)) {
        out.push_back(r);
      }
    }
    const auto key = [&](const SalientRelation& r) {
      return std::make_tuple(r.range != source, r.domain != target, r.priority);
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
  }

 private:
  std::map<std::string, PredicateSignature> signatures_;
  std::vector<SalientRelation> relations_;
  std::map<std::string, NameDecl> names_;
};

namespace detail {

// Splits "name(a, b, c)" into name and trimmed argument list.
inline bool split_call(std::string_view s, std::string& name,
                       std::vector<std::string>& args) {
  const auto open = s.find('(');
  if (open == std::string_view::npos || s.empty() || s.back() != ')') return false;
  name = text::trim(s.substr(0, open));
  const auto inner = s.substr(open + 1, s.size() - open - 2);
  if (inner.find_first_of("()") != std::string_view::npos) return false;
  args.clear();
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    args.push_back(text::trim(inner.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return true;
}

}  // namespace detail

inline Lexicon Lexicon::load(std::string_view source, const Ontology& ont) {
  Lexicon lex;
  std::size_t line_no = 0;

  const auto require_type = [&](const std::string& t) {
    if (!ont.contains(t)) throw LoadError(line_no, "unknown type '" + t + "'");
  };
  const auto require_free_symbol = [&](const std::string& name) {
    if (ont.contains(name)) {
      throw LoadError(line_no, "'" + name + "' is a type and cannot also be a predicate");
    }
    if (lex.signatures_.count(name) != 0 || lex.find_relation(name) != nullptr) {
      throw LoadError(line_no, "duplicate predicate '" + name + "'");
    }
  };

  for (const auto& raw : text::split_lines(source)) {
    ++line_no;
    const auto line = text::strip_comment(raw);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    const auto keyword = line.substr(0, space);
    const auto rest = space == std::string::npos ? std::string() : text::trim(line.substr(space));

    if (keyword == "pred" || keyword == "rel") {
      std::string name;
      std::vector<std::string> args;
      if (!detail::split_call(rest, name, args) || !text::is_identifier(name)) {
        throw LoadError(line_no, "malformed " + keyword + " declaration");
      }
      for (const auto& a : args) {
        if (a.empty()) throw LoadError(line_no, "empty argument type");
        require_type(a);
      }
      require_free_symbol(name);
      if (keyword == "pred") {
        lex.signatures_.emplace(name, PredicateSignature{name, std::move(args)});
      } else {
        if (args.size() != 2) {
          throw LoadError(line_no, "relation '" + name + "' must be binary");
        }
        lex.relations_.push_back(
            SalientRelation{name, args[0], args[1], lex.relations_.size()});
      }
    } else if (keyword == "name") {
      const auto words = text::split_words(rest);
      if (words.size() != 3 || words[1] != "::" || !text::is_identifier(words[0])) {
        throw LoadError(line_no, "expected 'name <Name> :: <type>'");
      }
      require_type(words[2]);
      if (ont.contains(words[0])) {
        throw LoadError(line_no, "'" + words[0] + "' is a type and cannot also be a name");
      }
      if (lex.names_.count(words[0]) != 0) {
        throw LoadError(line_no, "duplicate name '" + words[0] + "'");
      }
      lex.names_.emplace(words[0], NameDecl{words[0], words[2]});
    } else {
      throw LoadError(line_no, "unknown declaration '" + keyword + "'");
    }
  }

  for (const auto& [name, decl] : lex.names_) {
    if (lex.signatures_.count(name) != 0 || lex.find_relation(name) != nullptr) {
      throw LoadError(0, "'" + name + "' is declared both as a name and a predicate");
    }
  }
  return lex;
}

inline Lexicon Lexicon::load_file(const std::string& path, const Ontology& ont) {
  std::ifstream in(path);
  if (!in) throw LoadError(0, "cannot open lexicon file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str(), ont);
}

}  // namespace ontologik
