#pragma once

// Test-only oracles and random generators. The oracles work from plain
// parent maps and ancestor sets so they share no code path with the
// library's depth-walking queries.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontologik/ontologik.hpp"

namespace ontologik::testing {

inline Ontology reference_ontology() {
  return Ontology::load_file(std::string(ONTOLOGIK_DEFAULT_FIXTURES) + "/reference.ont");
}

inline Lexicon reference_lexicon(const Ontology& ont) {
  return Lexicon::load_file(std::string(ONTOLOGIK_DEFAULT_FIXTURES) + "/reference.lex", ont);
}

// Child -> parent pairs, root maps to nullopt.
using ParentMap = std::map<std::string, std::optional<std::string>>;

// Hand-written copy of the shipped fixture tree.
inline ParentMap reference_parents() {
  return {
      {"entity", std::nullopt}, {"physical", "entity"}, {"living", "physical"},
      {"animal", "living"},     {"person", "animal"},   {"bird", "living"},
      {"raven", "bird"},        {"artifact", "physical"}, {"car", "artifact"},
      {"ball", "artifact"},     {"shoe", "artifact"},   {"food", "physical"},
      {"omelet", "food"},       {"beverage", "physical"}, {"beer", "beverage"},
  };
}

class AncestorOracle {
 public:
  explicit AncestorOracle(ParentMap parents) : parents_(std::move(parents)) {
    for (const auto& [name, parent] : parents_) {
      std::set<std::string> up;
      std::optional<std::string> cur = name;
      while (cur) {
        up.insert(*cur);
        cur = parents_.at(*cur);
      }
      ancestors_[name] = std::move(up);
    }
  }

  const std::set<std::string>& ancestors(const std::string& t) const { return ancestors_.at(t); }

  bool subsumes(const std::string& general, const std::string& specific) const {
    return ancestors_.at(specific).count(general) != 0;
  }

  bool comparable(const std::string& a, const std::string& b) const {
    return subsumes(a, b) || subsumes(b, a);
  }

  // Common ancestor with the largest ancestor set, i.e. the deepest one.
  std::string lub(const std::string& a, const std::string& b) const {
    std::string best;
    std::size_t best_depth = 0;
    for (const auto& t : ancestors_.at(a)) {
      if (ancestors_.at(b).count(t) == 0) continue;
      const auto d = ancestors_.at(t).size();
      if (best.empty() || d > best_depth) {
        best = t;
        best_depth = d;
      }
    }
    return best;
  }

  std::vector<std::string> types() const {
    std::vector<std::string> out;
    for (const auto& [name, parent] : parents_) out.push_back(name);
    return out;
  }

 private:
  ParentMap parents_;
  std::map<std::string, std::set<std::string>> ancestors_;
};

// Random tree of `n` nodes; node i hangs under a uniformly chosen earlier node.
struct RandomTree {
  std::string text;
  ParentMap parents;
};

inline RandomTree random_tree(std::mt19937& rng, std::size_t n) {
  RandomTree tree;
  tree.text = "type t0\n";
  tree.parents["t0"] = std::nullopt;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const auto child = "t" + std::to_string(i);
    const auto parent = "t" + std::to_string(pick(rng));
    tree.text += "type " + child + " isa " + parent + "\n";
    tree.parents[child] = parent;
  }
  return tree;
}

// Random well-scoped forms over the reference lexicon, with a bias towards
// the shapes canonicalization lifts.
class FormGenerator {
 public:
  explicit FormGenerator(std::mt19937& rng) : rng_(rng) {}

  Form generate(int max_depth) {
    scope_.clear();
    counter_ = 0;
    return quantified(max_depth);
  }

 private:
  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(roll(static_cast<int>(items.size())))];
  }

  Term term() {
    if (scope_.empty() || roll(6) == 0) return constant(pick(constants_));
    return var(pick(scope_));
  }

  Form lexical_atom() {
    const auto& p = pick(unary_);
    if (roll(4) == 0) return atom("want", {term(), term()});
    return atom(p, {term()});
  }

  Form type_atom(const std::string& v) { return atom(pick(types_), {var(v)}); }

  std::optional<std::string> restriction() {
    if (roll(3) != 0) return std::nullopt;
    return pick(types_);
  }

  Form quantified(int depth) {
    const auto name = "v" + std::to_string(counter_++);
    scope_.push_back(name);
    const int shape = roll(4);
    Form body = [&]() -> Form {
      if (shape == 0) {
        return quant(QuantKind::Forall, name, restriction(),
                     implies(type_atom(name), formula(depth - 2)));
      }
      if (shape == 1) {
        return quant(roll(2) == 0 ? QuantKind::Exists : QuantKind::ExistsUnique, name,
                     restriction(), conj({type_atom(name), formula(depth - 2)}));
      }
      if (shape == 2) {
        return quant(QuantKind::Forall, name, restriction(),
                     implies(negate(formula(depth - 3)), negate(type_atom(name))));
      }
      const QuantKind kinds[] = {QuantKind::Exists, QuantKind::ExistsUnique, QuantKind::Forall};
      return quant(kinds[roll(3)], name, restriction(), formula(depth - 1));
    }();
    scope_.pop_back();
    return body;
  }

  Form formula(int depth) {
    if (depth <= 1) return lexical_atom();
    switch (roll(6)) {
      case 0: return lexical_atom();
      case 1: return quantified(depth - 1);
      case 2: {
        std::vector<Form> args;
        const int n = 2 + roll(2);
        for (int i = 0; i < n; ++i) args.push_back(formula(depth - 1));
        return conj(std::move(args));
      }
      case 3: return negate(formula(depth - 1));
      case 4: return negate(negate(formula(depth - 1)));
      default: return implies(formula(depth - 1), formula(depth - 1));
    }
  }

  std::mt19937& rng_;
  std::vector<std::string> scope_;
  int counter_ = 0;
  const std::vector<std::string> unary_{"articulate", "loud", "beautiful", "red", "black"};
  const std::vector<std::string> types_{"entity", "physical", "animal", "person",
                                        "raven", "bird",     "car",    "omelet"};
  const std::vector<std::string> constants_{"Julie", "Jon"};
};

inline int form_depth(const Form& f) {
  if (const auto* q = f.get_if<Quant>()) return 1 + form_depth(q->body);
  if (const auto* c = f.get_if<And>()) {
    int d = 0;
    for (const auto& a : c->args) d = std::max(d, form_depth(a));
    return 1 + d;
  }
  if (const auto* n = f.get_if<Not>()) return 1 + form_depth(n->arg);
  if (const auto* i = f.get_if<Implies>()) {
    return 1 + std::max(form_depth(i->antecedent), form_depth(i->consequent));
  }
  return 1;
}

// Independent characterization of an adjective-order verdict: read the
// expectations innermost to outermost; the sequence starting at the noun
// must never step to a strictly more specific type, and incomparable steps
// need a relation whose domain and range line up with the step.
struct MonotoneVerdict {
  enum Kind { Accepted, Violation, TypeFailure } kind;
  std::size_t index = 0;
};

inline MonotoneVerdict monotone_characterization(const AncestorOracle& oracle,
                                                 const std::vector<SalientRelation>& relations,
                                                 const std::vector<std::string>& expectations,
                                                 const std::string& noun) {
  std::vector<std::string> seq{noun};
  for (auto it = expectations.rbegin(); it != expectations.rend(); ++it) seq.push_back(*it);
  for (std::size_t step = 1; step < seq.size(); ++step) {
    const auto& prev = seq[step - 1];
    const auto& next = seq[step];
    const std::size_t index = expectations.size() - step;
    if (oracle.subsumes(next, prev)) continue;
    if (oracle.subsumes(prev, next)) return {MonotoneVerdict::Violation, index};
    const bool bridged = std::any_of(relations.begin(), relations.end(), [&](const auto& r) {
      return oracle.comparable(r.domain, next) && oracle.comparable(r.range, prev);
    });
    if (!bridged) return {MonotoneVerdict::TypeFailure, index};
  }
  return {MonotoneVerdict::Accepted, 0};
}

}  // namespace ontologik::testing
