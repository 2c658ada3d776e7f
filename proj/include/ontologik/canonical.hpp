#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/logform.hpp"
#include "ontologik/ontology.hpp"

namespace ontologik {

/// A logical form in rewrite-normal form: no type names used as
/// predicates, no double negation, every quantifier restricted, and
/// conjunctions flat and sorted. Only `canonicalize` produces one.
class CanonicalForm {
 public:
  const Form& form() const noexcept { return form_; }
  std::string str() const { return pretty(form_); }

 private:
  explicit CanonicalForm(Form f) : form_(std::move(f)) {}
  friend CanonicalForm canonicalize(const Form&, const Ontology&, const Lexicon&);

  Form form_;
};

namespace detail {

class Canonicalizer {
 public:
  Canonicalizer(const Ontology& ont, const Lexicon& lex) : ont_(ont), lex_(lex) {}

  Form run(const Form& input) {
    check_predicates(input);
    Form current = input;
    // Each pass strictly shrinks the form or reorders conjuncts into a
    // fixed order, so this converges long before the cap.
    for (int pass = 0; pass < 10000; ++pass) {
      Form next = sort_conjuncts(lift_types(contrapose(drop_double_negation(current))), {});
      if (next == current) {
        check_no_type_atoms(current);
        return restrict_all(current, {});
      }
      current = std::move(next);
    }
    throw ShapeError("canonicalization did not reach a fixpoint");
  }

 private:
  bool is_type_atom(const Form& f) const {
    const auto* a = f.get_if<Atom>();
    return a != nullptr && ont_.contains(a->predicate);
  }

  // Unary type atom T(x) over the variable `name`.
  std::optional<std::string> type_atom_on(const Form& f, const std::string& name) const {
    const auto* a = f.get_if<Atom>();
    if (a == nullptr || !ont_.contains(a->predicate) || a->args.size() != 1) {
      return std::nullopt;
    }
    const auto& t = a->args.front();
    if (!t.is_variable || t.name != name) return std::nullopt;
    return a->predicate;
  }

  void check_predicates(const Form& f) const {
    if (const auto* a = f.get_if<Atom>()) {
      std::size_t arity = 0;
      if (ont_.contains(a->predicate)) {
        arity = 1;
      } else if (const auto* sig = lex_.find_predicate(a->predicate)) {
        arity = sig->arity();
      } else if (lex_.find_relation(a->predicate) != nullptr) {
        arity = 2;
      } else {
        throw UnknownName("predicate", a->predicate);
      }
      if (a->args.size() != arity) {
        throw ArityError("'" + pretty(f) + "': '" + a->predicate + "' takes " +
                         std::to_string(arity) + " argument(s)");
      }
      return;
    }
    if (const auto* q = f.get_if<Quant>()) {
      if (q->var.type && !ont_.contains(*q->var.type)) {
        throw UnknownName("type", *q->var.type);
      }
      return check_predicates(q->body);
    }
    if (const auto* c = f.get_if<And>()) {
      for (const auto& arg : c->args) check_predicates(arg);
      return;
    }
    if (const auto* n = f.get_if<Not>()) return check_predicates(n->arg);
    const auto& i = f.as<Implies>();
    check_predicates(i.antecedent);
    check_predicates(i.consequent);
  }

  void check_no_type_atoms(const Form& f) const {
    if (is_type_atom(f)) {
      throw ShapeError("type atom '" + pretty(f) +
                       "' cannot be lifted into a quantifier restriction");
    }
    if (const auto* q = f.get_if<Quant>()) return check_no_type_atoms(q->body);
    if (const auto* c = f.get_if<And>()) {
      for (const auto& arg : c->args) check_no_type_atoms(arg);
      return;
    }
    if (const auto* n = f.get_if<Not>()) return check_no_type_atoms(n->arg);
    if (const auto* i = f.get_if<Implies>()) {
      check_no_type_atoms(i->antecedent);
      check_no_type_atoms(i->consequent);
    }
  }

  // Applies `rule` to every node bottom-up.
  template <class Rule>
  static Form rewrite(const Form& f, const Rule& rule) {
    if (const auto* q = f.get_if<Quant>()) {
      return rule(Form(Quant{q->kind, q->var, rewrite(q->body, rule)}));
    }
    if (const auto* c = f.get_if<And>()) {
      std::vector<Form> args;
      args.reserve(c->args.size());
      for (const auto& arg : c->args) args.push_back(rewrite(arg, rule));
      return rule(conj(std::move(args)));
    }
    if (const auto* n = f.get_if<Not>()) return rule(negate(rewrite(n->arg, rule)));
    if (const auto* i = f.get_if<Implies>()) {
      return rule(implies(rewrite(i->antecedent, rule), rewrite(i->consequent, rule)));
    }
    return rule(f);
  }

  static Form drop_double_negation(const Form& f) {
    return rewrite(f, [](const Form& g) -> Form {
      if (const auto* n = g.get_if<Not>()) {
        if (const auto* inner = n->arg.get_if<Not>()) return inner->arg;
      }
      return g;
    });
  }

  // (!a -> !b)  =>  (b -> a)
  static Form contrapose(const Form& f) {
    return rewrite(f, [](const Form& g) -> Form {
      if (const auto* i = g.get_if<Implies>()) {
        const auto* a = i->antecedent.get_if<Not>();
        const auto* c = i->consequent.get_if<Not>();
        if (a != nullptr && c != nullptr) return implies(c->arg, a->arg);
      }
      return g;
    });
  }

  // New restriction after meeting type atom `t`, or nullopt when the
  // current restriction and `t` are incomparable.
  std::optional<std::string> tighten(const std::optional<std::string>& current,
                                     const std::string& t) const {
    if (!current) return t;
    return ont_.more_specific(*current, t);
  }

  // Removes the first liftable type atom on `name` from a conjunction,
  // leaving at least one conjunct.
  std::optional<std::pair<std::string, Form>> take_type_conjunct(
      const Form& f, const std::string& name,
      const std::optional<std::string>& restriction) const {
    const auto* c = f.get_if<And>();
    if (c == nullptr || c->args.size() < 2) return std::nullopt;
    for (std::size_t i = 0; i < c->args.size(); ++i) {
      const auto t = type_atom_on(c->args[i], name);
      if (!t) continue;
      const auto tightened = tighten(restriction, *t);
      if (!tightened) continue;
      std::vector<Form> rest;
      for (std::size_t j = 0; j < c->args.size(); ++j) {
        if (j != i) rest.push_back(c->args[j]);
      }
      Form remaining = rest.size() == 1 ? rest.front() : conj(std::move(rest));
      return std::make_pair(*tightened, std::move(remaining));
    }
    return std::nullopt;
  }

  // Looks through a prefix of quantifiers of the same polarity as the
  // binder of `name` and lifts one type atom found beneath them.
  std::optional<std::pair<std::string, Form>> lift_from(
      const Form& body, const Quant& binder) const {
    const bool universal = binder.kind == QuantKind::Forall;
    if (const auto* inner = body.get_if<Quant>()) {
      const bool same_polarity = (inner->kind == QuantKind::Forall) == universal;
      if (!same_polarity) return std::nullopt;
      auto lifted = lift_from(inner->body, binder);
      if (!lifted) return std::nullopt;
      return std::make_pair(lifted->first,
                            Form(Quant{inner->kind, inner->var, lifted->second}));
    }
    if (universal) {
      const auto* i = body.get_if<Implies>();
      if (i == nullptr) return std::nullopt;
      if (const auto t = type_atom_on(i->antecedent, binder.var.name)) {
        if (const auto tightened = tighten(binder.var.type, *t)) {
          return std::make_pair(*tightened, i->consequent);
        }
        return std::nullopt;
      }
      auto taken = take_type_conjunct(i->antecedent, binder.var.name, binder.var.type);
      if (!taken) return std::nullopt;
      return std::make_pair(taken->first, implies(taken->second, i->consequent));
    }
    return take_type_conjunct(body, binder.var.name, binder.var.type);
  }

  Form lift_types(const Form& f) const {
    return rewrite(f, [this](const Form& g) -> Form {
      const auto* q = g.get_if<Quant>();
      if (q == nullptr) return g;
      auto lifted = lift_from(q->body, *q);
      if (!lifted) return g;
      return quant(q->kind, q->var.name, lifted->first, lifted->second);
    });
  }

  // Flattens nested conjunctions and orders conjuncts by their printed form
  // with bound variables numbered by binding depth.
  Form sort_conjuncts(const Form& f, const std::map<std::string, std::string>& scope) const {
    if (const auto* q = f.get_if<Quant>()) {
      auto inner = scope;
      inner[q->var.name] = "%" + std::to_string(scope.size());
      return Form(Quant{q->kind, q->var, sort_conjuncts(q->body, inner)});
    }
    if (const auto* c = f.get_if<And>()) {
      std::vector<Form> flat;
      for (const auto& arg : c->args) {
        auto sorted = sort_conjuncts(arg, scope);
        if (const auto* nested = sorted.get_if<And>()) {
          flat.insert(flat.end(), nested->args.begin(), nested->args.end());
        } else {
          flat.push_back(std::move(sorted));
        }
      }
      if (flat.size() == 1) return flat.front();
      std::vector<std::pair<std::string, Form>> keyed;
      keyed.reserve(flat.size());
      for (auto& g : flat) keyed.emplace_back(print_nameless(g, scope), std::move(g));
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Form> args;
      args.reserve(keyed.size());
      for (auto& [key, g] : keyed) args.push_back(std::move(g));
      return conj(std::move(args));
    }
    if (const auto* n = f.get_if<Not>()) return negate(sort_conjuncts(n->arg, scope));
    if (const auto* i = f.get_if<Implies>()) {
      return implies(sort_conjuncts(i->antecedent, scope), sort_conjuncts(i->consequent, scope));
    }
    return f;
  }

  // Unrestricted quantifiers range over the root type. The sort keys of
  // enclosing conjunctions change with the restriction, so re-sort.
  Form restrict_all(const Form& f, const std::map<std::string, std::string>& scope) const {
    const Form restricted = rewrite(f, [this](const Form& g) -> Form {
      const auto* q = g.get_if<Quant>();
      if (q == nullptr || q->var.type) return g;
      return quant(q->kind, q->var.name, ont_.root(), q->body);
    });
    return sort_conjuncts(restricted, scope);
  }

  const Ontology& ont_;
  const Lexicon& lex_;
};

}  // namespace detail

/// Rewrites to fixpoint: double-negation elimination, contraposition of
/// negated implications, lifting of type atoms into quantifier
/// restrictions, then flattening and sorting of conjunctions.
///
/// Throws UnknownName for predicates that are neither declared nor types,
/// ArityError for misapplied predicates, and ShapeError when a type atom
/// survives in a position none of the rewrites can lift.
inline CanonicalForm canonicalize(const Form& lf, const Ontology& ont, const Lexicon& lex) {
  return CanonicalForm(detail::Canonicalizer(ont, lex).run(lf));
}

inline bool alpha_equal(const CanonicalForm& a, const CanonicalForm& b) {
  return alpha_equal(a.form(), b.form());
}

}  // namespace ontologik
