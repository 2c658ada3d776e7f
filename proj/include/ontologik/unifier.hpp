#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ontologik/canonical.hpp"
#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/logform.hpp"
#include "ontologik/ontology.hpp"

namespace ontologik {

struct Unified {
  std::string result;

  friend bool operator==(const Unified&, const Unified&) = default;
};

// The referent is re-typed to `result` and related by `relation` to a
// fresh object of type `relatum`.
struct Coerced {
  std::string result;
  SalientRelation relation;
  std::string relatum;

  friend bool operator==(const Coerced&, const Coerced&) = default;
};

struct Failed {
  std::string left;
  std::string right;

  friend bool operator==(const Failed&, const Failed&) = default;
};

using UnificationOutcome = std::variant<Unified, Coerced, Failed>;

// "Unified beer", "Coerced person via EATING(person, omelet)", "Failed car • person".
inline std::string describe(const UnificationOutcome& outcome) {
  if (const auto* u = std::get_if<Unified>(&outcome)) return "Unified " + u->result;
  if (const auto* c = std::get_if<Coerced>(&outcome)) {
    return "Coerced " + c->result + " via " + c->relation.name + "(" + c->result + ", " +
           c->relatum + ")";
  }
  const auto& f = std::get<Failed>(outcome);
  return "Failed " + f.left + " • " + f.right;
}

struct TraceStep {
  std::string label;    // "unify" or "constant"
  std::string subject;  // variable or constant the step types
  std::string left;
  std::string right;
  UnificationOutcome outcome;

  // "(animal • person) → person"
  std::string render() const {
    std::string out = "(" + left + " • " + right + ") → ";
    if (const auto* u = std::get_if<Unified>(&outcome)) return out + u->result;
    if (const auto* c = std::get_if<Coerced>(&outcome)) {
      return out + "coerced (" + c->result + " " + c->relation.name + " " + c->relatum + ")";
    }
    return out + "failed";
  }
};

using DerivationTrace = std::vector<TraceStep>;

/// Type unification `t1 • t2`.
///
/// Comparable types unify to the more specific one. Incomparable types are
/// bridged by the first salient relation whose domain is comparable with
/// `t2` and whose range is comparable with `t1`: `t2` side becomes the
/// referent and `t1` the relatum. When no relation fits that way round the
/// mirrored direction is tried, so the operator is commutative up to
/// argument roles.
inline UnificationOutcome unify_types(const Ontology& ont, const Lexicon& lex,
                                      const std::string& t1, const std::string& t2) {
  if (auto specific = ont.more_specific(t1, t2)) return Unified{std::move(*specific)};
  const auto bridge = [&](const std::string& source,
                          const std::string& target) -> std::optional<Coerced> {
    const auto candidates = lex.coercion_candidates(ont, target, source);
    if (candidates.empty()) return std::nullopt;
    const auto& r = candidates.front();
    return Coerced{*ont.more_specific(target, r.domain), r, source};
  };
  if (auto c = bridge(t1, t2)) return *c;
  if (auto c = bridge(t2, t1)) return *c;
  return Failed{t1, t2};
}

struct FoldResult {
  UnificationOutcome outcome;
  DerivationTrace trace;
};

/// Right fold `declared • (e1 • (e2 • (... • en)))`.
///
/// Expectations must unify among themselves by subsumption alone; only the
/// final step against the declared type may coerce.
inline FoldResult fold_expectations(const Ontology& ont, const Lexicon& lex,
                                    const std::string& declared,
                                    const std::vector<std::string>& expectations,
                                    const std::string& subject = {}) {
  if (expectations.empty()) throw ShapeError("fold_expectations needs at least one expectation");
  if (!ont.contains(declared)) throw UnknownName("type", declared);
  FoldResult res{Unified{expectations.back()}, {}};
  std::string acc = expectations.back();
  if (!ont.contains(acc)) throw UnknownName("type", acc);
  for (std::size_t i = expectations.size() - 1; i-- > 0;) {
    const auto& e = expectations[i];
    if (!ont.contains(e)) throw UnknownName("type", e);
    auto specific = ont.more_specific(e, acc);
    UnificationOutcome step = specific ? UnificationOutcome{Unified{*specific}}
                                       : UnificationOutcome{Failed{e, acc}};
    res.trace.push_back(TraceStep{"unify", subject, e, acc, step});
    if (!specific) {
      res.outcome = step;
      return res;
    }
    acc = *specific;
  }
  res.outcome = unify_types(ont, lex, declared, acc);
  res.trace.push_back(TraceStep{"unify", subject, declared, acc, res.outcome});
  return res;
}

// One metonymic coercion uncovered during analysis.
struct CoercionNote {
  std::string variable;
  std::string fresh;
  std::string relation;
  std::string result;
  std::string relatum;
  std::string gloss;   // "some loud person eating the omelet"
  std::string clause;  // "wants a beer", may be empty
};

struct AnalyzedForm {
  Form form;
  DerivationTrace trace;
  std::vector<std::string> missing_text;
  std::vector<CoercionNote> coercions;
};

namespace detail {

class Analyzer {
 public:
  Analyzer(const Ontology& ont, const Lexicon& lex) : ont_(ont), lex_(lex) {}

  AnalyzedForm run(const Form& lf) {
    const auto canonical = canonicalize(lf, ont_, lex_);
    collect_names(canonical.form());
    Form typed = visit(canonical.form());
    AnalyzedForm out{canonicalize(typed, ont_, lex_).form(), std::move(trace_), {}, {}};
    for (auto& note : notes_) out.missing_text.push_back(note.gloss);
    out.coercions = std::move(notes_);
    return out;
  }

 private:
  // Declared argument types of an atom, from a predicate signature or a
  // salient relation's domain and range.
  std::vector<std::string> slot_types(const Atom& a) const {
    if (const auto* sig = lex_.find_predicate(a.predicate)) return sig->arg_types;
    if (const auto* rel = lex_.find_relation(a.predicate)) return {rel->domain, rel->range};
    throw UnknownName("predicate", a.predicate);
  }

  void collect_names(const Form& f) {
    if (const auto* a = f.get_if<Atom>()) {
      for (const auto& t : a->args) used_.insert(t.name);
    } else if (const auto* q = f.get_if<Quant>()) {
      used_.insert(q->var.name);
      collect_names(q->body);
    } else if (const auto* c = f.get_if<And>()) {
      for (const auto& arg : c->args) collect_names(arg);
    } else if (const auto* n = f.get_if<Not>()) {
      collect_names(n->arg);
    } else {
      const auto& i = f.as<Implies>();
      collect_names(i.antecedent);
      collect_names(i.consequent);
    }
  }

  // Expectations on `name` in pre-order of its occurrences.
  void expectations_of(const Form& f, const std::string& name,
                       std::vector<std::string>& out) const {
    if (const auto* a = f.get_if<Atom>()) {
      const auto slots = slot_types(*a);
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (a->args[i].is_variable && a->args[i].name == name) out.push_back(slots[i]);
      }
    } else if (const auto* q = f.get_if<Quant>()) {
      expectations_of(q->body, name, out);
    } else if (const auto* c = f.get_if<And>()) {
      for (const auto& arg : c->args) expectations_of(arg, name, out);
    } else if (const auto* n = f.get_if<Not>()) {
      expectations_of(n->arg, name, out);
    } else {
      const auto& i = f.as<Implies>();
      expectations_of(i.antecedent, name, out);
      expectations_of(i.consequent, name, out);
    }
  }

  void atoms_on(const Form& f, const std::string& name, std::vector<Atom>& out) const {
    if (const auto* a = f.get_if<Atom>()) {
      for (const auto& t : a->args) {
        if (t.is_variable && t.name == name) {
          out.push_back(*a);
          break;
        }
      }
    } else if (const auto* q = f.get_if<Quant>()) {
      atoms_on(q->body, name, out);
    } else if (const auto* c = f.get_if<And>()) {
      for (const auto& arg : c->args) atoms_on(arg, name, out);
    } else if (const auto* n = f.get_if<Not>()) {
      atoms_on(n->arg, name, out);
    } else {
      const auto& i = f.as<Implies>();
      atoms_on(i.antecedent, name, out);
      atoms_on(i.consequent, name, out);
    }
  }

  // Type of a bound variable's quantifier-level declaration, combining the
  // restriction with a proper-name declaration when the variable is a name.
  std::string declared_type(const Quant& q) const {
    std::string declared = q.var.type.value_or(ont_.root());
    if (const auto* decl = lex_.find_name(q.var.name)) {
      const auto specific = ont_.more_specific(declared, decl->type);
      if (!specific) {
        throw TypeError("type error: " + q.var.name + " is declared " + decl->type +
                        " but restricted to " + declared);
      }
      declared = *specific;
    }
    return declared;
  }

  std::string fresh_name(const std::string& base) {
    for (std::size_t n = 2;; ++n) {
      auto candidate = base + std::to_string(n);
      if (used_.insert(candidate).second) return candidate;
    }
  }

  // Conjoins `extra` beneath the existential prefix of `body`.
  static Form conjoin_inside(const Form& body, const Form& extra) {
    if (const auto* q = body.get_if<Quant>()) {
      if (q->kind != QuantKind::Forall) {
        return Form(Quant{q->kind, q->var, conjoin_inside(q->body, extra)});
      }
    }
    if (const auto* c = body.get_if<And>()) {
      std::vector<Form> args{extra};
      args.insert(args.end(), c->args.begin(), c->args.end());
      return conj(std::move(args));
    }
    return conj({extra, body});
  }

  void check_constants(const Atom& a) {
    const auto slots = slot_types(a);
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      const auto& t = a.args[i];
      if (t.is_variable) continue;
      const auto* decl = lex_.find_name(t.name);
      if (decl == nullptr) throw UnknownName("constant", t.name);
      auto specific = ont_.more_specific(decl->type, slots[i]);
      UnificationOutcome step = specific ? UnificationOutcome{Unified{*specific}}
                                         : UnificationOutcome{Failed{decl->type, slots[i]}};
      trace_.push_back(TraceStep{"constant", t.name, decl->type, slots[i], step});
      if (!specific) {
        throw TypeError("type error: constant " + t.name + " of type " + decl->type +
                        " cannot take expectation " + slots[i] + " of " + a.predicate);
      }
    }
  }

  Form visit(const Form& f) {
    if (const auto* a = f.get_if<Atom>()) {
      check_constants(*a);
      return f;
    }
    if (const auto* c = f.get_if<And>()) {
      std::vector<Form> args;
      for (const auto& arg : c->args) args.push_back(visit(arg));
      return conj(std::move(args));
    }
    if (const auto* n = f.get_if<Not>()) return negate(visit(n->arg));
    if (const auto* i = f.get_if<Implies>()) {
      return implies(visit(i->antecedent), visit(i->consequent));
    }
    return visit_quant(f.as<Quant>());
  }

  Form visit_quant(const Quant& q) {
    const auto declared = declared_type(q);
    std::vector<std::string> expectations;
    expectations_of(q.body, q.var.name, expectations);
    // Later constraints wrap earlier ones: loud(o), want(o, b) folds as
    // (animal • person).
    std::reverse(expectations.begin(), expectations.end());
    if (expectations.empty()) expectations.push_back(ont_.root());

    auto folded = fold_expectations(ont_, lex_, declared, expectations, q.var.name);
    trace_.insert(trace_.end(), folded.trace.begin(), folded.trace.end());

    if (const auto* failed = std::get_if<Failed>(&folded.outcome)) {
      throw TypeError("type error: variable " + q.var.name + " declared " + declared +
                      " cannot unify " + failed->left + " with expectation " + failed->right);
    }
    if (const auto* u = std::get_if<Unified>(&folded.outcome)) {
      return quant(q.kind, q.var.name, u->result, visit(q.body));
    }

    const auto& c = std::get<Coerced>(folded.outcome);
    if (c.relatum != declared) {
      throw TypeError("type error: variable " + q.var.name + " declared " + declared +
                      " would need its expectation " + c.relatum +
                      " coerced, which analysis does not support");
    }
    const auto fresh = fresh_name(q.var.name);
    const auto link = atom(c.relation.name, {var(q.var.name), var(fresh)});
    notes_.push_back(note_for(q, c, fresh));
    Form body = visit(q.body);
    body = quant(QuantKind::Exists, fresh, c.relatum, conjoin_inside(body, link));
    return quant(q.kind, q.var.name, c.result, body);
  }

  CoercionNote note_for(const Quant& q, const Coerced& c, const std::string& fresh) const {
    std::vector<Atom> atoms;
    atoms_on(q.body, q.var.name, atoms);
    std::string adjectives;
    std::string clause;
    for (const auto& a : atoms) {
      const auto* sig = lex_.find_predicate(a.predicate);
      if (sig == nullptr) continue;
      if (sig->arity() == 1) {
        adjectives += a.predicate + " ";
      } else if (sig->arity() == 2 && a.args[0].is_variable && a.args[0].name == q.var.name) {
        if (!clause.empty()) clause += " and ";
        clause += a.predicate + "s a " + object_type(q.body, a.args[1]);
      }
    }
    CoercionNote note;
    note.variable = q.var.name;
    note.fresh = fresh;
    note.relation = c.relation.name;
    note.result = c.result;
    note.relatum = c.relatum;
    note.gloss = "some " + adjectives + c.result + " " + text::lowercase(c.relation.name) +
                 " the " + c.relatum;
    note.clause = clause;
    return note;
  }

  // Best-effort noun for an object argument in a gloss.
  std::string object_type(const Form& scope, const Term& t) const {
    if (!t.is_variable) return t.name;
    std::string found = t.name;
    find_restriction(scope, t.name, found);
    return found;
  }

  static void find_restriction(const Form& f, const std::string& name, std::string& out) {
    if (const auto* q = f.get_if<Quant>()) {
      if (q->var.name == name && q->var.type) {
        out = *q->var.type;
        return;
      }
      find_restriction(q->body, name, out);
    } else if (const auto* c = f.get_if<And>()) {
      for (const auto& arg : c->args) find_restriction(arg, name, out);
    } else if (const auto* n = f.get_if<Not>()) {
      find_restriction(n->arg, name, out);
    } else if (const auto* i = f.get_if<Implies>()) {
      find_restriction(i->antecedent, name, out);
      find_restriction(i->consequent, name, out);
    }
  }

  const Ontology& ont_;
  const Lexicon& lex_;
  DerivationTrace trace_;
  std::vector<CoercionNote> notes_;
  std::set<std::string> used_;
};

}  // namespace detail

/// Types every bound variable of `lf`.
///
/// Each variable's declared type (restriction or proper-name declaration)
/// is unified with the argument expectations of the atoms it occurs in.
/// A coercion re-types the variable to the expected type and introduces a
/// fresh existential over the original type, linked by the licensing
/// relation; each one yields a missing-text gloss.
inline AnalyzedForm analyze(const Form& lf, const Ontology& ont, const Lexicon& lex) {
  return detail::Analyzer(ont, lex).run(lf);
}

// One line per coercion in binding order.
inline std::string missing_text_report(const AnalyzedForm& analyzed) {
  if (analyzed.coercions.empty()) return "no missing text detected\n";
  std::string out;
  for (const auto& note : analyzed.coercions) {
    out += note.gloss;
    if (!note.clause.empty()) out += " " + note.clause;
    out += '\n';
  }
  return out;
}

}  // namespace ontologik
