#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ontologik/error.hpp"
#include "ontologik/text.hpp"

namespace ontologik {

enum class QuantKind { Exists, ExistsUnique, Forall };

inline const char* quant_symbol(QuantKind k) {
  switch (k) {
    case QuantKind::Exists: return "E";
    case QuantKind::ExistsUnique: return "E!";
    case QuantKind::Forall: return "A";
  }
  return "?";
}

// Argument of an atom: a bound variable or a proper-name constant.
struct Term {
  std::string name;
  bool is_variable = true;

  friend bool operator==(const Term&, const Term&) = default;
};

// Bound variable with an optional type restriction (`x :: raven`).
struct Var {
  std::string name;
  std::optional<std::string> type;

  friend bool operator==(const Var&, const Var&) = default;
};

struct Atom;
struct Quant;
struct And;
struct Not;
struct Implies;

/// Immutable logical form. Copies share structure.
class Form {
 public:
  using Node = std::variant<Atom, Quant, And, Not, Implies>;

  Form(Atom a);
  Form(Quant q);
  Form(And a);
  Form(Not n);
  Form(Implies i);

  const Node& node() const;

  template <class T>
  bool is() const;

  template <class T>
  const T& as() const;

  template <class T>
  const T* get_if() const;

  friend bool operator==(const Form& a, const Form& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Quant {
  QuantKind kind;
  Var var;
  Form body;

  friend bool operator==(const Quant&, const Quant&) = default;
};

struct And {
  std::vector<Form> args;

  friend bool operator==(const And&, const And&) = default;
};

struct Not {
  Form arg;

  friend bool operator==(const Not&, const Not&) = default;
};

struct Implies {
  Form antecedent;
  Form consequent;

  friend bool operator==(const Implies&, const Implies&) = default;
};

inline Form::Form(Atom a) : node_(std::make_shared<const Node>(std::move(a))) {}
inline Form::Form(Quant q) : node_(std::make_shared<const Node>(std::move(q))) {}
inline Form::Form(And a) : node_(std::make_shared<const Node>(std::move(a))) {}
inline Form::Form(Not n) : node_(std::make_shared<const Node>(std::move(n))) {}
inline Form::Form(Implies i) : node_(std::make_shared<const Node>(std::move(i))) {}

inline const Form::Node& Form::node() const { return *node_; }

template <class T>
bool Form::is() const {
  return std::holds_alternative<T>(*node_);
}

template <class T>
const T& Form::as() const {
  return std::get<T>(*node_);
}

template <class T>
const T* Form::get_if() const {
  return std::get_if<T>(node_.get());
}

inline bool operator==(const Form& a, const Form& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

// Construction shorthands.
inline Term var(std::string name) { return Term{std::move(name), true}; }
inline Term constant(std::string name) { return Term{std::move(name), false}; }

inline Form atom(std::string predicate, std::vector<Term> args) {
  return Atom{std::move(predicate), std::move(args)};
}

inline Form quant(QuantKind kind, std::string name, std::optional<std::string> type,
                  Form body) {
  return Quant{kind, Var{std::move(name), std::move(type)}, std::move(body)};
}

inline Form conj(std::vector<Form> args) { return And{std::move(args)}; }
inline Form negate(Form f) { return Not{std::move(f)}; }
inline Form implies(Form a, Form c) { return Implies{std::move(a), std::move(c)}; }

// ---------------------------------------------------------------------------
// Printing

namespace detail {

// `rename` maps bound variable names to replacement labels; used to build
// sort keys that do not depend on the choice of bound names.
inline void print_form(const Form& f, std::string& out,
                       const std::map<std::string, std::string>* rename);

inline void print_atom(const Atom& a, std::string& out,
                       const std::map<std::string, std::string>* rename) {
  out += a.predicate;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i != 0) out += ", ";
    const auto& t = a.args[i];
    if (rename != nullptr && t.is_variable) {
      const auto it = rename->find(t.name);
      out += it != rename->end() ? it->second : t.name;
    } else {
      out += t.name;
    }
  }
  out += ')';
}

// Atoms in operand position of `and` and after a quantifier prefix are
// parenthesized; everything else is self-delimiting.
inline void print_operand(const Form& f, std::string& out,
                          const std::map<std::string, std::string>* rename) {
  if (const auto* a = f.get_if<Atom>()) {
    out += '(';
    print_atom(*a, out, rename);
    out += ')';
  } else {
    print_form(f, out, rename);
  }
}

inline void print_form(const Form& f, std::string& out,
                       const std::map<std::string, std::string>* rename) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          print_atom(n, out, rename);
        } else if constexpr (std::is_same_v<T, Quant>) {
          out += '(';
          out += quant_symbol(n.kind);
          out += ' ';
          if (rename != nullptr) {
            const auto label = "%" + std::to_string(rename->size());
            auto inner = *rename;
            inner[n.var.name] = label;
            out += label;
            if (n.var.type) out += " :: " + *n.var.type;
            out += ')';
            print_operand(n.body, out, &inner);
            return;
          }
          out += n.var.name;
          if (n.var.type) out += " :: " + *n.var.type;
          out += ')';
          print_operand(n.body, out, rename);
        } else if constexpr (std::is_same_v<T, And>) {
          if (n.args.size() == 1) {
            print_form(n.args.front(), out, rename);
            return;
          }
          out += "(and";
          for (const auto& arg : n.args) {
            out += ' ';
            print_operand(arg, out, rename);
          }
          out += ')';
        } else if constexpr (std::is_same_v<T, Not>) {
          out += "(! ";
          print_form(n.arg, out, rename);
          out += ')';
        } else {
          out += '(';
          print_form(n.antecedent, out, rename);
          out += " -> ";
          print_form(n.consequent, out, rename);
          out += ')';
        }
      },
      f.node());
}

}  // namespace detail

/// Surface syntax of a form, e.g. `(E! j :: person)(articulate(j))`.
/// Prints exactly what is there; a one-element conjunction prints as its
/// only conjunct.
inline std::string pretty(const Form& f) {
  std::string out;
  detail::print_form(f, out, nullptr);
  return out;
}

// Printed form with bound variables replaced by their binding depth
// (`%0`, `%1`, ...), given the bound variables already in scope.
inline std::string print_nameless(const Form& f,
                                  const std::map<std::string, std::string>& scope = {}) {
  std::string out;
  detail::print_form(f, out, &scope);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class LfParser {
 public:
  explicit LfParser(std::string_view src) : src_(src) {}

  Form parse() {
    auto f = form();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < src_.size() && text::is_space(src_[pos_])) ++pos_;
  }

  bool at(std::string_view tok) {
    skip_ws();
    return src_.substr(pos_, tok.size()) == tok;
  }

  void expect(std::string_view tok) {
    if (!at(tok)) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  std::string ident() {
    skip_ws();
    const auto start = pos_;
    if (pos_ >= src_.size() || !text::is_ident_start(src_[pos_])) fail("expected identifier");
    while (pos_ < src_.size() && text::is_ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  // Identifier at `p` without consuming; empty when none.
  std::string peek_ident(std::size_t p) const {
    while (p < src_.size() && text::is_space(src_[p])) ++p;
    const auto start = p;
    if (p >= src_.size() || !text::is_ident_start(src_[p])) return {};
    while (p < src_.size() && text::is_ident_char(src_[p])) ++p;
    return std::string(src_.substr(start, p - start));
  }

  std::size_t after_ident(std::size_t p) const {
    while (p < src_.size() && text::is_space(src_[p])) ++p;
    while (p < src_.size() && text::is_ident_char(src_[p])) ++p;
    return p;
  }

  bool bound(const std::string& name) const {
    for (const auto& s : scope_) {
      if (s == name) return true;
    }
    return false;
  }

  Form form() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (src_[pos_] != '(') return atom_form();

    const auto inner = pos_ + 1;
    const auto word = peek_ident(inner);
    const auto after = after_ident(inner);
    const char immediate = after < src_.size() ? src_[after] : '\0';

    // "(word(" opens a parenthesized atom; any other "(word" is a keyword.
    if (!word.empty() && immediate != '(') {
      if (word == "and") return and_form();
      if (word == "E" || word == "A") {
        if (immediate == '!' && word == "E") return quant_form(QuantKind::ExistsUnique, after + 1);
        return quant_form(word == "E" ? QuantKind::Exists : QuantKind::Forall, after);
      }
      pos_ = inner;
      skip_ws();
      fail("unknown quantifier kind '" + word + "'");
    }

    pos_ = inner;
    if (at("!")) {
      ++pos_;
      auto arg = form();
      expect(")");
      return negate(std::move(arg));
    }
    auto first = form();
    if (at("->")) {
      pos_ += 2;
      auto second = form();
      expect(")");
      return implies(std::move(first), std::move(second));
    }
    expect(")");
    return first;
  }

  Form and_form() {
    expect("(");
    expect("and");
    std::vector<Form> args;
    while (!at(")")) {
      if (pos_ >= src_.size()) fail("unterminated conjunction");
      args.push_back(form());
    }
    ++pos_;
    if (args.empty()) fail("empty conjunction");
    return conj(std::move(args));
  }

  Form quant_form(QuantKind kind, std::size_t resume) {
    pos_ = resume;
    auto name = ident();
    if (bound(name)) fail("variable '" + name + "' is already bound in this scope");
    std::optional<std::string> type;
    if (at("::")) {
      pos_ += 2;
      type = ident();
    }
    expect(")");
    scope_.push_back(name);
    auto body = form();
    scope_.pop_back();
    return quant(kind, std::move(name), std::move(type), std::move(body));
  }

  Form atom_form() {
    auto pred = ident();
    expect("(");
    std::vector<Term> args;
    while (true) {
      const auto term_pos = (skip_ws(), pos_);
      auto name = ident();
      if (bound(name)) {
        args.push_back(var(std::move(name)));
      } else if (text::is_capitalized(name)) {
        args.push_back(constant(std::move(name)));
      } else {
        pos_ = term_pos;
        fail("unbound variable '" + name + "'");
      }
      if (at(",")) {
        ++pos_;
        continue;
      }
      expect(")");
      break;
    }
    return atom(std::move(pred), std::move(args));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace detail

/// Parses the parenthesized surface syntax. Capitalized free terms are
/// proper-name constants; any other free term is an unbound-variable error.
inline Form parse_lf(std::string_view source) {
  return detail::LfParser(source).parse();
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace detail {

struct AlphaEnv {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool terms_match(const Term& a, const Term& b) const {
    if (a.is_variable != b.is_variable) return false;
    if (!a.is_variable) return a.name == b.name;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      const bool left = it->first == a.name;
      const bool right = it->second == b.name;
      if (left || right) return left && right;
    }
    return a.name == b.name;
  }
};

inline bool alpha_equal(const Form& a, const Form& b, AlphaEnv& env) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.get_if<Atom>()) {
    const auto& y = b.as<Atom>();
    if (x->predicate != y.predicate || x->args.size() != y.args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i) {
      if (!env.terms_match(x->args[i], y.args[i])) return false;
    }
    return true;
  }
  if (const auto* x = a.get_if<Quant>()) {
    const auto& y = b.as<Quant>();
    if (x->kind != y.kind || x->var.type != y.var.type) return false;
    env.pairs.emplace_back(x->var.name, y.var.name);
    const bool same = alpha_equal(x->body, y.body, env);
    env.pairs.pop_back();
    return same;
  }
  if (const auto* x = a.get_if<And>()) {
    const auto& y = b.as<And>();
    if (x->args.size() != y.args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i) {
      if (!alpha_equal(x->args[i], y.args[i], env)) return false;
    }
    return true;
  }
  if (const auto* x = a.get_if<Not>()) return alpha_equal(x->arg, b.as<Not>().arg, env);
  const auto& x = a.as<Implies>();
  const auto& y = b.as<Implies>();
  return alpha_equal(x.antecedent, y.antecedent, env) &&
         alpha_equal(x.consequent, y.consequent, env);
}

}  // namespace detail

// Identical up to consistent renaming of bound variables.
inline bool alpha_equal(const Form& a, const Form& b) {
  detail::AlphaEnv env;
  return detail::alpha_equal(a, b, env);
}

}  // namespace ontologik
