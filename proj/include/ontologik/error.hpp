#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontologik {

// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource file (ontology or lexicon) failed validation.
class LoadError : public Error {
 public:
  LoadError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Logical-form text, sentence or observation text that does not parse.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Lookup of a type, predicate, relation or proper name that is not declared.
class UnknownName : public Error {
 public:
  UnknownName(const std::string& kind, const std::string& name)
      : Error("unknown " + kind + " '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Argument index or argument count that does not match a signature.
class ArityError : public Error {
 public:
  using Error::Error;
};

// A rewrite or a query received a form whose shape it does not support.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Unification failed while typing a logical form.
class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace ontologik
