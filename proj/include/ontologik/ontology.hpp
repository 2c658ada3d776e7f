#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontologik/error.hpp"
#include "ontologik/text.hpp"

namespace ontologik {

// Ordering of two types under IsA.
enum class SubsumptionVerdict {
  Equal,
  FirstSubsumesSecond,
  SecondSubsumesFirst,
  Incomparable,
};

inline const char* to_string(SubsumptionVerdict v) {
  switch (v) {
    case SubsumptionVerdict::Equal: return "Equal";
    case SubsumptionVerdict::FirstSubsumesSecond: return "FirstSubsumesSecond";
    case SubsumptionVerdict::SecondSubsumesFirst: return "SecondSubsumesFirst";
    case SubsumptionVerdict::Incomparable: return "Incomparable";
  }
  return "?";
}

/// A rooted single-inheritance tree of type names.
///
/// Built only through `load`, which rejects anything that is not a tree:
/// duplicate declarations, a second parent, cycles, forward references and
/// zero or several roots. Immutable afterwards, so every query is a pure
/// read and instances may be shared across threads.
class Ontology {
 public:
  static Ontology load(std::string_view source);
  static Ontology load_file(const std::string& path);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& root() const { return names_[root_]; }
  bool contains(std::string_view name) const {
    return index_.find(std::string(name)) != index_.end();
  }

  // Types in declaration order; parents always precede children.
  const std::vector<std::string>& types() const noexcept { return names_; }

  std::optional<std::string> parent(std::string_view type) const {
    const auto p = parent_[id(type)];
    if (p == kNoParent) return std::nullopt;
    return names_[p];
  }

  // Root has depth 0.
  std::size_t depth(std::string_view type) const { return depth_[id(type)]; }

  // True iff `general` lies on the path from `specific` up to the root,
  // `specific` included.
  bool subsumes(std::string_view general, std::string_view specific) const {
    return subsumes_ids(id(general), id(specific));
  }

  bool comparable(std::string_view a, std::string_view b) const {
    const auto ia = id(a);
    const auto ib = id(b);
    return subsumes_ids(ia, ib) || subsumes_ids(ib, ia);
  }

  SubsumptionVerdict compare(std::string_view t1, std::string_view t2) const {
    const auto a = id(t1);
    const auto b = id(t2);
    if (a == b) return SubsumptionVerdict::Equal;
    if (subsumes_ids(a, b)) return SubsumptionVerdict::FirstSubsumesSecond;
    if (subsumes_ids(b, a)) return SubsumptionVerdict::SecondSubsumesFirst;
    return SubsumptionVerdict::Incomparable;
  }

  // Deepest common ancestor; unique in a tree.
  const std::string& least_upper_bound(std::string_view t1,
                                       std::string_view t2) const {
    auto a = id(t1);
    auto b = id(t2);
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) {
      a = parent_[a];
      b = parent_[b];
    }
    return names_[a];
  }

  // The more specific of two comparable types, nullopt when incomparable.
  std::optional<std::string> more_specific(std::string_view t1,
                                           std::string_view t2) const {
    const auto a = id(t1);
    const auto b = id(t2);
    if (subsumes_ids(a, b)) return names_[b];
    if (subsumes_ids(b, a)) return names_[a];
    return std::nullopt;
  }

  // Path from `type` to the root, `type` first.
  std::vector<std::string> ancestors(std::string_view type) const {
    std::vector<std::string> out;
    for (auto i = id(type); i != kNoParent; i = parent_[i]) {
      out.push_back(names_[i]);
    }
    return out;
  }

 private:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  std::size_t id(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownName("type", std::string(name));
    return it->second;
  }

  bool subsumes_ids(std::size_t general, std::size_t specific) const {
    if (depth_[specific] < depth_[general]) return false;
    while (depth_[specific] > depth_[general]) specific = parent_[specific];
    return specific == general;
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t root_ = kNoParent;
};

inline Ontology Ontology::load(std::string_view source) {
  Ontology ont;
  std::size_t root_line = 0;
  std::size_t line_no = 0;
  for (const auto& raw : text::split_lines(source)) {
    ++line_no;
    const auto line = text::strip_comment(raw);
    if (line.empty()) continue;
    const auto words = text::split_words(line);
    const bool root_decl = words.size() == 2;
    if (words[0] != "type" || !(root_decl || (words.size() == 4 && words[2] == "isa"))) {
      throw LoadError(line_no, "expected 'type <name>' or 'type <name> isa <parent>'");
    }
    const auto& name = words[1];
    if (!text::is_type_name(name)) {
      throw LoadError(line_no, "invalid type name '" + name + "'");
    }
    if (!root_decl && !text::is_type_name(words[3])) {
      throw LoadError(line_no, "invalid type name '" + words[3] + "'");
    }

    const auto existing = ont.index_.find(name);
    if (existing != ont.index_.end()) {
      if (root_decl) throw LoadError(line_no, "duplicate type '" + name + "'");
      const auto parent = ont.index_.find(words[3]);
      if (parent != ont.index_.end() &&
          ont.subsumes_ids(existing->second, parent->second)) {
        throw LoadError(line_no, "cycle: '" + words[3] + "' already descends from '" + name + "'");
      }
      if (ont.parent_[existing->second] != kNoParent) {
        throw LoadError(line_no, "type '" + name + "' already has parent '" +
                                     ont.names_[ont.parent_[existing->second]] + "'");
      }
      throw LoadError(line_no, "duplicate type '" + name + "'");
    }

    std::size_t parent = kNoParent;
    std::size_t depth = 0;
    if (root_decl) {
      if (ont.root_ != kNoParent) {
        throw LoadError(line_no, "second root '" + name + "' (root '" +
                                     ont.names_[ont.root_] + "' declared on line " +
                                     std::to_string(root_line) + ")");
      }
      root_line = line_no;
    } else {
      if (words[3] == name) throw LoadError(line_no, "cycle: '" + name + "' isa itself");
      const auto it = ont.index_.find(words[3]);
      if (it == ont.index_.end()) {
        throw LoadError(line_no, "unknown parent '" + words[3] + "'");
      }
      parent = it->second;
      depth = ont.depth_[parent] + 1;
    }

    const auto self = ont.names_.size();
    ont.names_.push_back(name);
    ont.parent_.push_back(parent);
    ont.depth_.push_back(depth);
    ont.index_.emplace(name, self);
    if (root_decl) ont.root_ = self;
  }
  if (ont.root_ == kNoParent) throw LoadError(line_no, "missing root type");
  return ont;
}

inline Ontology Ontology::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(0, "cannot open ontology file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

}  // namespace ontologik
