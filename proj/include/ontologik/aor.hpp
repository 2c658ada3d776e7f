#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/ontology.hpp"

namespace ontologik {

// Adjective ordering accepted; running types start with the noun.
struct AorAccepted {
  std::vector<std::string> running_types;
  std::vector<std::string> coercion_notes;

  friend bool operator==(const AorAccepted&, const AorAccepted&) = default;
};

// Cast-down refused at `at_index` (position in the outermost-first list).
struct AorViolation {
  std::size_t at_index;
  std::string expected;
  std::string running;

  friend bool operator==(const AorViolation&, const AorViolation&) = default;
};

struct AorTypeFailure {
  std::size_t at_index;

  friend bool operator==(const AorTypeFailure&, const AorTypeFailure&) = default;
};

using AorVerdict = std::variant<AorAccepted, AorViolation, AorTypeFailure>;

inline bool accepted(const AorVerdict& v) { return std::holds_alternative<AorAccepted>(v); }

namespace detail {

inline const std::string& unary_expectation(const Lexicon& lex, const std::string& adjective) {
  const auto* sig = lex.find_predicate(adjective);
  if (sig == nullptr) throw UnknownName("adjective", adjective);
  if (sig->arity() != 1) {
    throw ArityError("'" + adjective + "' is not a unary predicate");
  }
  return sig->arg_types.front();
}

}  // namespace detail

/// Checks an adjective sequence (outermost first) against a noun type.
///
/// Adjectives apply innermost first. The running type starts at the noun
/// and moves up to each adjective's expectation: generalizing is allowed,
/// specializing is a violation, and an incomparable expectation needs a
/// salient relation to bridge it.
inline AorVerdict check_order(const Ontology& ont, const Lexicon& lex,
                              const std::vector<std::string>& adjectives,
                              const std::string& noun) {
  if (!ont.contains(noun)) throw UnknownName("type", noun);
  AorAccepted acc{{noun}, {}};
  std::string running = noun;
  for (std::size_t k = adjectives.size(); k-- > 0;) {
    const auto& expected = detail::unary_expectation(lex, adjectives[k]);
    switch (ont.compare(expected, running)) {
      case SubsumptionVerdict::Equal:
      case SubsumptionVerdict::FirstSubsumesSecond:
        break;
      case SubsumptionVerdict::SecondSubsumesFirst:
        return AorViolation{k, expected, running};
      case SubsumptionVerdict::Incomparable: {
        const auto candidates = lex.coercion_candidates(ont, expected, running);
        if (candidates.empty()) return AorTypeFailure{k};
        acc.coercion_notes.push_back(adjectives[k] + ": " + running + " coerced to " +
                                     expected + " via " + candidates.front().name);
        break;
      }
    }
    running = expected;
    acc.running_types.push_back(running);
  }
  return acc;
}

using RankedOrder = std::pair<std::vector<std::string>, AorVerdict>;

/// Every permutation of `adjectives` with its verdict: accepted orders
/// first, each group in lexicographic order.
inline std::vector<RankedOrder> preferred_orders(const Ontology& ont, const Lexicon& lex,
                                                 const std::set<std::string>& adjectives,
                                                 const std::string& noun) {
  constexpr std::size_t kMaxAdjectives = 8;
  if (adjectives.size() > kMaxAdjectives) {
    throw ShapeError("at most " + std::to_string(kMaxAdjectives) +
                     " adjectives can be enumerated, got " +
                     std::to_string(adjectives.size()));
  }
  std::vector<std::string> order(adjectives.begin(), adjectives.end());
  std::vector<RankedOrder> out;
  do {
    out.emplace_back(order, check_order(ont, lex, order, noun));
  } while (std::next_permutation(order.begin(), order.end()));
  std::stable_partition(out.begin(), out.end(),
                        [](const RankedOrder& r) { return accepted(r.second); });
  return out;
}

}  // namespace ontologik
