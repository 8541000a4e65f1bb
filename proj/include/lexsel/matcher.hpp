#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsel/lexicon.hpp"
#include "lexsel/ratio.hpp"
#include "lexsel/taxonomy.hpp"

namespace lexsel {

/// Per-domain weights. Weights are renormalised over the domains that take
/// part in a comparison, so only their ratios matter.
class DomainWeights {
 public:
  DomainWeights() = default;

  /// {"domain": number, ...}; the key "*" sets the default weight.
  static DomainWeights load(std::string_view document);
  static DomainWeights load_file(const std::string& path);

  void set(std::string domain, Ratio weight);
  void set_default(Ratio weight);
  Ratio weight(std::string_view domain) const;

 private:
  std::map<std::string, Ratio, std::less<>> weights_;
  Ratio default_ = 1;
};

struct DomainTerm {
  std::string domain;
  Ratio weight;  // after renormalisation
  std::optional<std::string> left;
  std::optional<std::string> right;
  Ratio similarity;  // 0 when the domain is one-sided
};

struct ConstraintTerm {
  SelectionConstraint constraint;
  std::optional<std::string> filler;
  Ratio degree;
  bool satisfied = false;  // strict is-a held
};

/// Sum over the union of domains of normalised weight times con_sim of the
/// two slot concepts; a domain present on one side only contributes 0.
/// Slots without a concept are ignored.
Ratio word_sim(std::span<const ProjectionSlot> a, std::span<const ProjectionSlot> b,
               const DomainWeights& weights, const TaxonomyStore& store,
               std::vector<DomainTerm>* terms = nullptr);

/// Mean per-constraint degree: 1 when the filler is-a the constraint concept,
/// otherwise their con_sim in the nominal domain; unbound roles give 0. A
/// sense with no constraints scores 1.
Ratio constraint_satisfaction(const VerbSense& sense, const ArgumentStructure& args,
                              const TaxonomyStore& store, std::string_view nominal_domain,
                              std::vector<ConstraintTerm>* terms = nullptr);

struct MatchScore {
  Ratio concept_score;
  Ratio constraint_score;

  friend bool operator==(const MatchScore&, const MatchScore&) = default;
};

/// Lexicographic: concept similarity first, then constraint satisfaction.
/// `greater` means x is the better match.
std::strong_ordering compare(const MatchScore& x, const MatchScore& y);

struct MatchExplanation {
  std::vector<DomainTerm> domains;
  std::vector<ConstraintTerm> constraints;
};

MatchScore inexact_match(const InterRep& inter_rep, const VerbSense& candidate,
                         const ArgumentStructure& args, const DomainWeights& weights,
                         const TaxonomyStore& store, std::string_view nominal_domain,
                         MatchExplanation* explanation = nullptr);

}  // namespace lexsel
