#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexsel/decision_tree.hpp"
#include "lexsel/lexicon.hpp"
#include "lexsel/matcher.hpp"
#include "lexsel/taxonomy.hpp"

namespace lexsel {

struct SelectorConfig {
  Ratio floor{1, 2};
  std::size_t max_candidates = 10;
  DomainWeights weights;
};

struct SelectionResult {
  std::string sense_id;
  std::string lexeme;
  MatchScore score;
  ConceptId via_concept;
  Ratio neighborhood_sim;  // 1 iff via_concept is one of the inter-rep's OBL concepts
  MatchExplanation explanation;
};

struct Selection {
  std::string source_sense;
  InterRep inter_rep;
  bool exact = false;  // candidates came straight from the OBL concepts
  std::vector<SelectionResult> ranked;
};

/// Disambiguates, builds the inter-rep, gathers realizations of its OBL
/// concepts (or of their realized neighbours when there are none), and ranks
/// them by MatchScore, then neighbourhood similarity, then sense id.
/// Throws VocabularyGap when nothing is realized within the floor.
Selection select_target(const Lexicon& lexicon, const TaxonomyStore& store,
                        const ArgumentStructure& args, const SelectorConfig& config,
                        const std::string& sentence_id = "sentence-1");

/// The ordering select_target applies to its results.
bool ranks_before(const SelectionResult& a, const SelectionResult& b);

/// Action concept for the clause's object (its E1 filler).
ConceptId decide_action(const DecisionTree& tree, const TaxonomyStore& store,
                        const std::string& object_concept, const ArgumentStructure& args);

struct RankedCandidate {
  SelectionResult result;
  std::optional<std::string> action;  // candidate's action-domain concept
  bool action_match = false;
};

struct Translation {
  std::string sense_id;
  std::string lexeme;
  std::string gloss;
  MatchScore score;
  std::string source_sense;
  InterRep inter_rep;
  std::optional<ConceptId> decided_action;  // unset when E1 is unbound
  std::vector<RankedCandidate> ranked;
};

/// select_target followed by the action re-rank: inside every run of equal
/// concept scores, candidates whose action component equals the decided
/// action move ahead; the relative order is otherwise kept.
Translation translate(const Lexicon& lexicon, const TaxonomyStore& store,
                      const DecisionTree& tree, const ArgumentStructure& args,
                      const SelectorConfig& config, const std::string& sentence_id = "sentence-1");

}  // namespace lexsel
