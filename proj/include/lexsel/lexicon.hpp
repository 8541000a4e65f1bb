#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexsel/taxonomy.hpp"

namespace lexsel {

/// Argument roles: E0 agent-like, E1 patient-like, E2 instrument.
enum class Role { E0, E1, E2 };

std::string_view to_string(Role r);
std::optional<Role> parse_role(std::string_view token);

enum class SlotStatus { Obligatory, Optional, Implicit };

std::string_view to_string(SlotStatus s);  // "OBL" / "OPT" / "IMP"
std::optional<SlotStatus> parse_status(std::string_view token);

enum class Language { Source, Target };

std::string_view to_string(Language l);

struct SelectionConstraint {
  Role role;
  std::string concept_name;  // in the lexicon's nominal domain

  friend bool operator==(const SelectionConstraint&, const SelectionConstraint&) = default;
};

/// One row of a verb projection: a concept in a conceptual domain plus its
/// argument list. Arguments are role tokens (E0..E2), the event marker "*",
/// or implicit placeholders ("@t0", "@l1", bare "@"). In an inter-rep the
/// role tokens have been replaced by entity concept names.
struct ProjectionSlot {
  std::string domain;
  SlotStatus status = SlotStatus::Obligatory;
  std::optional<std::string> concept_name;
  std::vector<std::string> args;

  std::optional<ConceptId> concept_id() const {
    if (!concept_name) return std::nullopt;
    return ConceptId{domain, *concept_name};
  }

  friend bool operator==(const ProjectionSlot&, const ProjectionSlot&) = default;
};

struct VerbSense {
  std::string sense_id;
  std::string lexeme;
  Language language = Language::Source;
  std::string gloss;
  std::string example;
  std::vector<SelectionConstraint> constraints;
  std::vector<ProjectionSlot> projection;

  const ProjectionSlot* slot(std::string_view domain) const;
  /// OBL and OPT slots, the part of a projection that takes part in scoring.
  std::vector<ProjectionSlot> scored_slots() const;

  friend bool operator==(const VerbSense&, const VerbSense&) = default;
};

/// A pre-parsed clause: the source verb, role fillers as nominal concept
/// names, and context markers such as "into-pieces".
struct ArgumentStructure {
  std::string source_lexeme;
  std::map<Role, std::string> bindings;
  std::set<std::string> context;

  const std::string* binding(Role r) const {
    auto it = bindings.find(r);
    return it == bindings.end() ? nullptr : &it->second;
  }
};

struct InterRep {
  std::string sentence_id;
  std::string source_sense;
  std::vector<ProjectionSlot> slots;
};

class Lexicon {
 public:
  /// Parses and validates against `store`. Target senses are indexed under
  /// the concept of each of their OBL slots.
  static Lexicon load(std::string_view document, const TaxonomyStore& store);
  static Lexicon load_file(const std::string& path, const TaxonomyStore& store);

  /// Serialises back to the document format (load(to_json()) is identity).
  std::string to_json() const;

  const std::string& nominal_domain() const noexcept { return nominal_domain_; }
  const std::vector<VerbSense>& senses() const noexcept { return senses_; }

  const VerbSense* find(std::string_view sense_id) const;

  /// Source senses for a lexeme in document order; throws UnknownLexeme.
  std::vector<const VerbSense*> source_senses(std::string_view lexeme) const;
  bool has_source_lexeme(std::string_view lexeme) const;

  /// Target senses indexed under `c`, ordered by sense_id.
  std::vector<const VerbSense*> realizations(const ConceptId& c, const TaxonomyStore& store) const;
  bool has_realizations(const ConceptId& c) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.nominal_domain_ == b.nominal_domain_ && a.senses_ == b.senses_ && a.index_ == b.index_;
  }

 private:
  std::string nominal_domain_;
  std::vector<VerbSense> senses_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::map<ConceptId, std::vector<std::string>> index_;  // sense ids, sorted
};

/// Picks the source sense of args.source_lexeme with the highest graded
/// constraint satisfaction; ties go to the earlier sense in the document.
const VerbSense& disambiguate(const Lexicon& lexicon, const ArgumentStructure& args,
                              const TaxonomyStore& store);

/// OBL slots always, OPT slots when every role they mention is bound, IMP
/// slots never. Role tokens become the bound entity concept names.
InterRep build_inter_rep(const VerbSense& sense, const ArgumentStructure& args,
                         std::string sentence_id = "sentence-1");

}  // namespace lexsel
