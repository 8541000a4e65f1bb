#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexsel/lexicon.hpp"
#include "lexsel/taxonomy.hpp"

namespace lexsel {

/// Data-driven action chooser for result-state verbs. Inner nodes test the
/// clause; leaves name a concept in the action domain.
///
/// Document shape:
///   {"action_domain": "action",
///    "markers": ["into-pieces", ...],
///    "root": node}
///   node := {"test": test, "then": node, "else": node} | {"action": concept}
///   test := {"kind": "is-a", "concept": c, "role"?: "E1"}
///         | {"kind": "has-marker", "marker": m}
///         | {"kind": "role-bound", "role": "E0"}
///
/// "is-a" without a role tests the object concept passed to decide(); with a
/// role it tests that role's filler and is false when the role is unbound.
class DecisionTree {
 public:
  struct IsA {
    std::optional<Role> role;
    std::string concept_name;
  };
  struct HasMarker {
    std::string marker;
  };
  struct RoleBound {
    Role role;
  };
  using Test = std::variant<IsA, HasMarker, RoleBound>;

  struct Node {
    std::optional<Test> test;  // empty on leaves
    std::unique_ptr<Node> then_branch;
    std::unique_ptr<Node> else_branch;
    std::string action;  // leaves only
  };

  static DecisionTree load(std::string_view document, const TaxonomyStore& store,
                           std::string_view nominal_domain);
  static DecisionTree load_file(const std::string& path, const TaxonomyStore& store,
                                std::string_view nominal_domain);

  const std::string& action_domain() const noexcept { return action_domain_; }
  const std::set<std::string>& markers() const noexcept { return markers_; }
  const Node& root() const noexcept { return *root_; }

  /// Walks the tree for a clause whose object is `object_concept`.
  ConceptId decide(const TaxonomyStore& store, const std::string& object_concept,
                   const ArgumentStructure& args) const;

  /// Throws UnknownMarker for markers outside the declared set.
  void check_markers(const ArgumentStructure& args) const;

 private:
  std::string action_domain_;
  std::string nominal_domain_;
  std::set<std::string> markers_;
  std::shared_ptr<const Node> root_;
};

}  // namespace lexsel
