#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexsel/ratio.hpp"

namespace lexsel {

struct ConceptId {
  std::string domain;
  std::string name;

  /// "domain:name"
  std::string str() const { return domain + ":" + name; }

  friend bool operator==(const ConceptId&, const ConceptId&) = default;
  friend auto operator<=>(const ConceptId&, const ConceptId&) = default;
};

struct ConceptNode {
  ConceptId id;
  std::string label;
  std::vector<std::string> parents;  // names in the same domain
};

/// Path counts for a concept pair around their least common superconcept.
/// n1/n2 are edge counts from each concept up to the lcs; n3 is the node
/// count from the lcs to the root inclusive (the root alone has n3 = 1).
struct PathMetrics {
  int n1 = 0;
  int n2 = 0;
  int n3 = 1;
  ConceptId lcs;

  /// 2*n3 / (n1 + n2 + 2*n3)
  Ratio similarity() const { return Ratio(2 * n3, n1 + n2 + 2 * n3); }
};

/// One rooted DAG of concepts. Node order is document order; depth is the
/// longest root path counted in nodes.
class DomainTaxonomy {
 public:
  DomainTaxonomy(std::string name, std::vector<ConceptNode> nodes);

  const std::string& name() const noexcept { return name_; }
  const ConceptNode& root() const { return nodes_[root_]; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<ConceptNode>& nodes() const noexcept { return nodes_; }

  bool contains(std::string_view concept_name) const;
  const ConceptNode& node(std::string_view concept_name) const;
  int depth(std::string_view concept_name) const;

  /// Shortest upward edge distance from `concept_name` to every ancestor,
  /// itself included at distance 0.
  std::vector<std::pair<std::size_t, int>> ancestor_distances(std::string_view concept_name) const;

  std::size_t index_of(std::string_view concept_name) const;
  const std::vector<std::size_t>& parent_indices(std::size_t i) const { return parents_[i]; }

 private:
  std::string name_;
  std::vector<ConceptNode> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<int> depth_;
  std::size_t root_ = 0;
};

/// Immutable set of domain hierarchies. All queries are const and safe for
/// concurrent readers.
class TaxonomyStore {
 public:
  TaxonomyStore() = default;

  /// Parses {"domains":[{"name","concepts":[{"id","label","parents"}]}]}.
  static TaxonomyStore load(std::string_view document);
  static TaxonomyStore load_file(const std::string& path);

  /// Adds the domains of `other`; a domain name may be defined only once.
  void merge(TaxonomyStore other);

  bool has_domain(std::string_view domain) const;
  const DomainTaxonomy& domain(std::string_view domain) const;
  const std::map<std::string, DomainTaxonomy, std::less<>>& domains() const noexcept {
    return domains_;
  }

  bool contains(const ConceptId& c) const;
  /// Throws UnknownDomain / UnknownConcept.
  void require(const ConceptId& c) const;

  /// Resolves "domain:name" or a bare name that is unique across domains.
  ConceptId resolve(std::string_view text) const;

  /// c and all its ancestors by increasing edge distance, ties by name.
  std::vector<ConceptId> ancestors(const ConceptId& c) const;

  /// True when `ancestor` is c itself or reachable from c through parents.
  bool is_a(const ConceptId& c, const ConceptId& ancestor) const;

  PathMetrics least_common_superconcept(const ConceptId& c1, const ConceptId& c2) const;

  Ratio con_sim(const ConceptId& c1, const ConceptId& c2) const;

  /// Same-domain concepts other than c with con_sim >= floor, best first,
  /// ties by name, at most max_size entries.
  std::vector<std::pair<ConceptId, Ratio>> neighborhood(const ConceptId& c, std::size_t max_size,
                                                        const Ratio& floor) const;

 private:
  std::map<std::string, DomainTaxonomy, std::less<>> domains_;
};

}  // namespace lexsel
