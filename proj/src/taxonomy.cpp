#include "lexsel/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lexsel/error.hpp"
#include "util.hpp"

namespace lexsel {

using nlohmann::json;

namespace {

std::string where(const std::string& domain, const std::string& concept_name) {
  return "domain '" + domain + "', concept '" + concept_name + "'";
}

}  // namespace

DomainTaxonomy::DomainTaxonomy(std::string name, std::vector<ConceptNode> nodes)
    : name_(std::move(name)), nodes_(std::move(nodes)) {
  if (!detail::is_token(name_)) {
    throw Error(ErrorKind::Malformed, "invalid domain name '" + name_ + "'");
  }
  if (nodes_.empty()) {
    throw Error(ErrorKind::RootCount, "domain '" + name_ + "' has no concepts");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (!detail::is_token(n.id.name)) {
      throw Error(ErrorKind::Malformed,
                  "invalid concept name '" + n.id.name + "' in domain '" + name_ + "'");
    }
    if (!index_.emplace(n.id.name, i).second) {
      throw Error(ErrorKind::DuplicateConcept, "duplicate concept: " + where(name_, n.id.name));
    }
  }

  parents_.resize(nodes_.size());
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (const auto& p : nodes_[i].parents) {
      auto it = index_.find(p);
      if (it == index_.end()) {
        throw Error(ErrorKind::DanglingParent, "dangling parent '" + p + "' referenced by " +
                                                   where(name_, nodes_[i].id.name));
      }
      if (std::find(parents_[i].begin(), parents_[i].end(), it->second) == parents_[i].end()) {
        parents_[i].push_back(it->second);
      }
    }
    if (parents_[i].empty()) roots.push_back(i);
  }
  if (roots.size() != 1) {
    std::string msg = "domain '" + name_ + "' must have exactly one root, found " +
                      std::to_string(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      msg += (k == 0 ? ": " : ", ") + nodes_[roots[k]].id.name;
    }
    throw Error(ErrorKind::RootCount, msg);
  }
  root_ = roots.front();

  // Colour DFS over parent edges; a grey hit closes a cycle.
  enum : char { White, Grey, Black };
  std::vector<char> colour(nodes_.size(), White);
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    colour[i] = Grey;
    stack.push_back(i);
    for (std::size_t p : parents_[i]) {
      if (colour[p] == Grey) {
        auto from = std::find(stack.begin(), stack.end(), p);
        std::string path;
        for (auto it = from; it != stack.end(); ++it) path += nodes_[*it].id.name + " -> ";
        path += nodes_[p].id.name;
        throw Error(ErrorKind::Cycle, "cycle in domain '" + name_ + "': " + path);
      }
      if (colour[p] == White) visit(p);
    }
    stack.pop_back();
    colour[i] = Black;
  };
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (colour[i] == White) visit(i);
  }

  depth_.assign(nodes_.size(), 0);
  std::function<int(std::size_t)> depth_of = [&](std::size_t i) -> int {
    if (depth_[i] != 0) return depth_[i];
    int best = 0;
    for (std::size_t p : parents_[i]) best = std::max(best, depth_of(p));
    return depth_[i] = best + 1;
  };
  for (std::size_t i = 0; i < nodes_.size(); ++i) depth_of(i);
}

bool DomainTaxonomy::contains(std::string_view concept_name) const {
  return index_.find(std::string(concept_name)) != index_.end();
}

std::size_t DomainTaxonomy::index_of(std::string_view concept_name) const {
  auto it = index_.find(std::string(concept_name));
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownConcept,
                "unknown concept: " + where(name_, std::string(concept_name)));
  }
  return it->second;
}

const ConceptNode& DomainTaxonomy::node(std::string_view concept_name) const {
  return nodes_[index_of(concept_name)];
}

int DomainTaxonomy::depth(std::string_view concept_name) const {
  return depth_[index_of(concept_name)];
}

std::vector<std::pair<std::size_t, int>> DomainTaxonomy::ancestor_distances(
    std::string_view concept_name) const {
  std::vector<int> dist(nodes_.size(), -1);
  std::deque<std::size_t> queue;
  std::size_t start = index_of(concept_name);
  dist[start] = 0;
  queue.push_back(start);
  std::vector<std::pair<std::size_t, int>> out;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    out.emplace_back(i, dist[i]);
    for (std::size_t p : parents_[i]) {
      if (dist[p] < 0) {
        dist[p] = dist[i] + 1;
        queue.push_back(p);
      }
    }
  }
  return out;
}

TaxonomyStore TaxonomyStore::load(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Malformed, std::string("taxonomy document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("domains") || !doc["domains"].is_array()) {
    throw Error(ErrorKind::Malformed, "taxonomy document needs a top-level \"domains\" array");
  }

  TaxonomyStore store;
  for (const auto& d : doc["domains"]) {
    if (!d.is_object() || !d.contains("name") || !d["name"].is_string() ||
        !d.contains("concepts") || !d["concepts"].is_array()) {
      throw Error(ErrorKind::Malformed, "each domain needs a string \"name\" and a \"concepts\" array");
    }
    std::string name = d["name"].get<std::string>();
    std::vector<ConceptNode> nodes;
    for (const auto& c : d["concepts"]) {
      if (!c.is_object() || !c.contains("id") || !c["id"].is_string()) {
        throw Error(ErrorKind::Malformed, "concept without string \"id\" in domain '" + name + "'");
      }
      ConceptNode node;
      node.id = {name, c["id"].get<std::string>()};
      node.label = detail::string_or(c, "label", "");
      if (c.contains("parents")) {
        if (!c["parents"].is_array()) {
          throw Error(ErrorKind::Malformed, "\"parents\" must be an array for " + where(name, node.id.name));
        }
        for (const auto& p : c["parents"]) {
          if (!p.is_string()) {
            throw Error(ErrorKind::Malformed, "non-string parent for " + where(name, node.id.name));
          }
          node.parents.push_back(p.get<std::string>());
        }
      }
      nodes.push_back(std::move(node));
    }
    if (store.domains_.count(name) != 0) {
      throw Error(ErrorKind::Malformed, "domain '" + name + "' defined twice");
    }
    DomainTaxonomy tax(name, std::move(nodes));
    store.domains_.emplace(name, std::move(tax));
  }
  return store;
}

TaxonomyStore TaxonomyStore::load_file(const std::string& path) {
  return load(detail::read_file(path));
}

void TaxonomyStore::merge(TaxonomyStore other) {
  for (auto& [name, tax] : other.domains_) {
    if (domains_.count(name) != 0) {
      throw Error(ErrorKind::Malformed, "domain '" + name + "' defined in more than one taxonomy document");
    }
  }
  for (auto& [name, tax] : other.domains_) domains_.emplace(name, std::move(tax));
}

bool TaxonomyStore::has_domain(std::string_view domain) const {
  return domains_.find(domain) != domains_.end();
}

const DomainTaxonomy& TaxonomyStore::domain(std::string_view domain) const {
  auto it = domains_.find(domain);
  if (it == domains_.end()) {
    throw Error(ErrorKind::UnknownDomain, "unknown domain '" + std::string(domain) + "'");
  }
  return it->second;
}

bool TaxonomyStore::contains(const ConceptId& c) const {
  auto it = domains_.find(c.domain);
  return it != domains_.end() && it->second.contains(c.name);
}

void TaxonomyStore::require(const ConceptId& c) const {
  domain(c.domain).index_of(c.name);
}

ConceptId TaxonomyStore::resolve(std::string_view text) const {
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    ConceptId c{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
    require(c);
    return c;
  }
  std::vector<ConceptId> hits;
  for (const auto& [name, tax] : domains_) {
    if (tax.contains(text)) hits.push_back({name, std::string(text)});
  }
  if (hits.empty()) {
    throw Error(ErrorKind::UnknownConcept, "unknown concept '" + std::string(text) + "'");
  }
  if (hits.size() > 1) {
    std::string msg = "concept '" + std::string(text) + "' is ambiguous; qualify it as one of";
    for (const auto& h : hits) msg += " " + h.str();
    throw Error(ErrorKind::UnknownConcept, msg);
  }
  return hits.front();
}

std::vector<ConceptId> TaxonomyStore::ancestors(const ConceptId& c) const {
  const auto& tax = domain(c.domain);
  auto dist = tax.ancestor_distances(c.name);
  std::sort(dist.begin(), dist.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return tax.nodes()[a.first].id.name < tax.nodes()[b.first].id.name;
  });
  std::vector<ConceptId> out;
  out.reserve(dist.size());
  for (const auto& [i, d] : dist) out.push_back(tax.nodes()[i].id);
  return out;
}

bool TaxonomyStore::is_a(const ConceptId& c, const ConceptId& ancestor) const {
  if (c.domain != ancestor.domain) return false;
  const auto& tax = domain(c.domain);
  std::size_t target = tax.index_of(ancestor.name);
  for (const auto& [i, d] : tax.ancestor_distances(c.name)) {
    if (i == target) return true;
  }
  return false;
}

PathMetrics TaxonomyStore::least_common_superconcept(const ConceptId& c1,
                                                      const ConceptId& c2) const {
  require(c1);
  require(c2);
  if (c1.domain != c2.domain) {
    throw Error(ErrorKind::CrossDomain,
                "cannot compare concepts across domains: " + c1.str() + " vs " + c2.str());
  }
  const auto& tax = domain(c1.domain);
  auto up1 = tax.ancestor_distances(c1.name);
  auto up2 = tax.ancestor_distances(c2.name);
  std::vector<int> d2(tax.size(), -1);
  for (const auto& [i, d] : up2) d2[i] = d;

  bool found = false;
  PathMetrics best;
  std::size_t best_index = 0;
  for (const auto& [i, d1] : up1) {
    if (d2[i] < 0) continue;
    const auto& name = tax.nodes()[i].id.name;
    int n3 = tax.depth(name);
    bool better = !found || n3 > best.n3 ||
                  (n3 == best.n3 && (d1 + d2[i] < best.n1 + best.n2 ||
                                     (d1 + d2[i] == best.n1 + best.n2 &&
                                      name < tax.nodes()[best_index].id.name)));
    if (better) {
      found = true;
      best.n1 = d1;
      best.n2 = d2[i];
      best.n3 = n3;
      best_index = i;
    }
  }
  // A rooted domain always shares at least the root.
  best.lcs = tax.nodes()[best_index].id;
  return best;
}

Ratio TaxonomyStore::con_sim(const ConceptId& c1, const ConceptId& c2) const {
  return least_common_superconcept(c1, c2).similarity();
}

std::vector<std::pair<ConceptId, Ratio>> TaxonomyStore::neighborhood(const ConceptId& c,
                                                                     std::size_t max_size,
                                                                     const Ratio& floor) const {
  require(c);
  const auto& tax = domain(c.domain);
  std::vector<std::pair<ConceptId, Ratio>> out;
  for (const auto& node : tax.nodes()) {
    if (node.id == c) continue;
    Ratio sim = con_sim(c, node.id);
    if (sim >= floor) out.emplace_back(node.id, sim);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first.name < b.first.name;
  });
  if (out.size() > max_size) out.resize(max_size);
  return out;
}

}  // namespace lexsel
