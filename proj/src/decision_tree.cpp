#include "lexsel/decision_tree.hpp"

#include <json.hpp>

#include "lexsel/error.hpp"
#include "util.hpp"

namespace lexsel {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::MalformedTree, "decision tree at " + path + ": " + what);
}

struct Builder {
  const TaxonomyStore& store;
  std::string nominal;
  std::string action_domain;
  const std::set<std::string>& markers;

  Role role_of(const json& t, const std::string& path) const {
    if (!t.contains("role") || !t["role"].is_string()) malformed(path, "test needs a string \"role\"");
    auto role = parse_role(t["role"].get<std::string>());
    if (!role) malformed(path, "unknown role '" + t["role"].get<std::string>() + "'");
    return *role;
  }

  DecisionTree::Test test(const json& t, const std::string& path) const {
    if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string()) {
      malformed(path, "test needs a string \"kind\"");
    }
    std::string kind = t["kind"].get<std::string>();
    if (kind == "is-a") {
      DecisionTree::IsA is_a;
      if (!t.contains("concept") || !t["concept"].is_string()) {
        malformed(path, "is-a test needs a string \"concept\"");
      }
      is_a.concept_name = t["concept"].get<std::string>();
      if (!store.domain(nominal).contains(is_a.concept_name)) {
        malformed(path, "is-a concept '" + is_a.concept_name + "' is not in nominal domain '" +
                            nominal + "'");
      }
      if (t.contains("role")) is_a.role = role_of(t, path);
      return is_a;
    }
    if (kind == "has-marker") {
      if (!t.contains("marker") || !t["marker"].is_string()) {
        malformed(path, "has-marker test needs a string \"marker\"");
      }
      std::string marker = t["marker"].get<std::string>();
      if (markers.count(marker) == 0) malformed(path, "marker '" + marker + "' is not declared");
      return DecisionTree::HasMarker{marker};
    }
    if (kind == "role-bound") return DecisionTree::RoleBound{role_of(t, path)};
    malformed(path, "unknown test kind '" + kind + "'");
  }

  std::unique_ptr<DecisionTree::Node> node(const json& j, const std::string& path) const {
    if (!j.is_object()) malformed(path, "node must be an object");
    auto n = std::make_unique<DecisionTree::Node>();
    if (j.contains("action")) {
      if (j.contains("test") || j.contains("then") || j.contains("else")) {
        malformed(path, "a leaf may not also carry a test or branches");
      }
      if (!j["action"].is_string()) malformed(path, "\"action\" must be a string");
      n->action = j["action"].get<std::string>();
      if (!store.domain(action_domain).contains(n->action)) {
        malformed(path, "leaf action '" + n->action + "' is not in domain '" + action_domain + "'");
      }
      return n;
    }
    if (!j.contains("test")) malformed(path, "node is neither a leaf nor a test");
    if (!j.contains("then") || !j.contains("else")) {
      malformed(path, "test node needs both \"then\" and \"else\" branches");
    }
    n->test = test(j["test"], path);
    n->then_branch = node(j["then"], path + ".then");
    n->else_branch = node(j["else"], path + ".else");
    return n;
  }
};

}  // namespace

DecisionTree DecisionTree::load(std::string_view document, const TaxonomyStore& store,
                                std::string_view nominal_domain) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedTree, std::string("decision tree is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedTree, "decision tree must be an object");

  DecisionTree tree;
  tree.nominal_domain_ = std::string(nominal_domain);
  tree.action_domain_ = doc.contains("action_domain") && doc["action_domain"].is_string()
                            ? doc["action_domain"].get<std::string>()
                            : std::string("action");
  if (!store.has_domain(tree.action_domain_)) {
    throw Error(ErrorKind::MalformedTree, "unknown action domain '" + tree.action_domain_ + "'");
  }
  store.domain(tree.nominal_domain_);
  if (doc.contains("markers")) {
    if (!doc["markers"].is_array()) throw Error(ErrorKind::MalformedTree, "\"markers\" must be an array");
    for (const auto& m : doc["markers"]) {
      if (!m.is_string() || !detail::is_token(m.get<std::string>())) {
        throw Error(ErrorKind::MalformedTree, "markers must be whitespace-free strings");
      }
      tree.markers_.insert(m.get<std::string>());
    }
  }
  if (!doc.contains("root")) throw Error(ErrorKind::MalformedTree, "decision tree needs a \"root\"");
  Builder b{store, tree.nominal_domain_, tree.action_domain_, tree.markers_};
  tree.root_ = b.node(doc["root"], "root");
  return tree;
}

DecisionTree DecisionTree::load_file(const std::string& path, const TaxonomyStore& store,
                                     std::string_view nominal_domain) {
  return load(detail::read_file(path), store, nominal_domain);
}

void DecisionTree::check_markers(const ArgumentStructure& args) const {
  for (const auto& m : args.context) {
    if (markers_.count(m) == 0) {
      throw Error(ErrorKind::UnknownMarker, "unknown context marker '" + m + "'");
    }
  }
}

ConceptId DecisionTree::decide(const TaxonomyStore& store, const std::string& object_concept,
                               const ArgumentStructure& args) const {
  store.require({nominal_domain_, object_concept});
  const Node* n = root_.get();
  while (n->test) {
    bool pass = std::visit(
        [&](const auto& t) -> bool {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, IsA>) {
            const std::string* filler = t.role ? args.binding(*t.role) : &object_concept;
            if (filler == nullptr) return false;
            return store.is_a({nominal_domain_, *filler}, {nominal_domain_, t.concept_name});
          } else if constexpr (std::is_same_v<T, HasMarker>) {
            return args.context.count(t.marker) != 0;
          } else {
            return args.binding(t.role) != nullptr;
          }
        },
        *n->test);
    n = pass ? n->then_branch.get() : n->else_branch.get();
  }
  return {action_domain_, n->action};
}

}  // namespace lexsel
