#include "lexsel/matcher.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "lexsel/error.hpp"
#include "util.hpp"

namespace lexsel {

using nlohmann::json;

namespace {

Ratio parse_weight(const json& value, const std::string& key) {
  if (!value.is_number()) {
    throw Error(ErrorKind::InvalidWeights, "weight for '" + key + "' must be a number");
  }
  Ratio w = value.is_number_integer() ? Ratio(value.get<std::int64_t>())
                                      : Ratio::from_double(value.get<double>());
  if (w < Ratio(0)) {
    throw Error(ErrorKind::InvalidWeights, "weight for '" + key + "' must be non-negative");
  }
  return w;
}

const ProjectionSlot* find_slot(std::span<const ProjectionSlot> slots, const std::string& domain) {
  for (const auto& s : slots) {
    if (s.domain == domain && s.concept_name) return &s;
  }
  return nullptr;
}

}  // namespace

DomainWeights DomainWeights::load(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidWeights, std::string("weights document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidWeights, "weights document must be an object");
  DomainWeights w;
  for (const auto& [key, value] : doc.items()) {
    Ratio r = parse_weight(value, key);
    if (key == "*") {
      w.set_default(r);
    } else {
      w.set(key, r);
    }
  }
  return w;
}

DomainWeights DomainWeights::load_file(const std::string& path) {
  return load(detail::read_file(path));
}

void DomainWeights::set(std::string domain, Ratio weight) {
  weights_.insert_or_assign(std::move(domain), weight);
}

void DomainWeights::set_default(Ratio weight) { default_ = weight; }

Ratio DomainWeights::weight(std::string_view domain) const {
  auto it = weights_.find(domain);
  return it == weights_.end() ? default_ : it->second;
}

Ratio word_sim(std::span<const ProjectionSlot> a, std::span<const ProjectionSlot> b,
               const DomainWeights& weights, const TaxonomyStore& store,
               std::vector<DomainTerm>* terms) {
  std::vector<std::string> domains;
  for (auto side : {a, b}) {
    for (const auto& s : side) {
      if (s.concept_name) domains.push_back(s.domain);
    }
  }
  std::sort(domains.begin(), domains.end());
  domains.erase(std::unique(domains.begin(), domains.end()), domains.end());
  if (terms) terms->clear();
  if (domains.empty()) return Ratio(1);

  Ratio total_weight(0);
  for (const auto& d : domains) total_weight += weights.weight(d);
  if (total_weight == Ratio(0)) {
    throw Error(ErrorKind::InvalidWeights, "all domain weights in the comparison are zero");
  }

  Ratio sum(0);
  for (const auto& d : domains) {
    const ProjectionSlot* left = find_slot(a, d);
    const ProjectionSlot* right = find_slot(b, d);
    Ratio w = weights.weight(d) / total_weight;
    Ratio sim(0);
    if (left && right) sim = store.con_sim(*left->concept_id(), *right->concept_id());
    sum += w * sim;
    if (terms) {
      terms->push_back({d, w, left ? left->concept_name : std::nullopt,
                        right ? right->concept_name : std::nullopt, sim});
    }
  }
  return sum;
}

Ratio constraint_satisfaction(const VerbSense& sense, const ArgumentStructure& args,
                              const TaxonomyStore& store, std::string_view nominal_domain,
                              std::vector<ConstraintTerm>* terms) {
  if (terms) terms->clear();
  if (sense.constraints.empty()) return Ratio(1);
  const std::string domain(nominal_domain);
  Ratio sum(0);
  for (const auto& c : sense.constraints) {
    ConceptId required{domain, c.concept_name};
    store.require(required);
    ConstraintTerm term{c, std::nullopt, Ratio(0), false};
    if (const std::string* filler = args.binding(c.role)) {
      ConceptId entity{domain, *filler};
      store.require(entity);
      term.filler = *filler;
      if (store.is_a(entity, required)) {
        term.satisfied = true;
        term.degree = Ratio(1);
      } else {
        term.degree = store.con_sim(entity, required);
      }
    }
    sum += term.degree;
    if (terms) terms->push_back(std::move(term));
  }
  return sum / Ratio(static_cast<std::int64_t>(sense.constraints.size()));
}

std::strong_ordering compare(const MatchScore& x, const MatchScore& y) {
  if (auto c = x.concept_score <=> y.concept_score; c != 0) return c;
  return x.constraint_score <=> y.constraint_score;
}

MatchScore inexact_match(const InterRep& inter_rep, const VerbSense& candidate,
                         const ArgumentStructure& args, const DomainWeights& weights,
                         const TaxonomyStore& store, std::string_view nominal_domain,
                         MatchExplanation* explanation) {
  if (candidate.language != Language::Target) {
    throw Error(ErrorKind::InvalidSense,
                "inexact match needs a target sense, got '" + candidate.sense_id + "'");
  }
  auto cand_slots = candidate.scored_slots();
  MatchScore score;
  score.concept_score = word_sim(inter_rep.slots, cand_slots, weights, store,
                                 explanation ? &explanation->domains : nullptr);
  score.constraint_score = constraint_satisfaction(candidate, args, store, nominal_domain,
                                                   explanation ? &explanation->constraints : nullptr);
  return score;
}

}  // namespace lexsel
