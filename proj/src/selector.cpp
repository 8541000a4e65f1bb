#include "lexsel/selector.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "lexsel/error.hpp"

namespace lexsel {

namespace {

struct Route {
  ConceptId via;
  Ratio sim;
};

// Keeps the closest route per candidate; equal similarities go to the
// lexicographically smaller concept.
void offer(std::map<std::string, Route>& routes, const std::string& sense_id, const ConceptId& via,
           const Ratio& sim) {
  auto it = routes.find(sense_id);
  if (it == routes.end()) {
    routes.emplace(sense_id, Route{via, sim});
    return;
  }
  Route& r = it->second;
  if (sim > r.sim || (sim == r.sim && via < r.via)) r = Route{via, sim};
}

}  // namespace

bool ranks_before(const SelectionResult& a, const SelectionResult& b) {
  if (auto c = compare(a.score, b.score); c != 0) return c > 0;
  if (a.neighborhood_sim != b.neighborhood_sim) return a.neighborhood_sim > b.neighborhood_sim;
  return a.sense_id < b.sense_id;
}

Selection select_target(const Lexicon& lexicon, const TaxonomyStore& store,
                        const ArgumentStructure& args, const SelectorConfig& config,
                        const std::string& sentence_id) {
  const VerbSense& source = disambiguate(lexicon, args, store);
  Selection sel;
  sel.source_sense = source.sense_id;
  sel.inter_rep = build_inter_rep(source, args, sentence_id);

  std::vector<ConceptId> obligatory;
  for (const auto& slot : sel.inter_rep.slots) {
    if (slot.status == SlotStatus::Obligatory) obligatory.push_back(*slot.concept_id());
  }

  std::map<std::string, Route> routes;
  for (const auto& c : obligatory) {
    for (const VerbSense* s : lexicon.realizations(c, store)) offer(routes, s->sense_id, c, Ratio(1));
  }
  sel.exact = !routes.empty();

  if (routes.empty()) {
    for (const auto& c : obligatory) {
      auto near = store.neighborhood(c, std::numeric_limits<std::size_t>::max(), config.floor);
      std::size_t taken = 0;
      for (const auto& [concept_id, sim] : near) {
        if (taken == config.max_candidates) break;
        if (!lexicon.has_realizations(concept_id)) continue;
        ++taken;
        for (const VerbSense* s : lexicon.realizations(concept_id, store)) {
          offer(routes, s->sense_id, concept_id, sim);
        }
      }
    }
  }
  if (routes.empty()) {
    std::string msg = "no target realization within similarity " + config.floor.str() + " of";
    for (const auto& c : obligatory) msg += " " + c.str();
    throw Error(ErrorKind::VocabularyGap, msg);
  }

  for (const auto& [sense_id, route] : routes) {
    const VerbSense& cand = *lexicon.find(sense_id);
    SelectionResult r;
    r.sense_id = sense_id;
    r.lexeme = cand.lexeme;
    r.via_concept = route.via;
    r.neighborhood_sim = route.sim;
    r.score = inexact_match(sel.inter_rep, cand, args, config.weights, store,
                            lexicon.nominal_domain(), &r.explanation);
    sel.ranked.push_back(std::move(r));
  }
  std::sort(sel.ranked.begin(), sel.ranked.end(), ranks_before);
  return sel;
}

ConceptId decide_action(const DecisionTree& tree, const TaxonomyStore& store,
                        const std::string& object_concept, const ArgumentStructure& args) {
  tree.check_markers(args);
  return tree.decide(store, object_concept, args);
}

Translation translate(const Lexicon& lexicon, const TaxonomyStore& store,
                      const DecisionTree& tree, const ArgumentStructure& args,
                      const SelectorConfig& config, const std::string& sentence_id) {
  tree.check_markers(args);
  Selection sel = select_target(lexicon, store, args, config, sentence_id);

  Translation t;
  t.source_sense = sel.source_sense;
  t.inter_rep = sel.inter_rep;
  if (const std::string* object = args.binding(Role::E1)) {
    t.decided_action = decide_action(tree, store, *object, args);
  }

  for (auto& r : sel.ranked) {
    RankedCandidate rc;
    const VerbSense& cand = *lexicon.find(r.sense_id);
    if (const ProjectionSlot* slot = cand.slot(tree.action_domain()); slot && slot->concept_name) {
      rc.action = slot->concept_name;
    }
    rc.action_match = t.decided_action && rc.action && *rc.action == t.decided_action->name;
    rc.result = std::move(r);
    t.ranked.push_back(std::move(rc));
  }

  // Runs of equal concept score are contiguous after select_target's sort.
  auto first = t.ranked.begin();
  while (first != t.ranked.end()) {
    auto last = std::find_if(first, t.ranked.end(), [&](const RankedCandidate& c) {
      return c.result.score.concept_score != first->result.score.concept_score;
    });
    std::stable_partition(first, last, [](const RankedCandidate& c) { return c.action_match; });
    first = last;
  }

  const RankedCandidate& top = t.ranked.front();
  const VerbSense& chosen = *lexicon.find(top.result.sense_id);
  t.sense_id = chosen.sense_id;
  t.lexeme = chosen.lexeme;
  t.gloss = chosen.gloss;
  t.score = top.result.score;
  return t;
}

}  // namespace lexsel
