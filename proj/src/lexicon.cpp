#include "lexsel/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "lexsel/error.hpp"
#include "lexsel/matcher.hpp"
#include "util.hpp"

namespace lexsel {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Role r) {
  switch (r) {
    case Role::E0: return "E0";
    case Role::E1: return "E1";
    case Role::E2: return "E2";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view token) {
  if (token == "E0") return Role::E0;
  if (token == "E1") return Role::E1;
  if (token == "E2") return Role::E2;
  return std::nullopt;
}

std::string_view to_string(SlotStatus s) {
  switch (s) {
    case SlotStatus::Obligatory: return "OBL";
    case SlotStatus::Optional: return "OPT";
    case SlotStatus::Implicit: return "IMP";
  }
  return "?";
}

std::optional<SlotStatus> parse_status(std::string_view token) {
  if (token == "OBL") return SlotStatus::Obligatory;
  if (token == "OPT") return SlotStatus::Optional;
  if (token == "IMP") return SlotStatus::Implicit;
  return std::nullopt;
}

std::string_view to_string(Language l) {
  return l == Language::Source ? "source" : "target";
}

const ProjectionSlot* VerbSense::slot(std::string_view domain) const {
  for (const auto& s : projection) {
    if (s.domain == domain) return &s;
  }
  return nullptr;
}

std::vector<ProjectionSlot> VerbSense::scored_slots() const {
  std::vector<ProjectionSlot> out;
  for (const auto& s : projection) {
    if (s.status != SlotStatus::Implicit) out.push_back(s);
  }
  return out;
}

namespace {

bool is_placeholder(std::string_view arg) {
  if (arg == "*" || arg == "@") return true;
  if (arg.size() < 2 || arg.front() != '@') return false;
  return std::all_of(arg.begin() + 1, arg.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0; });
}

[[noreturn]] void bad_sense(const std::string& sense_id, const std::string& what) {
  throw Error(ErrorKind::InvalidSense, "sense '" + sense_id + "': " + what);
}

std::string require_string(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw Error(ErrorKind::Malformed, context + ": missing string field \"" + key + "\"");
  }
  return obj[key].get<std::string>();
}

VerbSense parse_sense(const json& j, const TaxonomyStore& store, const std::string& nominal) {
  if (!j.is_object()) throw Error(ErrorKind::Malformed, "sense entries must be objects");
  VerbSense sense;
  sense.sense_id = require_string(j, "sense_id", "sense");
  const std::string& id = sense.sense_id;
  if (!detail::is_token(id)) bad_sense(id, "sense_id must be a whitespace-free token");
  sense.lexeme = require_string(j, "lexeme", "sense '" + id + "'");
  if (!detail::is_token(sense.lexeme)) bad_sense(id, "lexeme must be a whitespace-free token");
  std::string lang = require_string(j, "language", "sense '" + id + "'");
  if (lang == "source") {
    sense.language = Language::Source;
  } else if (lang == "target") {
    sense.language = Language::Target;
  } else {
    bad_sense(id, "language must be \"source\" or \"target\", got '" + lang + "'");
  }
  sense.gloss = detail::string_or(j, "gloss", "");
  sense.example = detail::string_or(j, "example", "");

  if (j.contains("constraints")) {
    if (!j["constraints"].is_array()) bad_sense(id, "\"constraints\" must be an array");
    for (const auto& c : j["constraints"]) {
      std::string role_text = require_string(c, "role", "sense '" + id + "' constraint");
      auto role = parse_role(role_text);
      if (!role) bad_sense(id, "unknown role '" + role_text + "'");
      std::string concept_name = require_string(c, "concept", "sense '" + id + "' constraint");
      if (!store.domain(nominal).contains(concept_name)) {
        throw Error(ErrorKind::UnknownConcept, "sense '" + id + "': constraint concept '" +
                                                   concept_name + "' is not in nominal domain '" +
                                                   nominal + "'");
      }
      sense.constraints.push_back({*role, concept_name});
    }
  }

  if (!j.contains("projection") || !j["projection"].is_array()) {
    bad_sense(id, "missing \"projection\" array");
  }
  for (const auto& row : j["projection"]) {
    ProjectionSlot slot;
    slot.domain = require_string(row, "domain", "sense '" + id + "' projection");
    if (!store.has_domain(slot.domain)) {
      throw Error(ErrorKind::UnknownDomain,
                  "sense '" + id + "': unknown domain '" + slot.domain + "'");
    }
    std::string status = require_string(row, "status", "sense '" + id + "' projection");
    auto parsed = parse_status(status);
    if (!parsed) bad_sense(id, "status must be OBL, OPT or IMP, got '" + status + "'");
    slot.status = *parsed;
    if (row.contains("concept") && !row["concept"].is_null()) {
      slot.concept_name = require_string(row, "concept", "sense '" + id + "' projection");
      if (!store.domain(slot.domain).contains(*slot.concept_name)) {
        throw Error(ErrorKind::UnknownConcept, "sense '" + id + "': concept '" +
                                                   *slot.concept_name + "' is not in domain '" +
                                                   slot.domain + "'");
      }
    } else if (slot.status != SlotStatus::Implicit) {
      bad_sense(id, std::string(to_string(slot.status)) + " slot in domain '" + slot.domain +
                        "' must name a concept");
    }
    if (row.contains("args")) {
      if (!row["args"].is_array()) bad_sense(id, "\"args\" must be an array");
      for (const auto& a : row["args"]) {
        if (!a.is_string()) bad_sense(id, "slot arguments must be strings");
        std::string arg = a.get<std::string>();
        if (!parse_role(arg) && !is_placeholder(arg)) {
          bad_sense(id, "slot argument '" + arg + "' is neither a role nor a placeholder");
        }
        slot.args.push_back(std::move(arg));
      }
    }
    if (sense.slot(slot.domain) != nullptr) {
      bad_sense(id, "more than one slot for domain '" + slot.domain + "'");
    }
    sense.projection.push_back(std::move(slot));
  }
  bool has_obligatory = std::any_of(sense.projection.begin(), sense.projection.end(),
                                    [](const auto& s) { return s.status == SlotStatus::Obligatory; });
  if (!has_obligatory) bad_sense(id, "needs at least one OBL slot");
  return sense;
}

}  // namespace

Lexicon Lexicon::load(std::string_view document, const TaxonomyStore& store) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Malformed, std::string("lexicon document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Malformed, "lexicon document must be an object");

  Lexicon lex;
  lex.nominal_domain_ = require_string(doc, "nominal_domain", "lexicon");
  store.domain(lex.nominal_domain_);
  if (!doc.contains("senses") || !doc["senses"].is_array()) {
    throw Error(ErrorKind::Malformed, "lexicon needs a \"senses\" array");
  }
  for (const auto& j : doc["senses"]) {
    VerbSense sense = parse_sense(j, store, lex.nominal_domain_);
    if (lex.by_id_.count(sense.sense_id) != 0) {
      throw Error(ErrorKind::DuplicateSense, "duplicate sense_id '" + sense.sense_id + "'");
    }
    lex.by_id_.emplace(sense.sense_id, lex.senses_.size());
    lex.senses_.push_back(std::move(sense));
  }

  for (const auto& sense : lex.senses_) {
    if (sense.language != Language::Target) continue;
    for (const auto& slot : sense.projection) {
      if (slot.status == SlotStatus::Obligatory) {
        lex.index_[*slot.concept_id()].push_back(sense.sense_id);
      }
    }
  }
  for (auto& [c, ids] : lex.index_) std::sort(ids.begin(), ids.end());
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path, const TaxonomyStore& store) {
  return load(detail::read_file(path), store);
}

std::string Lexicon::to_json() const {
  ordered_json doc;
  doc["nominal_domain"] = nominal_domain_;
  doc["senses"] = ordered_json::array();
  for (const auto& s : senses_) {
    ordered_json j;
    j["sense_id"] = s.sense_id;
    j["lexeme"] = s.lexeme;
    j["language"] = std::string(to_string(s.language));
    j["gloss"] = s.gloss;
    j["example"] = s.example;
    j["constraints"] = ordered_json::array();
    for (const auto& c : s.constraints) {
      j["constraints"].push_back({{"role", std::string(to_string(c.role))}, {"concept", c.concept_name}});
    }
    j["projection"] = ordered_json::array();
    for (const auto& slot : s.projection) {
      ordered_json row;
      row["domain"] = slot.domain;
      row["status"] = std::string(to_string(slot.status));
      if (slot.concept_name) row["concept"] = *slot.concept_name;
      row["args"] = slot.args;
      j["projection"].push_back(std::move(row));
    }
    doc["senses"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

const VerbSense* Lexicon::find(std::string_view sense_id) const {
  auto it = by_id_.find(std::string(sense_id));
  return it == by_id_.end() ? nullptr : &senses_[it->second];
}

bool Lexicon::has_source_lexeme(std::string_view lexeme) const {
  return std::any_of(senses_.begin(), senses_.end(), [&](const VerbSense& s) {
    return s.language == Language::Source && s.lexeme == lexeme;
  });
}

std::vector<const VerbSense*> Lexicon::source_senses(std::string_view lexeme) const {
  std::vector<const VerbSense*> out;
  for (const auto& s : senses_) {
    if (s.language == Language::Source && s.lexeme == lexeme) out.push_back(&s);
  }
  if (out.empty()) {
    throw Error(ErrorKind::UnknownLexeme, "unknown source lexeme '" + std::string(lexeme) + "'");
  }
  return out;
}

std::vector<const VerbSense*> Lexicon::realizations(const ConceptId& c,
                                                    const TaxonomyStore& store) const {
  store.require(c);
  std::vector<const VerbSense*> out;
  auto it = index_.find(c);
  if (it == index_.end()) return out;
  for (const auto& id : it->second) out.push_back(find(id));
  return out;
}

bool Lexicon::has_realizations(const ConceptId& c) const {
  return index_.find(c) != index_.end();
}

const VerbSense& disambiguate(const Lexicon& lexicon, const ArgumentStructure& args,
                              const TaxonomyStore& store) {
  auto senses = lexicon.source_senses(args.source_lexeme);
  const VerbSense* best = nullptr;
  Ratio best_score;
  for (const VerbSense* s : senses) {
    Ratio score = constraint_satisfaction(*s, args, store, lexicon.nominal_domain());
    if (best == nullptr || score > best_score) {
      best = s;
      best_score = score;
    }
  }
  return *best;
}

InterRep build_inter_rep(const VerbSense& sense, const ArgumentStructure& args,
                         std::string sentence_id) {
  if (sense.language != Language::Source) {
    throw Error(ErrorKind::InvalidSense,
                "inter-rep can only be built from a source sense, got '" + sense.sense_id + "'");
  }
  InterRep rep;
  rep.sentence_id = std::move(sentence_id);
  rep.source_sense = sense.sense_id;
  for (const auto& slot : sense.projection) {
    if (slot.status == SlotStatus::Implicit) continue;
    ProjectionSlot filled = slot;
    bool complete = true;
    for (auto& arg : filled.args) {
      auto role = parse_role(arg);
      if (!role) continue;
      if (const std::string* filler = args.binding(*role)) {
        arg = *filler;
      } else {
        complete = false;
        if (slot.status == SlotStatus::Obligatory) {
          throw Error(ErrorKind::UnboundRole, "sense '" + sense.sense_id + "': OBL role " +
                                                  std::string(to_string(*role)) + " in domain '" +
                                                  slot.domain + "' is unbound");
        }
      }
    }
    if (complete) rep.slots.push_back(std::move(filled));
  }
  return rep;
}

}  // namespace lexsel
