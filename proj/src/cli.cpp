#include "lexsel/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexsel/corpus.hpp"
#include "lexsel/decision_tree.hpp"
#include "lexsel/error.hpp"
#include "lexsel/lexicon.hpp"
#include "lexsel/matcher.hpp"
#include "lexsel/selector.hpp"
#include "lexsel/taxonomy.hpp"

#ifndef LEXSEL_DATA_DIR
#define LEXSEL_DATA_DIR "data"
#endif

namespace lexsel {

using ojson = nlohmann::ordered_json;

std::string default_data_dir() {
  if (const char* env = std::getenv("LEXSEL_DATA"); env != nullptr && *env != '\0') return env;
  return LEXSEL_DATA_DIR;
}

namespace {

enum class Format { Text, Json, Tsv };

struct Options {
  std::vector<std::string> taxonomy_paths;
  std::string lexicon_path;
  std::string tree_path;
  std::string weights_path;
  std::string corpus_path;
  Format format = Format::Text;
  double floor = 0.5;
  std::size_t max_candidates = 10;
  bool explain = false;

  // sim / neighbors
  std::vector<std::string> concepts;
  // select / translate
  std::string lexeme;
  std::vector<std::string> binds;
  std::vector<std::string> context;
  std::string record;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fraction(const Ratio& r) { return r.decimal() + " (" + r.str() + ")"; }

ojson ratio_json(const Ratio& r) {
  ojson j;
  j["value"] = r.to_double();
  j["fraction"] = r.str();
  return j;
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {}

  const TaxonomyStore& store() {
    if (!store_) {
      std::vector<std::string> paths = opt_.taxonomy_paths;
      if (paths.empty()) {
        std::string dir = default_data_dir();
        paths = {dir + "/change_of_state.json", dir + "/verb_domains.json", dir + "/nominal.json"};
      }
      TaxonomyStore merged;
      for (const auto& p : paths) merged.merge(TaxonomyStore::load_file(p));
      store_ = std::move(merged);
    }
    return *store_;
  }

  const Lexicon& lexicon() {
    if (!lexicon_) {
      std::string path = opt_.lexicon_path.empty() ? default_data_dir() + "/lexicon.json"
                                                   : opt_.lexicon_path;
      lexicon_ = Lexicon::load_file(path, store());
    }
    return *lexicon_;
  }

  const DecisionTree& tree() {
    if (!tree_) {
      std::string path = opt_.tree_path.empty() ? default_data_dir() + "/action_tree.json"
                                                : opt_.tree_path;
      tree_ = DecisionTree::load_file(path, store(), lexicon().nominal_domain());
    }
    return *tree_;
  }

  SelectorConfig config() const {
    if (opt_.floor < 0.0 || opt_.floor > 1.0) throw Usage("--floor must lie in [0, 1]");
    if (opt_.max_candidates < 1) throw Usage("--max-candidates must be at least 1");
    SelectorConfig cfg;
    cfg.floor = Ratio::from_double(opt_.floor);
    cfg.max_candidates = opt_.max_candidates;
    if (!opt_.weights_path.empty()) cfg.weights = DomainWeights::load_file(opt_.weights_path);
    return cfg;
  }

 private:
  const Options& opt_;
  std::optional<TaxonomyStore> store_;
  std::optional<Lexicon> lexicon_;
  std::optional<DecisionTree> tree_;
};

ArgumentStructure clause_from(const Options& opt) {
  if (!opt.record.empty()) {
    if (!opt.lexeme.empty() || !opt.binds.empty() || !opt.context.empty()) {
      throw Usage("--record cannot be combined with --lexeme/--bind/--context");
    }
    return parse_record(opt.record).args;
  }
  if (opt.lexeme.empty()) throw Usage("give either --record or --lexeme");
  ArgumentStructure args;
  args.source_lexeme = opt.lexeme;
  for (const auto& b : opt.binds) {
    auto eq = b.find('=');
    auto role = eq == std::string::npos ? std::nullopt : parse_role(b.substr(0, eq));
    if (!role || eq + 1 >= b.size()) throw Usage("--bind expects ROLE=CONCEPT with ROLE in E0/E1/E2");
    args.bindings[*role] = b.substr(eq + 1);
  }
  args.context.insert(opt.context.begin(), opt.context.end());
  return args;
}

std::string slot_text(const ProjectionSlot& s) {
  std::string out = s.domain + ":(" + s.concept_name.value_or("@");
  for (const auto& a : s.args) out += " " + a;
  return out + ")";
}

ojson explanation_json(const MatchExplanation& e) {
  ojson j;
  j["domains"] = ojson::array();
  for (const auto& d : e.domains) {
    ojson t;
    t["domain"] = d.domain;
    t["weight"] = ratio_json(d.weight);
    t["inter_rep"] = d.left ? ojson(*d.left) : ojson(nullptr);
    t["candidate"] = d.right ? ojson(*d.right) : ojson(nullptr);
    t["similarity"] = ratio_json(d.similarity);
    j["domains"].push_back(std::move(t));
  }
  j["constraints"] = ojson::array();
  for (const auto& c : e.constraints) {
    ojson t;
    t["role"] = std::string(to_string(c.constraint.role));
    t["concept"] = c.constraint.concept_name;
    t["filler"] = c.filler ? ojson(*c.filler) : ojson(nullptr);
    t["is_a"] = c.satisfied;
    t["degree"] = ratio_json(c.degree);
    j["constraints"].push_back(std::move(t));
  }
  return j;
}

void explain_text(std::ostream& out, const MatchExplanation& e) {
  for (const auto& d : e.domains) {
    out << "    domain " << d.domain << " weight " << d.weight.str() << ": "
        << d.left.value_or("-") << " vs " << d.right.value_or("-") << " -> "
        << fraction(d.similarity) << "\n";
  }
  for (const auto& c : e.constraints) {
    out << "    constraint (is-a " << c.constraint.concept_name << " "
        << to_string(c.constraint.role) << ") filler " << c.filler.value_or("-") << " -> "
        << fraction(c.degree) << (c.satisfied ? " is-a" : "") << "\n";
  }
}

int cmd_sim(Session& s, const Options& opt, std::ostream& out) {
  if (opt.concepts.size() != 2) throw Usage("sim expects exactly two concepts");
  const auto& store = s.store();
  ConceptId a = store.resolve(opt.concepts[0]);
  ConceptId b = store.resolve(opt.concepts[1]);
  PathMetrics m = store.least_common_superconcept(a, b);
  Ratio sim = m.similarity();
  std::string formula = "2*" + std::to_string(m.n3) + "/(" + std::to_string(m.n1) + "+" +
                        std::to_string(m.n2) + "+2*" + std::to_string(m.n3) + ") = " +
                        std::to_string(2 * m.n3) + "/" + std::to_string(m.n1 + m.n2 + 2 * m.n3);
  switch (opt.format) {
    case Format::Json: {
      ojson j;
      j["concept_1"] = a.str();
      j["concept_2"] = b.str();
      j["lcs"] = m.lcs.str();
      j["n1"] = m.n1;
      j["n2"] = m.n2;
      j["n3"] = m.n3;
      j["similarity"] = ratio_json(sim);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      out << "concept_1\tconcept_2\tlcs\tn1\tn2\tn3\tsimilarity\tfraction\n"
          << a.str() << "\t" << b.str() << "\t" << m.lcs.str() << "\t" << m.n1 << "\t" << m.n2
          << "\t" << m.n3 << "\t" << sim.decimal() << "\t" << sim.str() << "\n";
      break;
    case Format::Text:
      out << "concept-1\t" << a.str() << "\n"
          << "concept-2\t" << b.str() << "\n"
          << "lcs\t" << m.lcs.str() << "\n"
          << "n1\t" << m.n1 << "\n"
          << "n2\t" << m.n2 << "\n"
          << "n3\t" << m.n3 << "\n"
          << "formula\t" << formula << "\n"
          << "similarity\t" << fraction(sim) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_neighbors(Session& s, const Options& opt, std::ostream& out) {
  if (opt.concepts.size() != 1) throw Usage("neighbors expects exactly one concept");
  const auto& store = s.store();
  ConceptId c = store.resolve(opt.concepts[0]);
  auto cfg = s.config();
  auto near = store.neighborhood(c, cfg.max_candidates, cfg.floor);
  if (opt.format == Format::Json) {
    ojson j = ojson::array();
    for (const auto& [id, sim] : near) j.push_back({{"concept", id.str()}, {"similarity", ratio_json(sim)}});
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "rank\tconcept\tsimilarity\tfraction\n";
  int rank = 0;
  for (const auto& [id, sim] : near) {
    out << ++rank << "\t" << id.str() << "\t" << sim.decimal() << "\t" << sim.str() << "\n";
  }
  return kExitOk;
}

int cmd_select(Session& s, const Options& opt, std::ostream& out) {
  ArgumentStructure args = clause_from(opt);
  s.tree().check_markers(args);
  Selection sel = select_target(s.lexicon(), s.store(), args, s.config());

  if (opt.format == Format::Json) {
    ojson j;
    j["source_sense"] = sel.source_sense;
    j["inter_rep"] = ojson::array();
    for (const auto& slot : sel.inter_rep.slots) j["inter_rep"].push_back(slot_text(slot));
    j["exact"] = sel.exact;
    j["candidates"] = ojson::array();
    for (const auto& r : sel.ranked) {
      ojson c;
      c["sense_id"] = r.sense_id;
      c["lexeme"] = r.lexeme;
      c["concept_score"] = ratio_json(r.score.concept_score);
      c["constraint_score"] = ratio_json(r.score.constraint_score);
      c["via_concept"] = r.via_concept.str();
      c["neighborhood_sim"] = ratio_json(r.neighborhood_sim);
      if (opt.explain) c["explanation"] = explanation_json(r.explanation);
      j["candidates"].push_back(std::move(c));
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  if (opt.format == Format::Text) {
    out << "source sense\t" << sel.source_sense << "\n";
    for (const auto& slot : sel.inter_rep.slots) out << "inter-rep\t" << slot_text(slot) << "\n";
    out << "candidates\t" << (sel.exact ? "exact realization" : "neighborhood") << "\n";
  }
  out << "rank\tsense\tlexeme\tconcept_score\tconstraint_score\tvia_concept\tneighborhood_sim\n";
  int rank = 0;
  for (const auto& r : sel.ranked) {
    out << ++rank << "\t" << r.sense_id << "\t" << r.lexeme << "\t"
        << fraction(r.score.concept_score) << "\t" << fraction(r.score.constraint_score) << "\t"
        << r.via_concept.str() << "\t" << fraction(r.neighborhood_sim) << "\n";
    if (opt.explain && opt.format == Format::Text) explain_text(out, r.explanation);
  }
  return kExitOk;
}

int cmd_translate(Session& s, const Options& opt, std::ostream& out) {
  ArgumentStructure args = clause_from(opt);
  Translation t = translate(s.lexicon(), s.store(), s.tree(), args, s.config());
  std::string action = t.decided_action ? t.decided_action->str() : std::string("-");

  if (opt.format == Format::Json) {
    ojson j;
    j["lexeme"] = t.lexeme;
    j["sense_id"] = t.sense_id;
    j["gloss"] = t.gloss;
    j["concept_score"] = ratio_json(t.score.concept_score);
    j["constraint_score"] = ratio_json(t.score.constraint_score);
    j["source_sense"] = t.source_sense;
    j["inter_rep"] = ojson::array();
    for (const auto& slot : t.inter_rep.slots) j["inter_rep"].push_back(slot_text(slot));
    j["action"] = t.decided_action ? ojson(t.decided_action->str()) : ojson(nullptr);
    j["candidates"] = ojson::array();
    for (const auto& rc : t.ranked) {
      ojson c;
      c["sense_id"] = rc.result.sense_id;
      c["lexeme"] = rc.result.lexeme;
      c["concept_score"] = ratio_json(rc.result.score.concept_score);
      c["constraint_score"] = ratio_json(rc.result.score.constraint_score);
      c["via_concept"] = rc.result.via_concept.str();
      c["neighborhood_sim"] = ratio_json(rc.result.neighborhood_sim);
      c["action"] = rc.action ? ojson(*rc.action) : ojson(nullptr);
      c["action_match"] = rc.action_match;
      if (opt.explain) c["explanation"] = explanation_json(rc.result.explanation);
      j["candidates"].push_back(std::move(c));
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  if (opt.format == Format::Text) {
    out << "translation\t" << t.lexeme << "\n"
        << "sense\t" << t.sense_id << "\n"
        << "gloss\t" << t.gloss << "\n"
        << "concept_score\t" << fraction(t.score.concept_score) << "\n"
        << "constraint_score\t" << fraction(t.score.constraint_score) << "\n"
        << "source sense\t" << t.source_sense << "\n";
    for (const auto& slot : t.inter_rep.slots) out << "inter-rep\t" << slot_text(slot) << "\n";
    out << "action\t" << action << "\n";
  }
  out << "rank\tsense\tlexeme\tconcept_score\tconstraint_score\taction\taction_match\tvia_concept\n";
  int rank = 0;
  for (const auto& rc : t.ranked) {
    out << ++rank << "\t" << rc.result.sense_id << "\t" << rc.result.lexeme << "\t"
        << fraction(rc.result.score.concept_score) << "\t"
        << fraction(rc.result.score.constraint_score) << "\t" << rc.action.value_or("-") << "\t"
        << (rc.action_match ? "yes" : "no") << "\t" << rc.result.via_concept.str() << "\n";
    if (opt.explain && opt.format == Format::Text) explain_text(out, rc.result.explanation);
  }
  return kExitOk;
}

int cmd_eval(Session& s, const Options& opt, std::ostream& out) {
  if (opt.corpus_path.empty()) throw Usage("eval needs --corpus PATH");
  auto records = load_corpus_file(opt.corpus_path);
  require_gold(records);
  const auto& tree = s.tree();
  for (const auto& r : records) tree.check_markers(r.args);
  EvalReport report = evaluate(records, s.lexicon(), s.store(), tree, s.config());

  switch (opt.format) {
    case Format::Json: {
      ojson j;
      j["total"] = report.total;
      j["correct"] = report.correct;
      j["accuracy"] = ratio_json(report.accuracy);
      j["items"] = ojson::array();
      for (const auto& it : report.items) {
        j["items"].push_back(
            {{"id", it.id}, {"predicted", it.predicted}, {"gold", it.gold}, {"match", it.match}});
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      out << "id\tpredicted\tgold\tmatch\n";
      for (const auto& it : report.items) {
        out << it.id << "\t" << it.predicted << "\t" << it.gold << "\t" << (it.match ? 1 : 0) << "\n";
      }
      out << "#total\t" << report.total << "\n#correct\t" << report.correct << "\n#accuracy\t"
          << report.accuracy.decimal() << "\n";
      break;
    case Format::Text:
      out << "id\tpredicted\tgold\tmatch\n";
      for (const auto& it : report.items) {
        out << it.id << "\t" << (it.predicted.empty() ? "<gap>" : it.predicted) << "\t" << it.gold
            << "\t" << (it.match ? "yes" : "no") << "\n";
      }
      out << "accuracy\t" << report.correct << "/" << report.total << "\t"
          << report.accuracy.decimal() << "\n";
      break;
  }
  return kExitOk;
}

int cmd_freq(const Options& opt, std::ostream& out) {
  if (opt.corpus_path.empty()) throw Usage("freq needs --corpus PATH");
  auto rows = frequency_table(load_corpus_file(opt.corpus_path));
  if (opt.format == Format::Json) {
    ojson j;
    std::size_t total = 0;
    j["rows"] = ojson::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      total += rows[i].count;
      j["rows"].push_back({{"rank", i + 1}, {"lexeme", rows[i].lexeme}, {"count", rows[i].count}});
    }
    j["total"] = total;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "rank\tlexeme\tcount\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << i + 1 << "\t" << rows[i].lexeme << "\t" << rows[i].count << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Taxonomy-backed lexical selection for verb translation", "lexsel"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--taxonomy", opt.taxonomy_paths, "Taxonomy document (repeatable)");
  app.add_option("--lexicon", opt.lexicon_path, "Lexicon document");
  app.add_option("--tree", opt.tree_path, "Action decision-tree document");
  app.add_option("--weights", opt.weights_path, "Domain weights document");
  app.add_option("--corpus", opt.corpus_path, "JSON Lines corpus");
  std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"tsv", Format::Tsv}};
  app.add_option("--format", opt.format, "Output format: text, json or tsv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--floor", opt.floor, "Neighbourhood similarity floor in [0,1]");
  app.add_option("--max-candidates", opt.max_candidates, "Neighbourhood size limit");
  app.add_flag("--explain", opt.explain, "Per-domain and per-constraint breakdown");

  auto* sim = app.add_subcommand("sim", "Concept similarity and path metrics");
  sim->add_option("concepts", opt.concepts, "Two concepts, bare or domain:name")->required();
  auto* neighbors = app.add_subcommand("neighbors", "Similarity-ranked neighbourhood of a concept");
  neighbors->add_option("concept", opt.concepts, "Concept, bare or domain:name")->required();

  auto add_clause = [&](CLI::App* sub) {
    sub->add_option("--lexeme", opt.lexeme, "Source lexeme");
    sub->add_option("--bind", opt.binds, "Role binding ROLE=CONCEPT (repeatable)");
    sub->add_option("--context", opt.context, "Context marker (repeatable)");
    sub->add_option("--record", opt.record, "A corpus record as one JSON object");
  };
  auto* select = app.add_subcommand("select", "Rank target candidates for a clause");
  add_clause(select);
  auto* translate_cmd = app.add_subcommand("translate", "Choose the target verb for a clause");
  add_clause(translate_cmd);
  auto* eval = app.add_subcommand("eval", "Evaluate against a gold-labelled corpus");
  auto* freq = app.add_subcommand("freq", "Rank-frequency table of gold translations");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Session session(opt);
    if (sim->parsed()) return cmd_sim(session, opt, out);
    if (neighbors->parsed()) return cmd_neighbors(session, opt, out);
    if (select->parsed()) return cmd_select(session, opt, out);
    if (translate_cmd->parsed()) return cmd_translate(session, opt, out);
    if (eval->parsed()) return cmd_eval(session, opt, out);
    if (freq->parsed()) return cmd_freq(opt, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::VocabularyGap ? kExitVocabularyGap : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lexsel
