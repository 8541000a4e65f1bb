#include "lexsel/corpus.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "lexsel/error.hpp"
#include "util.hpp"

namespace lexsel {

using nlohmann::json;

namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::MalformedCorpus, "corpus line " + std::to_string(line) + ": " + what);
}

}  // namespace

CorpusRecord parse_record(std::string_view json_text, std::size_t line) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad_line(line, std::string("invalid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) bad_line(line, "record must be an object");

  CorpusRecord rec;
  rec.line = line;
  for (const char* key : {"id", "source_lexeme"}) {
    if (!j.contains(key) || !j[key].is_string()) {
      bad_line(line, std::string("missing string field \"") + key + "\"");
    }
  }
  rec.id = j["id"].get<std::string>();
  rec.args.source_lexeme = j["source_lexeme"].get<std::string>();
  if (j.contains("bindings")) {
    if (!j["bindings"].is_object()) bad_line(line, "\"bindings\" must be an object");
    for (const auto& [key, value] : j["bindings"].items()) {
      auto role = parse_role(key);
      if (!role) bad_line(line, "unknown role '" + key + "'");
      if (!value.is_string() || !detail::is_token(value.get<std::string>())) {
        bad_line(line, "binding for " + key + " must be a concept token");
      }
      rec.args.bindings[*role] = value.get<std::string>();
    }
  }
  if (j.contains("context")) {
    if (!j["context"].is_array()) bad_line(line, "\"context\" must be an array");
    for (const auto& m : j["context"]) {
      if (!m.is_string()) bad_line(line, "context markers must be strings");
      rec.args.context.insert(m.get<std::string>());
    }
  }
  if (j.contains("gold") && !j["gold"].is_null()) {
    if (!j["gold"].is_string() || j["gold"].get<std::string>().empty()) {
      bad_line(line, "\"gold\" must be a non-empty string");
    }
    rec.gold = j["gold"].get<std::string>();
  }
  return rec;
}

std::vector<CorpusRecord> load_corpus(std::string_view text) {
  std::vector<CorpusRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.push_back(parse_record(line, line_no));
  }
  return out;
}

std::vector<CorpusRecord> load_corpus_file(const std::string& path) {
  return load_corpus(detail::read_file(path));
}

void require_gold(const std::vector<CorpusRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::EmptyCorpus, "empty corpus");
  for (const auto& r : records) {
    if (!r.gold) {
      throw Error(ErrorKind::MissingGold, "corpus line " + std::to_string(r.line) + ": record '" +
                                              r.id + "' has no gold label");
    }
  }
}

EvalReport evaluate(const std::vector<CorpusRecord>& records, const Lexicon& lexicon,
                    const TaxonomyStore& store, const DecisionTree& tree,
                    const SelectorConfig& config) {
  require_gold(records);
  EvalReport report;
  for (const auto& r : records) {
    EvalItem item;
    item.id = r.id;
    item.gold = *r.gold;
    try {
      item.predicted = translate(lexicon, store, tree, r.args, config, r.id).lexeme;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::VocabularyGap) throw;
    }
    item.match = item.predicted == item.gold;
    report.correct += item.match ? 1 : 0;
    report.items.push_back(std::move(item));
  }
  report.total = report.items.size();
  report.accuracy = Ratio(static_cast<std::int64_t>(report.correct),
                          static_cast<std::int64_t>(report.total));
  return report;
}

std::vector<FreqRow> frequency_table(const std::vector<CorpusRecord>& records) {
  require_gold(records);
  std::map<std::string, std::size_t> counts;
  for (const auto& r : records) ++counts[*r.gold];
  std::vector<FreqRow> rows;
  for (const auto& [lexeme, n] : counts) rows.push_back({lexeme, n});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FreqRow& a, const FreqRow& b) { return a.count > b.count; });
  return rows;
}

}  // namespace lexsel
