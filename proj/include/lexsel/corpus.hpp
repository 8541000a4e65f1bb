#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexsel/decision_tree.hpp"
#include "lexsel/lexicon.hpp"
#include "lexsel/selector.hpp"

namespace lexsel {

/// One clause of a JSON Lines corpus:
///   {"id", "source_lexeme", "bindings": {"E0"?, "E1"?, "E2"?}, "context": [...], "gold"?}
/// Blank lines and lines starting with '#' are skipped.
struct CorpusRecord {
  std::string id;
  ArgumentStructure args;
  std::optional<std::string> gold;
  std::size_t line = 0;
};

/// Parses one record; `line` is used in error messages only.
CorpusRecord parse_record(std::string_view json_text, std::size_t line = 1);

/// Throws MalformedCorpus with the offending line number.
std::vector<CorpusRecord> load_corpus(std::string_view text);
std::vector<CorpusRecord> load_corpus_file(const std::string& path);

/// Throws MissingGold / EmptyCorpus.
void require_gold(const std::vector<CorpusRecord>& records);

struct EvalItem {
  std::string id;
  std::string predicted;  // empty on a vocabulary gap
  std::string gold;
  bool match = false;
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t correct = 0;
  Ratio accuracy;
  std::vector<EvalItem> items;
};

/// Translates every record in corpus order and compares lexemes with gold.
EvalReport evaluate(const std::vector<CorpusRecord>& records, const Lexicon& lexicon,
                    const TaxonomyStore& store, const DecisionTree& tree,
                    const SelectorConfig& config);

struct FreqRow {
  std::string lexeme;
  std::size_t count = 0;
};

/// Gold lexeme counts, count descending then lexeme ascending.
std::vector<FreqRow> frequency_table(const std::vector<CorpusRecord>& records);

}  // namespace lexsel
