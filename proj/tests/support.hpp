#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lexsel/decision_tree.hpp"
#include "lexsel/lexicon.hpp"
#include "lexsel/taxonomy.hpp"

namespace testsupport {

struct Bundle {
  lexsel::TaxonomyStore store;
  lexsel::Lexicon lexicon;
  lexsel::DecisionTree tree;
};

inline lexsel::TaxonomyStore load_store(const std::string& dir) {
  auto store = lexsel::TaxonomyStore::load_file(dir + "/change_of_state.json");
  store.merge(lexsel::TaxonomyStore::load_file(dir + "/verb_domains.json"));
  store.merge(lexsel::TaxonomyStore::load_file(dir + "/nominal.json"));
  return store;
}

inline Bundle load_bundle(const std::string& dir) {
  auto store = load_store(dir);
  auto lexicon = lexsel::Lexicon::load_file(dir + "/lexicon.json", store);
  auto tree = lexsel::DecisionTree::load_file(dir + "/action_tree.json", store, lexicon.nominal_domain());
  return {std::move(store), std::move(lexicon), std::move(tree)};
}

// edges: (child, parent) names; every name that appears is declared.
inline std::string taxonomy_doc(const std::string& domain,
                                const std::vector<std::string>& names,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
  nlohmann::json concepts = nlohmann::json::array();
  for (const auto& n : names) {
    nlohmann::json parents = nlohmann::json::array();
    for (const auto& [child, parent] : edges) {
      if (child == n) parents.push_back(parent);
    }
    concepts.push_back({{"id", n}, {"label", n}, {"parents", parents}});
  }
  nlohmann::json doc = {{"domains", {{{"name", domain}, {"concepts", concepts}}}}};
  return doc.dump();
}

// A random rooted DAG. Node 0 is the root; node i > 0 draws 1..3 parents
// among nodes < i. Names are shuffled so that name order is unrelated to
// topological order.
struct RandomDag {
  std::vector<std::string> names;
  std::vector<std::vector<int>> parents;
};

inline RandomDag random_dag(std::mt19937_64& rng, int max_nodes) {
  int n = std::uniform_int_distribution<int>(1, max_nodes)(rng);
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  RandomDag d;
  d.parents.resize(n);
  for (int i = 0; i < n; ++i) d.names.push_back("n" + std::to_string(label[i]));
  for (int i = 1; i < n; ++i) {
    int k = std::uniform_int_distribution<int>(1, std::min(3, i))(rng);
    std::vector<int> pool(i);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    d.parents[i].assign(pool.begin(), pool.begin() + k);
  }
  return d;
}

inline std::string dag_doc(const RandomDag& d, const std::string& domain = "g") {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < d.parents.size(); ++i) {
    for (int p : d.parents[i]) edges.emplace_back(d.names[i], d.names[p]);
  }
  return taxonomy_doc(domain, d.names, edges);
}

struct OracleMetrics {
  int n1, n2, n3;
  std::string lcs;
};

// All-pairs upward shortest distances by Floyd-Warshall and node depth as
// the longest upward path, then a scan over every common ancestor.
class Oracle {
 public:
  explicit Oracle(const RandomDag& d) : d_(d) {
    const int n = static_cast<int>(d.names.size());
    dist_.assign(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) {
      dist_[i][i] = 0;
      for (int p : d.parents[i]) dist_[i][p] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (dist_[i][k] < kInf && dist_[k][j] < kInf)
            dist_[i][j] = std::min(dist_[i][j], dist_[i][k] + dist_[k][j]);
    // Parents always have smaller indices, so one pass in index order settles depth.
    depth_.assign(n, 1);
    for (int i = 1; i < n; ++i) {
      int best = 0;
      for (int p : d.parents[i]) best = std::max(best, depth_[p]);
      depth_[i] = best + 1;
    }
  }

  OracleMetrics lcs(int a, int b) const {
    int best = -1;
    for (int k = 0; k < static_cast<int>(d_.names.size()); ++k) {
      if (dist_[a][k] == kInf || dist_[b][k] == kInf) continue;
      if (best < 0) {
        best = k;
        continue;
      }
      auto key = [&](int x) {
        return std::tuple(-depth_[x], dist_[a][x] + dist_[b][x], d_.names[x]);
      };
      if (key(k) < key(best)) best = k;
    }
    return {dist_[a][best], dist_[b][best], depth_[best], d_.names[best]};
  }

  // Reduced fraction 2*n3 / (n1+n2+2*n3).
  static std::pair<std::int64_t, std::int64_t> fraction(const OracleMetrics& m) {
    std::int64_t num = 2 * m.n3;
    std::int64_t den = m.n1 + m.n2 + 2 * m.n3;
    std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;
  const RandomDag& d_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> depth_;
};

}  // namespace testsupport
