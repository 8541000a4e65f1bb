#include <doctest.h>

#include <random>

#include "lexsel/error.hpp"
#include "lexsel/taxonomy.hpp"
#include "support.hpp"

using lexsel::ConceptId;
using lexsel::ErrorKind;
using lexsel::Ratio;
using lexsel::TaxonomyStore;
using testsupport::taxonomy_doc;

namespace {

ErrorKind load_error(const std::string& doc) {
  try {
    TaxonomyStore::load(doc);
  } catch (const lexsel::Error& e) {
    return e.kind();
  }
  FAIL("document loaded without error");
  return ErrorKind::Malformed;
}

std::string load_message(const std::string& doc) {
  try {
    TaxonomyStore::load(doc);
  } catch (const lexsel::Error& e) {
    return e.what();
  }
  return "";
}

// root -> A -> {B, C}
TaxonomyStore fork_tree() {
  return TaxonomyStore::load(
      taxonomy_doc("d", {"root", "A", "B", "C"}, {{"A", "root"}, {"B", "A"}, {"C", "A"}}));
}

ConceptId d(const std::string& name) { return {"d", name}; }

}  // namespace

TEST_CASE("minimal document loads") {
  auto store = TaxonomyStore::load(
      taxonomy_doc("change-of-state", {"root", "A", "B"}, {{"A", "root"}, {"B", "root"}}));
  CHECK(store.domains().size() == 1);
  CHECK(store.domain("change-of-state").size() == 3);
  CHECK(store.domain("change-of-state").root().id.name == "root");
}

TEST_CASE("loader rejects broken hierarchies") {
  SUBCASE("dangling parent names the concept") {
    std::string doc = taxonomy_doc("d", {"root", "A"}, {{"A", "ghost"}});
    CHECK(load_error(doc) == ErrorKind::DanglingParent);
    CHECK(load_message(doc).find("A") != std::string::npos);
    CHECK(load_message(doc).find("ghost") != std::string::npos);
  }
  SUBCASE("duplicate concept") {
    CHECK(load_error(taxonomy_doc("d", {"root", "A", "A"}, {{"A", "root"}})) ==
          ErrorKind::DuplicateConcept);
  }
  SUBCASE("cycle") {
    std::string doc =
        taxonomy_doc("d", {"root", "A", "B"}, {{"A", "B"}, {"B", "A"}, {"A", "root"}});
    CHECK(load_error(doc) == ErrorKind::Cycle);
  }
  SUBCASE("two roots") {
    CHECK(load_error(taxonomy_doc("d", {"r1", "r2"}, {})) == ErrorKind::RootCount);
  }
  SUBCASE("no root") {
    CHECK(load_error(taxonomy_doc("d", {"A", "B"}, {{"A", "B"}, {"B", "A"}})) ==
          ErrorKind::RootCount);
  }
  SUBCASE("empty domain") {
    CHECK(load_error(R"({"domains":[{"name":"d","concepts":[]}]})") == ErrorKind::RootCount);
  }
  SUBCASE("malformed json") {
    CHECK(load_error("{\"domains\": [") == ErrorKind::Malformed);
    CHECK(load_error("[]") == ErrorKind::Malformed);
  }
  SUBCASE("whitespace in a name") {
    CHECK(load_error(taxonomy_doc("d", {"root", "a b"}, {{"a b", "root"}})) == ErrorKind::Malformed);
  }
}

TEST_CASE("ancestors are ordered by distance then name") {
  auto chain = TaxonomyStore::load(taxonomy_doc("d", {"root", "A", "B"}, {{"A", "root"}, {"B", "A"}}));
  CHECK(chain.ancestors(d("root")) == std::vector<ConceptId>{d("root")});
  CHECK(chain.ancestors(d("B")) == std::vector<ConceptId>{d("B"), d("A"), d("root")});

  auto diamond = TaxonomyStore::load(taxonomy_doc(
      "d", {"root", "B", "A", "C"}, {{"A", "root"}, {"B", "root"}, {"C", "A"}, {"C", "B"}}));
  CHECK(diamond.ancestors(d("C")) == std::vector<ConceptId>{d("C"), d("A"), d("B"), d("root")});
  CHECK_THROWS_AS(diamond.ancestors(d("nope")), lexsel::Error);
}

TEST_CASE("least common superconcept on small trees") {
  auto store = fork_tree();
  auto same = store.least_common_superconcept(d("C"), d("C"));
  CHECK(same.lcs == d("C"));
  CHECK(same.n1 == 0);
  CHECK(same.n2 == 0);

  auto bc = store.least_common_superconcept(d("B"), d("C"));
  CHECK(bc.lcs == d("A"));
  CHECK(bc.n1 == 1);
  CHECK(bc.n2 == 1);
  CHECK(bc.n3 == 2);

  auto chain = TaxonomyStore::load(taxonomy_doc("d", {"root", "A", "B"}, {{"A", "root"}, {"B", "A"}}));
  auto rb = chain.least_common_superconcept(d("root"), d("B"));
  CHECK(rb.lcs == d("root"));
  CHECK(rb.n1 == 0);
  CHECK(rb.n2 == 2);
  CHECK(rb.n3 == 1);
}

TEST_CASE("con_sim hand values") {
  auto store = fork_tree();
  CHECK(store.con_sim(d("C"), d("C")) == Ratio(1));
  CHECK(store.con_sim(d("B"), d("C")) == Ratio(2, 3));
  auto chain = TaxonomyStore::load(taxonomy_doc("d", {"root", "A", "B"}, {{"A", "root"}, {"B", "A"}}));
  CHECK(chain.con_sim(d("root"), d("B")) == Ratio(1, 2));
}

TEST_CASE("lcs tie-breaks on diamonds") {
  // root -> {X, Y} -> {P, Q}: both X and Y are common ancestors at depth 2.
  auto store = TaxonomyStore::load(taxonomy_doc(
      "d", {"root", "Y", "X", "P", "Q"},
      {{"X", "root"}, {"Y", "root"}, {"P", "X"}, {"P", "Y"}, {"Q", "X"}, {"Q", "Y"}}));
  CHECK(store.least_common_superconcept(d("P"), d("Q")).lcs == d("X"));

  // The deeper ancestor wins even when farther away.
  auto deep = TaxonomyStore::load(taxonomy_doc(
      "d", {"root", "A", "B", "C", "S", "T"},
      {{"A", "root"}, {"B", "A"}, {"C", "B"}, {"S", "C"}, {"S", "root"}, {"T", "C"}, {"T", "root"}}));
  auto m = deep.least_common_superconcept(d("S"), d("T"));
  CHECK(m.lcs == d("C"));
  CHECK(m.n3 == 4);
}

TEST_CASE("cross-domain comparison is an error") {
  auto store = fork_tree();
  store.merge(TaxonomyStore::load(taxonomy_doc("e", {"r"}, {})));
  try {
    store.con_sim(d("A"), {"e", "r"});
    FAIL("expected an error");
  } catch (const lexsel::Error& e) {
    CHECK(e.kind() == ErrorKind::CrossDomain);
  }
  CHECK_THROWS_AS(store.merge(TaxonomyStore::load(taxonomy_doc("e", {"r"}, {}))), lexsel::Error);
}

TEST_CASE("neighborhood ordering, floor and size") {
  auto single = TaxonomyStore::load(taxonomy_doc("d", {"root"}, {}));
  CHECK(single.neighborhood(d("root"), 10, Ratio(0)).empty());

  auto store = fork_tree();
  // con_sim(B, A) = 2*2/(1+0+2*2) = 4/5; con_sim(B, C) = 2/3; con_sim(B, root) = 1/2.
  auto above = store.neighborhood(d("B"), 10, Ratio(7, 10));
  REQUIRE(above.size() == 1);
  CHECK(above[0].first == d("A"));
  CHECK(store.neighborhood(d("B"), 10, Ratio(81, 100)).empty());
  auto all = store.neighborhood(d("B"), 10, Ratio(0));
  REQUIRE(all.size() == 3);
  CHECK(all[0].first == d("A"));
  CHECK(all[0].second == Ratio(4, 5));
  CHECK(all[1].first == d("C"));
  CHECK(all[1].second == Ratio(2, 3));
  CHECK(all[2].first == d("root"));
  CHECK(all[2].second == Ratio(1, 2));
  CHECK(store.neighborhood(d("B"), 1, Ratio(0)).size() == 1);
}

TEST_CASE("bundled change-of-state domain") {
  auto store = testsupport::load_store(LEXSEL_TEST_DATA);
  const auto& dom = store.domain("ch-of-state");
  CHECK(dom.size() == 8);
  ConceptId coi{"ch-of-state", "%change-of-integrity"};
  ConceptId duan{"ch-of-state", "%separate-in-duan-state"};
  ConceptId pieces{"ch-of-state", "%separate-in-pieces-state"};
  CHECK(store.con_sim(coi, duan) == Ratio(4, 5));
  CHECK(store.con_sim(pieces, duan) == Ratio(2, 3));

  auto near = store.neighborhood(coi, 10, Ratio(0));
  REQUIRE(near.size() == 7);
  for (int i = 0; i < 6; ++i) {
    CHECK(near[i].first.name.rfind("%separate-in-", 0) == 0);
    CHECK(near[i].second == Ratio(4, 5));
  }
  CHECK(near[6].first.name == "%change-of-state");
  CHECK(store.resolve("%separate-in-duan-state") == duan);
  CHECK(store.resolve("ch-of-state:%change-of-integrity") == coi);
}

TEST_CASE("property: identity, symmetry, range and oracle agreement on random DAGs") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 150; ++trial) {
    auto dag = testsupport::random_dag(rng, 24);
    auto store = TaxonomyStore::load(testsupport::dag_doc(dag));
    testsupport::Oracle oracle(dag);
    const int n = static_cast<int>(dag.names.size());
    for (int a = 0; a < n; ++a) {
      ConceptId ca{"g", dag.names[a]};
      CHECK(store.con_sim(ca, ca) == Ratio(1));
      for (int b = 0; b < n; ++b) {
        ConceptId cb{"g", dag.names[b]};
        auto m = store.least_common_superconcept(ca, cb);
        auto o = oracle.lcs(a, b);
        REQUIRE(m.lcs.name == o.lcs);
        REQUIRE(m.n1 == o.n1);
        REQUIRE(m.n2 == o.n2);
        REQUIRE(m.n3 == o.n3);
        Ratio s = store.con_sim(ca, cb);
        auto [num, den] = testsupport::Oracle::fraction(o);
        REQUIRE(s == Ratio(num, den));
        REQUIRE(s == store.con_sim(cb, ca));
        REQUIRE(s > Ratio(0));
        REQUIRE(s <= Ratio(1));
        REQUIRE((s == Ratio(1)) == (a == b));
      }
    }
  }
}

TEST_CASE("property: con_sim grows with lcs depth at fixed path lengths") {
  // A chain of length k above a fork with two leaves one edge below the fork.
  Ratio previous(0);
  for (int k = 0; k < 8; ++k) {
    std::vector<std::string> names{"r"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= k; ++i) {
      names.push_back("c" + std::to_string(i));
      edges.emplace_back(names.back(), names[names.size() - 2]);
    }
    std::string top = names.back();
    names.push_back("x");
    names.push_back("y");
    edges.emplace_back("x", top);
    edges.emplace_back("y", top);
    auto store = TaxonomyStore::load(taxonomy_doc("d", names, edges));
    Ratio s = store.con_sim(d("x"), d("y"));
    CHECK(s > previous);
    CHECK(s == Ratio(2 * (k + 1), 2 + 2 * (k + 1)));
    previous = s;
  }
}

TEST_CASE("repeated loads and queries are identical") {
  auto a = testsupport::load_store(LEXSEL_TEST_DATA);
  auto b = testsupport::load_store(LEXSEL_TEST_DATA);
  for (const auto& [name, dom] : a.domains()) {
    for (const auto& x : dom.nodes()) {
      CHECK(a.ancestors(x.id) == b.ancestors(x.id));
      CHECK(a.neighborhood(x.id, 100, Ratio(0)) == b.neighborhood(x.id, 100, Ratio(0)));
    }
  }
}
