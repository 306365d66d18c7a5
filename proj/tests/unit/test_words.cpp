#include "doctest.h"

#include <stdexcept>

#include "cuntz/words.hpp"

using namespace cuntz;

namespace {
MultiIndex w(const char* s) { return MultiIndex::parse(2, s); }
}  // namespace

TEST_CASE("relation examples") {
  CHECK(relation(w("1"), w("12")) == Relation::StrictPrefixOf);
  CHECK(relation(w("12"), w("2")) == Relation::OrthogonalLess);
  CHECK(relation(w("21"), w("21")) == Relation::Equal);
  CHECK(relation(w("12"), w("1")) == Relation::StrictExtensionOf);
  CHECK(relation(w("2"), w("11")) == Relation::OrthogonalGreater);
  CHECK(relation(w(""), w("2")) == Relation::StrictPrefixOf);
}

TEST_CASE("relation rejects mixed alphabets") {
  CHECK_THROWS_AS(relation(MultiIndex::parse(2, "1"), MultiIndex::parse(3, "1")),
                  std::invalid_argument);
}

TEST_CASE("repeat") {
  CHECK(repeat(2, 2, 3) == w("222"));
  CHECK(repeat(2, 1, 0).empty());
  CHECK(repeat(2, 1, 1) == w("1"));
  CHECK_THROWS(repeat(2, 3, 1));
  CHECK_THROWS(repeat(2, 0, 1));
  CHECK_THROWS(repeat(2, 1, -1));
}

TEST_CASE("parsing and printing") {
  CHECK(w("e").empty());
  CHECK(w("").empty());
  CHECK(w("1212").to_string() == "1212");
  CHECK_THROWS(MultiIndex::parse(2, "13"));
  CHECK_THROWS(MultiIndex::parse(2, "1a"));
  const MultiIndex big = MultiIndex::parse(12, "11,3,12");
  CHECK(big.size() == 3);
  CHECK(big[0] == 11);
  CHECK(big[2] == 12);
  CHECK(big.to_string() == "11,3,12");
  CHECK(MultiIndex::parse(12, big.to_string()) == big);
  CHECK_THROWS(MultiIndex::parse(12, "13"));
  CHECK_THROWS(MultiIndex(1));
}

TEST_CASE("antisymmetry of relation over all short words") {
  const auto words = words_up_to(2, 0, 4);
  for (const auto& a : words)
    for (const auto& b : words) {
      const Relation ab = relation(a, b), ba = relation(b, a);
      switch (ab) {
        case Relation::Equal: CHECK(ba == Relation::Equal); CHECK(a == b); break;
        case Relation::StrictPrefixOf: CHECK(ba == Relation::StrictExtensionOf); break;
        case Relation::StrictExtensionOf: CHECK(ba == Relation::StrictPrefixOf); break;
        case Relation::OrthogonalLess: CHECK(ba == Relation::OrthogonalGreater); break;
        case Relation::OrthogonalGreater: CHECK(ba == Relation::OrthogonalLess); break;
      }
      CHECK(orthogonal(a, b) ==
            (ab == Relation::OrthogonalLess || ab == Relation::OrthogonalGreater));
    }
}

TEST_CASE("orthogonal order is transitive on all triples up to length 5") {
  const auto words = words_up_to(2, 1, 5);
  std::size_t checked = 0;
  for (const auto& a : words)
    for (const auto& b : words) {
      if (relation(a, b) != Relation::OrthogonalLess) continue;
      for (const auto& c : words) {
        if (relation(b, c) != Relation::OrthogonalLess) continue;
        ++checked;
        if (relation(a, c) != Relation::OrthogonalLess) FAIL(a.to_string() << " " << c.to_string());
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("concatenation monoid") {
  const auto words = words_up_to(2, 0, 3);
  const MultiIndex e(2);
  for (const auto& a : words) {
    CHECK(a + e == a);
    CHECK(e + a == a);
    for (const auto& b : words)
      for (const auto& c : words) CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("prefix helpers") {
  const MultiIndex x = w("1212");
  CHECK(x.prefix(2) == w("12"));
  CHECK(x.drop(3) == w("2"));
  CHECK(x.child(1) == w("12121"));
  CHECK(w("12").power(3) == w("121212"));
  CHECK(w("12").power(0).empty());
  CHECK(w("12").is_prefix_of(x));
  CHECK_FALSE(w("2").is_prefix_of(x));
}

TEST_CASE("word enumeration") {
  CHECK(words_of_length(2, 0).size() == 1);
  CHECK(words_of_length(3, 2).size() == 9);
  const auto l2 = words_of_length(2, 2);
  CHECK(l2 == std::vector<MultiIndex>{w("11"), w("12"), w("21"), w("22")});
  CHECK(words_up_to(2, 1, 3).size() == 14);
}

TEST_CASE("prefix codes") {
  std::vector<MultiIndex> good{w("11"), w("12"), w("2")};
  CHECK(is_complete_prefix_code(good));
  std::vector<MultiIndex> gap{w("11"), w("2")};
  CHECK_FALSE(is_complete_prefix_code(gap));
  std::vector<MultiIndex> overlap{w("1"), w("11"), w("2")};
  CHECK_FALSE(is_complete_prefix_code(overlap));
  std::vector<MultiIndex> root{w("")};
  CHECK(is_complete_prefix_code(root));

  std::vector<MultiIndex> holes{w("12"), w("221")};
  CHECK(complement_code(2, holes) == std::vector<MultiIndex>{w("11"), w("21"), w("222")});
  std::vector<MultiIndex> none;
  CHECK(complement_code(2, none) == std::vector<MultiIndex>{w("")});

  CHECK(refine_to({w("")}, 3) == std::vector<MultiIndex>{w("11"), w("12"), w("2")});
  CHECK(refine_to({w("1"), w("2")}, 2) == std::vector<MultiIndex>{w("1"), w("2")});
}

TEST_CASE("complement of any orthogonal set completes it") {
  for (const auto& a : words_up_to(2, 1, 3))
    for (const auto& b : words_up_to(2, 1, 3)) {
      if (!orthogonal(a, b)) continue;
      std::vector<MultiIndex> pair{a, b};
      auto code = complement_code(2, pair);
      code.push_back(a);
      code.push_back(b);
      CHECK(is_complete_prefix_code(code));
    }
}
