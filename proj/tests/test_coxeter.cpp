#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cellkit/coxeter.hpp"
#include "oracles.hpp"

using namespace cellkit;

namespace {

CoxeterSystem make(const std::string& preset, std::size_t cap = CoxeterSystem::default_cap) {
  return CoxeterSystem(preset_matrix(preset), cap);
}

}  // namespace

TEST_CASE("orders of classified types") {
  CHECK(make("I2(3)").order() == 6);
  CHECK(make("I2(8)").order() == 16);
  CHECK(make("A1").order() == 2);
  CHECK(make("A3").order() == 24);
  CHECK(make("B3").order() == 48);
  CHECK(make("B4").order() == 384);
  CHECK(make("D4").order() == 192);
  CHECK(make("H3").order() == 120);
  CHECK(make("F4").order() == 1152);
  for (int m = 2; m <= 12; ++m)
    CHECK(CoxeterSystem(preset_matrix("I2(" + std::to_string(m) + ")")).order() == 2 * std::size_t(m));
}

TEST_CASE("B3 preset matrix convention") {
  auto mat = preset_matrix("B3");
  CHECK(mat.m[0][1] == 4);
  CHECK(mat.m[1][2] == 3);
  CHECK(mat.m[0][2] == 2);
}

TEST_CASE("infinite and oversized groups are rejected") {
  auto inf2 = CoxeterMatrix::from_entries({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(CoxeterSystem(inf2, 1000), Error);
  try {
    CoxeterSystem w(inf2, 1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
  // affine A2 is infinite
  auto aff = CoxeterMatrix::from_entries({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  try {
    CoxeterSystem w(aff, 500);
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
  // a finite group over a small cap
  try {
    CoxeterSystem w(preset_matrix("B3"), 10);
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
}

TEST_CASE("invalid matrices are rejected") {
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{1, 3}, {4, 1}}), Error);
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{2, 3}, {3, 1}}), Error);
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{1, 3, 2}, {3, 1}}), Error);
}

TEST_CASE("I2(3) canonical enumeration") {
  auto W = make("I2(3)");
  std::vector<std::string> expected{"e", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"};
  for (Element w = 0; w < W.order(); ++w) CHECK(W.name(w) == expected[w]);
  std::vector<unsigned> lengths{0, 1, 1, 2, 2, 3};
  for (Element w = 0; w < W.order(); ++w) CHECK(W.length(w) == lengths[w]);
}

TEST_CASE("global element order is (length, ShortLex)") {
  for (const char* g : {"A3", "B3", "I2(6)", "D4"}) {
    auto W = make(g);
    for (Element w = 1; w < W.order(); ++w) {
      auto a = W.word(w - 1), b = W.word(w);
      bool ordered = a.size() < b.size() || (a.size() == b.size() && a < b);
      REQUIRE(ordered);
    }
  }
}

TEST_CASE("canonical words are greedy ShortLex minima") {
  auto W = make("B3");
  for (Element w = 0; w < W.order(); ++w) {
    std::vector<Generator> greedy;
    Element x = w;
    while (x != CoxeterSystem::identity) {
      Generator s = W.left_descents(x).members().front();
      greedy.push_back(s);
      x = W.left_mult(s, x);
    }
    CHECK(W.word(w) == greedy);
    CHECK(W.word(w).size() == W.length(w));
    CHECK(W.element_from_word(W.word(w)) == w);
  }
}

TEST_CASE("products match the dihedral rewriting model") {
  for (int m : {3, 4, 5, 6}) {
    auto W = make("I2(" + std::to_string(m) + ")");
    oracles::DihedralModel model{m};
    // identify elements via their canonical words
    std::vector<oracles::DihedralModel::Elt> val(W.order());
    for (Element w = 0; w < W.order(); ++w) val[w] = model.from_word(W.word(w));
    std::set<oracles::DihedralModel::Elt> distinct(val.begin(), val.end());
    REQUIRE(distinct.size() == W.order());
    for (Element a = 0; a < W.order(); ++a)
      for (Element b = 0; b < W.order(); ++b)
        CHECK(val[W.product(a, b)] == model.mul(val[a], val[b]));
  }
}

TEST_CASE("product examples") {
  auto W = make("I2(4)");
  Element s = W.parse_element("s1"), t = W.parse_element("s2");
  CHECK(W.product(s, s) == CoxeterSystem::identity);
  // s2s1s2 * s1s2s1 = (s2 s1)^3 = (s2 s1)^{-1} = s1 s2 in I2(4)
  CHECK(W.product(W.parse_element("s2 s1 s2"), W.parse_element("s1 s2 s1")) ==
        W.parse_element("s1 s2"));
  for (Element w = 0; w < W.order(); ++w) {
    CHECK(W.product(w, CoxeterSystem::identity) == w);
    CHECK(W.product(CoxeterSystem::identity, w) == w);
  }
  CHECK(W.product(t, t) == CoxeterSystem::identity);
}

TEST_CASE("Coxeter relations hold on the multiplication tables") {
  for (const char* g : {"A3", "B3", "I2(7)"}) {
    auto W = make(g);
    int n = W.rank();
    for (Element w = 0; w < W.order(); ++w) {
      for (Generator s = 0; s < n; ++s) {
        CHECK(W.right_mult(W.right_mult(w, s), s) == w);
        CHECK(W.left_mult(s, W.left_mult(s, w)) == w);
        for (Generator t = 0; t < n; ++t) {
          if (s == t) continue;
          int m = W.matrix().order(s, t);
          Element x = w;
          for (int i = 0; i < m; ++i) x = W.right_mult(W.right_mult(x, s), t);
          // (st)^m = e acting on the right
          CHECK(x == w);
        }
      }
    }
  }
}

TEST_CASE("length changes by one under generators") {
  for (const char* g : {"A3", "B3", "I2(7)"}) {
    auto W = make(g);
    for (Element w = 0; w < W.order(); ++w)
      for (Generator s = 0; s < W.rank(); ++s) {
        unsigned a = W.length(w), b = W.length(W.right_mult(w, s));
        CHECK((b == a + 1 || a == b + 1));
      }
  }
}

TEST_CASE("descent sets") {
  auto W4 = make("I2(4)");
  CHECK(W4.right_descents(CoxeterSystem::identity).empty());
  CHECK(W4.right_descents(W4.parse_element("s2 s1 s2")) == GenSet::single(1));
  for (int m : {3, 4, 5, 6, 7, 8}) {
    auto W = make("I2(" + std::to_string(m) + ")");
    CHECK(W.right_descents(W.longest_element()) == GenSet::full(2));
  }
  auto B3 = make("B3");
  for (Element w = 0; w < B3.order(); ++w) {
    auto rd = B3.right_descents(w);
    auto ld = B3.left_descents(w);
    CHECK(B3.descents(w, Side::Right) == rd);
    CHECK(B3.descents(w, Side::Left) == ld);
    // mirror through the inverse
    CHECK(B3.right_descents(B3.inverse(w)) == ld);
    if (w != CoxeterSystem::identity) {
      auto word = B3.word(w);
      CHECK(ld.contains(word.front()));
      CHECK(rd.contains(word.back()));
    }
  }
}

TEST_CASE("inverse") {
  auto W = make("B3");
  for (Element w = 0; w < W.order(); ++w) {
    CHECK(W.inverse(W.inverse(w)) == w);
    CHECK(W.product(w, W.inverse(w)) == CoxeterSystem::identity);
    CHECK(W.length(W.inverse(w)) == W.length(w));
  }
}

TEST_CASE("Bruhat order matches the subword criterion") {
  for (const char* g : {"I2(4)", "I2(5)", "A3", "B3"}) {
    auto W = make(g);
    for (Element x = 0; x < W.order(); ++x)
      for (Element y = 0; y < W.order(); ++y)
        REQUIRE(W.bruhat_leq(x, y) == oracles::bruhat_leq_subword(W, x, y));
  }
}

TEST_CASE("Bruhat order is a graded partial order") {
  auto W = make("B3");
  for (Element x = 0; x < W.order(); ++x) {
    CHECK(W.bruhat_leq(CoxeterSystem::identity, x));
    CHECK(W.bruhat_leq(x, x));
    for (Element y = 0; y < W.order(); ++y) {
      if (!W.bruhat_leq(x, y)) continue;
      CHECK(W.length(x) <= W.length(y));
      if (W.length(x) == W.length(y)) CHECK(x == y);
      if (x != y) CHECK(!W.bruhat_leq(y, x));
    }
  }
  auto I3 = make("I2(3)");
  CHECK(I3.bruhat_leq(I3.parse_element("s1 s2"), I3.parse_element("s1 s2 s1")));
  CHECK(!I3.bruhat_leq(I3.parse_element("s1 s2"), I3.parse_element("s2 s1")));
}

TEST_CASE("parabolic decomposition") {
  auto W = make("B3");
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    GenSet I(bits);
    std::set<std::pair<Element, Element>> seen;
    for (Element w = 0; w < W.order(); ++w) {
      auto [x, u] = W.parabolic_decompose(w, I);
      CHECK(W.product(x, u) == w);
      CHECK(W.length(x) + W.length(u) == W.length(w));
      CHECK((W.right_descents(x) & I).empty());
      // u lies in W_I: its word uses only letters of I
      for (Generator s : W.word(u)) CHECK(I.contains(s));
      seen.emplace(x, u);
    }
    // the map X_I x W_I -> W is a bijection
    CHECK(seen.size() == W.order());
  }
  GenSet empty;
  for (Element w = 0; w < W.order(); ++w) {
    auto [x, u] = W.parabolic_decompose(w, empty);
    CHECK(x == w);
    CHECK(u == CoxeterSystem::identity);
  }
}

TEST_CASE("parabolic subgroups and embeddings") {
  auto W = make("B3");
  for (Generator s = 0; s < 3; ++s) {
    ParabolicSubgroup P(W, GenSet::single(s));
    CHECK(P.group().order() == 2);
  }
  {
    auto H3 = make("H3");
    ParabolicSubgroup P(H3, GenSet::pair(0, 1));  // m = 5
    CHECK(P.group().order() == 10);
  }
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    ParabolicSubgroup P(W, GenSet::pair(a, b));
    const auto& S = P.group();
    for (Element u = 0; u < S.order(); ++u) {
      CHECK(S.length(u) == W.length(P.to_parent(u)));
      CHECK(P.from_parent(P.to_parent(u)) == u);
      for (Element v = 0; v < S.order(); ++v)
        CHECK(P.to_parent(S.product(u, v)) == W.product(P.to_parent(u), P.to_parent(v)));
    }
    // decomposition lands in the subgroup
    for (Element w = 0; w < W.order(); ++w) {
      auto [x, u] = W.parabolic_decompose(w, P.generators());
      CHECK(P.contains_parent(u));
      (void)x;
    }
  }
  CHECK_THROWS_AS(ParabolicSubgroup(W, GenSet()), Error);
}

TEST_CASE("element parsing and rendering") {
  auto W = make("B3");
  for (Element w = 0; w < W.order(); ++w) CHECK(W.parse_element(W.name(w)) == w);
  auto I4 = make("I2(4)");
  CHECK(I4.dihedral_label(CoxeterSystem::identity) == "1_0");
  CHECK(I4.dihedral_label(I4.longest_element()) == "2_4");
  CHECK(I4.dihedral_label(I4.parse_element("s1 s2")) == "1_2");
  CHECK(I4.parse_element("2_3") == I4.parse_element("s2 s1 s2"));
  CHECK(I4.parse_element("1_4") == I4.longest_element());
  CHECK_THROWS_AS(W.parse_element("s9"), Error);
  CHECK_THROWS_AS(W.parse_element("junk"), Error);
}

TEST_CASE("presets parse aliases") {
  CHECK(preset_matrix("G2") == preset_matrix("I2(6)"));
  CHECK(preset_matrix("I2:7") == preset_matrix("I2(7)"));
  CHECK_THROWS_AS(preset_matrix("Z9"), Error);
  CHECK_THROWS_AS(preset_matrix("D3"), Error);
  CHECK_THROWS_AS(preset_matrix(""), Error);
}
