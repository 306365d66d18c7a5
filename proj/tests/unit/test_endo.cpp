#include <stdexcept>

#include "doctest.h"

#include "cuntz/diagonal.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/thompson.hpp"
#include "support/generators.hpp"

using namespace cuntz;
using cuntz::testing::Rng;

namespace {

MultiIndex w(const char* s) { return MultiIndex::parse(2, s); }
Element S(const char* a, const char* b, Coefficient c = 1) { return Element::word(w(a), w(b), c); }
Element Si(const char* a) { return Element::isometry(w(a)); }
Element P(const char* a) { return Element::projection(w(a)); }
const Element one = Element::one(2);
Element x0() { return generator_x(0).to_element(); }
Element ff() { return flip_flop().to_element(); }
Element phase() { return Coefficient::i() * P("11") + P("12") + P("2"); }

}  // namespace

TEST_CASE("apply examples") {
  CHECK(apply(Endo(ff()), Si("1")) == Si("2"));
  CHECK(apply(Endo(ff()), Si("2")) == Si("1"));
  Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    const Element x = testing::random_element(rng, 2, 4, 3);
    CHECK(apply(Endo::identity(2), x) == x);
  }
  const Element image = apply(Endo(x0()), P("1"));
  CHECK(image == (x0() * Si("1")) * (x0() * Si("1")).adjoint());
  CHECK(image == P("11"));
  CHECK(is_diagonal_projection(image));
  CHECK_THROWS(Endo(P("1")));
}

TEST_CASE("convolve examples") {
  Rng rng(42);
  for (int k = 0; k < 20; ++k) {
    const Element u = testing::random_in(rng, ThompsonClass::V, 6).to_element();
    CHECK(convolve(one, u) == u);
    CHECK(convolve(u, one) == u);
  }
  CHECK_THROWS(convolve(P("1"), one));
}

TEST_CASE("shift and ad examples") {
  CHECK(shift(S("1", "2")) == S("11", "12") + S("21", "22"));
  CHECK(ad_unitary(ff()) == S("11", "22") + S("12", "21") + S("21", "12") + S("22", "11"));
  for (int k = 0; k < 4; ++k) CHECK(classify(shift(generator_x(k).to_element())) == ThompsonClass::F);
  CHECK(shift(one) == one);
  CHECK_THROWS(ad_unitary(P("1")));
}

TEST_CASE("recover examples") {
  const Element a[] = {Si("2"), Si("1")};
  CHECK(recover(a) == ff());
  const Element b[] = {Si("1"), Si("2")};
  CHECK(recover(b) == one);
  const Endo e(x0());
  const Element images[] = {e(Si("1")), e(Si("2"))};
  CHECK(recover(images) == x0());
}

TEST_CASE("diagonal preservation probe examples") {
  CHECK(diagonal_preservation_probe(Endo(ff()), 4).preserves());
  CHECK(diagonal_preservation_probe(Endo(phase()), 4).preserves());
  // regression values computed once and frozen
  const DiagonalProbe p = diagonal_preservation_probe(Endo(x0()), 3);
  CHECK(p.depth == 3);
  CHECK(p.images_diagonal);
  CHECK(p.pairwise_orthogonal);
  CHECK_FALSE(p.first_nondiagonal.has_value());
  CHECK_FALSE(p.first_overlap.has_value());
  const Endo e(x0());
  CHECK(e.image_of_projection(w("2")) == P("12") + P("2"));
  CHECK(e.image_of_projection(w("12")) == P("1112") + P("112"));
  CHECK(e.image_of_projection(w("22")) == P("122") + P("2"));
  CHECK_THROWS(diagonal_preservation_probe(e, 0));
}

TEST_CASE("probe detects a non-diagonal endomorphism") {
  // a Gaussian-rational rotation mixes the two halves
  const Coefficient a(mpq_class(3, 5)), b(mpq_class(4, 5));
  const Element rot = a * P("1") + b * S("1", "2") - b * S("2", "1") + a * P("2");
  REQUIRE(is_unitary(rot));
  const DiagonalProbe p = diagonal_preservation_probe(Endo(rot), 2);
  CHECK_FALSE(p.preserves());
  CHECK_FALSE(p.images_diagonal);
  CHECK(p.first_nondiagonal.has_value());
  CHECK_THROWS_AS(modest_scaling_probe(Endo(rot), 4, 2), std::invalid_argument);
}

TEST_CASE("modest scaling probe examples") {
  const ScalingReport ad = modest_scaling_probe(Endo(ad_unitary(ff())), 8, 4);
  CHECK(ad.verdict == ScalingVerdict::VerifiedToDepth);
  const ScalingReport stalled = modest_scaling_probe(Endo(S("1", "11") + S("21", "12") + S("22", "2")), 10, 6);
  REQUIRE(stalled.verdict == ScalingVerdict::NonModestWitness);
  REQUIRE(stalled.witness.has_value());
  CHECK(stalled.witness->kappa == w("1"));
  CHECK(stalled.witness->nu == w("1"));
  CHECK(stalled.witness->mu.empty());
  CHECK(stalled.witness->checked_range == 6);
  const ScalingReport id = modest_scaling_probe(Endo::identity(2), 8, 4);
  CHECK(id.verdict == ScalingVerdict::VerifiedToDepth);
  CHECK(id.profile.size() == 510);
  for (const auto& [mu, m] : id.profile) CHECK(m == mu.size());
  // regression: x0 is the (2, 1) stalled cylinder unitary
  const ScalingReport x = modest_scaling_probe(Endo(x0()), 8, 4);
  REQUIRE(x.witness.has_value());
  CHECK(x.witness->kappa == w("2"));
  CHECK(x.witness->nu == w("2"));
}

TEST_CASE("stalled cylinder construction") {
  CHECK(stalled_cylinder_unitary(1, 1) == S("21", "12") + S("22", "2") + S("1", "11"));
  CHECK(stalled_cylinder_unitary(2, 1) == x0());
  for (int r = 1; r <= 6; ++r) {
    const Endo e(stalled_cylinder_unitary(1, 1));
    CHECK(e.image_of_projection(repeat(2, 1, r)) * P("1") == P("1"));
  }
  const Endo e22(stalled_cylinder_unitary(2, 2));
  CHECK(e22.image_of_projection(w("2")) * P("22") == P("22"));
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 4; ++k) {
      const Element u = stalled_cylinder_unitary(i, k);
      CHECK(classify(u) != ThompsonClass::NotUnitary);
      const Endo e(u);
      for (int r = 1; r <= 6; ++r)
        CHECK(e.image_of_projection(repeat(2, i, r)) * Element::projection(repeat(2, i, k)) ==
              Element::projection(repeat(2, i, k)));
    }
  CHECK_THROWS(stalled_cylinder_unitary(3, 1));
  CHECK_THROWS(stalled_cylinder_unitary(1, 0));
}

TEST_CASE("homomorphism and well-definedness") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Element u = trial % 3 == 0 ? phase() : testing::random_in(rng, ThompsonClass::V, 6).to_element();
    const Endo e(u);
    const Element x = testing::random_element(rng, 2, 4, 3);
    const Element y = testing::random_element(rng, 2, 4, 3);
    CHECK(e(x * y) == e(x) * e(y));
    CHECK(e(x.adjoint()) == e(x).adjoint());
    CHECK(e(x + y) == e(x) + e(y));
    const MultiIndex a = testing::random_word(rng, 2, 0, 3), b = testing::random_word(rng, 2, 0, 3);
    CHECK(e(Element::word(a, b)) ==
          e(Element::word(a.child(1), b.child(1))) + e(Element::word(a.child(2), b.child(2))));
  }
}

TEST_CASE("composition law and Ad") {
  Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const Element u = testing::random_in(rng, ThompsonClass::V, 6).to_element();
    const Element v = testing::random_in(rng, ThompsonClass::V, 6).to_element();
    const Endo c(convolve(u, v)), eu(u), ev(v);
    for (const char* i : {"1", "2"}) CHECK(c(Si(i)) == eu(ev(Si(i))));
    CHECK(is_unitary(convolve(u, v)));
    const Element x = testing::random_element(rng, 2, 4, 3);
    CHECK(Endo(ad_unitary(u))(x) == u * x * u.adjoint());
    const Element images[] = {eu(Si("1")), eu(Si("2"))};
    CHECK(recover(images) == u);
  }
}

TEST_CASE("lambda_u(V) stays in V for u in V") {
  Rng rng(45);
  for (int k = 0; k <= 3; ++k)
    for (const auto& g : {generator_x(k), t_generator(), flip_flop()})
      for (const auto& u : {generator_x(0), t_generator(), flip_flop()})
        CHECK(within(classify(apply(Endo(u.to_element()), g.to_element())), ThompsonClass::V));
  for (int trial = 0; trial < 100; ++trial) {
    const Element u = testing::random_in(rng, ThompsonClass::V, 6).to_element();
    const Element g = testing::random_in(rng, ThompsonClass::V, 6).to_element();
    CHECK(within(classify(apply(Endo(u), g)), ThompsonClass::V));
  }
  const ThompsonClass outside = classify(apply(Endo(phase()), x0()));
  CHECK(outside == ThompsonClass::UnitaryNotInV);
}

TEST_CASE("lambda is injective on isometries of a modest endomorphism") {
  Rng rng(46);
  const auto words = words_up_to(2, 1, 3);
  for (int trial = 0; trial < 6; ++trial) {
    const Element u = ad_unitary(testing::random_in(rng, ThompsonClass::V, 5).to_element());
    const Endo e(u);
    REQUIRE(modest_scaling_probe(e, 6, 3).verdict == ScalingVerdict::VerifiedToDepth);
    std::vector<Element> xs{one, testing::random_element(rng, 2, 3, 2)};
    for (const auto& g : words_up_to(2, 1, 2)) xs.push_back(Element::isometry(g).adjoint());
    for (const auto& x : xs)
      for (const auto& mu : words)
        for (const auto& nu : words) {
          const Element a = x * e.image_of_isometry(mu);
          if (!a.is_zero_form() && a == x * e.image_of_isometry(nu)) CHECK(mu == nu);
        }
  }
}

TEST_CASE("lambda(1_w) lies under 1_lambda(w)") {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Element u = testing::random_in(rng, ThompsonClass::V, 6).to_element();
    const Element wf = testing::random_in(rng, ThompsonClass::F, 6).to_element();
    const Endo e(u);
    const Element image = e(wf);
    REQUIRE(within(classify(image), ThompsonClass::V));
    const Element lhs = e(one_w(wf));
    CHECK(lhs * one_w(image) == lhs);
    const Endo inner(ad_unitary(u));
    CHECK(inner(one_w(wf)) == one_w(inner(wf)));
  }
}

TEST_CASE("orthogonal cylinders have orthogonal diagonal images") {
  Rng rng(48);
  const auto words = words_up_to(2, 1, 4);
  for (int trial = 0; trial < 4; ++trial) {
    const Endo e(testing::random_in(rng, ThompsonClass::V, 5).to_element());
    std::vector<Element> diag;
    for (const auto& mu : words) diag.push_back(phi_d(e.image_of_projection(mu)));
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = 0; b < words.size(); ++b) {
        if (!orthogonal(words[a], words[b])) continue;
        CHECK((diag[a] * e.image_of_projection(words[b])).is_zero_form());
        for (std::size_t c = 0; c < words.size(); ++c)
          if (orthogonal(words[a], words[c]) && orthogonal(words[b], words[c]))
            CHECK((diag[a] * diag[b] * diag[c]).is_zero_form());
      }
  }
}

TEST_CASE("endomorphisms for n = 3") {
  const Element u = Element::word(MultiIndex::parse(3, "2"), MultiIndex::parse(3, "1")) +
                    Element::word(MultiIndex::parse(3, "3"), MultiIndex::parse(3, "2")) +
                    Element::word(MultiIndex::parse(3, "1"), MultiIndex::parse(3, "3"));
  const Endo e(u);
  CHECK(e(Element::isometry(MultiIndex::parse(3, "1"))) == Element::isometry(MultiIndex::parse(3, "2")));
  CHECK(shift(Element::one(3)) == Element::one(3));
  CHECK(diagonal_preservation_probe(e, 3).preserves());
  const Element images[] = {e(Element::isometry(MultiIndex::parse(3, "1"))),
                            e(Element::isometry(MultiIndex::parse(3, "2"))),
                            e(Element::isometry(MultiIndex::parse(3, "3")))};
  CHECK(recover(images) == u);
}
