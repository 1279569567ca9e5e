#include <doctest.h>

#include <random>

#include "ghn/error.hpp"
#include "ghn/filtration.hpp"
#include "ghn/generators.hpp"
#include "ghn/optimizer.hpp"
#include "support.hpp"

using namespace ghn;
using namespace ghn::test;

TEST_SUITE("optimizer") {

TEST_CASE("leading_cochar on the SO(7) examples") {
  for (const char* name : {"so7_p3_paper.json", "so7_p3_corrected.json"}) {
    CAPTURE(name);
    auto s = load_fixture(name);
    auto lead = leading_cochar(s);
    REQUIRE(lead);
    CHECK(lead->lambda.coords == IntVec{1, 0, 0});
    CHECK(lead->leading_degree == 1);
    CHECK(lead->value == nu(s, lead->lambda));

    auto second = leading_cochar(associated_graded(s, lead->lambda));
    REQUIRE(second);
    CHECK(second->lambda.coords == IntVec{0, 2, 1});
    CHECK(second->leading_degree == 0);
  }
}

TEST_CASE("leading_cochar on semistable input") {
  auto same = gl_identity(projective_space(2), {hp_with_c(2, 0), hp_with_c(2, 0)});
  CHECK_FALSE(leading_cochar(same));
}

TEST_CASE("brute_force_max examples") {
  auto so7 = load_fixture("so7_p3_paper.json");
  auto best = brute_force_max(so7, {.bound = 3});
  REQUIRE(best);
  CHECK(best->lambda.coords == IntVec{1, 0, 0});
  CHECK(compare_nu(best->value, leading_cochar(so7)->value) == std::strong_ordering::equal);

  auto same = gl_identity(projective_space(2), {hp_with_c(2, 0), hp_with_c(2, 0)});
  CHECK_FALSE(brute_force_max(same, {.bound = 2}));

  auto noncentral = load_fixture("glxgl_noncentral.json");
  auto nc = brute_force_max(noncentral, {.bound = 3});
  REQUIRE(nc);
  CHECK(nc->value.sign() > 0);
  CHECK(nc->lambda.coords == IntVec{-1, -1, 1, 1});
}

TEST_CASE("brute_force_max guards") {
  auto so7 = load_fixture("so7_p3_paper.json");
  try {
    brute_force_max(so7, {.bound = 3, .max_candidates = 100});
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchSpaceTooLarge);
  }
  CHECK_THROWS_AS(brute_force_max(so7, {.bound = 0}), Error);
}

TEST_CASE("brute_force_max is independent of the thread count") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 15; ++i) {
    auto s = gen::random_instance(rng);
    auto one = brute_force_max(s, {.bound = 2, .threads = 1});
    auto many = brute_force_max(s, {.bound = 2, .threads = 5});
    REQUIRE(one.has_value() == many.has_value());
    if (one) {
      CHECK(one->lambda == many->lambda);
      CHECK(one->value == many->value);
    }
  }
}

TEST_CASE("slope_canonical examples") {
  auto zero = gl_identity(projective_space(2), {hp_with_c(2, 0), hp_with_c(2, 0)});
  CHECK_FALSE(slope_canonical(zero));
  CHECK_FALSE(slope_canonical(load_fixture("so7_p3_corrected.json")));

  auto gl2 = gl_identity(projective_space(2), {hp_with_c(2, 3), hp_with_c(2, 1)});
  auto ray = slope_canonical(gl2);
  REQUIRE(ray);
  CHECK(ray->coords == IntVec{1, -1});
  // Under m = -<lambda, chi> the leading ray is the opposite cocharacter.
  CHECK(leading_cochar(gl2)->lambda.coords == IntVec{-1, 1});

  try {
    slope_canonical(load_fixture("glxgl_noncentral.json"));
    FAIL("expected NotCentral");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCentral);
  }
}

TEST_CASE("leading functional is positive at the maximizer") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    auto s = gen::random_instance(rng);
    auto lead = leading_cochar(s);
    if (!lead) continue;
    auto ells = ell_functionals(s);
    for (const auto& e : ells) {
      if (e.degree > lead->leading_degree) CHECK(is_zero(e.covector));
      if (e.degree == lead->leading_degree) CHECK(dot(e.covector, lead->lambda.coords) > 0);
    }
    CHECK(lead->value.sign() > 0);
    CHECK(lead->lambda.is_primitive());
  }
}

TEST_CASE("perturbing the maximizer lowers the leading coefficient") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int i = 0; i < 40; ++i) {
    auto s = gen::random_instance(rng);
    auto lead = leading_cochar(s);
    if (!lead) continue;
    Vec ell;
    for (const auto& e : ell_functionals(s)) {
      if (e.degree == lead->leading_degree) ell = e.covector;
    }
    Matrix g = gram_matrix(s.rep, s.datum.torus_rank);
    auto ratio = [&](const Vec& x) {
      Rational l = dot(ell, x);
      return std::pair<int, Rational>{sign(l), l * l / dot(x, g.apply(x))};
    };
    auto [s0, r0] = ratio(lead->lambda.as_rational());
    REQUIRE(s0 > 0);
    for (int t = 0; t < 30; ++t) {
      Vec x = scaled(lead->lambda.as_rational(), 3);
      for (auto& c : x) c += v(rng);
      if (is_zero(x) || primitive_scale(x) == lead->lambda) continue;
      auto [s1, r1] = ratio(x);
      if (s1 > 0) CHECK(r1 < r0);
    }
  }
}

}  // TEST_SUITE
