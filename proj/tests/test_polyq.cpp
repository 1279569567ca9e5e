#include <doctest.h>

#include <random>

#include "ghn/error.hpp"
#include "ghn/poly.hpp"
#include "support.hpp"

using namespace ghn;
using ghn::test::q;

TEST_SUITE("polyq") {

TEST_CASE("coefficients are trimmed") {
  RationalPoly p{q(1), q(0), q(0)};
  CHECK(p.degree() == 0);
  CHECK(RationalPoly{q(0)}.is_zero());
  CHECK(RationalPoly{}.degree() == RationalPoly::kZeroDegree);
  CHECK((RationalPoly{q(1), q(1)} - RationalPoly{q(0), q(1)}).degree() == 0);
}

TEST_CASE("poly_cmp examples") {
  RationalPoly n2p1{q(1), q(0), q(1)};
  RationalPoly n2{q(0), q(0), q(1)};
  RationalPoly two_n{q(0), q(2)};
  CHECK(poly_cmp(n2p1, n2) == std::strong_ordering::greater);
  CHECK(poly_cmp(two_n, n2) == std::strong_ordering::less);
  CHECK(poly_cmp(n2p1, n2p1) == std::strong_ordering::equal);
}

TEST_CASE("zero polynomial is below anything with positive leading coefficient") {
  CHECK(RationalPoly{} < RationalPoly{q(1, 1000)});
  CHECK(RationalPoly{} < RationalPoly{q(-5), q(1)});
  CHECK(RationalPoly{} > RationalPoly{q(0), q(-1)});
}

TEST_CASE("reduced_hp examples") {
  RationalPoly paper_o{q(3, 6), q(10, 6), q(1), q(1, 6)};
  CHECK(reduced_hp(paper_o) == paper_o);
  CHECK(reduced_hp(RationalPoly{q(2), q(2)}) == RationalPoly{q(1), q(1)});
  RationalPoly binom = binomial_poly(3, 0);
  CHECK(binom == RationalPoly{q(1), q(11, 6), q(1), q(1, 6)});
  CHECK(reduced_hp(binom) == binom);
}

TEST_CASE("reduced_hp errors") {
  CHECK_THROWS_AS(reduced_hp(RationalPoly{}), Error);
  try {
    reduced_hp(RationalPoly{});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroPolynomial);
  }
  try {
    reduced_hp(RationalPoly{q(1), q(-1)});
    FAIL("expected NonPositiveLeading");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositiveLeading);
  }
}

TEST_CASE("slope examples") {
  CHECK(slope(binomial_poly(3, 0), 2) == 2);
  RationalPoly pure = RationalPoly::monomial(q(1, 6), 3);
  for (int i = 0; i < 3; ++i) CHECK(slope(pure, i) == 0);
  RationalPoly i_l{q(-3, 6), q(-6, 6), q(1), q(1, 6)};
  CHECK(slope(i_l, 1) == -1);
}

TEST_CASE("slope index range") {
  RationalPoly p = binomial_poly(2, 0);
  for (int bad : {-1, 2, 5}) {
    try {
      (void)slope(p, bad);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IndexOutOfRange);
    }
  }
}

TEST_CASE("binomial polynomial matches binomial coefficients") {
  for (unsigned d = 1; d <= 4; ++d) {
    for (long k = -2; k <= 2; ++k) {
      RationalPoly p = binomial_poly(d, k);
      for (long n = 3; n < 10; ++n) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + k + d), d);
        CHECK(p.evaluate(n) == Rational(c));
      }
    }
  }
}

TEST_CASE("poly_cmp agrees with evaluation at a large integer") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), deg(0, 4);
  auto random_poly = [&] {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = ratio(num(rng), den(rng));
    return RationalPoly(c);
  };
  for (int trial = 0; trial < 500; ++trial) {
    RationalPoly p = random_poly(), r = random_poly();
    RationalPoly diff = p - r;
    // Cauchy bound on the roots of the difference.
    Rational bound = 1;
    for (const auto& c : diff.coeffs()) bound += diff.is_zero() ? Rational(0) : Rational(abs(c) / abs(diff.leading()));
    Rational big = bound + 1;
    auto ord = poly_cmp(p, r);
    Rational a = p.evaluate(big), b = r.evaluate(big);
    if (ord == std::strong_ordering::greater) CHECK(a > b);
    if (ord == std::strong_ordering::less) CHECK(a < b);
    if (ord == std::strong_ordering::equal) CHECK(a == b);
  }
}

TEST_CASE("reduced_hp idempotent and scale invariant; slope matches reduced coefficients") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), deg(1, 4), pos(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = ratio(num(rng), den(rng));
    c.back() = ratio(pos(rng), den(rng));
    RationalPoly p(c);
    RationalPoly r = reduced_hp(p);
    CHECK(r.normalized_coeff(static_cast<std::size_t>(d)) == 1);
    CHECK(reduced_hp(r) == r);
    CHECK(reduced_hp(p * ratio(pos(rng), den(rng))) == r);
    for (int i = 0; i < d; ++i) CHECK(slope(p, i) == r.normalized_coeff(static_cast<std::size_t>(i)));
  }
}

TEST_CASE("arithmetic") {
  RationalPoly a{q(1), q(1)}, b{q(-1), q(1)};
  CHECK(a * b == RationalPoly{q(-1), q(0), q(1)});
  CHECK(-a == RationalPoly{q(-1), q(-1)});
  CHECK(a / q(2) == RationalPoly{q(1, 2), q(1, 2)});
  CHECK(a.evaluate(q(3)) == 4);
  CHECK(leading_sign(b - a) == -1);
  CHECK(leading_sign(RationalPoly{}) == 0);
}

}  // TEST_SUITE
