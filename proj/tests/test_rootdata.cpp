#include <doctest.h>

#include <random>

#include "ghn/error.hpp"
#include "ghn/root_datum.hpp"
#include "support.hpp"

using namespace ghn;
using ghn::test::q;

namespace {

const std::vector<std::string> kBuiltins = {
    "gl(1)", "gl(2)", "gl(3)", "gl(5)", "sl(2)", "sl(3)", "sl(4)", "so(2)", "so(3)",
    "so(4)", "so(5)", "so(6)", "so(7)", "so(8)", "so(9)", "sp(2)", "sp(4)", "sp(6)",
    "sp(8)", "gl(2)xgl(2)", "gl(2)xgl(3)", "so(5)xsl(3)", "sp(4)xgl(1)xso(4)"};

// Cartan matrices C(i,j) = <alpha_i, alpha_j^vee> from the Dynkin diagrams,
// Bourbaki numbering (alpha_n short in B, long in C).
Matrix cartan_table(char type, std::size_t n) {
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { c(i, j) = -1; c(j, i) = -1; };
  if (type == 'D') {
    for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
    return c;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
  if (type == 'B') c(n - 2, n - 1) = -2;
  if (type == 'C') c(n - 1, n - 2) = -2;
  return c;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-6, 6), d(1, 3);
  Vec out(n);
  for (auto& x : out) x = ratio(v(rng), d(rng));
  return out;
}

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("builtin shapes") {
  GroupDatum so7 = builtin_datum("so(7)");
  CHECK(so7.torus_rank == 3);
  CHECK(so7.central_basis.empty());
  REQUIRE(so7.simple_roots.size() == 3);
  CHECK(so7.simple_roots[0] == Vec{q(1), q(-1), q(0)});
  CHECK(so7.simple_roots[1] == Vec{q(0), q(1), q(-1)});
  CHECK(so7.simple_roots[2] == Vec{q(0), q(0), q(1)});

  GroupDatum gl1 = builtin_datum("gl(1)");
  CHECK(gl1.torus_rank == 1);
  CHECK(gl1.central_basis.size() == 1);
  CHECK(gl1.simple_roots.empty());

  GroupDatum g22 = builtin_datum("gl(2)xgl(2)");
  CHECK(g22.torus_rank == 4);
  CHECK(g22.central_basis.size() == 2);
  CHECK(g22.simple_roots.size() == 2);

  CHECK(builtin_datum(" GL(3) X SL(2) ").torus_rank == 4);
}

TEST_CASE("builtin parse errors") {
  auto code_of = [](const char* spec) {
    try {
      builtin_datum(spec);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidInput;
  };
  CHECK(code_of("gl(") == Errc::ParseError);
  CHECK(code_of("gl(2)x") == Errc::ParseError);
  CHECK(code_of("") == Errc::ParseError);
  CHECK(code_of("e(8)") == Errc::UnsupportedType);
  CHECK(code_of("sp(3)") == Errc::UnsupportedType);
  CHECK(code_of("gl(0)") == Errc::UnsupportedType);
}

TEST_CASE("coweights are dual to simple roots; roots kill the center") {
  for (const auto& spec : kBuiltins) {
    CAPTURE(spec);
    GroupDatum d = builtin_datum(spec);
    CHECK(datum_issues(d).empty());
    CHECK(d.central_basis.size() + d.simple_roots.size() == d.torus_rank);
    for (std::size_t i = 0; i < d.simple_roots.size(); ++i) {
      for (std::size_t j = 0; j < d.fund_coweights.size(); ++j) {
        CHECK(dot(d.simple_roots[i], d.fund_coweights[j]) == (i == j ? 1 : 0));
      }
      for (const auto& z : d.central_basis) CHECK(dot(d.simple_roots[i], z) == 0);
    }
  }
}

TEST_CASE("Cartan matrices match the tables for A, B, C, D") {
  struct Case { const char* spec; char type; std::size_t n; };
  for (const auto& c : {Case{"sl(2)", 'A', 1}, Case{"sl(4)", 'A', 3}, Case{"gl(5)", 'A', 4},
                        Case{"so(5)", 'B', 2}, Case{"so(7)", 'B', 3}, Case{"so(9)", 'B', 4},
                        Case{"sp(4)", 'C', 2}, Case{"sp(6)", 'C', 3}, Case{"sp(8)", 'C', 4},
                        Case{"so(8)", 'D', 4}, Case{"so(10)", 'D', 5}}) {
    CAPTURE(c.spec);
    CHECK(builtin_datum(c.spec).cartan_matrix() == cartan_table(c.type, c.n));
  }
}

TEST_CASE("Weyl generators preserve the chi inner product") {
  std::mt19937_64 rng(5);
  for (const auto& spec : kBuiltins) {
    CAPTURE(spec);
    GroupDatum d = builtin_datum(spec);
    Representation rep = standard_representation(spec);
    for (int trial = 0; trial < 10; ++trial) {
      Vec a = random_vec(rng, d.torus_rank), b = random_vec(rng, d.torus_rank);
      for (std::size_t j = 0; j < d.simple_roots.size(); ++j) {
        CHECK(chi_inner(rep, reflect_cocharacter(d, j, a), reflect_cocharacter(d, j, b)) ==
              chi_inner(rep, a, b));
      }
    }
  }
}

TEST_CASE("chi inner product is positive definite for standard representations") {
  for (const auto& spec : kBuiltins) {
    CAPTURE(spec);
    GroupDatum d = builtin_datum(spec);
    Matrix g = gram_matrix(standard_representation(spec), d.torus_rank);
    CHECK(g == g.transposed());
    for (const auto& m : leading_principal_minors(g)) CHECK(m > 0);
  }
}

TEST_CASE("parabolic_type examples") {
  GroupDatum so7 = builtin_datum("so(7)");
  CHECK(parabolic_type(so7, Vec{q(1), q(0), q(0)}) == std::vector<std::size_t>{1});
  CHECK(parabolic_type(so7, Vec{q(0), q(0), q(0)}).empty());
  try {
    parabolic_type(so7, Vec{q(0), q(2), q(1)});
    FAIL("expected NotDominant");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDominant);
  }
  // Inside the Levi of (1,0,0) the ray (0,2,1) is dominant and its type
  // keeps the original labels.
  GroupDatum levi = levi_subdatum(so7, Vec{q(1), q(0), q(0)});
  CHECK(levi.root_labels == std::vector<std::size_t>{2, 3});
  CHECK(parabolic_type(levi, Vec{q(0), q(2), q(1)}) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("levi_center_basis examples") {
  GroupDatum so7 = builtin_datum("so(7)");
  CHECK(levi_center_basis(so7, Vec{q(1), q(0), q(0)}) == std::vector<Vec>{{q(1), q(0), q(0)}});
  GroupDatum g22 = builtin_datum("gl(2)xgl(2)");
  CHECK(levi_center_basis(g22, Vec(4)) == g22.central_basis);
  // (1,1,0,0) is central, so the Levi is everything and only the center remains.
  CHECK(levi_center_basis(g22, Vec{q(1), q(1), q(0), q(0)}) == g22.central_basis);
  // (1,0,0,0) splits the first factor: one coweight joins the center.
  auto basis = levi_center_basis(g22, Vec{q(1), q(0), q(0), q(0)});
  CHECK(basis.size() == 3);
}

TEST_CASE("Levi sub-datum of a non-dominant cocharacter") {
  GroupDatum gl3 = builtin_datum("gl(3)");
  Vec lambda{q(0), q(0), q(1)};
  GroupDatum levi = levi_subdatum(gl3, lambda);
  CHECK(datum_issues(levi).empty());
  // Centralizer of diag(1,1,t) is GL(2) x GL(1): one root e1 - e2 survives.
  REQUIRE(levi.simple_roots.size() == 1);
  CHECK(levi.simple_roots[0] == Vec{q(1), q(-1), q(0)});
  CHECK(levi.central_basis.size() == 2);
  for (const auto& z : levi.central_basis) CHECK(dot(levi.simple_roots[0], z) == 0);
  // lambda itself lies in the center of its Levi.
  Matrix m = Matrix::from_rows(levi.central_basis, 3).transposed();
  CHECK(solve(m, lambda).status == LinearSolution::Status::Unique);
}

TEST_CASE("dominant_conjugate") {
  GroupDatum so7 = builtin_datum("so(7)");
  auto dc = dominant_conjugate(so7, Vec{q(0), q(-2), q(1)});
  CHECK(dc.dominant == Vec{q(2), q(1), q(0)});
  Vec back = dc.dominant;
  for (auto it = dc.word.rbegin(); it != dc.word.rend(); ++it) back = reflect_cocharacter(so7, *it, back);
  CHECK(back == Vec{q(0), q(-2), q(1)});
}

TEST_CASE("chi_inner examples") {
  Representation rep = standard_representation("so(7)");
  Vec e1{q(1), q(0), q(0)}, e2{q(0), q(1), q(0)};
  CHECK(chi_inner(rep, e1, e1) == 2);
  CHECK(chi_inner(rep, Vec(3), e1) == 0);
  CHECK(chi_inner(rep, e1, e2) == 0);
}

TEST_CASE("gram_matrix examples") {
  Matrix g = gram_matrix(standard_representation("so(7)"), 3);
  Matrix expected(3, 3);
  for (std::size_t i = 0; i < 3; ++i) expected(i, i) = 2;
  CHECK(g == expected);
  CHECK(gram_matrix(Representation{}, 2) == Matrix(2, 2));
  Representation k_copies{{{{IntVec{1}, 4}}}};
  CHECK(gram_matrix(k_copies, 1)(0, 0) == 4);
  // Multiplicity-weighted equals the expanded list.
  Representation expanded{{std::vector<WeightEntry>(4, WeightEntry{IntVec{1}, 1})}};
  CHECK(gram_matrix(expanded, 1) == gram_matrix(k_copies, 1));
}

TEST_CASE("pi_Z examples") {
  GroupDatum so7 = builtin_datum("so(7)");
  Representation so7_rep = standard_representation("so(7)");
  Vec v{q(3), q(-1, 2), q(2)};
  CHECK(pi_z(so7, so7_rep, v) == v);

  GroupDatum gl2 = builtin_datum("gl(2)");
  Representation gl2_rep = standard_representation("gl(2)");
  CHECK(is_zero(pi_z(gl2, gl2_rep, Vec{q(5), q(5)})));
  CHECK(pi_z(gl2, gl2_rep, Vec{q(1), q(0)}) == Vec{q(1, 2), q(-1, 2)});

  Representation half{{{{IntVec{1, 0}, 1}}}};
  try {
    pi_z(gl2, half, Vec{q(1), q(0)});
    FAIL("expected DegenerateForm");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateForm);
  }
}

TEST_CASE("pi_Z is idempotent and self-adjoint") {
  std::mt19937_64 rng(9);
  for (const auto& spec : kBuiltins) {
    CAPTURE(spec);
    GroupDatum d = builtin_datum(spec);
    Representation rep = standard_representation(spec);
    for (int trial = 0; trial < 10; ++trial) {
      Vec v = random_vec(rng, d.torus_rank), w = random_vec(rng, d.torus_rank);
      Vec pv = pi_z(d, rep, v);
      CHECK(pi_z(d, rep, pv) == pv);
      CHECK(chi_inner(rep, pv, w) == chi_inner(rep, v, pi_z(d, rep, w)));
      for (const auto& z : d.central_basis) CHECK(is_zero(pi_z(d, rep, z)));
    }
  }
}

TEST_CASE("primitive_scale") {
  CHECK(primitive_scale(Vec{q(2, 3), q(0), q(1, 3)}).coords == IntVec{2, 0, 1});
  CHECK(primitive_scale(Vec{q(-4), q(-2)}).coords == IntVec{-2, -1});
  CHECK(primitive_scale(Vec{q(5)}).coords == IntVec{1});
  try {
    primitive_scale(Vec{q(0), q(0)});
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroVector);
  }
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> pos(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    Vec v = random_vec(rng, 4);
    if (is_zero(v)) continue;
    Cocharacter p = primitive_scale(v);
    CHECK(p.is_primitive());
    CHECK(primitive_scale(p.as_rational()) == p);
    CHECK(primitive_scale(scaled(v, ratio(pos(rng), pos(rng)))) == p);
  }
}

TEST_CASE("character_group_basis") {
  CHECK(character_group_basis(builtin_datum("so(7)")).empty());
  auto gl3 = character_group_basis(builtin_datum("gl(3)"));
  REQUIRE(gl3.size() == 1);
  CHECK(primitive_scale(gl3[0]).coords == IntVec{1, 1, 1});
  GroupDatum g23 = builtin_datum("gl(2)xgl(3)");
  auto basis = character_group_basis(g23);
  CHECK(basis.size() == 2);
  for (const auto& chi : basis)
    for (const auto& c : g23.simple_coroots) CHECK(dot(chi, c) == 0);
  // Span equals the two determinants.
  for (const Vec& det : {Vec{q(1), q(1), q(0), q(0), q(0)}, Vec{q(0), q(0), q(1), q(1), q(1)}}) {
    std::vector<Vec> rows = basis;
    rows.push_back(det);
    CHECK(rank(Matrix::from_rows(rows, 5)) == 2);
  }
}

}  // TEST_SUITE
