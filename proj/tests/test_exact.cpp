#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exact/hamiltonian.hpp"
#include "scenario/random_gen.hpp"

using namespace hca;

namespace {

IntMatrix pauli_x_s() { return IntMatrix(2, {0, 1, 1, 0}); }
IntMatrix zero2() { return IntMatrix(2, {0, 0, 0, 0}); }

HamiltonianSpec sigma_x() { return HamiltonianSpec::build(pauli_x_s(), zero2()); }

GaussMatrix gauss_from(const IntMatrix& s, const IntMatrix& a) {
  return HamiltonianSpec::build(s, a).h();
}

}  // namespace

TEST_CASE("build_hamiltonian validates and derives H = S + iA") {
  HamiltonianSpec spec = sigma_x();
  CHECK(spec.dim() == 2);
  CHECK(spec.h().at(0, 1) == GaussInt(Int(1), Int(0)));
  CHECK(spec.h().is_self_adjoint());

  HamiltonianSpec zero = HamiltonianSpec::build(IntMatrix(1), IntMatrix(1));
  CHECK(zero.h().at(0, 0).is_zero());

  // S = 0, A = [[0,1],[-1,0]] gives the second Pauli matrix.
  IntMatrix a(2, {0, 1, -1, 0});
  HamiltonianSpec pauli_y = HamiltonianSpec::build(zero2(), a);
  CHECK(pauli_y.h().at(0, 1) == GaussInt(Int(0), Int(1)));
  CHECK(pauli_y.h().at(1, 0) == GaussInt(Int(0), Int(-1)));
  CHECK(pauli_y.h().is_self_adjoint());
}

TEST_CASE("build_hamiltonian rejects invalid inputs") {
  CHECK_THROWS_WITH_AS(HamiltonianSpec::build(IntMatrix(2), IntMatrix(3)),
                       doctest::Contains("equal dimension"), Error);
  IntMatrix asym(2, {0, 1, 2, 0});
  try {
    HamiltonianSpec::build(asym, zero2());
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
  IntMatrix bad_a(2, {0, 1, 1, 0});
  try {
    HamiltonianSpec::build(zero2(), bad_a);
    FAIL("expected NotAntisymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAntisymmetric);
  }
  CHECK_THROWS_AS(IntMatrix(0), Error);
}

TEST_CASE("construction is total over random valid pairs and rejects tampered ones") {
  Rng rng = make_rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int dim = static_cast<int>(rng.uniform(1, 5));
    IntMatrix s(dim), a(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        Int v = make_int(rng.uniform(-9, 9));
        s.at(i, j) = v;
        s.at(j, i) = v;
        if (j > i) {
          Int w = make_int(rng.uniform(-9, 9));
          a.at(i, j) = w;
          a.at(j, i) = -w;
        }
      }
    CHECK_NOTHROW(HamiltonianSpec::build(s, a));
    if (dim > 1) {
      IntMatrix bad = s;
      bad.at(0, dim - 1) += 1;
      CHECK_THROWS_AS(HamiltonianSpec::build(bad, a), Error);
    }
  }
}

TEST_CASE("commutator examples") {
  GaussMatrix sx = sigma_x().h();
  // True Pauli-y = [[0,-i],[i,0]], i.e. A = [[0,-1],[1,0]].
  GaussMatrix sy = gauss_from(zero2(), IntMatrix(2, {0, -1, 1, 0}));
  GaussMatrix id = GaussMatrix::identity(2);

  CHECK(commutator(id, sx).is_zero());
  CHECK(commutator(sx, sx).is_zero());

  // [sigma_x, sigma_y] = 2i sigma_z, worked out by hand.
  GaussMatrix c = commutator(sx, sy);
  CHECK(c.at(0, 0) == GaussInt(Int(0), Int(2)));
  CHECK(c.at(1, 1) == GaussInt(Int(0), Int(-2)));
  CHECK(c.at(0, 1).is_zero());
  CHECK(c.at(1, 0).is_zero());
}

TEST_CASE("commutator of self-adjoint matrices is anti-self-adjoint") {
  Rng rng = make_rng(12, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = static_cast<int>(rng.uniform(1, 4));
    auto random_self_adjoint = [&] {
      IntMatrix s(dim), a(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
          Int v = make_int(rng.uniform(-5, 5));
          s.at(i, j) = v;
          s.at(j, i) = v;
          if (j > i) {
            Int w = make_int(rng.uniform(-5, 5));
            a.at(i, j) = w;
            a.at(j, i) = -w;
          }
        }
      return gauss_from(s, a);
    };
    GaussMatrix g = random_self_adjoint();
    GaussMatrix h = random_self_adjoint();
    GaussMatrix c = commutator(g, h);
    GaussMatrix c_adj = c.adjoint();
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        CHECK(c.at(i, j) == -c_adj.at(i, j));
  }
}

TEST_CASE("h_value_xp worked examples") {
  HamiltonianSpec spec = sigma_x();
  CHECK(h_value_xp(spec, {Int(1), Int(0)}, {Int(0), Int(0)}) == Rational(0));
  CHECK(h_value_xp(spec, {Int(0), Int(0)}, {Int(0), Int(0)}) == Rational(0));

  HamiltonianSpec two = HamiltonianSpec::build(IntMatrix(1, {2}), IntMatrix(1));
  CHECK(h_value_xp(two, {Int(1)}, {Int(1)}) == Rational(2));

  // Odd diagonal S makes the value a proper half-integer.
  HamiltonianSpec odd = HamiltonianSpec::build(IntMatrix(1, {1}), IntMatrix(1));
  Rational h = h_value_xp(odd, {Int(1)}, {Int(0)});
  CHECK(h == make_rational(Int(1), Int(2)));
  CHECK(is_half_integer(h));
}

TEST_CASE("h_value_psi worked examples") {
  HamiltonianSpec spec = sigma_x();
  GaussVector ones = {GaussInt(Int(1), Int(0)), GaussInt(Int(1), Int(0))};
  CHECK(h_value_psi(spec, ones) == Rational(1));
  GaussVector zero = {GaussInt(), GaussInt()};
  CHECK(h_value_psi(spec, zero) == Rational(0));
  GaussVector mixed = {GaussInt(Int(1), Int(0)), GaussInt(Int(0), Int(-1))};
  CHECK(h_value_psi(spec, mixed) == Rational(0));
}

TEST_CASE("pack/unpack round trip and the two Hamiltonian routes agree") {
  Rng rng = make_rng(13, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    int dim = static_cast<int>(rng.uniform(1, 5));
    IntMatrix s(dim), a(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        Int v = make_int(rng.uniform(-20, 20));
        s.at(i, j) = v;
        s.at(j, i) = v;
        if (j > i) {
          Int w = make_int(rng.uniform(-20, 20));
          a.at(i, j) = w;
          a.at(j, i) = -w;
        }
      }
    HamiltonianSpec spec = HamiltonianSpec::build(s, a);
    IntVector x(dim), p(dim);
    for (int i = 0; i < dim; ++i) {
      x[i] = make_int(rng.uniform(-1000, 1000));
      p[i] = make_int(rng.uniform(-1000, 1000));
    }
    GaussVector psi = pack_psi(x, p);
    IntVector x2, p2;
    unpack_psi(psi, x2, p2);
    CHECK(x2 == x);
    CHECK(p2 == p);
    CHECK(h_value_xp(spec, x, p) == h_value_psi(spec, psi));
  }
}

TEST_CASE("string round trips and checked float conversion") {
  CHECK(parse_int("-12345678901234567890123") ==
        Int("-12345678901234567890123"));
  CHECK_THROWS_AS(parse_int("12x"), Error);
  CHECK(rational_to_string(make_rational(Int(3), Int(2))) == "3/2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(parse_rational("-7/2") == make_rational(Int(-7), Int(2)));
  CHECK(parse_rational("4/2") == Rational(2));

  CHECK(to_double_checked(Int(1) << 53) == 9007199254740992.0);
  CHECK_THROWS_AS(to_double_checked((Int(1) << 53) + 1), Error);
  try {
    to_double_checked((Int(1) << 60));
    FAIL("expected FloatOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FloatOverflow);
  }
}
