#include <algorithm>

#include "calab/differentials.hpp"
#include "calab/groebner.hpp"
#include "calab/errors.hpp"
#include "doctest.h"

using namespace calab;

namespace {

Polynomial var(const RingPtr& r, std::size_t i) {
  return Polynomial::variable(r, i);
}

std::vector<std::string> gb_strings(const Ideal& I) {
  auto gb = I.groebner(MonomialOrder::grevlex());
  std::vector<std::string> out;
  for (const auto& f : gb->elements) out.push_back(f.str(gb->order));
  return out;
}

// The plane-line union: char 0, I = (xz, yz) in k[x,y,z].
PresentedAlgebra plane_line() {
  RingPtr R = Ring::create(0, {"x", "y", "z"});
  Ideal I(R, {var(R, 0) * var(R, 2), var(R, 1) * var(R, 2)});
  return PresentedAlgebra{R, I};
}

}  // namespace

TEST_SUITE("differentials") {

TEST_CASE("jacobian matrix of the plane-line union, entry by entry") {
  PresentedAlgebra A = plane_line();
  PolyMatrix M = jacobian_matrix(A);
  REQUIRE(M.rows == 2);
  REQUIRE(M.cols == 3);
  CHECK(M.row_labels == std::vector<std::string>{"x*z", "y*z"});
  CHECK(M.col_labels == std::vector<std::string>{"x", "y", "z"});
  const RingPtr& R = A.ring;
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  // d(xz) = (z, 0, x); d(yz) = (0, z, y)
  CHECK(M.at(0, 0) == z);
  CHECK(M.at(0, 1).is_zero());
  CHECK(M.at(0, 2) == x);
  CHECK(M.at(1, 0).is_zero());
  CHECK(M.at(1, 1) == z);
  CHECK(M.at(1, 2) == y);
}

TEST_CASE("column-swapped jacobian variants generate the same minor ideals") {
  // The 2x2-minor ideal is insensitive to swapping the last two column
  // entries within each row, because the minor set only reshuffles signs.
  PresentedAlgebra A = plane_line();
  const RingPtr& R = A.ring;
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  Polynomial o = Polynomial::zero(R);
  PolyMatrix true_mat{2, 3, {z, o, x, o, z, y}, {"r1", "r2"}, {"x", "y", "z"}};
  PolyMatrix swapped{2, 3, {z, o, y, o, z, x}, {"r1", "r2"}, {"x", "y", "z"}};
  Ideal m_true = minors(true_mat, 2);
  Ideal m_swapped = minors(swapped, 2);
  CHECK(ideal_equal(m_true, m_swapped));
  CHECK(gb_strings(m_true) == std::vector<std::string>{"x*z", "y*z", "z^2"});
}

TEST_CASE("minor ideals at every size, including degenerate ones") {
  PresentedAlgebra A = plane_line();
  PolyMatrix M = jacobian_matrix(A);
  // 1x1 minors: the entries
  CHECK(gb_strings(minors(M, 1)) == std::vector<std::string>{"x", "y", "z"});
  // 3x3 minors of a 2x3 matrix: zero ideal
  CHECK(minors(M, 3).is_zero_ideal());
  // size-0 minors are refused; the unit convention lives at the Fitting level
  CHECK_THROWS_AS(minors(M, 0), ArgError);
}

TEST_CASE("fitting chain of the plane-line union with conventions") {
  PresentedAlgebra A = plane_line();
  PolyMatrix M = jacobian_matrix(A);
  // cols = 3. i = 3: size 0 => whole ring.
  FittingResult f3 = fitting_ideal(M, 3);
  CHECK(f3.convention == "unit");
  CHECK(f3.ideal.is_unit());
  // i = 4: size -1 <= 0 => whole ring as well.
  CHECK(fitting_ideal(M, 4).ideal.is_unit());
  // i = 2: 1x1 minors = (x, y, z) after reduction.
  FittingResult f2 = fitting_ideal(M, 2);
  CHECK(f2.convention == "");
  CHECK(gb_strings(f2.ideal) == std::vector<std::string>{"x", "y", "z"});
  // i = 1: 2x2 minors = (xz, yz, z^2).
  CHECK(gb_strings(fitting_ideal(M, 1).ideal) ==
        std::vector<std::string>{"x*z", "y*z", "z^2"});
  // i = 0: 3x3 minors of a 2x3 matrix vanish.
  FittingResult f0 = fitting_ideal(M, 0);
  CHECK(f0.convention == "zero");
  CHECK(f0.ideal.is_zero_ideal());
  CHECK(f0.matrix_shape == std::pair<std::size_t, std::size_t>{2, 3});
}

TEST_CASE("fitting ideals ascend along the chain") {
  PresentedAlgebra A = plane_line();
  PolyMatrix M = jacobian_matrix(A);
  for (long long i = 0; i + 1 <= 4; ++i) {
    Ideal lo = fitting_ideal(M, i).ideal;
    Ideal hi = fitting_ideal(M, i + 1).ideal;
    CHECK(ideal_contains(hi, lo));
  }
}

TEST_CASE("jacobian ideal of the plane-line union uses the big height") {
  PresentedAlgebra A = plane_line();
  ComponentData cd = components_for(A.defining, nullptr);
  CHECK(big_height(A.defining, cd) == 2);
  Ideal J = jacobian_ideal(A, cd);
  CHECK(gb_strings(J) == std::vector<std::string>{"x*z", "y*z", "z^2"});
}

TEST_CASE("rank at a prime drops where the fiber degenerates") {
  PresentedAlgebra A = plane_line();
  const RingPtr& R = A.ring;
  PolyMatrix M = jacobian_matrix(A);
  PrimeWitness at_plane = make_prime_witness(Ideal(R, {var(R, 2)}));
  CHECK(at_plane.verified);
  CHECK(rank_at_prime(M, at_plane) == 1);
  PrimeWitness at_origin = make_prime_witness(
      Ideal(R, {var(R, 0), var(R, 1), var(R, 2)}));
  CHECK(rank_at_prime(M, at_origin) == 0);
  // at the line (x, y) the z-column entries survive: rank 2
  PrimeWitness at_line = make_prime_witness(Ideal(R, {var(R, 0), var(R, 1)}));
  CHECK(rank_at_prime(M, at_line) == 2);
}

TEST_CASE("prime witnesses flag non-variable claims as user-asserted") {
  RingPtr R = Ring::create(0, {"x", "y"});
  PrimeWitness v = make_prime_witness(Ideal(R, {var(R, 0)}));
  CHECK(v.verified);
  PrimeWitness nv = make_prime_witness(
      Ideal(R, {var(R, 0).pow(2) - var(R, 1)}));
  CHECK_FALSE(nv.verified);
  CHECK_FALSE(nv.note.empty());
}

TEST_CASE("jacobian regularity criterion at smooth and singular points") {
  PresentedAlgebra A = plane_line();
  const RingPtr& R = A.ring;
  ComponentData cd = components_for(A.defining, nullptr);
  // generic point of the plane component: smooth
  PrimeWitness at_plane = make_prime_witness(Ideal(R, {var(R, 2)}));
  RegularityResult smooth = regular_at(A, at_plane, cd);
  CHECK(smooth.regular);
  CHECK(smooth.local_height == 1);
  // the origin lies on both components: singular
  PrimeWitness at_origin = make_prime_witness(
      Ideal(R, {var(R, 0), var(R, 1), var(R, 2)}));
  RegularityResult sing = regular_at(A, at_origin, cd);
  CHECK_FALSE(sing.regular);
}

TEST_CASE("regularity check refuses primes that miss the defining ideal") {
  PresentedAlgebra A = plane_line();
  const RingPtr& R = A.ring;
  ComponentData cd = components_for(A.defining, nullptr);
  PrimeWitness bad = make_prime_witness(Ideal(R, {var(R, 0)}));
  CHECK_THROWS_AS(regular_at(A, bad, cd), DomainError);
}

TEST_CASE("singular locus of an equiheight hypersurface: the cusp") {
  RingPtr R = Ring::create(0, {"x", "y"});
  Polynomial f = var(R, 1).pow(2) - var(R, 0).pow(3);
  Ideal I(R, {f});
  PresentedAlgebra A{R, I};
  std::vector<Ideal> claims = {I};
  ComponentData cd = components_for(I, &claims);
  Ideal S = singular_locus(A, cd);
  // jacobian ideal (3x^2, 2y) plus the curve equation collapses to (x^2, y)
  CHECK(gb_strings(S) == std::vector<std::string>{"x^2", "y"});
}

TEST_CASE("singular locus of the plane-line union is exactly the crossing") {
  PresentedAlgebra A = plane_line();
  ComponentData cd = components_for(A.defining, nullptr);
  Ideal S = singular_locus(A, cd);
  CHECK(gb_strings(S) == std::vector<std::string>{"z^2", "x", "y"});
  // strictly smaller than the naive V(jacobian_ideal + I): z is not there
  CHECK_FALSE(ideal_member(Polynomial::variable(A.ring, 2), S));
}

TEST_CASE("smooth quadric has an empty singular locus") {
  RingPtr R = Ring::create(7, {"x", "y", "z"});
  Polynomial f = var(R, 0) * var(R, 1) - Polynomial::constant(
                                             R, Scalar::one(R->field()));
  Ideal I(R, {f});
  PresentedAlgebra A{R, I, true, true};
  std::vector<Ideal> claims = {I};
  ComponentData cd = components_for(I, &claims);
  Ideal S = singular_locus(A, cd);
  CHECK(S.is_unit());
}

}  // TEST_SUITE
