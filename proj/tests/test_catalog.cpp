#include <doctest.h>

#include <array>
#include <stdexcept>
#include <string>

#include "calib/catalog.hpp"
#include "calib/forms.hpp"
#include "calib/rational.hpp"

using namespace calib;

namespace {

Rational norm_sq(const Vec& v) {
  Rational s(0);
  for (const Rational& c : v) s += c * c;
  return s;
}

Rational dot(const Vec& u, const Vec& v) {
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

TEST_CASE("catalog construction passes its internal cross-checks") {
  // build_catalog throws std::logic_error if any transcription disagrees with
  // its defining construction; a plain call is therefore already a test.
  CHECK_NOTHROW(build_catalog());

  const CalibrationCatalog& cat = catalog();
  CHECK(cat.phi.dim() == 7);
  CHECK(cat.phi.grade() == 3);
  CHECK(cat.phi.terms().size() == 7);
  for (const auto& [m, c] : cat.phi.terms()) CHECK((c == Rational(1) || c == Rational(-1)));

  CHECK(cat.star_phi == hodge(cat.phi));
  CHECK(cat.psi.dim() == 8);
  CHECK(cat.psi.grade() == 4);
  CHECK(cat.psi.terms().size() == 14);
  CHECK(cat.chi.values() == 7);
  CHECK(cat.tau.values() == 7);

  // psi is self-dual on R^8.
  CHECK(hodge(cat.psi) == cat.psi);
}

TEST_CASE("two-fold cross product realizes the 3-form") {
  SeededTuples rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Vec u = rng.vector(7), v = rng.vector(7), w = rng.vector(7);
    CHECK(dot(cross2(u, v), w) == evaluate(catalog().phi, {u, v, w}));
  }
  Vec e1 = basis_vector(7, 0), e2 = basis_vector(7, 1);
  CHECK(cross2(e1, e1) == Vec(7, Rational(0)));
  CHECK(cross2(e1, e2) == basis_vector(7, 2));
  // Orthogonality: cross2(u,v) is perpendicular to both arguments.
  Vec u = rng.vector(7), v = rng.vector(7);
  CHECK(dot(cross2(u, v), u) == Rational(0));
  CHECK(dot(cross2(u, v), v) == Rational(0));
}

TEST_CASE("triple cross product realizes the 4-form") {
  SeededTuples rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Vec u = rng.vector(8), v = rng.vector(8), w = rng.vector(8), z = rng.vector(8);
    CHECK(dot(triple_cross(u, v, w), z) == evaluate(catalog().psi, {u, v, w, z}));
  }
}

TEST_CASE("octonion multiplication is a composition algebra with unit e0") {
  SeededTuples rng(14);
  Vec e0 = basis_vector(8, 0);

  for (int trial = 0; trial < 20; ++trial) {
    Vec a = rng.vector(8), b = rng.vector(8);
    CHECK(octonion_product(e0, a) == a);
    CHECK(octonion_product(a, e0) == a);
    CHECK(norm_sq(octonion_product(a, b)) == Rational(norm_sq(a) * norm_sq(b)));

    // a * conj(a) = |a|^2 e0.
    Vec n = octonion_product(a, octonion_conjugate(a));
    CHECK(n[0] == norm_sq(a));
    for (int i = 1; i < 8; ++i) CHECK(n[static_cast<std::size_t>(i)] == Rational(0));

    // Conjugation is an involutive anti-automorphism.
    CHECK(octonion_conjugate(octonion_conjugate(a)) == a);
    CHECK(octonion_conjugate(octonion_product(a, b)) ==
          octonion_product(octonion_conjugate(b), octonion_conjugate(a)));

    // Alternativity: the subalgebra generated by one element is associative.
    CHECK(octonion_product(octonion_product(a, a), b) ==
          octonion_product(a, octonion_product(a, b)));
    CHECK(octonion_product(octonion_product(a, b), b) ==
          octonion_product(a, octonion_product(b, b)));
  }

  // Genuinely non-associative: imaginary units from disjoint lines witness it.
  Vec e1 = basis_vector(8, 1), e2 = basis_vector(8, 2), e4 = basis_vector(8, 4);
  CHECK(octonion_product(octonion_product(e1, e2), e4) !=
        octonion_product(e1, octonion_product(e2, e4)));
}

TEST_CASE("fourfold cross product imaginary part evaluates the 4-form system") {
  SeededTuples rng(15);
  const CalibrationCatalog& cat = catalog();
  for (int trial = 0; trial < 10; ++trial) {
    Vec x = rng.vector(8), y = rng.vector(8), z = rng.vector(8), w = rng.vector(8);
    Vec f = fourfold_cross_imaginary(x, y, z, w);
    REQUIRE(f.size() == 7);
    for (int j = 0; j < 7; ++j)
      CHECK(f[static_cast<std::size_t>(j)] ==
            evaluate(cat.tau.comps[static_cast<std::size_t>(j)], {x, y, z, w}));
  }
}

TEST_CASE("pointwise residuals vanish identically on seeded samples") {
  SeededTuples rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    Vec u = rng.vector(7), v = rng.vector(7), w = rng.vector(7);
    CHECK(assoc_residual(u, v, w) == Rational(0));
  }
  for (int trial = 0; trial < 25; ++trial) {
    Vec u = rng.vector(8), v = rng.vector(8), w = rng.vector(8), z = rng.vector(8);
    CHECK(cayley_residual(u, v, w, z) == Rational(0));
  }
}

TEST_CASE("complex structure forms on the three-plus-one splitting") {
  const CalibrationCatalog& cat = catalog();

  // omega^3 = 6 dvol on the complex six of coordinates.
  AlternatingForm omega_cubed = wedge(wedge(cat.su3_omega, cat.su3_omega), cat.su3_omega);
  CHECK(omega_cubed == Rational(6) * basis_form(7, {0, 1, 2, 3, 4, 5}));

  // The (3,0)-form wedges the Kaehler form to zero.
  CHECK(wedge(cat.su3_omega, cat.su3_upsilon_re).is_zero());
  CHECK(wedge(cat.su3_omega, cat.su3_upsilon_im).is_zero());

  // Re and Im parts have equal norm and pair to a volume multiple.
  AlternatingForm mix = wedge(cat.su3_upsilon_re, cat.su3_upsilon_im);
  CHECK_FALSE(mix.is_zero());
  CHECK(wedge(cat.su3_upsilon_re, cat.su3_upsilon_re).is_zero());

  // The model 3-form decomposes against the splitting.
  CHECK(cat.phi == cat.su3_upsilon_re + wedge(cat.su3_alpha, cat.su3_omega));
}

TEST_CASE("self-dual triple assembles the 4-form and violations are rejected") {
  const CalibrationCatalog& cat = catalog();
  CHECK(build_spin7_from_sd_triple(cat.sd_triple) == cat.psi);

  for (const AlternatingForm& o : cat.sd_triple) CHECK(hodge(o) == o);

  std::array<AlternatingForm, 3> bad = cat.sd_triple;
  bad[1] = Rational(2) * bad[1];
  CHECK_THROWS_AS(build_spin7_from_sd_triple(bad), std::invalid_argument);
  try {
    build_spin7_from_sd_triple(bad);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
}

TEST_CASE("seeded tuple stream is deterministic with bounded entries") {
  SeededTuples a(42), b(42), c(43);
  Vec va = a.vector(7), vb = b.vector(7), vc = c.vector(7);
  CHECK(va == vb);
  CHECK(va != vc);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v = a.vector(8);
    for (const Rational& q : v) {
      CHECK(q.get_den() <= 4);
      CHECK(q >= Rational(-9));
      CHECK(q <= Rational(9));
    }
  }
}
