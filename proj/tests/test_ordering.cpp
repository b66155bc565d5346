#include <doctest.h>

#include <thread>

#include "ncq/ordering/orderer.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"
#include "support/systems.hpp"

using namespace ncq;
using test::gen;
using test::I;
using test::scalar;

namespace {

EpsSeries word_series(const Word& w, std::size_t n) { return EpsSeries(FreePoly(w), n); }

NormalSeries normal(const std::vector<std::pair<std::vector<std::uint32_t>, GaussianRational>>& layer0,
                    std::size_t n) {
  NormalSeries s(n);
  for (const auto& [e, c] : layer0) s.layer(0).add_term(NormalMonomial(e), c);
  return s;
}

// A 3-generator system whose C_ij are arbitrary non-normal-ordered
// polynomials, standing in for symbolic commutators.
CommutationSystem generic_three(std::size_t n) {
  CommutationSystem s(3, n);
  s.set_commutator(1, 2, word_series(Word{3, 1}, n) * GaussianRational(2) + scalar(I(), n));
  s.set_commutator(1, 3, word_series(Word{2, 2, 1}, n) - EpsSeries::epsilon(n) * gen(3, n));
  s.set_commutator(2, 3, word_series(Word{3, 2}, n) + word_series(Word{1}, n) * GaussianRational::from_fraction(1, 2));
  return s;
}

}  // namespace

TEST_CASE("lowest factor decomposition") {
  CHECK(lowest_factor_decomposition(Word{3, 2, 1}) == Decomposition{Word{3, 2}, 1, Word{}});
  CHECK(lowest_factor_decomposition(Word{1, 2, 1}) == Decomposition{Word{}, 1, Word{2, 1}});
  CHECK(lowest_factor_decomposition(Word{2, 3, 2}) == Decomposition{Word{}, 2, Word{3, 2}});
  CHECK_THROWS_AS(lowest_factor_decomposition(Word{}), std::invalid_argument);

  test::Random rnd(3);
  for (int k = 0; k < 200; ++k) {
    Word w = rnd.word(4, 1, 6);
    auto d = lowest_factor_decomposition(w);
    CHECK(d.g * Word{d.i} * d.h == w);
    for (Letter l : d.g.letters()) CHECK(l > d.i);
    for (Letter l : d.h.letters()) CHECK(l >= d.i);
  }
}

TEST_CASE("cbrak examples") {
  auto fs = test::fuzzy_sphere(2);
  // g = z, x_i = x: C_zx = i y
  CHECK(cbrak(fs, Word{3}, 1) == gen(2, 2) * I());
  CHECK(cbrak(fs, Word{}, 1).is_zero());

  auto h = test::heisenberg(2);
  EpsSeries expected = gen(2, 2) * GaussianRational(0, -2);
  CHECK(cbrak(h, Word{2, 2}, 1) == expected);
  CHECK(cbrak(h, Word{2, 2}, 1) == test::move_left_correction(h, Word{2, 2}, 1));
}

TEST_CASE("cbrak rejects letters not above x_i") {
  auto fs = test::fuzzy_sphere(2);
  try {
    cbrak(fs, Word{3, 1}, 1);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("letter x") != std::string::npos);
  }
  CHECK_THROWS_AS(cbrak(fs, Word{2}, 2), std::invalid_argument);
}

TEST_CASE("cbrak equals the adjacent-transposition correction") {
  test::Random rnd(44);
  auto sys = generic_three(3);
  for (int k = 0; k < 200; ++k) {
    Word g = rnd.word_above(1, 3, 5);
    CHECK(cbrak(sys, g, 1) == test::move_left_correction(sys, g, 1));
  }
}

TEST_CASE("phi of x3x2x1 matches the lowest-first reordering") {
  for (const auto& sys : {test::fuzzy_sphere(3), generic_three(3), test::broken(3)}) {
    Orderer ord(sys);
    const std::size_t n = sys.order();
    EpsSeries expected = word_series(Word{1, 2, 3}, n) +
                         (sys.c(3, 2).left_mul(Word{1}) + sys.c(2, 1).left_mul(Word{3}) +
                          sys.c(3, 1).right_mul(Word{2}))
                             .shifted(1);
    CHECK(ord.phi(Word{3, 2, 1}) == expected);
  }
}

TEST_CASE("phi and delta examples") {
  Orderer h(test::heisenberg(2));
  CHECK(h.phi(Word{2, 1}) == word_series(Word{1, 2}, 2) - EpsSeries::epsilon(2) * I());
  CHECK(h.delta(word_series(Word{2, 1}, 2)) ==
        word_series(Word{1, 2}, 2) - word_series(Word{2, 1}, 2) - EpsSeries::epsilon(2) * I());

  Orderer fs(test::fuzzy_sphere(2));
  CHECK(fs.phi(Word{1, 2, 3}) == word_series(Word{1, 2, 3}, 2));
  CHECK(fs.delta(word_series(Word{1, 2, 3}, 2)).is_zero());
  CHECK(fs.phi(Word{}) == scalar(1, 2));
  CHECK(fs.delta(scalar(1, 2)).is_zero());

  // the e-tail passes through phi untouched
  EpsSeries tail = EpsSeries::epsilon(2) * word_series(Word{3, 2, 1}, 2);
  CHECK(fs.phi(tail) == tail);
}

TEST_CASE("phi_inf of zyx on the fuzzy sphere") {
  // x1x2x3 + e(x1 C32 + x3 C21 + C31 x2) with C32 = -i x, C21 = -i z, C31 = i y
  Orderer fs(test::fuzzy_sphere(1));
  auto got = fs.phi_inf(Word{3, 2, 1});
  NormalSeries expected(1);
  expected.layer(0).add_term(NormalMonomial({1, 1, 1}), 1);
  expected.layer(1).add_term(NormalMonomial({0, 2}), I());
  expected.layer(1).add_term(NormalMonomial({2}), -I());
  expected.layer(1).add_term(NormalMonomial({0, 0, 2}), -I());
  CHECK(got == expected);
  CHECK(got.to_string({"x", "y", "z"}) == "x*y*z + e*(-i*x^2 + i*y^2 - i*z^2)");

  Orderer fs4(test::fuzzy_sphere(4));
  CHECK(fs4.phi_inf(Word{3, 2, 1}).truncated(1) == expected);
}

TEST_CASE("phi_inf of qp on the Heisenberg algebra") {
  Orderer h(test::heisenberg(3));
  auto got = h.phi_inf(Word{2, 1});
  NormalSeries expected = normal({{{1, 1}, 1}}, 3);
  expected.layer(1).add_term(NormalMonomial{}, -I());
  CHECK(got == expected);
  CHECK(got.to_string({"p", "q"}) == "p*q - i*e");
}

TEST_CASE("phi_r examples") {
  Orderer h(test::heisenberg(3));
  auto f = word_series(Word{2, 2, 1, 1}, 3);
  CHECK(h.phi_r(f, 0) == f);
  CHECK(h.phi_r(f, 1) == h.phi(f));

  // q^2 p^2 = p^2 q^2 - 4 i e p q - 2 e^2
  auto oracle = test::weyl_normal_order(2, 2, -I(), 3);
  auto r2 = h.phi_r(f, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (const auto& [w, c] : r2.layer(r).terms()) CHECK(w.is_normal_ordered());
    CHECK(NormalSeries::from_normal_ordered(r2.truncated(1)).layer(r) == oracle.layer(r));
  }
  CHECK(h.phi_inf(f) == oracle);
  CHECK(oracle.layer(1).coefficient(NormalMonomial({1, 1})) == GaussianRational(0, -4));
  CHECK(oracle.layer(2).coefficient(NormalMonomial{}) == GaussianRational(-2));
}

TEST_CASE("Heisenberg phi_inf agrees with the closed Weyl formula") {
  Orderer h(test::heisenberg(4));
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b) {
      std::vector<Letter> letters(a, 2);
      letters.insert(letters.end(), b, 1);
      CHECK(h.phi_inf(Word(letters)) == test::weyl_normal_order(a, b, -I(), 4));
    }
}

TEST_CASE("mu examples") {
  Orderer h(test::heisenberg(3));
  auto p = lift_normal(CommPoly(NormalMonomial::generator(1)), 3);
  auto q = lift_normal(CommPoly(NormalMonomial::generator(2)), 3);
  auto one = lift_normal(CommPoly(GaussianRational(1)), 3);
  NormalSeries expected = normal({{{1, 1}, 1}}, 3);
  expected.layer(1).add_term(NormalMonomial{}, -I());
  CHECK(h.mu(q, p) == expected);
  CHECK(h.mu(p, q) == normal({{{1, 1}, 1}}, 3));
  CHECK(h.mu(one, q) == q);
  CHECK(h.mu(q, one) == q);
  CHECK_THROWS_AS(h.mu(p, lift_normal(CommPoly(), 2)), IncompatibleOrder);
}

TEST_CASE("hexagon difference") {
  // constant commutators: routes agree
  CommutationSystem flat(3, 3);
  flat.set_commutator(1, 2, scalar(I(), 3));
  flat.set_commutator(1, 3, scalar(2, 3));
  flat.set_commutator(2, 3, scalar(GaussianRational::from_fraction(1, 3, 1, 1), 3));
  CHECK(hexagon_difference(flat).is_zero());

  for (const auto& sys : {test::fuzzy_sphere(3), test::broken(3), generic_three(3)}) {
    const std::size_t n = sys.order();
    EpsSeries jacobi = commutator(gen(1, n), sys.c(3, 2)) + commutator(gen(3, n), sys.c(2, 1)) +
                       commutator(sys.c(3, 1), gen(2, n));
    CHECK(hexagon_difference(sys) == jacobi.shifted(1));
    Orderer ord(sys);
    CHECK(hexagon_routes(sys).lowest_first == ord.phi(Word{3, 2, 1}));
  }

  // each bracket is [x_k, c x_k] on the fuzzy sphere
  CHECK(hexagon_difference(test::fuzzy_sphere(3)).is_zero());
  CHECK(hexagon_difference(test::sphere_torus(2, 3)).is_zero());
  // [x1, x2] = x2, [x1, x3] = x3: the difference is 2e[x2, x3]
  CommutationSystem lie(3, 3);
  lie.set_commutator(1, 2, gen(2, 3));
  lie.set_commutator(1, 3, gen(3, 3));
  CHECK(hexagon_difference(lie) == commutator(gen(2, 3), gen(3, 3)).shifted(1) * GaussianRational(2));
  CHECK(Orderer(lie).phi_inf(hexagon_difference(lie)).is_zero());
  Orderer br(test::broken(3));
  CHECK(!br.phi_inf(hexagon_difference(test::broken(3))).is_zero());
  CHECK_THROWS_AS(hexagon_difference(test::heisenberg()), std::invalid_argument);
}

TEST_CASE("phi is linear") {
  test::Random rnd(101);
  Orderer ord(generic_three(2));
  for (int k = 0; k < 200; ++k) {
    auto f = rnd.series(3, 2, 3, 4), g = rnd.series(3, 2, 3, 4);
    auto a = rnd.coefficient(), b = rnd.coefficient();
    CHECK(ord.phi(f * a + g * b) == ord.phi(f) * a + ord.phi(g) * b);
  }
}

TEST_CASE("phi is the identity on normal-ordered words") {
  test::Random rnd(102);
  Orderer ord(test::sphere_torus(2, 2));
  for (int k = 0; k < 200; ++k) {
    Word w = rnd.word(3, 0, 6).sorted();
    auto s = word_series(w, 2);
    CHECK(ord.phi(s) == s);
    CHECK(ord.delta(s).is_zero());
    CHECK(ord.phi_inf(w) == NormalSeries::from_normal_ordered(s));
  }
}

TEST_CASE("phi leaves layer 0 normal ordered and only e-residue elsewhere") {
  test::Random rnd(103);
  Orderer ord(generic_three(2));
  for (int k = 0; k < 200; ++k) {
    Word w = rnd.word(3, 1, 6);
    auto s = ord.phi(w);
    CHECK(s.layer(0) == FreePoly(w.sorted()));
    auto inf = ord.phi_inf(w);
    CHECK(inf.layer(0) == CommPoly(NormalMonomial::from_word(w)));
  }
}

TEST_CASE("phi_inf preserves the classical projection and is idempotent") {
  test::Random rnd(104);
  Orderer ord(test::sphere_torus(2, 2));
  for (int k = 0; k < 200; ++k) {
    auto f = rnd.series(3, 2, 3, 4);
    auto once = ord.phi_inf(f);
    CHECK(project_classical(once) == project_classical(f));
    CHECK(ord.phi_inf(once.embed()) == once);
  }
}

TEST_CASE("Leibniz rule for cbrak") {
  test::Random rnd(105);
  auto sys = generic_three(3);
  for (int k = 0; k < 200; ++k) {
    Word f = rnd.word_above(1, 3, 3), g = rnd.word_above(1, 3, 3);
    auto lhs = cbrak(sys, f * g, 1);
    auto rhs = cbrak(sys, f, 1).right_mul(g) + cbrak(sys, g, 1).left_mul(f);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("phi_r stabilizes into phi_inf") {
  test::Random rnd(106);
  Orderer ord(test::sphere_torus(2, 3));
  for (int k = 0; k < 60; ++k) {
    auto f = rnd.series(3, 3, 2, 4);
    std::vector<EpsSeries> iterates;
    for (std::size_t r = 0; r <= 5; ++r) iterates.push_back(ord.phi_r(f, r));
    for (std::size_t r = 0; r <= 5; ++r)
      for (std::size_t s = r; s <= 5; ++s)
        for (std::size_t l = 0; l < std::min<std::size_t>(r, 4); ++l) CHECK(iterates[r].layer(l) == iterates[s].layer(l));
    for (std::size_t r = 0; r <= 4; ++r)
      for (std::size_t l = 0; l < r; ++l)
        for (const auto& [w, c] : iterates[r].layer(l).terms()) CHECK(w.is_normal_ordered());
    CHECK(NormalSeries::from_normal_ordered(iterates[4]) == ord.phi_inf(f));
    CHECK(iterates[5] == iterates[4]);
  }
}

TEST_CASE("e commutes through the ordering maps") {
  test::Random rnd(107);
  Orderer ord(test::fuzzy_sphere(3));
  for (int k = 0; k < 100; ++k) {
    auto f = rnd.series(3, 3, 3, 4);
    auto ef = f.shifted(1);
    CHECK(ord.phi_inf(ef) == ord.phi_inf(f).shifted(1));
    for (std::size_t r = 1; r <= 4; ++r) CHECK(ord.phi_r(ef, r) == ord.phi_r(f, r - 1).shifted(1));
  }
}

TEST_CASE("phi_inf of a commutator is e phi_inf of C") {
  for (const auto& sys : {test::fuzzy_sphere(3), test::sphere_torus(2, 3), test::manin(3), generic_three(3)}) {
    Orderer ord(sys);
    const auto n = static_cast<Letter>(sys.size());
    for (Letter i = 1; i <= n; ++i)
      for (Letter j = 1; j <= n; ++j)
        CHECK(ord.phi_inf(commutator(gen(i, 3), gen(j, 3))) == ord.phi_inf(sys.c(i, j)).shifted(1));
  }
}

TEST_CASE("degree grading of phi_inf layers") {
  test::Random rnd(108);
  Orderer fs(test::fuzzy_sphere(4));
  Orderer h(test::heisenberg(4));
  for (int k = 0; k < 100; ++k) {
    Word w = rnd.word(3, 1, 5);
    auto s = fs.phi_inf(w);
    for (std::size_t r = 0; r <= 4 && r <= w.size(); ++r)
      CHECK(s.layer(r).is_homogeneous(static_cast<std::uint32_t>(w.size() - r)));
    Word v = rnd.word(2, 1, 5);
    auto t = h.phi_inf(v);
    for (std::size_t r = 0; r <= 4; ++r) {
      if (2 * r <= v.size())
        CHECK(t.layer(r).is_homogeneous(static_cast<std::uint32_t>(v.size() - 2 * r)));
      else
        CHECK(t.layer(r).is_zero());
    }
  }
}

TEST_CASE("mu is unital and e-linear") {
  test::Random rnd(109);
  Orderer ord(test::sphere_torus(2, 3));
  auto one = lift_normal(CommPoly(GaussianRational(1)), 3);
  for (int k = 0; k < 100; ++k) {
    auto f = rnd.normal_series(3, 3, 2, 3), g = rnd.normal_series(3, 3, 2, 3);
    CHECK(ord.mu(one, f) == f);
    CHECK(ord.mu(f, one) == f);
    CHECK(ord.mu(f.shifted(1), g) == ord.mu(f, g).shifted(1));
    CHECK(ord.mu(f, g.shifted(1)) == ord.mu(f, g).shifted(1));
  }
}

TEST_CASE("memo table is invisible") {
  test::Random rnd(110);
  Orderer cached(test::sphere_torus(2, 3));
  Orderer tiny(test::sphere_torus(2, 3), 4);
  Orderer none(test::sphere_torus(2, 3), 0);
  for (int k = 0; k < 40; ++k) {
    Word w = rnd.word(3, 1, 5);
    auto a = cached.phi_inf(w);
    CHECK(tiny.phi_inf(w) == a);
    CHECK(none.phi_inf(w) == a);
    CHECK(cached.phi_inf(w) == a);
  }
  CHECK(none.cache_stats().phi_entries == 0);
  CHECK(tiny.cache_stats().phi_entries <= 4);
  CHECK(cached.cache_stats().hits > 0);
}

TEST_CASE("orderer is safe to share between threads") {
  test::Random rnd(111);
  std::vector<Word> words;
  for (int k = 0; k < 64; ++k) words.push_back(rnd.word(3, 1, 6));
  Orderer reference(test::sphere_torus(2, 3), 0);
  std::vector<NormalSeries> expected;
  for (const auto& w : words) expected.push_back(reference.phi_inf(w));

  Orderer shared(test::sphere_torus(2, 3), 256);
  std::vector<std::vector<NormalSeries>> got(4);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (const auto& w : words) got[t].push_back(shared.phi_inf(w));
    });
  for (auto& th : pool) th.join();
  for (const auto& g : got) CHECK(g == expected);
}

TEST_CASE("commutation system stores C_ij antisymmetrically") {
  auto fs = test::fuzzy_sphere(2);
  CHECK(fs.c(3, 1) == gen(2, 2) * I());
  CHECK(fs.c(1, 3) == -(gen(2, 2) * I()));
  CHECK(fs.c(2, 2).is_zero());
  CHECK(fs.table().size() == 3);
  CHECK(fs.table().count({1, 3}) == 1);
  CHECK_THROWS_AS(fs.c(0, 1), std::out_of_range);
  CHECK_THROWS_AS(fs.set_commutator(1, 1, scalar(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(fs.set_commutator(1, 2, gen(4, 2)), std::out_of_range);
  CHECK_THROWS_AS(fs.set_commutator(1, 2, gen(1, 1)), IncompatibleOrder);
  CHECK(test::heisenberg().is_constant());
  CHECK(!fs.is_constant());
}
