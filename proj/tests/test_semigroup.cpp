#include <set>

#include "doctest.h"
#include "gelfand/involutions.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/partitions.hpp"
#include "gelfand/semigroup.hpp"

using namespace gelfand;

namespace {

std::set<std::size_t> left_ideal(FiniteSemigroup const& s, std::size_t a) {
  std::set<std::size_t> out{a};
  for (std::size_t x = 0; x < s.size(); ++x) out.insert(s.product(x, a));
  return out;
}

std::set<std::size_t> right_ideal(FiniteSemigroup const& s, std::size_t a) {
  std::set<std::size_t> out{a};
  for (std::size_t x = 0; x < s.size(); ++x) out.insert(s.product(a, x));
  return out;
}

std::set<std::size_t> two_sided(FiniteSemigroup const& s, std::size_t a) {
  std::set<std::size_t> out;
  for (auto r : right_ideal(s, a)) {
    for (auto l : left_ideal(s, r)) out.insert(l);
  }
  return out;
}

// Same class in the library iff the brute-force ideals agree.
template <typename Ideal>
void check_relation(FiniteSemigroup const& s, std::vector<std::size_t> const& cls,
                    Ideal ideal) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      CHECK((cls[a] == cls[b]) == (ideal(s, a) == ideal(s, b)));
    }
  }
}

std::size_t count_distinct(std::vector<std::size_t> const& v) {
  return std::set<std::size_t>(v.begin(), v.end()).size();
}

std::vector<RatMatrix> rational(std::vector<IntMatrix> const& ms) {
  std::vector<RatMatrix> out;
  for (auto const& m : ms) out.push_back(to_rational(m));
  return out;
}

void check_green_by_brute_force(FiniteSemigroup const& s) {
  auto g = green_relations(s);
  check_relation(s, g.l_class, left_ideal);
  check_relation(s, g.r_class, right_ideal);
  check_relation(s, g.j_class, two_sided);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      bool h = g.l_class[a] == g.l_class[b] && g.r_class[a] == g.r_class[b];
      CHECK((g.h_class[a] == g.h_class[b]) == h);
      // finite: D = J
      CHECK((g.d_class[a] == g.d_class[b]) == (g.j_class[a] == g.j_class[b]));
      auto ja = two_sided(s, a), jb = two_sided(s, b);
      bool sub = std::includes(jb.begin(), jb.end(), ja.begin(), ja.end());
      CHECK(g.j_leq(a, b) == sub);
    }
  }
  std::vector<std::size_t> idem;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s.product(a, a) == a) idem.push_back(a);
  }
  CHECK(g.idempotents == idem);
  CHECK(g.l_count == count_distinct(g.l_class));
  CHECK(g.d_count == count_distinct(g.d_class));
}

void check_brandt_law(SemigroupModel const& model) {
  auto const& s = model.semigroup();
  auto const& g = model.green();
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto bx = model.brandt(x);
    if (!bx) continue;
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (g.d_class[y] != g.d_class[x]) continue;
      auto by = model.brandt(y);
      auto xy = s.product(x, y);
      auto p  = brandt_product(*bx, *by);
      if (g.d_class[xy] == g.d_class[x]) {
        REQUIRE(p.has_value());
        CHECK(*model.brandt(xy) == *p);
      } else {
        CHECK_FALSE(p.has_value());
      }
    }
  }
}

}  // namespace

TEST_CASE("Green's relations on IS_2") {
  IsnAdapter a(2);
  auto const& s = a.semigroup();
  CHECK(s.size() == 7);
  auto g = green_relations(s);
  CHECK(g.d_count == 3);
  std::multiset<std::size_t> sizes;
  for (std::size_t d = 0; d < g.d_count; ++d) {
    sizes.insert(g.members_of_d(d).size());
    CHECK(g.d_is_regular(d));
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 4});
  check_green_by_brute_force(s);
  // rank orders the J-classes
  auto zero = a.index_of(PartialInjection({0, 0}));
  auto id   = a.index_of(PartialInjection({1, 2}));
  CHECK(g.j_less(zero, id));
  CHECK_FALSE(g.j_less(id, zero));
}

TEST_CASE("Green's relations by brute force") {
  check_green_by_brute_force(IsnAdapter(3).semigroup());
  check_green_by_brute_force(FStarAdapter(3).semigroup());
  check_green_by_brute_force(left_zero_semigroup(3).semigroup());
}

TEST_CASE("a group is one D-class") {
  auto s = FiniteSemigroup::from_elements(
      all_permutations(3), [](auto const& x, auto const& y) { return x * y; });
  auto g = green_relations(s);
  CHECK(g.d_count == 1);
  CHECK(g.h_count == 1);
  CHECK(g.idempotents.size() == 1);
}

TEST_CASE("L and R classes of IS_3 follow domain and image") {
  IsnAdapter a(3);
  auto const& el = a.elements();
  auto        g  = green_relations(a.semigroup());
  std::set<std::size_t> rank1_l;
  for (std::size_t x = 0; x < el.size(); ++x) {
    if (el[x].rank() == 1) rank1_l.insert(g.l_class[x]);
    for (std::size_t y = 0; y < el.size(); ++y) {
      CHECK((g.l_class[x] == g.l_class[y]) == (el[x].domain() == el[y].domain()));
      CHECK((g.r_class[x] == g.r_class[y]) == (el[x].image() == el[y].image()));
      CHECK((g.d_class[x] == g.d_class[y]) == (el[x].rank() == el[y].rank()));
    }
  }
  CHECK(rank1_l.size() == 3);
}

TEST_CASE("IS_n certificates") {
  for (std::size_t n = 0; n <= 3; ++n) {
    IsnAdapter a(n);
    auto const& s    = a.semigroup();
    auto        g    = green_relations(s);
    auto        cert = trace_certificate(s, g, a);
    CHECK(cert.classes.size() == n + 1);
    for (std::size_t x = 0; x < s.size(); ++x) {
      REQUIRE(cert.trace_inverse[x].has_value());
      CHECK(*cert.trace_inverse[x] == a.index_of(a.elements()[x].inverse()));
    }
    for (auto const& c : cert.classes) {
      auto const& e = a.elements()[c.group.idempotent];
      CHECK(c.m == binomial(n, e.rank()));
      CHECK(c.v.front() == c.group.idempotent);
      for (std::size_t k = 0; k < c.m; ++k) {
        CHECK(s.product(c.v[k], c.u[k]) == c.group.idempotent);
        CHECK(s.product(c.u[k], c.v[k]) == c.class_idempotents[k]);
      }
    }
  }
}

TEST_CASE("F*_2 certificate") {
  FStarAdapter a(2);
  CHECK(a.semigroup().size() == 3);
  SemigroupModel m(a);
  CHECK(m.certificate().classes.size() == 2);
  CHECK(m.dimension() == 3);
  CHECK(m.expected_dimension() == 3);
  CHECK(m.expected_simple_count() == 3);
}

TEST_CASE("left-zero semigroup fails the trace hypothesis") {
  auto lz = left_zero_semigroup(2);
  try {
    SemigroupModel m(lz);
    FAIL("expected a hypothesis error");
  } catch (HypothesisError const& e) {
    CHECK(e.kind() == HypothesisKind::trace_not_inverse);
    CHECK(to_string(e.kind()) == "trace not inverse");
  }
}

TEST_CASE("associativity is checked") {
  FiniteSemigroup bad(2, {1, 1, 0, 0});
  CHECK(bad.associativity_failure().has_value());
  TableAdapter t("bad", bad, {});
  try {
    SemigroupModel m(t);
    FAIL("expected a hypothesis error");
  } catch (HypothesisError const& e) {
    CHECK(e.kind() == HypothesisKind::not_associative);
  }
  CHECK_FALSE(IsnAdapter(2).semigroup().associativity_failure().has_value());
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1}), std::invalid_argument);
}

TEST_CASE("Brandt coordinates") {
  IsnAdapter     a(2);
  SemigroupModel m(a);
  auto           id = m.brandt(a.index_of(PartialInjection({1, 2})));
  REQUIRE(id.has_value());
  CHECK(*id == BrandtCoord{1, Permutation::identity(2), 1});
  auto sw = m.brandt(a.index_of(PartialInjection({2, 1})));
  CHECK(sw->y == Permutation({2, 1}));
  // rank 1: four elements fill the 2x2 grid
  std::set<std::pair<std::size_t, std::size_t>> grid;
  for (auto const& x : a.elements()) {
    if (x.rank() == 1) {
      auto b = m.brandt(a.index_of(x));
      CHECK(b->y == Permutation::identity(1));
      grid.emplace(b->a, b->b);
    }
  }
  CHECK(grid.size() == 4);
  CHECK(brandt_product({1, Permutation({2, 1}), 2}, {2, Permutation({2, 1}), 1})
        == BrandtCoord{1, Permutation::identity(2), 1});
  CHECK_FALSE(brandt_product({1, Permutation({1}), 2}, {1, Permutation({1}), 2})
                  .has_value());
  check_brandt_law(m);
  check_brandt_law(SemigroupModel(IsnAdapter(3)));
  FStarAdapter f(3);
  check_brandt_law(SemigroupModel(f));
}

TEST_CASE("action examples") {
  IsnAdapter     a(3);
  SemigroupModel m(a);
  auto idx = [&](std::vector<int> v) { return a.index_of(PartialInjection(v)); };
  // a permutation conjugates a full-rank involution, with a sign
  auto r = m.act(idx({2, 1, 3}), idx({2, 1, 3}));
  REQUIRE(r.has_value());
  CHECK(r->element == idx({2, 1, 3}));
  CHECK(r->sign == -1);
  auto t = m.act(idx({2, 3, 1}), idx({2, 1, 3}));
  REQUIRE(t.has_value());
  CHECK(t->element == idx({1, 3, 2}));
  // dropping rank sends the vector to zero
  CHECK_FALSE(m.act(idx({1, 0, 3}), idx({2, 1, 3})).has_value());
  // a rank-1 involution moved by a partial bijection
  auto u = m.act(idx({3, 0, 0}), idx({1, 0, 0}));
  REQUIRE(u.has_value());
  CHECK(u->element == idx({0, 0, 3}));
  CHECK(u->sign == 1);
  CHECK_THROWS_AS(m.act(0, idx({2, 3, 1})), std::invalid_argument);
}

TEST_CASE("IS_n models") {
  std::vector<std::size_t> dims{1, 2, 5, 14, 43};
  for (std::size_t n = 0; n <= 4; ++n) {
    IsnAdapter     a(n);
    SemigroupModel m(a);
    CHECK(m.dimension() == dims[n]);
    CHECK(m.expected_dimension() == dims[n]);
    std::size_t simples = 0;
    for (std::size_t k = 0; k <= n; ++k) simples += partition_count(k);
    CHECK(m.expected_simple_count() == simples);
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    IsnAdapter     a(n);
    SemigroupModel m(a);
    CHECK(commutant_dim(rational(m.matrices())) == m.expected_simple_count());
  }
}

TEST_CASE("F*_n models") {
  std::vector<std::size_t> dims{1, 1, 3, 8};
  for (std::size_t n = 1; n <= 3; ++n) {
    FStarAdapter   a(n);
    SemigroupModel m(a);
    CHECK(m.dimension() == dims[n]);
    CHECK(m.expected_dimension() == dims[n]);
  }
  FStarAdapter   a(3);
  SemigroupModel m(a);
  CHECK(m.expected_simple_count() == 5);
  CHECK(commutant_dim(rational(m.matrices())) == 5);
}

TEST_CASE("matrices multiply like the semigroup") {
  IsnAdapter   isn(3);
  FStarAdapter fstar(3);
  for (SemigroupAdapter const* a : {static_cast<SemigroupAdapter const*>(&isn),
                                    static_cast<SemigroupAdapter const*>(&fstar)}) {
    SemigroupModel m(*a);
    auto const&    s    = m.semigroup();
    auto           mats = semigroup_model_matrices(m);
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        CHECK(mats[s.product(x, y)] == mats[x] * mats[y]);
      }
    }
    auto mod = module_axiom_check(m);
    CHECK(mod.passed());
    CHECK(mod.instances == s.size() * s.size() * m.dimension());
    CHECK(sign_cocycle_check(m).passed());
    CHECK(zero_propagation_check(m).passed());
  }
}

TEST_CASE("sampled triples") {
  IsnAdapter     a(3);
  SemigroupModel m(a);
  TripleSampling small{500, 9};
  auto           c = module_axiom_check(m, small);
  CHECK(c.instances == 500);
  CHECK(c.passed());
  auto again = module_axiom_check(m, small);
  CHECK(again.applicable == c.applicable);
}

TEST_CASE("semigroup tables from JSON") {
  auto t = TableAdapter::from_json_text(R"({"size": 2, "table": [0, 1, 1, 0],
      "groups": [{"idempotent": 0, "block_sizes": [2],
                  "map": [[0, [1, 2]], [1, [2, 1]]]}]})");
  SemigroupModel m(t);
  CHECK(m.dimension() == 2);
  CHECK(m.expected_simple_count() == 2);
  CHECK(commutant_dim(rational(m.matrices())) == 2);

  // trivial groups need no data
  auto chain = TableAdapter::from_json_text(R"({"size": 2, "table": [0, 1, 1, 1]})");
  SemigroupModel mc(chain);
  CHECK(mc.dimension() == 2);

  auto no_data = TableAdapter::from_json_text(R"({"size": 2, "table": [0, 1, 1, 0]})");
  try {
    SemigroupModel bad(no_data);
    FAIL("expected a hypothesis error");
  } catch (HypothesisError const& e) {
    CHECK(e.kind() == HypothesisKind::no_group_data);
  }

  // not a homomorphism
  auto wrong = TableAdapter::from_json_text(R"({"size": 2, "table": [0, 1, 1, 0],
      "groups": [{"idempotent": 0, "block_sizes": [2],
                  "map": [[0, [2, 1]], [1, [1, 2]]]}]})");
  try {
    SemigroupModel bad(wrong);
    FAIL("expected a hypothesis error");
  } catch (HypothesisError const& e) {
    CHECK(e.kind() == HypothesisKind::bad_group_data);
  }

  CHECK_THROWS_AS(TableAdapter::from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(TableAdapter::from_json_text(R"({"size": 2})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(TableAdapter::from_file("/nonexistent.json"),
                  std::invalid_argument);
}
