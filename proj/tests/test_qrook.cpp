#include "doctest.h"
#include "gelfand/hecke_model.hpp"
#include "gelfand/involutions.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/partitions.hpp"
#include "gelfand/qrook_model.hpp"
#include "gelfand/semigroup.hpp"

using namespace gelfand;

namespace {

std::vector<RatMatrix> at(QRookModelRep const& rep, Rational const& q0) {
  std::vector<RatMatrix> out;
  for (auto const& m : rep.generator_set().matrices) {
    out.push_back(specialize(m, q0));
  }
  return out;
}

std::size_t rook_count(std::size_t n) {
  std::size_t total = 0;
  for (auto const& x : all_partial_injections(n)) {
    if (x.domain() == x.image() && x * x == PartialInjection::identity_on(n, x.domain())) {
      ++total;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("psi_embed fills the complement with fixed points") {
  PartialInjection w({0, 4, 0, 2});
  CHECK(psi_embed({2, 4}, w) == Permutation({1, 4, 3, 2}));
  CHECK(psi_embed({4, 2}, w) == Permutation({1, 4, 3, 2}));
  CHECK_THROWS_AS(psi_embed({1, 2, 4}, w), std::invalid_argument);
}

TEST_CASE("T and P on single basis vectors") {
  QPoly const q = QPoly::q();
  // neither i nor i+1 in the domain
  auto a = qrook_T_act(1, PartialInjection({0, 0, 3}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].second == q);
  // only i in the domain
  auto b = qrook_T_act(1, PartialInjection({1, 0, 0}));
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == PartialInjection({0, 2, 0}));
  CHECK(b[0].second == QPoly(1));
  // only i+1 in the domain
  auto c = qrook_T_act(1, PartialInjection({0, 2, 0}));
  REQUIRE(c.size() == 2);
  CHECK(c[0].first == PartialInjection({1, 0, 0}));
  CHECK(c[0].second == q);
  CHECK(c[1].second == q - QPoly(1));
  // both: goes through the Hecke action on the domain
  auto d = qrook_T_act(1, PartialInjection({2, 1, 0}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].second == QPoly(-1));
  CHECK_THROWS_AS(circ_act(1, PartialInjection({1, 0, 0})), std::invalid_argument);
  CHECK(qrook_P_act(1, PartialInjection({0, 2, 3})).has_value());
  CHECK_FALSE(qrook_P_act(2, PartialInjection({0, 2, 3})).has_value());
  CHECK(qrook_P_act(3, PartialInjection({0, 0, 0})).has_value());
}

TEST_CASE("dimension against brute force") {
  for (std::size_t n = 1; n <= 5; ++n) {
    QRookModelRep rep(n);
    CHECK(rep.dimension() == rook_count(n));
  }
  CHECK(QRookModelRep(4).dimension() == 43);
  CHECK_THROWS_AS(QRookModelRep(0), std::invalid_argument);
}

TEST_CASE("relations by direct multiplication") {
  QPoly const q = QPoly::q();
  for (std::size_t n = 1; n <= 5; ++n) {
    QRookModelRep rep(n);
    auto const    I = QPolyMatrix::identity(rep.dimension());
    for (std::size_t i = 1; i < n; ++i) {
      auto const& T = rep.T(i);
      CHECK(T * T == (q - QPoly(1)) * T + q * I);
      if (i + 1 < n) {
        CHECK(T * rep.T(i + 1) * T == rep.T(i + 1) * T * rep.T(i + 1));
      }
      for (std::size_t j = i + 2; j < n; ++j) {
        CHECK(T * rep.T(j) == rep.T(j) * T);
      }
      for (std::size_t j = 1; j <= n; ++j) {
        if (i < j) {
          CHECK(T * rep.P(j) == q * rep.P(j));
          CHECK(rep.P(j) * T == q * rep.P(j));
        } else if (j < i) {
          CHECK(T * rep.P(j) == rep.P(j) * T);
        }
      }
      CHECK(rep.P(i + 1)
            == rep.P(i) * T * rep.P(i) - (q - QPoly(1)) * rep.P(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(rep.P(i) * rep.P(i) == rep.P(i));
    }
    auto gens = rep.generator_set();
    for (auto const& rel : hecke_relations(n)) {
      CHECK(check_relation(gens, rel.lhs, rel.rhs).passed);
    }
    for (auto const& rel : qrook_extra_relations(n)) {
      CHECK(check_relation(gens, rel.lhs, rel.rhs).passed);
    }
  }
}

TEST_CASE("grading and sectors") {
  for (std::size_t n = 1; n <= 5; ++n) {
    QRookModelRep rep(n);
    std::size_t   total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      auto s = rep.sector(k);
      CHECK(s.size() == binomial(n, k) * involution_count(n - k));
      total += s.size();
      for (auto c : s) {
        CHECK(rep.basis()[c].rank() == n - k);
      }
    }
    CHECK(total == rep.dimension());
    // rank never increases along the basis
    for (std::size_t c = 1; c < rep.dimension(); ++c) {
      CHECK(rep.grade(c - 1) <= rep.grade(c));
    }
  }
}

TEST_CASE("standard sectors are Hecke models") {
  for (std::size_t n = 2; n <= 5; ++n) {
    QRookModelRep rep(n);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      std::size_t const m   = n - k;
      auto const        idx = rep.standard_sector(k);
      HeckeModelRep     h(m);
      REQUIRE(idx.size() == h.dimension());
      auto label = [&](std::size_t b) {
        auto const& im = rep.basis()[idx[b]].images();
        return h.index_of(Permutation(std::vector<int>(im.begin(), im.begin() + m)));
      };
      for (std::size_t i = 1; i < m; ++i) {
        auto sub = rep.T(i).submatrix(idx);
        for (std::size_t r = 0; r < idx.size(); ++r) {
          for (std::size_t c = 0; c < idx.size(); ++c) {
            CHECK(sub(r, c) == h.T(i)(label(r), label(c)));
          }
        }
      }
    }
  }
}

TEST_CASE("proof cases are all reached") {
  auto cov = proof_case_coverage(QRookModelRep(4));
  CHECK(cov.failures.empty());
  std::array<std::size_t, 9> braid{0, 28, 12, 12, 12, 6, 6, 6, 4};
  std::array<std::size_t, 7> comm{9, 10, 8, 8, 2, 4, 2};
  CHECK(cov.braid_hits == braid);
  CHECK(cov.commuting_hits == comm);
  CHECK(braid_case(1, PartialInjection({1, 0, 3})) == 3);
  CHECK(braid_case(1, PartialInjection({0, 0, 0})) == 8);
  CHECK(commuting_case(1, 3, PartialInjection({2, 1, 4, 3})) == 1);
  CHECK(commuting_case(1, 3, PartialInjection({0, 0, 4, 3})) == 0);
  CHECK(commuting_case(1, 3, PartialInjection({1, 0, 3, 0})) == 4);
}

TEST_CASE("conjugation equivariance") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto r = conj_equivariance_check(n, HeckeRule::literal);
    CHECK(r.passed());
  }
  // the corrected rule breaks part (b): s_3 swaps (1 3)(2 4) and (1 4)(2 3)
  auto r = conj_equivariance_check(4, HeckeRule::gelfand);
  CHECK_FALSE(r.passed());
  PartialInjection w({3, 4, 1, 2});
  auto             s3 = Permutation::simple(4, 3);
  CHECK_FALSE(same_vector(conjugate_combination(s3, circ_act(1, w)),
                          circ_act(1, w.conjugated_by(s3))));
  CHECK(same_vector(
      conjugate_combination(s3, circ_act(1, w, HeckeRule::literal)),
      circ_act(1, w.conjugated_by(s3), HeckeRule::literal)));
}

TEST_CASE("same_vector ignores order and zero terms") {
  PartialInjection a({1, 0}), b({0, 2});
  Combination<PartialInjection> x{{a, QPoly(2)}, {b, QPoly::q()}};
  Combination<PartialInjection> y{{b, QPoly::q()}, {a, QPoly(1)}, {a, QPoly(1)}};
  Combination<PartialInjection> z{{b, QPoly::q()}, {a, QPoly(2)}, {b, QPoly(0)}};
  CHECK(same_vector(x, y));
  CHECK(same_vector(x, z));
  CHECK_FALSE(same_vector(x, {{a, QPoly(2)}}));
}

TEST_CASE("commutant is the number of simple modules") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t expected = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      expected += partition_count(k);
    }
    CHECK(commutant_dim(at(QRookModelRep(n), Rational(2))) == expected);
  }
  CHECK(commutant_dim(at(QRookModelRep(3), Rational(2))) == 7);
  CHECK(commutant_dim(at(QRookModelRep(4), Rational(2))) == 12);
}

TEST_CASE("n = 1") {
  QRookModelRep rep(1);
  REQUIRE(rep.dimension() == 2);
  auto const& p    = rep.P(1);
  auto        full = rep.index_of(PartialInjection({1}));
  auto        none = rep.index_of(PartialInjection({0}));
  CHECK(p(none, none) == QPoly(1));
  CHECK(p(full, full).is_zero());
  CHECK(p(none, full).is_zero());
  CHECK(p(full, none).is_zero());
}

TEST_CASE("q = 1 matches the rook monoid model") {
  for (std::size_t n = 1; n <= 4; ++n) {
    QRookModelRep  rep(n);
    IsnAdapter     adapter(n);
    SemigroupModel sg(adapter);
    REQUIRE(sg.dimension() == rep.dimension());
    std::vector<std::size_t> pos;
    for (auto const& w : rep.basis()) {
      pos.push_back(*sg.basis_index(adapter.index_of(w)));
    }
    auto same = [&](QPolyMatrix const& m, PartialInjection const& x) {
      auto t = sg.matrix(adapter.index_of(x));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!(m(r, c).specialize(Rational(1)) == Rational(t(pos[r], pos[c]))))
            return false;
      return true;
    };
    for (std::size_t i = 1; i < n; ++i) {
      CHECK(same(rep.T(i), PartialInjection::from_permutation(
                               Permutation::simple(n, static_cast<int>(i)))));
    }
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<int> tail;
      for (std::size_t x = i + 1; x <= n; ++x) tail.push_back(static_cast<int>(x));
      CHECK(same(rep.P(i), PartialInjection::identity_on(n, tail)));
    }
  }
}
