// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "gelfand/certificate.hpp"
#include "gelfand/hecke_model.hpp"
#include "gelfand/involutions.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/partitions.hpp"
#include "gelfand/qrook_model.hpp"
#include "gelfand/relations.hpp"
#include "gelfand/semigroup.hpp"
#include "gelfand/sn_model.hpp"
#include "gelfand/tableaux.hpp"

using namespace gelfand;

namespace {

struct Outcome {
  bool        ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, std::string const& title,
               std::function<Outcome()> const& body) {
  auto    start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (std::exception const& ex) {
    r = {false, std::string("exception: ") + ex.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                              - start)
                    .count();
  std::printf("%s %d %s [%s] (%.2fs)\n", r.ok ? "PASS" : "FAIL", id,
              title.c_str(), r.detail.c_str(), secs);
  std::fflush(stdout);
  failures += r.ok ? 0 : 1;
}

std::vector<RatMatrix> rational(std::vector<IntMatrix> const& ms) {
  std::vector<RatMatrix> out;
  for (auto const& m : ms) out.push_back(to_rational(m));
  return out;
}

std::vector<RatMatrix> at(std::vector<QPolyMatrix> const& ms, Rational q0) {
  std::vector<RatMatrix> out;
  for (auto const& m : ms) out.push_back(specialize(m, q0));
  return out;
}

std::size_t simple_count_isn(std::size_t n) {
  std::size_t s = 0;
  for (std::size_t k = 0; k <= n; ++k) s += partition_count(k);
  return s;
}

std::size_t isn_involutions_brute(std::size_t n) {
  std::size_t c = 0;
  for (auto const& x : all_partial_injections(n)) {
    if (x.domain() == x.image()
        && x * x == PartialInjection::identity_on(n, x.domain())) {
      ++c;
    }
  }
  return c;
}

bool all_relations(GeneratorSet const& g, std::vector<RelationInstance> const& rels,
                   std::string& bad) {
  for (auto const& r : rels) {
    if (!check_relation(g, r.lhs, r.rhs).passed) {
      bad = r.label;
      return false;
    }
  }
  return true;
}

Outcome sn_homomorphism() {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    SnModelRep rep({n});
    auto       all = all_permutations(n);
    for (auto const& a : all) {
      for (auto const& b : all) {
        ++pairs;
        if (!(rep.matrix(a * b) == rep.matrix(a) * rep.matrix(b))) {
          return {false, "n=" + std::to_string(n) + " " + a.to_string() + " "
                             + b.to_string()};
        }
      }
    }
  }
  SnModelRep rep({5});
  for (auto const& g : rep.generators()) {
    auto mg = rep.matrix(g);
    for (auto const& b : all_permutations(5)) {
      ++pairs;
      if (!(rep.matrix(g * b) == mg * rep.matrix(b))) {
        return {false, "n=5 " + g.to_string() + " " + b.to_string()};
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome sn_certificate() {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto const& [lambda, v] : character_inner_products(sn_character(n), n)) {
      if (!(v == Rational(1))) {
        return {false, "n=" + std::to_string(n) + " " + lambda.to_string()
                           + " multiplicity " + v.to_string()};
      }
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    std::uint64_t sum = 0;
    for (auto const& lambda : integer_partitions(n)) sum += syt_count(lambda);
    if (SnModelRep({n}).dimension() != sum) {
      return {false, "dimension at n=" + std::to_string(n)};
    }
  }
  return {true, "multiplicity 1 for n=2..5, dim = sum f^lambda for n<=7"};
}

Outcome sn_sectors() {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<IntegerPartition> seen;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      std::set<IntegerPartition> shapes;
      for (auto const& w : enumerate_involutions_sn(n)) {
        if (two_cycle_count(w) == k) shapes.insert(shape(rs_insert(w).insertion));
      }
      auto chi = sn_sector_character(n, k);
      for (auto const& mu : integer_partitions(n)) {
        std::int64_t expected = 0;
        for (auto const& lambda : shapes) expected += mn_character(lambda, mu);
        if (chi.at(mu) != expected) {
          return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k)
                             + " at " + mu.to_string()};
        }
      }
      for (auto const& lambda : shapes) {
        if (!seen.insert(lambda).second) {
          return {false, "shape " + lambda.to_string() + " in two sectors"};
        }
      }
    }
  }
  return {true, "n<=5"};
}

Outcome module_axiom() {
  std::size_t products = 0;
  auto        full     = [&](SemigroupAdapter const& a) -> std::optional<std::string> {
    SemigroupModel m(a);
    auto const&    s    = m.semigroup();
    auto           mats = m.matrices();
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        ++products;
        if (!(mats[s.product(x, y)] == mats[x] * mats[y])) {
          return a.name() + " " + s.label(x) + " " + s.label(y);
        }
      }
    }
    return std::nullopt;
  };
  if (auto bad = full(IsnAdapter(3))) return {false, *bad};
  for (std::size_t n = 1; n <= 3; ++n) {
    if (auto bad = full(FStarAdapter(n))) return {false, *bad};
  }
  // IS_4: generators s_1, s_2, s_3 and the identity on {1,2,3}
  IsnAdapter     a4(4);
  SemigroupModel m4(a4);
  auto const&    s4 = m4.semigroup();
  std::vector<std::size_t> gens;
  for (int i = 1; i <= 3; ++i) {
    gens.push_back(a4.index_of(PartialInjection::from_permutation(Permutation::simple(4, i))));
  }
  gens.push_back(a4.index_of(PartialInjection::identity_on(4, {1, 2, 3})));
  for (auto g : gens) {
    auto mg = m4.matrix(g);
    for (std::size_t y = 0; y < s4.size(); ++y) {
      ++products;
      if (!(m4.matrix(s4.product(g, y)) == mg * m4.matrix(y))) {
        return {false, "IS_4 " + s4.label(g) + " " + s4.label(y)};
      }
    }
  }
  IsnAdapter     a3(3);
  SemigroupModel m3(a3);
  auto           cocycle = sign_cocycle_check(m3);
  auto           zero    = zero_propagation_check(m3);
  if (!cocycle.passed()) return {false, "sign cocycle: " + cocycle.failures.front()};
  if (!zero.passed()) return {false, "zero propagation: " + zero.failures.front()};
  return {true, std::to_string(products) + " products; cocycle on "
                    + std::to_string(cocycle.applicable) + " and zero on "
                    + std::to_string(zero.applicable) + " triples"};
}

Outcome isn_certificate() {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t formula = 0;
    for (std::size_t k = 0; k <= n; ++k) formula += binomial(n, k) * involution_count(k);
    if (SemigroupModel(IsnAdapter(n)).dimension() != formula) {
      return {false, "dimension at n=" + std::to_string(n)};
    }
  }
  std::string detail;
  for (std::size_t n = 1; n <= 3; ++n) {
    IsnAdapter     a(n);
    SemigroupModel m(a);
    auto cert = certify("isn", rational(m.matrices()), simple_count_isn(n),
                        m.expected_dimension());
    if (!cert.is_gelfand()) {
      return {false, "n=" + std::to_string(n) + " commutant "
                         + std::to_string(cert.commutant_dimension)};
    }
    detail = "commutant " + std::to_string(cert.commutant_dimension) + " at n=3";
  }
  return {true, detail};
}

Outcome hecke() {
  std::string bad;
  for (std::size_t n = 1; n <= 6; ++n) {
    HeckeModelRep rep(n);
    if (!all_relations(rep.generator_set(), hecke_relations(n), bad)) {
      return {false, "n=" + std::to_string(n) + " " + bad};
    }
  }
  std::size_t last = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    last = commutant_dim(at(HeckeModelRep(n).generators(), Rational(2)));
    if (last != partition_count(n)) {
      return {false, "commutant at n=" + std::to_string(n)};
    }
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    HeckeModelRep rep(n);
    SnModelRep    sn({n});
    for (std::size_t i = 1; i < n; ++i) {
      auto t = specialize(rep.T(i), Rational(1));
      auto s = sn.matrix(Permutation::simple(n, static_cast<int>(i)));
      for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c)
          if (!(t(r, c) == Rational(s(sn.index_of(rep.basis()[r]),
                                      sn.index_of(rep.basis()[c])))))
            return {false, "q=1 at n=" + std::to_string(n)};
    }
  }
  return {true, "dim 76 at n=6, commutant " + std::to_string(last) + " at n=5"};
}

Outcome qrook_relations() {
  std::string bad;
  std::size_t dim4 = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    QRookModelRep rep(n);
    if (rep.dimension() != isn_involutions_brute(n)) {
      return {false, "dimension at n=" + std::to_string(n)};
    }
    dim4 = rep.dimension();
    auto g = rep.generator_set();
    if (!all_relations(g, hecke_relations(n), bad)
        || !all_relations(g, qrook_extra_relations(n), bad)) {
      return {false, "n=" + std::to_string(n) + " " + bad};
    }
  }
  auto cov = proof_case_coverage(QRookModelRep(4));
  for (int k = 1; k <= 8; ++k) {
    if (cov.braid_hits[k] == 0) return {false, "braid case " + std::to_string(k)};
  }
  for (int k = 1; k <= 6; ++k) {
    if (cov.commuting_hits[k] == 0) return {false, "commuting case " + std::to_string(k)};
  }
  if (!cov.failures.empty()) return {false, cov.failures.front()};
  std::size_t a = 0, b = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto r = conj_equivariance_check(n, HeckeRule::literal);
    if (!r.passed()) return {false, "equivariance: " + r.failures.front()};
    a += r.part_a_instances;
    b += r.part_b_instances;
  }
  return {true, "dim " + std::to_string(dim4)
                    + " at n=4 (brute force); 8+6 cases hit; equivariance on "
                    + std::to_string(a) + "+" + std::to_string(b)
                    + " instances with the literal rule"};
}

Outcome qrook_structure() {
  for (std::size_t n = 1; n <= 4; ++n) {
    QRookModelRep rep(n);
    auto          g = rep.generator_set();
    for (auto const& m : g.matrices) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!m(r, c).is_zero() && rep.grade(r) != rep.grade(c))
            return {false, "grading at n=" + std::to_string(n)};
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t m = n - k;
      if (rep.sector(k).size() != binomial(n, k) * rep.standard_sector(k).size()) {
        return {false, "sector size n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
      auto idx = rep.standard_sector(k);
      if (m == 0) continue;
      HeckeModelRep h(m);
      if (idx.size() != h.dimension()) return {false, "standard sector size"};
      for (std::size_t i = 1; i < m; ++i) {
        auto sub = rep.T(i).submatrix(idx);
        for (std::size_t r = 0; r < idx.size(); ++r) {
          for (std::size_t c = 0; c < idx.size(); ++c) {
            auto label = [&](std::size_t b) {
              auto const& im = rep.basis()[idx[b]].images();
              return h.index_of(Permutation(std::vector<int>(im.begin(), im.begin() + m)));
            };
            if (!(sub(r, c) == h.T(i)(label(r), label(c))))
              return {false, "standard sector n=" + std::to_string(n)};
          }
        }
      }
    }
    IsnAdapter     a(n);
    SemigroupModel sg(a);
    std::vector<std::size_t> pos;
    for (auto const& w : rep.basis()) pos.push_back(*sg.basis_index(a.index_of(w)));
    auto same = [&](QPolyMatrix const& m, PartialInjection const& x) {
      auto t = sg.matrix(a.index_of(x));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!(m(r, c).specialize(Rational(1)) == Rational(t(pos[r], pos[c]))))
            return false;
      return true;
    };
    for (std::size_t i = 1; i < n; ++i) {
      if (!same(rep.T(i), PartialInjection::from_permutation(
                              Permutation::simple(n, static_cast<int>(i)))))
        return {false, "q=1 T" + std::to_string(i) + " at n=" + std::to_string(n)};
    }
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<int> tail;
      for (std::size_t x = i + 1; x <= n; ++x) tail.push_back(static_cast<int>(x));
      if (!same(rep.P(i), PartialInjection::identity_on(n, tail)))
        return {false, "q=1 P" + std::to_string(i) + " at n=" + std::to_string(n)};
    }
  }
  std::size_t c = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    c = commutant_dim(at(QRookModelRep(n).generator_set().matrices, Rational(2)));
    if (c != simple_count_isn(n)) return {false, "commutant at n=" + std::to_string(n)};
  }
  return {true, "commutant " + std::to_string(c) + " at n=3"};
}

Outcome negative_controls() {
  auto gens = hecke_matrices(3).generator_set();
  gens.matrices[1](2, 1) += QPoly::q();
  auto r = check_relation(gens, "T1*T2*T1", "T2*T1*T2");
  if (r.passed || !r.witness) return {false, "corruption not detected"};
  std::string where = "witness (" + std::to_string(r.witness->row) + ","
                      + std::to_string(r.witness->col) + ")";
  auto lz = left_zero_semigroup(2);
  try {
    SemigroupModel m(lz);
    return {false, "left-zero semigroup accepted"};
  } catch (HypothesisError const& e) {
    if (e.kind() != HypothesisKind::trace_not_inverse) {
      return {false, std::string("wrong diagnosis: ") + e.what()};
    }
    return {true, where + "; " + to_string(e.kind())};
  }
}

}  // namespace

int main() {
  criterion(1, "sn-model homomorphism", sn_homomorphism);
  criterion(2, "sn-model Gelfand certificate", sn_certificate);
  criterion(3, "sector characters from RS shapes", sn_sectors);
  criterion(4, "semigroup module axiom", module_axiom);
  criterion(5, "IS_n Gelfand certificate", isn_certificate);
  criterion(6, "Hecke relations, commutant and q=1", hecke);
  criterion(7, "q-rook relations, proof cases and conjugation equivariance", qrook_relations);
  criterion(8, "q-rook grading, sectors, commutant and q=1", qrook_structure);
  criterion(9, "negative controls", negative_controls);
  return failures == 0 ? 0 : 1;
}
