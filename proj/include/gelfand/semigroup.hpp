#ifndef GELFAND_SEMIGROUP_HPP_
#define GELFAND_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gelfand/block_bijection.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/permutation.hpp"
#include "gelfand/sn_model.hpp"

namespace gelfand {

// Elements are 0..size-1; product(a, b) is ab, so for maps b acts first.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  // Row-major table: table[a * size + b] = ab. Throws std::invalid_argument
  // on a wrong length or an out-of-range entry.
  FiniteSemigroup(std::size_t size, std::vector<std::uint32_t> table,
                  std::vector<std::string> labels = {});

  template <typename Element, typename Multiply>
  static FiniteSemigroup from_elements(std::vector<Element> const& elements,
                                       Multiply&&                  multiply);

  std::size_t size() const { return _size; }
  std::size_t product(std::size_t a, std::size_t b) const {
    return _table[a * _size + b];
  }
  std::vector<std::uint32_t> const& table() const { return _table; }
  std::string const&                label(std::size_t a) const {
    return _labels[a];
  }
  bool is_idempotent(std::size_t a) const { return product(a, a) == a; }
  // First triple (a, b, c) with (ab)c != a(bc).
  std::optional<std::array<std::size_t, 3>> associativity_failure() const;

 private:
  std::size_t                _size = 0;
  std::vector<std::uint32_t> _table;
  std::vector<std::string>   _labels;
};

// Class ids count from 0 in order of first appearance among the elements.
struct GreenData {
  std::vector<std::size_t> l_class, r_class, h_class, d_class, j_class;
  std::size_t              l_count = 0, r_count = 0, h_count = 0;
  std::size_t              d_count = 0, j_count = 0;
  std::vector<std::size_t> idempotents;
  // j_order[s][t]: J-class s lies below or equal to J-class t.
  std::vector<std::vector<bool>> j_order;

  bool j_leq(std::size_t a, std::size_t b) const {
    return j_order[j_class[a]][j_class[b]];
  }
  bool j_less(std::size_t a, std::size_t b) const {
    return j_leq(a, b) && j_class[a] != j_class[b];
  }
  std::vector<std::size_t> members_of_d(std::size_t d) const;
  bool                     d_is_regular(std::size_t d) const;
};

// L, R and J from principal ideals of S^1; D as the join of L and R.
GreenData green_relations(FiniteSemigroup const& s);

// A maximal subgroup G_e together with an isomorphism onto a Young subgroup
// S_{n1} x ... x S_{nl} of S_{n1+...+nl} on consecutive blocks.
struct GroupIsomorphism {
  std::size_t                         idempotent;
  std::vector<std::size_t>            block_sizes;
  std::map<std::size_t, Permutation>  map;
};

// Supplies a semigroup and, per regular D-class, the chosen idempotent and
// its group isomorphism. The engine verifies everything it is given.
class SemigroupAdapter {
 public:
  virtual ~SemigroupAdapter()                        = default;
  virtual std::string            name() const        = 0;
  virtual FiniteSemigroup const& semigroup() const   = 0;
  // nullopt when the adapter has nothing for this D-class.
  virtual std::optional<GroupIsomorphism> group_data(GreenData const& g,
                                                     std::size_t d) const = 0;
};

// IS_n, elements in lexicographic array order; e = identity on {1..k} for the
// rank-k class, G_e -> S_k by restriction.
class IsnAdapter : public SemigroupAdapter {
 public:
  explicit IsnAdapter(std::size_t n);
  std::string            name() const override;
  FiniteSemigroup const& semigroup() const override { return _s; }
  std::optional<GroupIsomorphism> group_data(GreenData const& g,
                                             std::size_t d) const override;
  std::vector<PartialInjection> const& elements() const { return _elements; }
  std::size_t index_of(PartialInjection const& x) const;

 private:
  std::size_t                             _n;
  std::vector<PartialInjection>           _elements;
  std::map<PartialInjection, std::size_t> _index;
  FiniteSemigroup                         _s;
};

// F*_n. For the class of block type lambda, e is the identity on the interval
// partition with block sizes lambda_1 >= lambda_2 >= ...; G_e permutes equal
// size blocks, giving S_{m_1} x S_{m_2} x ... by block position.
class FStarAdapter : public SemigroupAdapter {
 public:
  explicit FStarAdapter(std::size_t n);
  std::string            name() const override;
  FiniteSemigroup const& semigroup() const override { return _s; }
  std::optional<GroupIsomorphism> group_data(GreenData const& g,
                                             std::size_t d) const override;
  std::vector<SetPartitionBijection> const& elements() const {
    return _elements;
  }

 private:
  std::size_t                        _n;
  std::vector<SetPartitionBijection> _elements;
  FiniteSemigroup                    _s;
};

// A semigroup read from JSON:
//   {"size": N, "table": [row-major products],
//    "groups": [{"idempotent": e, "block_sizes": [...],
//                "map": [[element, [one-line permutation]], ...]}]}
// "groups" is optional. A regular D-class whose chosen idempotent has a
// trivial maximal subgroup needs no entry; its least idempotent is used.
class TableAdapter : public SemigroupAdapter {
 public:
  // Throws std::invalid_argument on malformed JSON or tables.
  static TableAdapter from_json_text(std::string const& text,
                                     std::string        name = "table");
  static TableAdapter from_file(std::string const& path);
  TableAdapter(std::string name, FiniteSemigroup s,
               std::vector<GroupIsomorphism> groups);

  std::string            name() const override { return _name; }
  FiniteSemigroup const& semigroup() const override { return _s; }
  std::optional<GroupIsomorphism> group_data(GreenData const& g,
                                             std::size_t d) const override;

 private:
  std::string                   _name;
  FiniteSemigroup               _s;
  std::vector<GroupIsomorphism> _groups;
};

// ab = a.
TableAdapter left_zero_semigroup(std::size_t size);

enum class HypothesisKind {
  not_associative,
  trace_not_inverse,
  no_group_data,
  bad_group_data,
};

std::string to_string(HypothesisKind k);

class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(HypothesisKind kind, std::size_t d_class,
                  std::string const& detail);
  HypothesisKind kind() const { return _kind; }
  std::size_t    d_class() const { return _d; }
  std::string const& detail() const { return _detail; }

 private:
  HypothesisKind _kind;
  std::size_t    _d;
  std::string    _detail;
};

// Coordinates of one regular D-class. Index k in 0..m-1 names the k-th
// idempotent of the class (the chosen e first, then by element index); it
// labels both the R-class and the L-class containing that idempotent.
struct DClassCertificate {
  std::size_t              d_class;
  GroupIsomorphism         group;
  std::size_t              m;
  std::vector<std::size_t> class_idempotents;  // f_k
  std::vector<std::size_t> r_of;               // Green R id -> k
  std::vector<std::size_t> l_of;               // Green L id -> k
  // v_k in R_e ∩ L_{f_k} with v_0 = e; u_k = v_k^{-1} in R_{f_k} ∩ L_e.
  std::vector<std::size_t> v, u;
};

struct TraceCertificate {
  std::vector<DClassCertificate>          classes;
  std::vector<std::optional<std::size_t>> class_of_d;  // Green D id -> slot
  // Inverse inside the trace for elements of regular D-classes.
  std::vector<std::optional<std::size_t>> trace_inverse;
};

// Checks both hypotheses exhaustively for every regular D-class. Throws
// HypothesisError naming the failing hypothesis and the D-class.
TraceCertificate trace_certificate(FiniteSemigroup const&  s,
                                   GreenData const&        g,
                                   SemigroupAdapter const& adapter);

// (a, y, b) with a, b in 1..m: x lies in the R-class of f_a and the L-class
// of f_b.
struct BrandtCoord {
  std::size_t a;
  Permutation y;
  std::size_t b;
  friend bool operator==(BrandtCoord const&, BrandtCoord const&) = default;
};

// (a,y,b)(a',y',b') = (a,yy',b') if b = a', else 0.
std::optional<BrandtCoord> brandt_product(BrandtCoord const& x,
                                          BrandtCoord const& y);

// Model on V_S, basis the involutions of S.
class SemigroupModel {
 public:
  // Throws HypothesisError when the hypotheses fail.
  explicit SemigroupModel(SemigroupAdapter const& adapter);

  FiniteSemigroup const&  semigroup() const { return *_s; }
  GreenData const&        green() const { return _green; }
  TraceCertificate const& certificate() const { return _cert; }

  // Involutions w (w in G_e, w^2 = e), grouped by certified D-class, then
  // by element index.
  std::vector<std::size_t> const& basis() const { return _basis; }
  std::size_t                     dimension() const { return _basis.size(); }
  std::optional<std::size_t>      basis_index(std::size_t element) const;

  // phi_i(x), or nullopt when x lies in no certified D-class.
  std::optional<BrandtCoord> brandt(std::size_t x) const;
  // x . I_w with w an element index; throws std::invalid_argument if w is
  // not an involution.
  std::optional<SignedBasisVector<std::size_t>> act(std::size_t x,
                                                    std::size_t w) const;
  // Matrix of x on V_S; one nonzero entry (+1 or -1) per column at most.
  IntMatrix matrix(std::size_t x) const;
  std::vector<IntMatrix> matrices() const;

  // sum over certified D-classes of m_i * (involutions of G_{e_i})
  std::size_t expected_dimension() const;
  // sum over certified D-classes of the number of irreducibles of G_{e_i}
  std::size_t expected_simple_count() const;

 private:
  FiniteSemigroup const*           _s;
  GreenData                        _green;
  TraceCertificate                 _cert;
  std::vector<std::size_t>         _basis;
  std::map<std::size_t, std::size_t> _basis_index;
};

struct ModuleCheck {
  std::size_t              instances  = 0;  // (x, y, w) triples examined
  std::size_t              applicable = 0;  // those the check constrains
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// The triples examined: all of them when |S|^2 dim <= limit, otherwise
// `limit` triples drawn with the given seed.
struct TripleSampling {
  std::size_t   limit = 2'000'000;
  std::uint64_t seed  = 0;
};

// x.(y.I_w) = (xy).I_w.
ModuleCheck module_axiom_check(SemigroupModel const& model,
                               TripleSampling        sampling = {});
// Where x.(y.I_w) != 0, with e = w^2, v = (ye)w(ye)^{-1}, f = v^2:
//   inv_{w'}((ye)') + inv_{v'}((xf)') = inv_{w'}((xye)')  (mod 2),
// primes denoting the group part of the Brandt coordinates.
ModuleCheck sign_cocycle_check(SemigroupModel const& model,
                               TripleSampling        sampling = {});
// x.(y.I_w) = 0 implies (xy).I_w = 0.
ModuleCheck zero_propagation_check(SemigroupModel const& model,
                                   TripleSampling        sampling = {});

std::optional<BrandtCoord> brandt_coords(SemigroupModel const& model,
                                         std::size_t           x);
std::optional<SignedBasisVector<std::size_t>> semigroup_model_act(
    SemigroupModel const& model, std::size_t x, std::size_t w);
std::vector<IntMatrix> semigroup_model_matrices(SemigroupModel const& model);

template <typename Element, typename Multiply>
FiniteSemigroup FiniteSemigroup::from_elements(
    std::vector<Element> const& elements, Multiply&& multiply) {
  std::map<Element, std::uint32_t> index;
  std::vector<std::string>         labels;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    index.emplace(elements[k], static_cast<std::uint32_t>(k));
    labels.push_back(elements[k].to_string());
  }
  std::vector<std::uint32_t> table;
  table.reserve(elements.size() * elements.size());
  for (auto const& a : elements) {
    for (auto const& b : elements) {
      auto it = index.find(multiply(a, b));
      if (it == index.end()) {
        throw std::invalid_argument("from_elements: not closed under product");
      }
      table.push_back(it->second);
    }
  }
  return FiniteSemigroup(elements.size(), std::move(table), std::move(labels));
}

}  // namespace gelfand

#endif  // GELFAND_SEMIGROUP_HPP_
