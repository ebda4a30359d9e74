#ifndef GELFAND_PERMUTATION_HPP_
#define GELFAND_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gelfand {

// A bijection of {1, ..., n} in one-line notation. Products compose right to
// left: (p * s)(x) = p(s(x)).
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  // The transposition (i j).
  static Permutation transposition(std::size_t n, int i, int j);
  // The simple transposition s_i = (i i+1).
  static Permutation simple(std::size_t n, int i);

  std::size_t size() const { return _images.size(); }
  int operator()(int x) const { return _images[x - 1]; }
  std::vector<int> const& images() const { return _images; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  // p w p^{-1}
  Permutation conjugate(Permutation const& w) const;
  // Points moved by the permutation, ascending.
  std::vector<int> support() const;
  // Cycle lengths, weakly decreasing (fixed points included as 1s).
  std::vector<int> cycle_lengths() const;
  // Parity of the permutation: +1 or -1.
  int sign() const;

  friend Permutation operator*(Permutation const& a, Permutation const& b);
  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const& a, Permutation const& b) {
    return a._images <=> b._images;
  }

  // One-line notation, e.g. "[2,1,3]".
  std::string to_string() const;

 private:
  std::vector<int> _images;
};

std::ostream& operator<<(std::ostream& os, Permutation const& p);

// All permutations of {1..n} in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(std::size_t n);

// An injective partial map of {1, ..., n}; 0 marks an undefined image.
// Products compose right to left: (a * b)(x) = a(b(x)), undefined as soon as
// either step is.
class PartialInjection {
 public:
  PartialInjection() = default;
  // Throws std::invalid_argument on out-of-range or repeated images.
  explicit PartialInjection(std::vector<int> images);

  // Identity map on the given subset of {1..n}.
  static PartialInjection identity_on(std::size_t n,
                                      std::vector<int> const& subset);
  static PartialInjection from_permutation(Permutation const& p);

  std::size_t size() const { return _images.size(); }
  // 0 when x is outside the domain.
  int operator()(int x) const { return _images[x - 1]; }
  std::vector<int> const& images() const { return _images; }

  std::vector<int> domain() const;
  std::vector<int> image() const;
  std::size_t      rank() const;
  bool             in_domain(int x) const { return _images[x - 1] != 0; }

  PartialInjection inverse() const;
  bool             is_idempotent() const;
  // dom = im and w(w(x)) = x on the domain.
  bool is_involution() const;
  // s w s^{-1} as a partial map: domain s(dom w), x -> s(w(s^{-1}(x))).
  PartialInjection conjugated_by(Permutation const& s) const;
  // Number of 2-cycles, for an involution.
  std::size_t two_cycle_count() const;

  friend PartialInjection operator*(PartialInjection const& a,
                                    PartialInjection const& b);
  friend bool operator==(PartialInjection const&,
                         PartialInjection const&) = default;
  friend auto operator<=>(PartialInjection const& a,
                          PartialInjection const& b) {
    return a._images <=> b._images;
  }

  // Array form with 0 for undefined, e.g. "[2,1,0]".
  std::string to_string() const;

 private:
  std::vector<int> _images;
};

std::ostream& operator<<(std::ostream& os, PartialInjection const& p);

// All of IS_n, lexicographic in the array form.
std::vector<PartialInjection> all_partial_injections(std::size_t n);

}  // namespace gelfand

#endif  // GELFAND_PERMUTATION_HPP_
