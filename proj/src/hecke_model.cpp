#include "gelfand/hecke_model.hpp"

#include <stdexcept>

#include "gelfand/involutions.hpp"

namespace gelfand {

Combination<Permutation> hecke_act(std::size_t        i,
                                   Permutation const& w,
                                   HeckeRule          rule) {
  std::size_t const n = w.size();
  if (i < 1 || i >= n) {
    throw std::invalid_argument("hecke_act: index " + std::to_string(i)
                                + " out of range for n = "
                                + std::to_string(n));
  }
  if (!w.is_involution()) {
    throw std::invalid_argument("hecke_act: not an involution: "
                                + w.to_string());
  }
  int const  a        = static_cast<int>(i);
  bool const i_moved  = w(a) != a;
  bool const i1_moved = w(a + 1) != a + 1;
  auto const s        = Permutation::simple(n, a);
  QPoly const q       = QPoly::q();

  auto plain   = [&] { return Combination<Permutation>{{s.conjugate(w), 1}}; };
  auto twisted = [&] {
    return Combination<Permutation>{{s.conjugate(w), q}, {w, q - 1}};
  };

  if (!i_moved && !i1_moved) {
    return {{w, q}};
  }
  if (i_moved && i1_moved) {
    if (rule == HeckeRule::literal || w(a) == a + 1) {
      return {{w, QPoly(-1)}};
    }
    return w(a) > w(a + 1) ? plain() : twisted();
  }
  return i_moved ? plain() : twisted();
}

HeckeModelRep::HeckeModelRep(std::size_t n, HeckeRule rule)
    : _n(n), _rule(rule), _basis(enumerate_involutions_sn(n)) {
  if (n < 1) {
    throw std::invalid_argument("hecke model needs n >= 1");
  }
  for (std::size_t k = 0; k < _basis.size(); ++k) {
    _index.emplace(_basis[k], k);
  }
  for (std::size_t i = 1; i < n; ++i) {
    QPolyMatrix m(dimension(), dimension());
    for (std::size_t c = 0; c < _basis.size(); ++c) {
      for (auto const& [u, coeff] : hecke_act(i, _basis[c], rule)) {
        m(index_of(u), c) += coeff;
      }
    }
    _T.push_back(std::move(m));
  }
}

std::size_t HeckeModelRep::index_of(Permutation const& w) const {
  auto it = _index.find(w);
  if (it == _index.end()) {
    throw std::invalid_argument("not a basis involution: " + w.to_string());
  }
  return it->second;
}

GeneratorSet HeckeModelRep::generator_set() const {
  GeneratorSet g;
  for (std::size_t i = 1; i < _n; ++i) {
    g.names.push_back("T" + std::to_string(i));
    g.matrices.push_back(T(i));
  }
  return g;
}

HeckeModelRep hecke_matrices(std::size_t n, HeckeRule rule) {
  return HeckeModelRep(n, rule);
}

std::optional<std::size_t> find_block_type_violation(HeckeModelRep const& rep,
                                                     std::size_t          i) {
  auto const&  T = rep.T(i);
  auto const   s = Permutation::simple(rep.n(), static_cast<int>(i));
  QPoly const  q = QPoly::q();
  std::size_t const d = rep.dimension();
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t partner = rep.index_of(s.conjugate(rep.basis()[c]));
    // Nothing may leave the orbit {c, partner}.
    for (std::size_t r = 0; r < d; ++r) {
      if (r != c && r != partner && !T(r, c).is_zero()) {
        return c;
      }
    }
    if (partner == c) {
      if (!(T(c, c) == q || T(c, c) == QPoly(-1))) {
        return c;
      }
      continue;
    }
    // Block [[0, q], [1, q-1]] with the plainly mapped element first.
    bool plain   = T(c, c).is_zero() && T(partner, c) == QPoly(1);
    bool twisted = T(c, c) == q - QPoly(1) && T(partner, c) == q;
    bool partner_plain = T(partner, partner).is_zero()
                         && T(c, partner) == QPoly(1);
    bool partner_twisted = T(partner, partner) == q - QPoly(1)
                           && T(c, partner) == q;
    if (!((plain && partner_twisted) || (twisted && partner_plain))) {
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace gelfand
