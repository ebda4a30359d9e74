#include "gelfand/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gelfand {

namespace {

std::string array_string(std::vector<int> const& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

////////////////////////////////////////////////////////////////////////
// Permutation
////////////////////////////////////////////////////////////////////////

Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
  int const         n = static_cast<int>(_images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : _images) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation: "
                                  + array_string(_images));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  auto im = identity(n)._images;
  if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n)) {
    throw std::invalid_argument("transposition: point out of range");
  }
  std::swap(im[i - 1], im[j - 1]);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(std::size_t n, int i) {
  return transposition(n, i, i + 1);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(_images.size());
  for (std::size_t x = 0; x < _images.size(); ++x) {
    inv[_images[x] - 1] = static_cast<int>(x) + 1;
  }
  Permutation p;
  p._images = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != static_cast<int>(x) + 1) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[_images[x] - 1] != static_cast<int>(x) + 1) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::conjugate(Permutation const& w) const {
  if (w.size() != size()) {
    throw std::invalid_argument("conjugate: degree mismatch");
  }
  // (p w p^{-1})(p(x)) = p(w(x))
  std::vector<int> im(size());
  for (std::size_t x = 0; x < size(); ++x) {
    im[_images[x] - 1] = _images[w._images[x] - 1];
  }
  Permutation c;
  c._images = std::move(im);
  return c;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != static_cast<int>(x) + 1) {
      s.push_back(static_cast<int>(x) + 1);
    }
  }
  return s;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<bool> seen(size(), false);
  std::vector<int>  lengths;
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x]) {
      continue;
    }
    int         len = 0;
    std::size_t y   = x;
    while (!seen[y]) {
      seen[y] = true;
      y       = _images[y] - 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_lengths()) {
    if (len % 2 == 0) {
      s = -s;
    }
  }
  return s;
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Permutation product: degree mismatch");
  }
  std::vector<int> im(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    im[x] = a._images[b._images[x] - 1];
  }
  Permutation p;
  p._images = std::move(im);
  return p;
}

std::string Permutation::to_string() const {
  return array_string(_images);
}

std::ostream& operator<<(std::ostream& os, Permutation const& p) {
  return os << p.to_string();
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

////////////////////////////////////////////////////////////////////////
// PartialInjection
////////////////////////////////////////////////////////////////////////

PartialInjection::PartialInjection(std::vector<int> images)
    : _images(std::move(images)) {
  int const         n = static_cast<int>(_images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : _images) {
    if (v == 0) {
      continue;
    }
    if (v < 0 || v > n || seen[v]) {
      throw std::invalid_argument("not a partial injection: "
                                  + array_string(_images));
    }
    seen[v] = true;
  }
}

PartialInjection PartialInjection::identity_on(std::size_t              n,
                                               std::vector<int> const& subset) {
  std::vector<int> im(n, 0);
  for (int x : subset) {
    if (x < 1 || x > static_cast<int>(n)) {
      throw std::invalid_argument("identity_on: point out of range");
    }
    im[x - 1] = x;
  }
  return PartialInjection(std::move(im));
}

PartialInjection PartialInjection::from_permutation(Permutation const& p) {
  return PartialInjection(p.images());
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> d;
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != 0) {
      d.push_back(static_cast<int>(x) + 1);
    }
  }
  return d;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> im;
  for (int v : _images) {
    if (v != 0) {
      im.push_back(v);
    }
  }
  std::sort(im.begin(), im.end());
  return im;
}

std::size_t PartialInjection::rank() const {
  return static_cast<std::size_t>(
      std::count_if(_images.begin(), _images.end(), [](int v) {
        return v != 0;
      }));
}

PartialInjection PartialInjection::inverse() const {
  std::vector<int> inv(_images.size(), 0);
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != 0) {
      inv[_images[x] - 1] = static_cast<int>(x) + 1;
    }
  }
  PartialInjection p;
  p._images = std::move(inv);
  return p;
}

bool PartialInjection::is_idempotent() const {
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != 0 && _images[x] != static_cast<int>(x) + 1) {
      return false;
    }
  }
  return true;
}

bool PartialInjection::is_involution() const {
  for (std::size_t x = 0; x < _images.size(); ++x) {
    int y = _images[x];
    if (y != 0 && _images[y - 1] != static_cast<int>(x) + 1) {
      return false;
    }
  }
  return true;
}

PartialInjection PartialInjection::conjugated_by(Permutation const& s) const {
  if (s.size() != size()) {
    throw std::invalid_argument("conjugated_by: degree mismatch");
  }
  std::vector<int> im(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) {
    if (_images[x] != 0) {
      im[s(static_cast<int>(x) + 1) - 1] = s(_images[x]);
    }
  }
  PartialInjection p;
  p._images = std::move(im);
  return p;
}

std::size_t PartialInjection::two_cycle_count() const {
  std::size_t k = 0;
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] > static_cast<int>(x) + 1) {
      ++k;
    }
  }
  return k;
}

PartialInjection operator*(PartialInjection const& a,
                           PartialInjection const& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("PartialInjection product: degree mismatch");
  }
  std::vector<int> im(a.size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    int y = b._images[x];
    if (y != 0) {
      im[x] = a._images[y - 1];
    }
  }
  PartialInjection p;
  p._images = std::move(im);
  return p;
}

std::string PartialInjection::to_string() const {
  return array_string(_images);
}

std::ostream& operator<<(std::ostream& os, PartialInjection const& p) {
  return os << p.to_string();
}

std::vector<PartialInjection> all_partial_injections(std::size_t n) {
  std::vector<PartialInjection> out;
  std::vector<int>              im(n, 0);
  std::vector<bool>             used(n + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) {
      out.emplace_back(im);
      return;
    }
    for (int v = 0; v <= static_cast<int>(n); ++v) {
      if (v != 0 && used[v]) {
        continue;
      }
      im[x] = v;
      if (v != 0) {
        used[v] = true;
      }
      rec(x + 1);
      if (v != 0) {
        used[v] = false;
      }
    }
    im[x] = 0;
  };
  rec(0);
  return out;
}

}  // namespace gelfand
