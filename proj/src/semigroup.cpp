#include "gelfand/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gelfand/involutions.hpp"
#include "gelfand/partitions.hpp"

namespace gelfand {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t k) { b[k / 64] |= std::uint64_t{1} << (k % 64); }

bool subset(Bits const& a, Bits const& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] & ~b[k]) != 0) {
      return false;
    }
  }
  return true;
}

// Ids by first appearance of each distinct key.
template <typename Key>
std::size_t number_classes(std::vector<Key> const& keys,
                           std::vector<std::size_t>& ids) {
  std::map<Key, std::size_t> seen;
  ids.assign(keys.size(), 0);
  for (std::size_t a = 0; a < keys.size(); ++a) {
    auto [it, fresh] = seen.emplace(keys[a], seen.size());
    ids[a]           = it->second;
  }
  return seen.size();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a         = parent[a];
  }
  return a;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::size_t size,
                                 std::vector<std::uint32_t> table,
                                 std::vector<std::string> labels)
    : _size(size), _table(std::move(table)), _labels(std::move(labels)) {
  if (_table.size() != size * size) {
    throw std::invalid_argument("semigroup table has "
                                + std::to_string(_table.size())
                                + " entries, expected "
                                + std::to_string(size * size));
  }
  for (auto x : _table) {
    if (x >= size) {
      throw std::invalid_argument("semigroup table entry "
                                  + std::to_string(x) + " out of range");
    }
  }
  if (_labels.empty()) {
    for (std::size_t a = 0; a < size; ++a) {
      _labels.push_back(std::to_string(a));
    }
  } else if (_labels.size() != size) {
    throw std::invalid_argument("semigroup labels do not match the size");
  }
}

std::optional<std::array<std::size_t, 3>>
FiniteSemigroup::associativity_failure() const {
  for (std::size_t a = 0; a < _size; ++a) {
    for (std::size_t b = 0; b < _size; ++b) {
      std::size_t ab = product(a, b);
      for (std::size_t c = 0; c < _size; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          return std::array<std::size_t, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> GreenData::members_of_d(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < d_class.size(); ++a) {
    if (d_class[a] == d) {
      out.push_back(a);
    }
  }
  return out;
}

bool GreenData::d_is_regular(std::size_t d) const {
  return std::any_of(idempotents.begin(), idempotents.end(),
                     [&](std::size_t e) { return d_class[e] == d; });
}

GreenData green_relations(FiniteSemigroup const& s) {
  std::size_t const n     = s.size();
  std::size_t const words = (n + 63) / 64;
  std::vector<Bits> left(n, Bits(words)), right(n, Bits(words)),
      twosided(n, Bits(words));
  for (std::size_t a = 0; a < n; ++a) {
    set_bit(left[a], a);
    set_bit(right[a], a);
    for (std::size_t t = 0; t < n; ++t) {
      set_bit(left[a], s.product(t, a));
      set_bit(right[a], s.product(a, t));
    }
    twosided[a] = right[a];
    for (std::size_t r = 0; r < n; ++r) {
      if ((right[a][r / 64] >> (r % 64)) & 1) {
        for (std::size_t t = 0; t < n; ++t) {
          set_bit(twosided[a], s.product(t, r));
        }
      }
    }
  }

  GreenData g;
  g.l_count = number_classes(left, g.l_class);
  g.r_count = number_classes(right, g.r_class);
  g.j_count = number_classes(twosided, g.j_class);
  std::vector<std::pair<std::size_t, std::size_t>> lr(n);
  for (std::size_t a = 0; a < n; ++a) {
    lr[a] = {g.l_class[a], g.r_class[a]};
  }
  g.h_count = number_classes(lr, g.h_class);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::size_t> l_first(g.l_count, kNone), r_first(g.r_count, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (auto* first : {&l_first[g.l_class[a]], &r_first[g.r_class[a]]}) {
      if (*first == kNone) {
        *first = a;
      } else {
        parent[find_root(parent, a)] = find_root(parent, *first);
      }
    }
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t a = 0; a < n; ++a) {
    roots[a] = find_root(parent, a);
  }
  g.d_count = number_classes(roots, g.d_class);

  std::vector<std::size_t> j_rep(g.j_count, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    if (j_rep[g.j_class[a]] == kNone) {
      j_rep[g.j_class[a]] = a;
    }
    if (s.is_idempotent(a)) {
      g.idempotents.push_back(a);
    }
  }
  g.j_order.assign(g.j_count, std::vector<bool>(g.j_count, false));
  for (std::size_t x = 0; x < g.j_count; ++x) {
    for (std::size_t y = 0; y < g.j_count; ++y) {
      g.j_order[x][y] = subset(twosided[j_rep[x]], twosided[j_rep[y]]);
    }
  }
  return g;
}

// ---------------------------------------------------------------- adapters

IsnAdapter::IsnAdapter(std::size_t n)
    : _n(n), _elements(all_partial_injections(n)) {
  for (std::size_t k = 0; k < _elements.size(); ++k) {
    _index.emplace(_elements[k], k);
  }
  _s = FiniteSemigroup::from_elements(
      _elements,
      [](PartialInjection const& a, PartialInjection const& b) { return a * b; });
}

std::string IsnAdapter::name() const { return "IS_" + std::to_string(_n); }

std::size_t IsnAdapter::index_of(PartialInjection const& x) const {
  auto it = _index.find(x);
  if (it == _index.end()) {
    throw std::invalid_argument("not an element of IS_n: " + x.to_string());
  }
  return it->second;
}

std::optional<GroupIsomorphism> IsnAdapter::group_data(GreenData const& g,
                                                       std::size_t d) const {
  auto const members = g.members_of_d(d);
  if (members.empty()) {
    return std::nullopt;
  }
  std::size_t const k = _elements[members.front()].rank();
  std::vector<int>  prefix(k);
  std::iota(prefix.begin(), prefix.end(), 1);
  std::size_t const e = index_of(PartialInjection::identity_on(_n, prefix));

  GroupIsomorphism iso{e, {}, {}};
  if (k > 0) {
    iso.block_sizes.push_back(k);
  }
  for (std::size_t x = 0; x < _elements.size(); ++x) {
    if (g.h_class[x] != g.h_class[e]) {
      continue;
    }
    std::vector<int> im(_elements[x].images().begin(),
                        _elements[x].images().begin() + k);
    iso.map.emplace(x, Permutation(std::move(im)));
  }
  return iso;
}

FStarAdapter::FStarAdapter(std::size_t n)
    : _n(n), _elements(enumerate_uniform_block_bijections(n)) {
  _s = FiniteSemigroup::from_elements(
      _elements, [](SetPartitionBijection const& a,
                    SetPartitionBijection const& b) { return a * b; });
}

std::string FStarAdapter::name() const { return "F*_" + std::to_string(_n); }

std::optional<GroupIsomorphism> FStarAdapter::group_data(GreenData const& g,
                                                         std::size_t d) const {
  auto const members = g.members_of_d(d);
  if (members.empty()) {
    return std::nullopt;
  }
  std::vector<int> sizes;
  for (auto [from, to] : _elements[members.front()].blocks()) {
    sizes.push_back(std::popcount(from));
  }
  std::sort(sizes.rbegin(), sizes.rend());

  SetPartition p;
  int          next = 0;
  for (int sz : sizes) {
    p.push_back(((Block{1} << sz) - 1) << next);
    next += sz;
  }
  auto const id = SetPartitionBijection::identity_on(_n, p);
  auto const it = std::find(_elements.begin(), _elements.end(), id);
  if (it == _elements.end()) {
    return std::nullopt;
  }
  std::size_t const e = static_cast<std::size_t>(it - _elements.begin());

  GroupIsomorphism iso{e, {}, {}};
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (k == 0 || sizes[k] != sizes[k - 1]) {
      iso.block_sizes.push_back(0);
    }
    ++iso.block_sizes.back();
  }
  for (std::size_t x = 0; x < _elements.size(); ++x) {
    if (g.h_class[x] != g.h_class[e]) {
      continue;
    }
    std::vector<int> im;
    for (auto [from, to] : _elements[x].blocks()) {
      auto pos = std::find(p.begin(), p.end(), to) - p.begin();
      im.push_back(static_cast<int>(pos) + 1);
    }
    iso.map.emplace(x, Permutation(std::move(im)));
  }
  return iso;
}

TableAdapter::TableAdapter(std::string name, FiniteSemigroup s,
                           std::vector<GroupIsomorphism> groups)
    : _name(std::move(name)), _s(std::move(s)), _groups(std::move(groups)) {}

TableAdapter TableAdapter::from_json_text(std::string const& text,
                                          std::string        name) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::exception const& ex) {
    throw std::invalid_argument("semigroup table: " + std::string(ex.what()));
  }
  try {
    auto size  = doc.at("size").get<std::size_t>();
    auto table = doc.at("table").get<std::vector<std::uint32_t>>();
    std::vector<GroupIsomorphism> groups;
    if (doc.contains("groups")) {
      for (auto const& entry : doc.at("groups")) {
        GroupIsomorphism iso;
        iso.idempotent  = entry.at("idempotent").get<std::size_t>();
        iso.block_sizes = entry.at("block_sizes").get<std::vector<std::size_t>>();
        for (auto const& pair : entry.at("map")) {
          iso.map.emplace(pair.at(0).get<std::size_t>(),
                          Permutation(pair.at(1).get<std::vector<int>>()));
        }
        groups.push_back(std::move(iso));
      }
    }
    return TableAdapter(std::move(name),
                        FiniteSemigroup(size, std::move(table)),
                        std::move(groups));
  } catch (json::exception const& ex) {
    throw std::invalid_argument("semigroup table: " + std::string(ex.what()));
  }
}

TableAdapter TableAdapter::from_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), "table:" + path);
}

std::optional<GroupIsomorphism> TableAdapter::group_data(GreenData const& g,
                                                         std::size_t d) const {
  for (auto const& iso : _groups) {
    if (iso.idempotent < g.d_class.size() && g.d_class[iso.idempotent] == d) {
      return iso;
    }
  }
  for (auto e : g.idempotents) {
    if (g.d_class[e] != d) {
      continue;
    }
    std::size_t h_size = std::count(g.h_class.begin(), g.h_class.end(),
                                    g.h_class[e]);
    if (h_size != 1) {
      return std::nullopt;
    }
    return GroupIsomorphism{e, {}, {{e, Permutation()}}};
  }
  return std::nullopt;
}

TableAdapter left_zero_semigroup(std::size_t size) {
  std::vector<std::uint32_t> table;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table.push_back(static_cast<std::uint32_t>(a));
    }
  }
  return TableAdapter("left-zero-" + std::to_string(size),
                      FiniteSemigroup(size, std::move(table)), {});
}

// ------------------------------------------------------------- certificate

std::string to_string(HypothesisKind k) {
  switch (k) {
    case HypothesisKind::not_associative:
      return "multiplication not associative";
    case HypothesisKind::trace_not_inverse:
      return "trace not inverse";
    case HypothesisKind::no_group_data:
      return "no symmetric-group isomorphism for the maximal subgroup";
    case HypothesisKind::bad_group_data:
      return "invalid maximal-subgroup isomorphism";
  }
  return "unknown";
}

HypothesisError::HypothesisError(HypothesisKind kind, std::size_t d_class,
                                 std::string const& detail)
    : std::runtime_error(to_string(kind) + " (D-class " + std::to_string(d_class)
                         + "): " + detail),
      _kind(kind),
      _d(d_class),
      _detail(detail) {}

namespace {

bool preserves_consecutive_blocks(Permutation const& p,
                                  std::vector<std::size_t> const& blocks) {
  int start = 1;
  for (auto len : blocks) {
    int stop = start + static_cast<int>(len);
    for (int x = start; x < stop; ++x) {
      if (p(x) < start || p(x) >= stop) {
        return false;
      }
    }
    start = stop;
  }
  return true;
}

void verify_group(FiniteSemigroup const& s, GreenData const& g, std::size_t d,
                  GroupIsomorphism const& iso) {
  auto fail = [&](std::string const& what) {
    throw HypothesisError(HypothesisKind::bad_group_data, d, what);
  };
  std::size_t const e = iso.idempotent;
  if (e >= s.size() || !s.is_idempotent(e) || g.d_class[e] != d) {
    fail("element " + std::to_string(e) + " is not an idempotent of the class");
  }
  std::size_t degree = std::accumulate(iso.block_sizes.begin(),
                                       iso.block_sizes.end(), std::size_t{0});
  BigInt order = 1;
  for (auto len : iso.block_sizes) {
    order *= factorial(len);
  }
  std::set<Permutation> images;
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool in_group = g.h_class[x] == g.h_class[e];
    auto it       = iso.map.find(x);
    if (in_group != (it != iso.map.end())) {
      fail("map domain differs from the maximal subgroup at element "
           + s.label(x));
    }
    if (!in_group) {
      continue;
    }
    if (it->second.size() != degree
        || !preserves_consecutive_blocks(it->second, iso.block_sizes)) {
      fail("image of " + s.label(x) + " is not in the Young subgroup");
    }
    images.insert(it->second);
  }
  if (BigInt(static_cast<unsigned long>(images.size())) != order
      || images.size() != iso.map.size()) {
    fail("map is not a bijection onto the Young subgroup");
  }
  for (auto const& [x, px] : iso.map) {
    for (auto const& [y, py] : iso.map) {
      if (!(iso.map.at(s.product(x, y)) == px * py)) {
        fail("map is not multiplicative at (" + s.label(x) + ", "
             + s.label(y) + ")");
      }
    }
  }
}

}  // namespace

TraceCertificate trace_certificate(FiniteSemigroup const&  s,
                                   GreenData const&        g,
                                   SemigroupAdapter const& adapter) {
  if (auto bad = s.associativity_failure()) {
    throw HypothesisError(HypothesisKind::not_associative, g.d_class[(*bad)[0]],
                          "(" + s.label((*bad)[0]) + " " + s.label((*bad)[1])
                              + ") " + s.label((*bad)[2]));
  }
  TraceCertificate cert;
  cert.class_of_d.assign(g.d_count, std::nullopt);
  cert.trace_inverse.assign(s.size(), std::nullopt);

  for (std::size_t d = 0; d < g.d_count; ++d) {
    if (!g.d_is_regular(d)) {
      continue;
    }
    auto const members = g.members_of_d(d);
    auto in_d = [&](std::size_t x) { return g.d_class[x] == d; };

    for (auto x : members) {
      std::vector<std::size_t> inverses;
      for (auto y : members) {
        std::size_t xy = s.product(x, y), yx = s.product(y, x);
        if (in_d(xy) && s.product(xy, x) == x && in_d(yx)
            && s.product(yx, y) == y) {
          inverses.push_back(y);
        }
      }
      if (inverses.size() != 1) {
        throw HypothesisError(HypothesisKind::trace_not_inverse, d,
                              "element " + s.label(x) + " has "
                                  + std::to_string(inverses.size())
                                  + " inverses in the trace");
      }
      cert.trace_inverse[x] = inverses.front();
    }

    auto iso = adapter.group_data(g, d);
    if (!iso) {
      throw HypothesisError(HypothesisKind::no_group_data, d,
                            "adapter " + adapter.name()
                                + " supplied no isomorphism");
    }
    verify_group(s, g, d, *iso);

    DClassCertificate c;
    c.d_class = d;
    c.group   = std::move(*iso);
    std::size_t const e = c.group.idempotent;
    c.class_idempotents.push_back(e);
    for (auto f : g.idempotents) {
      if (in_d(f) && f != e) {
        c.class_idempotents.push_back(f);
      }
    }
    c.m = c.class_idempotents.size();
    c.r_of.assign(g.r_count, kNone);
    c.l_of.assign(g.l_count, kNone);
    for (std::size_t k = 0; k < c.m; ++k) {
      std::size_t f = c.class_idempotents[k];
      if (c.r_of[g.r_class[f]] != kNone || c.l_of[g.l_class[f]] != kNone) {
        throw HypothesisError(HypothesisKind::trace_not_inverse, d,
                              "two idempotents share an L- or R-class");
      }
      c.r_of[g.r_class[f]] = k;
      c.l_of[g.l_class[f]] = k;
    }
    for (std::size_t k = 0; k < c.m; ++k) {
      std::size_t vk = k == 0 ? e : kNone;
      for (auto x : members) {
        if (vk != kNone) {
          break;
        }
        if (g.r_class[x] == g.r_class[e]
            && g.l_class[x] == g.l_class[c.class_idempotents[k]]) {
          vk = x;
        }
      }
      c.v.push_back(vk);
      c.u.push_back(*cert.trace_inverse[vk]);
    }
    cert.class_of_d[d] = cert.classes.size();
    cert.classes.push_back(std::move(c));
  }
  return cert;
}

std::optional<BrandtCoord> brandt_product(BrandtCoord const& x,
                                          BrandtCoord const& y) {
  if (x.b != y.a) {
    return std::nullopt;
  }
  return BrandtCoord{x.a, x.y * y.y, y.b};
}

// ------------------------------------------------------------------- model

SemigroupModel::SemigroupModel(SemigroupAdapter const& adapter)
    : _s(&adapter.semigroup()),
      _green(green_relations(*_s)),
      _cert(trace_certificate(*_s, _green, adapter)) {
  for (auto const& c : _cert.classes) {
    for (auto w : _green.members_of_d(c.d_class)) {
      std::size_t e = _s->product(w, w);
      if (_s->is_idempotent(e) && _green.h_class[w] == _green.h_class[e]) {
        _basis_index.emplace(w, _basis.size());
        _basis.push_back(w);
      }
    }
  }
}

std::optional<std::size_t> SemigroupModel::basis_index(
    std::size_t element) const {
  auto it = _basis_index.find(element);
  if (it == _basis_index.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<BrandtCoord> SemigroupModel::brandt(std::size_t x) const {
  auto slot = _cert.class_of_d[_green.d_class[x]];
  if (!slot) {
    return std::nullopt;
  }
  auto const& c  = _cert.classes[*slot];
  std::size_t a  = c.r_of[_green.r_class[x]];
  std::size_t b  = c.l_of[_green.l_class[x]];
  std::size_t y  = _s->product(_s->product(c.v[a], x), c.u[b]);
  return BrandtCoord{a + 1, c.group.map.at(y), b + 1};
}

std::optional<SignedBasisVector<std::size_t>> SemigroupModel::act(
    std::size_t x, std::size_t w) const {
  if (!basis_index(w)) {
    throw std::invalid_argument("not an involution of the semigroup: "
                                + _s->label(w));
  }
  std::size_t const e = _s->product(w, w);
  std::size_t const z = _s->product(x, e);
  if (_green.d_class[z] != _green.d_class[e]) {
    return std::nullopt;
  }
  std::size_t const image =
      _s->product(_s->product(z, w), *_cert.trace_inverse[z]);
  std::size_t flips = inv_w(brandt(w)->y, brandt(z)->y);
  return SignedBasisVector<std::size_t>{flips % 2 == 0 ? 1 : -1, image};
}

IntMatrix SemigroupModel::matrix(std::size_t x) const {
  IntMatrix m(dimension(), dimension());
  for (std::size_t c = 0; c < _basis.size(); ++c) {
    if (auto v = act(x, _basis[c])) {
      m(*basis_index(v->element), c) = v->sign;
    }
  }
  return m;
}

std::vector<IntMatrix> SemigroupModel::matrices() const {
  std::vector<IntMatrix> out;
  for (std::size_t x = 0; x < _s->size(); ++x) {
    out.push_back(matrix(x));
  }
  return out;
}

std::size_t SemigroupModel::expected_dimension() const {
  std::size_t total = 0;
  for (auto const& c : _cert.classes) {
    std::size_t per = 1;
    for (auto len : c.group.block_sizes) {
      per *= involution_count(len);
    }
    total += c.m * per;
  }
  return total;
}

std::size_t SemigroupModel::expected_simple_count() const {
  std::size_t total = 0;
  for (auto const& c : _cert.classes) {
    std::size_t per = 1;
    for (auto len : c.group.block_sizes) {
      per *= partition_count(len);
    }
    total += per;
  }
  return total;
}

namespace {

template <typename F>
void for_triples(SemigroupModel const& model, TripleSampling sampling, F&& f) {
  std::size_t const n = model.semigroup().size();
  std::size_t const d = model.dimension();
  if (n * n * d <= sampling.limit) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (auto w : model.basis()) {
          f(x, y, w);
        }
      }
    }
    return;
  }
  std::mt19937_64                            rng(sampling.seed);
  std::uniform_int_distribution<std::size_t> elem(0, n - 1), vec(0, d - 1);
  for (std::size_t k = 0; k < sampling.limit; ++k) {
    std::size_t x = elem(rng);
    std::size_t y = elem(rng);
    f(x, y, model.basis()[vec(rng)]);
  }
}

std::string triple_string(SemigroupModel const& model, std::size_t x,
                          std::size_t y, std::size_t w) {
  auto const& s = model.semigroup();
  return "x=" + s.label(x) + " y=" + s.label(y) + " w=" + s.label(w);
}

}  // namespace

ModuleCheck module_axiom_check(SemigroupModel const& model,
                               TripleSampling        sampling) {
  ModuleCheck c;
  auto const& s = model.semigroup();
  for_triples(model, sampling, [&](std::size_t x, std::size_t y, std::size_t w) {
    ++c.instances;
    std::optional<SignedBasisVector<std::size_t>> lhs;
    if (auto v = model.act(y, w)) {
      if (auto u = model.act(x, v->element)) {
        lhs = SignedBasisVector<std::size_t>{u->sign * v->sign, u->element};
      }
    }
    auto rhs = model.act(s.product(x, y), w);
    if (lhs) {
      ++c.applicable;
    }
    if (lhs != rhs) {
      c.failures.push_back(triple_string(model, x, y, w));
    }
  });
  return c;
}

ModuleCheck sign_cocycle_check(SemigroupModel const& model,
                               TripleSampling        sampling) {
  ModuleCheck c;
  auto const& s = model.semigroup();
  for_triples(model, sampling, [&](std::size_t x, std::size_t y, std::size_t w) {
    ++c.instances;
    auto v = model.act(y, w);
    if (!v || !model.act(x, v->element)) {
      return;
    }
    ++c.applicable;
    std::size_t const e   = s.product(w, w);
    std::size_t const ye  = s.product(y, e);
    std::size_t const f   = s.product(v->element, v->element);
    std::size_t const xf  = s.product(x, f);
    std::size_t const xye = s.product(x, ye);
    auto const        wb  = model.brandt(w)->y;
    std::size_t lhs = inv_w(wb, model.brandt(ye)->y)
                      + inv_w(model.brandt(v->element)->y, model.brandt(xf)->y);
    std::size_t rhs = inv_w(wb, model.brandt(xye)->y);
    if (lhs % 2 != rhs % 2) {
      c.failures.push_back(triple_string(model, x, y, w));
    }
  });
  return c;
}

ModuleCheck zero_propagation_check(SemigroupModel const& model,
                                   TripleSampling        sampling) {
  ModuleCheck c;
  auto const& s = model.semigroup();
  for_triples(model, sampling, [&](std::size_t x, std::size_t y, std::size_t w) {
    ++c.instances;
    auto v = model.act(y, w);
    if (v && model.act(x, v->element)) {
      return;
    }
    ++c.applicable;
    if (model.act(s.product(x, y), w)) {
      c.failures.push_back(triple_string(model, x, y, w));
    }
  });
  return c;
}

std::optional<BrandtCoord> brandt_coords(SemigroupModel const& model,
                                         std::size_t           x) {
  return model.brandt(x);
}

std::optional<SignedBasisVector<std::size_t>> semigroup_model_act(
    SemigroupModel const& model, std::size_t x, std::size_t w) {
  return model.act(x, w);
}

std::vector<IntMatrix> semigroup_model_matrices(SemigroupModel const& model) {
  return model.matrices();
}

}  // namespace gelfand
