#include "gelfand/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

namespace gelfand {

IntegerPartition::IntegerPartition(std::vector<int> parts)
    : _parts(std::move(parts)) {
  for (std::size_t i = 0; i < _parts.size(); ++i) {
    if (_parts[i] <= 0 || (i > 0 && _parts[i] > _parts[i - 1])) {
      throw std::invalid_argument("not a partition: " + to_string());
    }
  }
}

int IntegerPartition::size() const {
  int s = 0;
  for (int p : _parts) {
    s += p;
  }
  return s;
}

IntegerPartition IntegerPartition::conjugate() const {
  std::vector<int> c;
  if (!_parts.empty()) {
    for (int j = 1; j <= _parts[0]; ++j) {
      c.push_back(static_cast<int>(std::count_if(
          _parts.begin(), _parts.end(), [j](int p) { return p >= j; })));
    }
  }
  return IntegerPartition(std::move(c));
}

std::size_t IntegerPartition::odd_column_count() const {
  auto cols = conjugate().parts();
  return static_cast<std::size_t>(
      std::count_if(cols.begin(), cols.end(), [](int c) { return c % 2; }));
}

std::string IntegerPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < _parts.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += std::to_string(_parts[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, IntegerPartition const& p) {
  return os << p.to_string();
}

std::vector<IntegerPartition> integer_partitions(std::size_t n) {
  std::vector<IntegerPartition>                out;
  std::vector<int>                             cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(static_cast<int>(n), static_cast<int>(n));
  return out;
}

std::uint64_t partition_count(std::size_t n) {
  // Coin-change count over part sizes 1..n.
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t m = part; m <= n; ++m) {
      p[m] += p[m - part];
    }
  }
  return p[n];
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= static_cast<unsigned long>(k);
  }
  return f;
}

std::uint64_t syt_count(IntegerPartition const& lambda) {
  auto   conj  = lambda.conjugate();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = conj[j] - static_cast<int>(i) - 1;
      hooks *= static_cast<unsigned long>(arm + leg + 1);
    }
  }
  BigInt f = factorial(lambda.size()) / hooks;
  return f.get_ui();
}

namespace {

// chi^lambda on the cycle type mu[from..], working on the beta-set (first
// column hook lengths) of lambda. Removing a rim hook of length r is moving a
// bead from b to b - r; the sign is the parity of the beads jumped over.
std::int64_t mn_beta(std::vector<int> beta,
                     std::vector<int> const& mu,
                     std::size_t from,
                     std::map<std::pair<std::vector<int>, std::size_t>,
                              std::int64_t>& memo) {
  if (from == mu.size()) {
    return 1;
  }
  std::sort(beta.begin(), beta.end());
  auto key = std::make_pair(beta, from);
  if (auto it = memo.find(key); it != memo.end()) {
    return it->second;
  }
  int const    r     = mu[from];
  std::int64_t total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    int b      = beta[k];
    int target = b - r;
    if (target < 0
        || std::find(beta.begin(), beta.end(), target) != beta.end()) {
      continue;
    }
    int jumped = static_cast<int>(std::count_if(
        beta.begin(), beta.end(), [&](int c) { return c > target && c < b; }));
    auto next  = beta;
    next[k]    = target;
    std::int64_t v = mn_beta(std::move(next), mu, from + 1, memo);
    total += (jumped % 2 == 0) ? v : -v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(IntegerPartition const& lambda,
                          IntegerPartition const& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: |" + lambda.to_string()
                                + "| != |" + mu.to_string() + "|");
  }
  std::size_t const L = lambda.length();
  std::vector<int>  beta(L);
  for (std::size_t i = 0; i < L; ++i) {
    beta[i] = lambda[i] + static_cast<int>(L - 1 - i);
  }
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  return mn_beta(std::move(beta), mu.parts(), 0, memo);
}

BigInt centralizer_size(IntegerPartition const& mu) {
  std::map<int, unsigned long> mult;
  for (int p : mu.parts()) {
    ++mult[p];
  }
  BigInt z = 1;
  for (auto const& [part, m] : mult) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), m);
    z *= pw * factorial(m);
  }
  return z;
}

BigInt class_size(IntegerPartition const& mu) {
  return factorial(mu.size()) / centralizer_size(mu);
}

IntegerPartition cycle_type(Permutation const& p) {
  return IntegerPartition(p.cycle_lengths());
}

Permutation class_representative(IntegerPartition const& mu) {
  std::vector<int> im;
  int              start = 1;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) {
      im.push_back(start + (k + 1) % len);
    }
    start += len;
  }
  return Permutation(std::move(im));
}

}  // namespace gelfand
