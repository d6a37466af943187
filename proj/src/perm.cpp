#include "minfact/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace minfact {

void SetPartition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ',';
    os << '{';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ',';
      os << blocks[i][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

void check_partition(const SetPartition& p) {
  if (p.n < 0) throw std::invalid_argument("partition: negative ground set");
  std::vector<char> seen(static_cast<std::size_t>(p.n) + 1, 0);
  int total = 0;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    for (int x : b) {
      if (x < 1 || x > p.n) throw std::invalid_argument("partition: element out of range");
      if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("partition: repeated element");
      seen[static_cast<std::size_t>(x)] = 1;
      ++total;
    }
  }
  if (total != p.n) throw std::invalid_argument("partition: blocks do not cover [n]");
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size() + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > size()) throw std::invalid_argument("permutation: value out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation: not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative size");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::long_cycle(int n) {
  if (n < 1) throw std::invalid_argument("permutation: cycle needs n >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 2;
  img.back() = 1;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      int x = c[j];
      if (x < 1 || x > n || used[static_cast<std::size_t>(x)])
        throw std::invalid_argument("permutation: invalid cycle list");
      used[static_cast<std::size_t>(x)] = 1;
      img[static_cast<std::size_t>(x - 1)] = c[(j + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation r;
  r.image_ = std::move(inv);
  return r;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(image_.size(), 0);
  int count = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j] - 1)) seen[j] = 1;
  }
  return count;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<char> seen(image_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == static_cast<int>(i) + 1) continue;
    any = true;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j] - 1)) {
      seen[j] = 1;
      if (!first) os << ',';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Transposition::Transposition(int x, int y) {
  if (x == y) throw std::invalid_argument("transposition: equal entries");
  a = std::min(x, y);
  b = std::max(x, y);
}

Permutation compose_ltr(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("compose_ltr: size mismatch");
  std::vector<int> img(static_cast<std::size_t>(sigma.size()));
  for (int x = 1; x <= sigma.size(); ++x) img[static_cast<std::size_t>(x - 1)] = tau(sigma(x));
  return Permutation(std::move(img));
}

Permutation as_permutation(const Transposition& t, int n) {
  if (t.a < 1 || t.b > n) throw std::out_of_range("transposition outside [n]");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::swap(img[static_cast<std::size_t>(t.a - 1)], img[static_cast<std::size_t>(t.b - 1)]);
  return Permutation(std::move(img));
}

SetPartition cycle_partition(const Permutation& sigma) {
  SetPartition p;
  p.n = sigma.size();
  std::vector<char> seen(static_cast<std::size_t>(p.n), 0);
  for (int i = 1; i <= p.n; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    std::vector<int> block;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j - 1)] = 1;
      block.push_back(j);
    }
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Permutation product_of(int n, std::span<const Transposition> factors) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::vector<int> inv(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    img[static_cast<std::size_t>(i)] = i + 1;
    inv[static_cast<std::size_t>(i) + 1] = i;
  }
  // Post-composing with (a,b) swaps the values a and b in the image.
  for (const auto& t : factors) {
    if (t.a < 1 || t.b > n || t.a >= t.b) throw std::out_of_range("transposition outside [n]");
    auto pa = static_cast<std::size_t>(inv[static_cast<std::size_t>(t.a)]);
    auto pb = static_cast<std::size_t>(inv[static_cast<std::size_t>(t.b)]);
    std::swap(img[pa], img[pb]);
    std::swap(inv[static_cast<std::size_t>(t.a)], inv[static_cast<std::size_t>(t.b)]);
  }
  return Permutation(std::move(img));
}

bool is_minimal_factorization(int n, std::span<const Transposition> factors) {
  if (n < 1) throw std::invalid_argument("is_minimal_factorization: n must be positive");
  for (const auto& t : factors)
    if (t.a < 1 || t.b > n) throw std::out_of_range("transposition outside [n]");
  if (static_cast<int>(factors.size()) != n - 1) return false;
  return product_of(n, factors) == Permutation::long_cycle(n);
}

Factorization::Factorization(int n, std::vector<Transposition> factors)
    : n_(n), factors_(std::move(factors)) {
  if (!is_minimal_factorization(n, factors_))
    throw std::invalid_argument("factorization: product is not the n-cycle");
}

Permutation partial_product(const Factorization& f, int k) {
  if (k < 0 || k > f.n() - 1) throw std::out_of_range("partial_product: k out of range");
  return product_of(f.n(), std::span(f.factors()).first(static_cast<std::size_t>(k)));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.image()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

}  // namespace minfact
