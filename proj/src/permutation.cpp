#include "hallbound/permutation.hpp"

#include <cctype>
#include <numeric>

#include "hallbound/config.hpp"

namespace hallbound {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw PreconditionError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw PreconditionError("cycle point out of range");
      if (used[from])
        throw PreconditionError("cycles are not disjoint");
      used[from] = true;
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (const auto& c : cycles)
    cs.emplace_back(c);
  return from_cycles(degree, cs);
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv), Unchecked{});
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::pow(std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(order());
  k %= ord;
  if (k < 0)
    k += ord;
  // Walk each cycle k steps instead of repeated multiplication.
  std::vector<Point> img(images_.size());
  std::vector<bool> seen(images_.size(), false);
  std::vector<Point> cycle;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    cycle.clear();
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    const std::size_t len = cycle.size();
    for (std::size_t t = 0; t < len; ++t)
      img[cycle[t]] = cycle[(t + static_cast<std::size_t>(k)) % len];
  }
  return Permutation(std::move(img), Unchecked{});
}

Point Permutation::first_moved() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first)
        out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> img(a.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = b.images_[a.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw PreconditionError("degree mismatch in compose");
  return a * b;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree())
    throw PreconditionError("degree mismatch in conjugate");
  // g^-1 x g maps g(i) to g(x(i)).
  std::vector<Point> img(x.degree());
  for (Point i = 0; i < img.size(); ++i)
    img[g(i)] = g(x(i));
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation parse_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw PreconditionError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw PreconditionError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw PreconditionError("bad character in cycle notation: " + text);
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree)
          throw PreconditionError("point out of range in: " + text);
        ++i;
      }
      if (v == 0)
        throw PreconditionError("points are 1-based: " + text);
      cycle.push_back(static_cast<Point>(v - 1));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hallbound
