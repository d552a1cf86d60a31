#include "sylowlens/perm.hpp"
#include "sylowlens/error.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace sylowlens {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point p = images_[i];
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorKind::InvalidPermutation,
                  "image array is not a bijection (position " +
                      std::to_string(i) + ")");
    }
    seen[p] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::InvalidPermutation,
                 "bad cycle notation '" + std::string(text) + "': " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected a point");
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v >= degree) throw fail("point out of range");
        ++pos;
      }
      cycle.push_back(static_cast<Point>(v));
    }
    for (Point p : cycle) {
      if (used[p]) throw fail("point repeated across cycles");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::pow(std::uint64_t e) const {
  Perm result(degree());
  Perm base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Point Perm::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t Perm::hash() const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : images_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose permutations of degree " + std::to_string(a.degree()) +
                    " and " + std::to_string(b.degree()));
  }
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b[a[static_cast<Point>(i)]];
  return Perm::unchecked(std::move(images));
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace sylowlens
