#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertri {

constexpr int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Permutation of the labels {0, ..., N-1}, stored by images.
///
/// Composition follows function notation: (p * q)[i] == p[q[i]].
template <int N>
class Perm {
  static_assert(N >= 1 && N <= 8);

 public:
  static constexpr int degree = N;
  static constexpr int count = factorial(N);
  using Images = std::array<std::uint8_t, N>;

  constexpr Perm() noexcept {
    for (int i = 0; i < N; ++i) images_[i] = static_cast<std::uint8_t>(i);
  }

  /// Throws std::invalid_argument unless `images` is a bijection of 0..N-1.
  static Perm from_images(const std::array<int, N>& images) {
    Perm p;
    unsigned seen = 0;
    for (int i = 0; i < N; ++i) {
      const int v = images[i];
      if (v < 0 || v >= N || (seen & (1u << v)))
        throw std::invalid_argument("not a permutation of 0.." + std::to_string(N - 1));
      seen |= 1u << v;
      p.images_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  static Perm from_images(std::initializer_list<int> images) {
    if (images.size() != N) throw std::invalid_argument("wrong permutation length");
    std::array<int, N> a{};
    std::copy(images.begin(), images.end(), a.begin());
    return from_images(a);
  }

  static Perm transposition(int a, int b) {
    Perm p;
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  constexpr int operator[](int i) const { return images_[i]; }
  constexpr const Images& images() const { return images_; }

  constexpr Perm inverse() const {
    Perm r;
    for (int i = 0; i < N; ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  constexpr Perm operator*(const Perm& rhs) const {
    Perm r;
    for (int i = 0; i < N; ++i) r.images_[i] = images_[rhs.images_[i]];
    return r;
  }

  /// +1 for even permutations, -1 for odd ones.
  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  constexpr bool is_identity() const { return *this == Perm{}; }

  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    unsigned seen = 0;
    for (int i = 0; i < N; ++i) {
      if (seen & (1u << i)) continue;
      int len = 0;
      for (int j = i; !(seen & (1u << j)); j = images_[j]) {
        seen |= 1u << j;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  /// Position of this permutation in the lexicographic order of image arrays.
  int lex_index() const {
    int index = 0;
    for (int i = 0; i < N; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < N; ++j)
        if (images_[j] < images_[i]) ++smaller;
      index += smaller * factorial(N - 1 - i);
    }
    return index;
  }

  static Perm from_lex_index(int index) {
    if (index < 0 || index >= count) throw std::out_of_range("permutation index");
    std::vector<int> pool(N);
    for (int i = 0; i < N; ++i) pool[i] = i;
    Perm p;
    for (int i = 0; i < N; ++i) {
      const int f = factorial(N - 1 - i);
      const int k = index / f;
      index %= f;
      p.images_[i] = static_cast<std::uint8_t>(pool[k]);
      pool.erase(pool.begin() + k);
    }
    return p;
  }

  /// Every permutation of degree N in lexicographic image order.
  static const std::vector<Perm>& all() {
    static const std::vector<Perm> table = [] {
      std::vector<Perm> v;
      v.reserve(count);
      for (int i = 0; i < count; ++i) v.push_back(from_lex_index(i));
      return v;
    }();
    return table;
  }

  /// Images as a digit string, e.g. "10234".
  std::string str() const {
    std::string s;
    for (int i = 0; i < N; ++i) s.push_back(static_cast<char>('0' + images_[i]));
    return s;
  }

  friend constexpr bool operator==(const Perm&, const Perm&) = default;
  friend constexpr auto operator<=>(const Perm&, const Perm&) = default;

 private:
  Images images_{};
};

using Perm2 = Perm<2>;
using Perm3 = Perm<3>;
using Perm4 = Perm<4>;
using Perm5 = Perm<5>;

}  // namespace hypertri
