// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BFM_AGENT_SET_H_
#define BFM_AGENT_SET_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bfm {

// Agents are addressed by 0-based index internally; files and reports use
// 1-based ids.
using AgentIndex = int;

inline constexpr int kMaxAgents = 256;

// Fixed-capacity bitset over agent indices.
class AgentSet {
 public:
  AgentSet() = default;
  AgentSet(std::initializer_list<AgentIndex> members) {
    for (AgentIndex a : members) Insert(a);
  }

  static AgentSet FromMask(std::uint64_t mask) {
    AgentSet s;
    s.words_[0] = mask;
    return s;
  }
  static AgentSet Range(int n) {
    AgentSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  void Insert(AgentIndex a) { words_[a >> 6] |= Bit(a); }
  void Erase(AgentIndex a) { words_[a >> 6] &= ~Bit(a); }
  bool Contains(AgentIndex a) const { return (words_[a >> 6] & Bit(a)) != 0; }

  AgentSet With(AgentIndex a) const {
    AgentSet s = *this;
    s.Insert(a);
    return s;
  }
  AgentSet Without(AgentIndex a) const {
    AgentSet s = *this;
    s.Erase(a);
    return s;
  }

  int Size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool Empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  // Largest index + 1, or 0 for the empty set.
  int Bound() const {
    for (int w = kWords - 1; w >= 0; --w) {
      if (words_[w] != 0) return w * 64 + 64 - std::countl_zero(words_[w]);
    }
    return 0;
  }
  bool FitsInWord() const {
    for (int w = 1; w < kWords; ++w) {
      if (words_[w] != 0) return false;
    }
    return true;
  }
  std::uint64_t LowWord() const { return words_[0]; }

  std::vector<AgentIndex> Members() const {
    std::vector<AgentIndex> out;
    ForEach([&](AgentIndex a) { out.push_back(a); });
    return out;
  }

  template <typename F>
  void ForEach(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  bool IsSubsetOf(const AgentSet& other) const {
    for (int w = 0; w < kWords; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  AgentSet& operator|=(const AgentSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  AgentSet& operator&=(const AgentSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  AgentSet& operator-=(const AgentSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend AgentSet operator|(AgentSet a, const AgentSet& b) { return a |= b; }
  friend AgentSet operator&(AgentSet a, const AgentSet& b) { return a &= b; }
  friend AgentSet operator-(AgentSet a, const AgentSet& b) { return a -= b; }
  friend bool operator==(const AgentSet&, const AgentSet&) = default;

  std::size_t Hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint64_t w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

  // "{1,3}" with 1-based ids.
  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    ForEach([&](AgentIndex a) {
      if (!first) out += ",";
      out += std::to_string(a + 1);
      first = false;
    });
    return out + "}";
  }

 private:
  static constexpr int kWords = kMaxAgents / 64;
  static std::uint64_t Bit(AgentIndex a) { return std::uint64_t{1} << (a & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

// Lexicographic order on the sorted member lists.
inline bool LexLess(const AgentSet& a, const AgentSet& b) {
  std::vector<AgentIndex> x = a.Members();
  std::vector<AgentIndex> y = b.Members();
  return x < y;
}

struct AgentSetHash {
  std::size_t operator()(const AgentSet& s) const { return s.Hash(); }
};

}  // namespace bfm

#endif  // BFM_AGENT_SET_H_
