#pragma once

#include <compare>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "weyl/context.hpp"
#include "weyl/errors.hpp"

namespace weyl {

enum class GenKind : unsigned char { p, q };

struct Gen {
  GenKind kind;
  int index;  // 1-based
  auto operator<=>(const Gen&) const = default;
};

inline Gen p_gen(int index) { return {GenKind::p, index}; }
inline Gen q_gen(int index) { return {GenKind::q, index}; }

struct GenPower {
  Gen gen;
  int exp;
};

// A product of generator powers in source order, not yet normal-ordered.
struct Word {
  std::vector<GenPower> factors;

  Word() = default;
  explicit Word(std::vector<GenPower> f) : factors(std::move(f)) {}

  Word& append(Gen g, int exp) {
    if (exp != 0) factors.push_back({g, exp});
    return *this;
  }

  // Single-generator letters after expanding powers.
  long long letter_count() const {
    long long n = 0;
    for (const auto& f : factors) n += std::abs(static_cast<long long>(f.exp));
    return n;
  }
};

// pq-ordered monomial p_1^{a_1} q1^{b_1} ... p_N^{a_N} qN^{b_N}. Only
// indices with (a, b) != (0, 0) are stored, ascending; the empty monomial
// is the identity.
class NormalMonomial {
 public:
  struct Entry {
    int index;
    int p_exp;
    int q_exp;
    auto operator<=>(const Entry&) const = default;
  };

  NormalMonomial() = default;

  static NormalMonomial identity() { return {}; }

  static NormalMonomial from_entries(std::vector<Entry> entries) {
    std::vector<Entry> kept;
    kept.reserve(entries.size());
    int last_index = 0;
    for (const auto& e : entries) {
      if (e.index <= last_index) {
        throw error("monomial entries must have strictly ascending indices");
      }
      last_index = e.index;
      if (e.p_exp != 0 || e.q_exp != 0) kept.push_back(e);
    }
    NormalMonomial m;
    m.entries_ = std::move(kept);
    return m;
  }

  static NormalMonomial single(Gen g, int exp) {
    if (exp == 0) return identity();
    Entry e{g.index, 0, 0};
    (g.kind == GenKind::p ? e.p_exp : e.q_exp) = exp;
    return from_entries({e});
  }

  bool is_identity() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  int p_exp(int index) const {
    const Entry* e = find(index);
    return e ? e->p_exp : 0;
  }
  int q_exp(int index) const {
    const Entry* e = find(index);
    return e ? e->q_exp : 0;
  }
  int exp(int index, GenKind kind) const {
    return kind == GenKind::p ? p_exp(index) : q_exp(index);
  }

  int max_index() const {
    return entries_.empty() ? 0 : entries_.back().index;
  }

  long long total_degree() const {
    long long d = 0;
    for (const auto& e : entries_) d += e.p_exp + e.q_exp;
    return d;
  }

  bool has_negative_exp() const {
    for (const auto& e : entries_) {
      if (e.p_exp < 0 || e.q_exp < 0) return true;
    }
    return false;
  }

  // Copy with the exponent of one generator replaced.
  NormalMonomial with_exponent(int index, GenKind kind, int new_exp) const {
    std::vector<Entry> entries;
    entries.reserve(entries_.size() + 1);
    bool placed = false;
    for (const auto& e : entries_) {
      if (e.index == index) {
        Entry mod = e;
        (kind == GenKind::p ? mod.p_exp : mod.q_exp) = new_exp;
        entries.push_back(mod);
        placed = true;
      } else {
        if (!placed && e.index > index) {
          Entry fresh{index, 0, 0};
          (kind == GenKind::p ? fresh.p_exp : fresh.q_exp) = new_exp;
          entries.push_back(fresh);
          placed = true;
        }
        entries.push_back(e);
      }
    }
    if (!placed) {
      Entry fresh{index, 0, 0};
      (kind == GenKind::p ? fresh.p_exp : fresh.q_exp) = new_exp;
      entries.push_back(fresh);
    }
    return from_entries(std::move(entries));
  }

  Word to_word() const {
    Word w;
    for (const auto& e : entries_) {
      w.append(p_gen(e.index), e.p_exp);
      w.append(q_gen(e.index), e.q_exp);
    }
    return w;
  }

  auto operator<=>(const NormalMonomial&) const = default;

  // "p1^2 q1^2 p2^-1"; exponent 1 omitted; "I" for the identity.
  std::string str() const {
    if (entries_.empty()) return "I";
    std::string out;
    auto piece = [&out](char name, int index, int exp) {
      if (exp == 0) return;
      if (!out.empty()) out += ' ';
      out += name;
      out += std::to_string(index);
      if (exp != 1) out += "^" + std::to_string(exp);
    };
    for (const auto& e : entries_) {
      piece('p', e.index, e.p_exp);
      piece('q', e.index, e.q_exp);
    }
    return out;
  }

 private:
  const Entry* find(int index) const {
    for (const auto& e : entries_) {
      if (e.index == index) return &e;
      if (e.index > index) break;
    }
    return nullptr;
  }

  std::vector<Entry> entries_;
};

// Canonical display order: total degree descending, then the exponent
// vector (a_1, b_1, a_2, b_2, ...) lexicographically descending.
struct RenderOrder {
  bool operator()(const NormalMonomial& a, const NormalMonomial& b) const {
    const long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
      int idx_a = ia != ea ? ia->index : std::numeric_limits<int>::max();
      int idx_b = ib != eb ? ib->index : std::numeric_limits<int>::max();
      int pa = 0, qa = 0, pb = 0, qb = 0;
      if (idx_a <= idx_b) {
        pa = ia->p_exp;
        qa = ia->q_exp;
      }
      if (idx_b <= idx_a) {
        pb = ib->p_exp;
        qb = ib->q_exp;
      }
      if (pa != pb) return pa > pb;
      if (qa != qb) return qa > qb;
      if (idx_a <= idx_b) ++ia;
      if (idx_b <= idx_a) ++ib;
    }
    return false;
  }
};

}  // namespace weyl
