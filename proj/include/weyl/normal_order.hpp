#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {
namespace detail {

// One generator letter: p_index, q_index, or their inverses.
struct Atom {
  int index;
  bool q_kind;
  bool inverse;
  auto operator<=>(const Atom&) const = default;

  // sorted position of the letter's generator in the canonical order
  int key() const { return index * 2 + (q_kind ? 1 : 0); }
};

using AtomSeq = std::vector<Atom>;

// Normal form of a single-index word: (p_exp, q_exp) -> coefficient.
using BlockForm = std::map<std::pair<int, int>, CSeries>;

inline void form_add(BlockForm& form, std::pair<int, int> exps,
                     const CSeries& cs) {
  if (cs.is_zero()) return;
  auto [it, inserted] = form.try_emplace(exps, cs);
  if (!inserted) {
    it->second = it->second + cs;
    if (it->second.is_zero()) form.erase(it);
  }
}

inline void append_atoms(AtomSeq& out, Gen g, int exp, const Context& ctx) {
  ctx.check_index(g.index);
  if (exp == 0) return;
  if (exp < 0 && !ctx.laurent()) {
    throw negative_exponent("negative exponent in polynomial mode");
  }
  const bool inv = exp < 0;
  const long long n = std::abs(static_cast<long long>(exp));
  for (long long t = 0; t < n; ++t) {
    out.push_back({g.index, g.kind == GenKind::q, inv});
  }
}

inline void append_atoms(AtomSeq& out, const NormalMonomial& m) {
  for (const auto& e : m.entries()) {
    const bool p_inv = e.p_exp < 0, q_inv = e.q_exp < 0;
    for (int t = std::abs(e.p_exp); t > 0; --t) {
      out.push_back({e.index, false, p_inv});
    }
    for (int t = std::abs(e.q_exp); t > 0; --t) {
      out.push_back({e.index, true, q_inv});
    }
  }
}

// The four local rewrite rules for one conjugate pair (p~ denotes p^-1):
//   q  p    ->  p q    - c
//   q  p~   ->  p~ q   + c p~p~
//   q~ p    ->  p q~   + c q~q~
//   q~ p~   ->  p~ q~  - c q~p~p~q~
// The last rule raises the c-degree on a growing word, so it is bounded by
// the truncation order and only reachable in Laurent mode.
//
// Applying them letter by letter gives the two collision lemmas the fast
// path below is built on. Bubbling a single q across p^x (|x| rule
// applications, each emitting one side term) yields
//   q p^x q^y = p^x q^{y+1} - c x p^{x-1} q^y .
// Bubbling q~ across p^x couples neighbouring exponents instead:
//   q~ p^x = p   (q~ p^{x-1}) + c (q~ (q~ p^{x-1}))            for x > 0
//   q~ p^x = p~  (q~ p^{x+1}) - c (q~ (p~p~ (q~ p^{x+1})))     for x < 0
// Writing q~ p^u = sum_k c^k gamma_k(u) p^{u-k} q^{-1-k} and reading the
// two recursions degree by degree gives
//   gamma_0(u) = 1,  gamma_k(0) = 0 for k > 0,
//   gamma_m(u) = gamma_m(u-1) + sum_{j+k=m-1} gamma_j(u-1) gamma_k(u-1-j)
//                                                          for u > 0,
//   gamma_m(u) = gamma_m(u+1) - sum_{j+k=m-1} gamma_j(u+1) gamma_k(u-1-j)
//                                                          for u < 0.
// The table is the whole Laurent collision engine; no closed-form series
// enters here.
class GammaTable {
 public:
  explicit GammaTable(int trunc) : trunc_(trunc) {}

  // coefficients gamma_0..gamma_trunc of q~ p^u
  const std::vector<BigInt>& row(int u) {
    if (rows_.empty() || u < query_lo_ || u > query_hi_) extend(u);
    return rows_[static_cast<std::size_t>(u - store_lo_)];
  }

 private:
  void extend(int u) {
    query_lo_ = std::min({query_lo_, u, -1});
    query_hi_ = std::max({query_hi_, u, 1});
    // Level m at position u reads level k < m at position u - (m - k), so
    // the storage floor sits trunc_+2 below the lowest query.
    store_lo_ = query_lo_ - trunc_ - 2;
    const int store_hi = query_hi_;
    const std::size_t width = static_cast<std::size_t>(store_hi - store_lo_ + 1);
    rows_.assign(width, std::vector<BigInt>(trunc_ + 1, BigInt(0)));
    auto at = [&](int pos) -> std::vector<BigInt>& {
      return rows_[static_cast<std::size_t>(pos - store_lo_)];
    };
    for (int pos = store_lo_; pos <= store_hi; ++pos) at(pos)[0] = 1;
    for (int m = 1; m <= trunc_; ++m) {
      at(0)[m] = 0;
      for (int pos = 1; pos <= store_hi; ++pos) {
        BigInt value = at(pos - 1)[m];
        for (int j = 0; j < m; ++j) {
          value += at(pos - 1)[j] * at(pos - 1 - j)[m - 1 - j];
        }
        at(pos)[m] = std::move(value);
      }
      // Entries below store_lo_ + m are never read by higher levels.
      for (int pos = -1; pos >= store_lo_ + m; --pos) {
        BigInt value = at(pos + 1)[m];
        for (int j = 0; j < m; ++j) {
          value -= at(pos + 1)[j] * at(pos - 1 - j)[m - 1 - j];
        }
        at(pos)[m] = std::move(value);
      }
    }
  }

  int trunc_;
  int query_lo_ = -1;
  int query_hi_ = 1;
  int store_lo_ = 0;
  std::vector<std::vector<BigInt>> rows_;
};

inline GammaTable& gamma_table(int trunc) {
  thread_local std::map<int, GammaTable> tables;
  return tables.try_emplace(trunc, trunc).first->second;
}

// Left-multiplies the normal term p^x q^y by one letter, adding the result
// to out.
inline void letter_times_term(const Atom& letter, int x, int y,
                              const CSeries& cs, const Context& ctx,
                              BlockForm& out) {
  if (!letter.q_kind) {
    form_add(out, {checked_add(x, letter.inverse ? -1 : 1), y}, cs);
    return;
  }
  if (!letter.inverse) {
    form_add(out, {x, checked_add(y, 1)}, cs);
    if (x != 0) {
      form_add(out, {checked_sub(x, 1), y},
               cs * ctx.cs_c_power(1, Rational(-x)));
    }
    return;
  }
  if (x == 0) {
    form_add(out, {0, checked_sub(y, 1)}, cs);
    return;
  }
  const auto& gamma = gamma_table(ctx.trunc_order).row(x);
  for (int k = 0; k <= ctx.trunc_order; ++k) {
    if (gamma[k] == 0) continue;
    CSeries weighted = cs * ctx.cs_c_power(k, Rational(gamma[k]));
    if (weighted.is_zero()) continue;
    form_add(out, {checked_sub(x, k), checked_sub(y, k + 1)}, weighted);
  }
}

// Normal form of one single-index word: letters fold right-to-left onto a
// canonical accumulator, so the rules only ever act on one displaced
// letter at a time and intermediate results merge by exponent pair.
inline void normal_order_single_index(const AtomSeq& word,
                                      const CSeries& coeff, const Context& ctx,
                                      BlockForm& out) {
  BlockForm acc;
  acc.emplace(std::pair<int, int>{0, 0}, coeff);
  for (std::size_t pos = word.size(); pos-- > 0;) {
    BlockForm next;
    for (const auto& [exps, cs] : acc) {
      letter_times_term(word[pos], exps.first, exps.second, cs, ctx, next);
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  for (const auto& [exps, cs] : acc) form_add(out, exps, cs);
}

// Reference rewriter: the same four rules driven as a worklist that always
// rewrites the leftmost out-of-order adjacent pair. Exponential on long
// mixed-negative words, so it only backs tests that cross-validate the
// folded evaluation above.
inline void rewrite_leftmost_reference(AtomSeq word, CSeries coeff,
                                       const Context& ctx, BlockForm& out) {
  const CSeries plus_c = ctx.cs_c_power(1, 1);
  const CSeries minus_c = ctx.cs_c_power(1, -1);

  std::map<AtomSeq, CSeries> work;
  work.emplace(std::move(word), std::move(coeff));

  auto push = [&work](AtomSeq&& w, CSeries cs) {
    if (cs.is_zero()) return;
    auto [it, inserted] = work.try_emplace(std::move(w), std::move(cs));
    if (!inserted) {
      it->second = it->second + cs;
      if (it->second.is_zero()) work.erase(it);
    }
  };

  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const AtomSeq& w = node.key();
    const CSeries& cs = node.mapped();

    std::size_t i = 0;
    bool sorted = true;
    for (; i + 1 < w.size(); ++i) {
      if (w[i].key() > w[i + 1].key()) {
        sorted = false;
        break;
      }
    }
    if (sorted) {
      int p_exp = 0, q_exp = 0;
      for (const auto& a : w) {
        int& e = a.q_kind ? q_exp : p_exp;
        e = checked_add(e, a.inverse ? -1 : 1);
      }
      form_add(out, {p_exp, q_exp}, cs);
      continue;
    }

    const Atom left = w[i], right = w[i + 1];
    {
      AtomSeq swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      push(std::move(swapped), cs);
    }
    const int m = left.index;
    if (!left.inverse && !right.inverse) {
      AtomSeq rest(w.begin(), w.begin() + i);
      rest.insert(rest.end(), w.begin() + i + 2, w.end());
      push(std::move(rest), cs * minus_c);
    } else if (!left.inverse && right.inverse) {
      AtomSeq repl = w;
      repl[i] = {m, false, true};
      repl[i + 1] = {m, false, true};
      push(std::move(repl), cs * plus_c);
    } else if (left.inverse && !right.inverse) {
      AtomSeq repl = w;
      repl[i] = {m, true, true};
      repl[i + 1] = {m, true, true};
      push(std::move(repl), cs * plus_c);
    } else {
      AtomSeq repl;
      repl.reserve(w.size() + 2);
      repl.insert(repl.end(), w.begin(), w.begin() + i);
      repl.push_back({m, true, true});
      repl.push_back({m, false, true});
      repl.push_back({m, false, true});
      repl.push_back({m, true, true});
      repl.insert(repl.end(), w.begin() + i + 2, w.end());
      push(std::move(repl), cs * minus_c);
    }
  }
}

// Normal-orders a letter sequence and accumulates coeff * result into out.
// Letters of distinct indices commute freely, so the word is first stably
// partitioned by index; each index block is rewritten on its own and the
// per-index results are combined as a product over disjoint generators.
inline void normal_order_atoms_into(Element& out, AtomSeq word, CSeries coeff,
                                    const Context& ctx) {
  if (coeff.is_zero()) return;
  std::stable_sort(word.begin(), word.end(),
                   [](const Atom& a, const Atom& b) {
                     return a.index < b.index;
                   });

  std::vector<int> indices;
  std::vector<BlockForm> blocks;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j].index == word[i].index) ++j;
    indices.push_back(word[i].index);
    blocks.emplace_back();
    normal_order_single_index(AtomSeq(word.begin() + i, word.begin() + j),
                              ctx.cs_one(), ctx, blocks.back());
    if (blocks.back().empty()) return;  // the whole product vanished
    i = j;
  }

  std::vector<NormalMonomial::Entry> entries;
  entries.reserve(indices.size());
  auto emit = [&](auto&& self, std::size_t block, const CSeries& acc) -> void {
    if (block == blocks.size()) {
      std::vector<NormalMonomial::Entry> kept = entries;
      out.add_term(NormalMonomial::from_entries(std::move(kept)), acc);
      return;
    }
    for (const auto& [exps, cs] : blocks[block]) {
      CSeries next = acc * cs;
      if (next.is_zero()) continue;
      entries.push_back({indices[block], exps.first, exps.second});
      self(self, block + 1, next);
      entries.pop_back();
    }
  };
  emit(emit, 0, coeff);
}

}  // namespace detail

// The unique normal-ordered element equal to the word: exact in polynomial
// mode, exact modulo c^(K+1) in Laurent mode.
inline Element normal_order(const Word& w, const Context& ctx) {
  detail::AtomSeq atoms;
  for (const auto& f : w.factors) detail::append_atoms(atoms, f.gen, f.exp, ctx);
  Element out(ctx);
  detail::normal_order_atoms_into(out, std::move(atoms), ctx.cs_one(), ctx);
  return out;
}

inline Element operator*(const Element& a, const Element& b) {
  if (a.ctx() != b.ctx()) throw context_mismatch("algebra context mismatch");
  Element out(a.ctx());
  for (const auto& [ma, sa] : a.terms()) {
    for (const auto& [mb, sb] : b.terms()) {
      CSeries coeff = sa * sb;
      if (coeff.is_zero()) continue;
      detail::AtomSeq atoms;
      detail::append_atoms(atoms, ma);
      detail::append_atoms(atoms, mb);
      detail::normal_order_atoms_into(out, std::move(atoms), std::move(coeff),
                                      a.ctx());
    }
  }
  return out;
}

}  // namespace weyl
