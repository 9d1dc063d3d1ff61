#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weyl/context.hpp"
#include "weyl/cseries.hpp"
#include "weyl/word.hpp"

namespace weyl {

// Finite sum of coefficient-weighted normal monomials: the canonical
// algebra value. Immutable in spirit; all operations return new values.
class Element {
 public:
  explicit Element(const Context& ctx) : ctx_(ctx) {}

  static Element zero(const Context& ctx) { return Element(ctx); }

  static Element identity(const Context& ctx) {
    Element e(ctx);
    e.add_term(NormalMonomial::identity(), ctx.cs_one());
    return e;
  }

  static Element from_monomial(const NormalMonomial& m, const CSeries& coeff,
                               const Context& ctx) {
    for (const auto& e : m.entries()) {
      ctx.check_index(e.index);
      if (!ctx.laurent() && (e.p_exp < 0 || e.q_exp < 0)) {
        throw negative_exponent("negative exponent in polynomial mode: " +
                                m.str());
      }
    }
    if (coeff.trunc_order() != ctx.coeff_trunc()) {
      throw mode_mismatch("coefficient mode does not match context");
    }
    Element out(ctx);
    out.add_term(m, coeff);
    return out;
  }

  const Context& ctx() const { return ctx_; }
  const std::map<NormalMonomial, CSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulate one term; assumes the monomial is valid in this context.
  void add_term(const NormalMonomial& m, const CSeries& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    require_same_ctx(o);
    for (const auto& [m, s] : o.terms_) add_term(m, s);
    return *this;
  }

  Element operator+(const Element& o) const {
    Element out = *this;
    out += o;
    return out;
  }

  Element operator-() const {
    Element out(ctx_);
    for (const auto& [m, s] : terms_) out.terms_.emplace(m, -s);
    return out;
  }

  Element operator-(const Element& o) const { return *this + (-o); }

  Element scaled(const CSeries& s) const {
    Element out(ctx_);
    if (s.is_zero()) return out;
    if (s.trunc_order() != ctx_.coeff_trunc()) {
      throw mode_mismatch("scale coefficient mode does not match context");
    }
    for (const auto& [m, t] : terms_) out.add_term(m, t * s);
    return out;
  }

  Element scaled(const Rational& r) const {
    Element out(ctx_);
    if (r == 0) return out;
    for (const auto& [m, t] : terms_) out.terms_.emplace(m, t.scaled(r));
    return out;
  }

  // Terms restricted to the degree-k slice of each coefficient.
  Element graded_part(int c_degree) const {
    Element out(ctx_);
    for (const auto& [m, s] : terms_) out.add_term(m, s.graded_part(c_degree));
    return out;
  }

  bool operator==(const Element&) const = default;

  int max_p_exp(int index) const { return max_exp(index, GenKind::p); }
  int max_q_exp(int index) const { return max_exp(index, GenKind::q); }

  int max_exp(int index, GenKind kind) const {
    int best = 0;
    for (const auto& [m, s] : terms_) {
      int e = m.exp(index, kind);
      if (e > best) best = e;
    }
    return best;
  }

  // Canonical text form; terms in display order, "0" for the zero element.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const NormalMonomial, CSeries>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) {
                return RenderOrder{}(a->first, b->first);
              });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
      const auto& [mono, cs] = *t;
      bool neg = false;
      std::string coeff;
      if (cs.terms().size() == 1) {
        const auto& [deg, r] = *cs.terms().begin();
        Rational mag = r;
        if (r < 0) {
          neg = true;
          mag = -r;
        }
        if (deg == 0) {
          if (mag != 1) coeff = to_string(mag);
        } else {
          if (mag != 1) coeff = to_string(mag) + "*";
          coeff += "c";
          if (deg >= 2) coeff += "^" + std::to_string(deg);
        }
      } else {
        coeff = "(" + cs.str() + ")";
      }
      std::string body;
      if (coeff.empty()) {
        body = mono.str();
      } else if (mono.is_identity()) {
        body = coeff + "*I";
      } else {
        body = coeff + "*" + mono.str();
      }
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      out += body;
    }
    return out;
  }

  // Terms sorted in display order (shared by text and JSON output).
  std::vector<std::pair<NormalMonomial, CSeries>> sorted_terms() const {
    std::vector<std::pair<NormalMonomial, CSeries>> out(terms_.begin(),
                                                        terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return RenderOrder{}(a.first, b.first);
    });
    return out;
  }

 private:
  void require_same_ctx(const Element& o) const {
    if (ctx_ != o.ctx_) throw context_mismatch("algebra context mismatch");
  }

  Context ctx_;
  std::map<NormalMonomial, CSeries> terms_;
};

}  // namespace weyl
