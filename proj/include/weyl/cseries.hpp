#pragma once

#include <map>
#include <string>
#include <utility>

#include "weyl/rational.hpp"

namespace weyl {

// Polynomial (exact) or truncated power series in the central parameter c,
// with exact rational coefficients. Zero coefficients are never stored; in
// truncated mode no stored degree exceeds the truncation order.
class CSeries {
 public:
  static constexpr int kExact = -1;

  CSeries() = default;  // exact zero

  static CSeries zero(int trunc = kExact) { return CSeries(trunc); }

  static CSeries constant(const Rational& r, int trunc = kExact) {
    CSeries s(trunc);
    s.add_in_place(0, r);
    return s;
  }

  static CSeries c_power(int degree, const Rational& coeff,
                         int trunc = kExact) {
    CSeries s(trunc);
    s.add_in_place(degree, coeff);
    return s;
  }

  int trunc_order() const { return trunc_; }
  bool truncated() const { return trunc_ != kExact; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  Rational coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // precondition: !is_zero()
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  CSeries operator+(const CSeries& o) const {
    require_same_mode(o);
    CSeries out = *this;
    for (const auto& [deg, r] : o.terms_) out.add_in_place(deg, r);
    return out;
  }

  CSeries operator-() const {
    CSeries out(trunc_);
    for (const auto& [deg, r] : terms_) out.terms_.emplace(deg, -r);
    return out;
  }

  CSeries operator-(const CSeries& o) const { return *this + (-o); }

  CSeries operator*(const CSeries& o) const {
    require_same_mode(o);
    CSeries out(trunc_);
    for (const auto& [da, ra] : terms_) {
      for (const auto& [db, rb] : o.terms_) {
        out.add_in_place(checked_add(da, db), ra * rb);
      }
    }
    return out;
  }

  CSeries scaled(const Rational& r) const {
    CSeries out(trunc_);
    if (r == 0) return out;
    for (const auto& [deg, v] : terms_) out.terms_.emplace(deg, v * r);
    return out;
  }

  // Multiply by r * c^degree_shift in one pass.
  CSeries shift_scaled(int degree_shift, const Rational& r) const {
    CSeries out(trunc_);
    if (r == 0) return out;
    for (const auto& [deg, v] : terms_) {
      out.add_in_place(checked_add(deg, degree_shift), v * r);
    }
    return out;
  }

  // Reinterpret in truncated mode at order k, dropping higher degrees.
  CSeries truncate_to(int k) const {
    CSeries out(k);
    for (const auto& [deg, r] : terms_) out.add_in_place(deg, r);
    return out;
  }

  // The degree-k slice, in the same mode.
  CSeries graded_part(int k) const {
    CSeries out(trunc_);
    auto it = terms_.find(k);
    if (it != terms_.end()) out.terms_.emplace(k, it->second);
    return out;
  }

  bool operator==(const CSeries&) const = default;

  // "r0 + r1*c + r2*c^2 + ..." with signs folded into the joins.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [deg, r] : terms_) {
      const bool neg = r < 0;
      const Rational mag = neg ? Rational(-r) : r;
      std::string body;
      if (deg == 0) {
        body = to_string(mag);
      } else {
        if (mag != 1) body = to_string(mag) + "*";
        body += "c";
        if (deg >= 2) body += "^" + std::to_string(deg);
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

 private:
  explicit CSeries(int trunc) : trunc_(trunc) {}

  void require_same_mode(const CSeries& o) const {
    if (trunc_ != o.trunc_) {
      throw mode_mismatch("coefficient series mode mismatch");
    }
  }

  void add_in_place(int degree, const Rational& r) {
    if (r == 0) return;
    if (truncated() && degree > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(degree, r);
    if (!inserted) {
      it->second += r;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, Rational> terms_;
  int trunc_ = kExact;
};

}  // namespace weyl
