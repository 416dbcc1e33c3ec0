#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordmach/errors.hpp"

namespace ordmach {

namespace detail {

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OrdinalOverflow("coefficient addition overflow");
  return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OrdinalOverflow("coefficient multiplication overflow");
  return r;
}

}  // namespace detail

// An ordinal below epsilon_0 in Cantor normal form: a finite sum
// w^e1*c1 + ... + w^ek*ck with e1 > e2 > ... > ek and all ci >= 1.
// The empty sum is 0. Exponents are themselves Ordinals (hereditary CNF),
// so equality of values is equality of term lists.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: implicit by design, naturals embed
  Ordinal(int n) : Ordinal(static_cast<std::uint64_t>(n < 0 ? (throw OrdinalOverflow("negative"), 0) : n)) {}

  static Ordinal omega();
  // w^exponent * coefficient (0 if coefficient == 0)
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coefficient = 1);
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_natural() const;
  // Requires is_natural().
  std::uint64_t natural_value() const;

  // Coefficient of w^0 in the CNF (0 when absent).
  std::uint64_t finite_part() const;
  // The ordinal with its w^0 term removed; 0 or a limit ordinal.
  Ordinal limit_part() const;
  bool is_limit() const { return !is_zero() && finite_part() == 0; }
  bool is_successor() const { return finite_part() > 0; }
  // Requires is_successor(): the ordinal directly below this one.
  Ordinal predecessor() const;

  // Requires !is_zero().
  const Ordinal& leading_exponent() const;

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;

  friend std::strong_ordering ord_compare(const Ordinal& a, const Ordinal& b);
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

inline Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

inline Ordinal Ordinal::omega() { return omega_pow(Ordinal(std::uint64_t{1}), 1); }

inline Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) r.terms_.push_back(Term{exponent, coefficient});
  return r;
}

inline std::strong_ordering ord_compare(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = ord_compare(a.terms_[i].exponent, b.terms_[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient)
      return a.terms_[i].coefficient <=> b.terms_[i].coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return ord_compare(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return ord_compare(a, b); }

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  Ordinal r;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw OrdinalOverflow("zero coefficient in CNF term");
    if (i > 0 && ord_compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
      throw OrdinalOverflow("CNF exponents not strictly decreasing");
  }
  r.terms_ = std::move(terms);
  return r;
}

inline bool Ordinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline std::uint64_t Ordinal::natural_value() const {
  if (terms_.empty()) return 0;
  return terms_[0].coefficient;
}

inline std::uint64_t Ordinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) return terms_.back().coefficient;
  return 0;
}

inline Ordinal Ordinal::limit_part() const {
  Ordinal r = *this;
  if (!r.terms_.empty() && r.terms_.back().exponent.is_zero()) r.terms_.pop_back();
  return r;
}

inline Ordinal Ordinal::predecessor() const {
  Ordinal r = *this;
  if (r.terms_.empty() || !r.terms_.back().exponent.is_zero())
    throw OrdinalOverflow("predecessor of a non-successor ordinal");
  if (--r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

inline const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw OrdinalOverflow("leading exponent of 0");
  return terms_[0].exponent;
}

inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& be = b.leading_exponent();
  std::vector<Ordinal::Term> out;
  std::size_t i = 0;
  while (i < a.terms().size() &&
         ord_compare(a.terms()[i].exponent, be) == std::strong_ordering::greater) {
    out.push_back(a.terms()[i]);
    ++i;
  }
  if (i < a.terms().size() && a.terms()[i].exponent == be) {
    out.push_back(Ordinal::Term{be, detail::checked_add_u64(a.terms()[i].coefficient,
                                                            b.terms()[0].coefficient)});
  } else {
    out.push_back(b.terms()[0]);
  }
  for (std::size_t j = 1; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  return Ordinal::from_terms(std::move(out));
}

inline Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal result;
  const Ordinal& lead = a.leading_exponent();
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      // a * n: multiply the leading coefficient, keep the tail of a.
      std::vector<Ordinal::Term> terms = a.terms();
      terms[0].coefficient = detail::checked_mul_u64(terms[0].coefficient, t.coefficient);
      part = Ordinal::from_terms(std::move(terms));
    } else {
      part = Ordinal::omega_pow(ord_add(lead, t.exponent), t.coefficient);
    }
    result = ord_add(result, part);
  }
  return result;
}

// Left subtraction: the unique x with b + x = a. Requires b <= a.
inline Ordinal ord_sub_left(const Ordinal& a, const Ordinal& b) {
  std::size_t i = 0;
  for (; i < b.terms().size(); ++i) {
    if (i >= a.terms().size()) throw OrdinalOverflow("subtraction underflow");
    auto c = ord_compare(a.terms()[i].exponent, b.terms()[i].exponent);
    if (c == std::strong_ordering::less) throw OrdinalOverflow("subtraction underflow");
    if (c == std::strong_ordering::greater)
      return Ordinal::from_terms({a.terms().begin() + i, a.terms().end()});
    if (a.terms()[i].coefficient != b.terms()[i].coefficient) {
      if (a.terms()[i].coefficient < b.terms()[i].coefficient)
        throw OrdinalOverflow("subtraction underflow");
      std::vector<Ordinal::Term> out;
      out.push_back(Ordinal::Term{a.terms()[i].exponent,
                                  a.terms()[i].coefficient - b.terms()[i].coefficient});
      out.insert(out.end(), a.terms().begin() + i + 1, a.terms().end());
      return Ordinal::from_terms(std::move(out));
    }
  }
  return Ordinal::from_terms({a.terms().begin() + i, a.terms().end()});
}

inline const Ordinal& ord_min(const Ordinal& a, const Ordinal& b) { return a <= b ? a : b; }
inline const Ordinal& ord_max(const Ordinal& a, const Ordinal& b) { return a <= b ? b : a; }

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return ord_mul(a, b); }

namespace detail {

// Order type of the square {(x,y) : x,y < m} under the Goedel ordering
// (max first, then lexicographic). Satisfies sq(0) = 0 and
// sq(m+1) = sq(m) + m*2 + 1, continuous at limits.
inline Ordinal godel_sq(const Ordinal& m);

// sup_{x < e} x*2 for limit e.
inline Ordinal godel_dbl_sup(const Ordinal& e) {
  const auto& last = e.terms().back();
  std::vector<Ordinal::Term> ft(e.terms());
  if (--ft.back().coefficient == 0) ft.pop_back();
  Ordinal f = Ordinal::from_terms(std::move(ft));
  return ord_add(ord_add(f, f), Ordinal::omega_pow(last.exponent, 1));
}

// sq(w^e) for e >= 1.
inline Ordinal godel_sq_pow(const Ordinal& e) {
  if (e.is_successor()) {
    Ordinal d = e.predecessor();
    return Ordinal::omega_pow(ord_add(ord_add(d, d), Ordinal(std::uint64_t{1})), 1);
  }
  return Ordinal::omega_pow(godel_dbl_sup(e), 1);
}

inline Ordinal godel_sq(const Ordinal& m) {
  if (m.is_zero()) return Ordinal();
  if (m.is_natural()) return Ordinal(checked_mul_u64(m.natural_value(), m.natural_value()));
  const std::uint64_t fin = m.finite_part();
  if (fin > 0) {
    // sq(P + n) = sq(P) + P*(2n) + n for limit P.
    Ordinal p = m.limit_part();
    Ordinal r = ord_add(godel_sq(p), ord_mul(p, Ordinal(checked_mul_u64(2, fin))));
    return ord_add(r, Ordinal(fin));
  }
  // m is a limit; peel the last term w^e*c.
  const auto& last = m.terms().back();
  std::vector<Ordinal::Term> qt(m.terms().begin(), m.terms().end() - 1);
  Ordinal q = Ordinal::from_terms(std::move(qt));
  if (q.is_zero()) {
    Ordinal r = godel_sq_pow(last.exponent);
    if (last.coefficient > 1) {
      Ordinal e2 = ord_add(last.exponent, last.exponent);
      r = ord_add(r, Ordinal::omega_pow(e2, last.coefficient - 1));
    }
    return r;
  }
  Ordinal e = ord_add(q.leading_exponent(), last.exponent);
  return ord_add(godel_sq(q), Ordinal::omega_pow(e, last.coefficient));
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (x > 0 && static_cast<unsigned __int128>(x) * x > n) --x;
  while (static_cast<unsigned __int128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

// Largest ordinal x with pred(x), for antitone pred with pred(0) true and a
// false value somewhere above. Builds the CNF of the maximum digit by digit;
// exponent positions recurse one level down.
inline Ordinal max_satisfying(const std::function<bool(const Ordinal&)>& pred) {
  Ordinal x;
  std::optional<Ordinal> cap;  // next exponent must be strictly below
  for (;;) {
    auto ext = [&](const Ordinal& theta) {
      if (cap && !(theta < *cap)) return false;
      return pred(ord_add(x, Ordinal::omega_pow(theta, 1)));
    };
    if (!ext(Ordinal())) return x;
    Ordinal theta = max_satisfying(ext);
    std::uint64_t lo = 1, hi = 2;
    auto coeff_ok = [&](std::uint64_t t) {
      return pred(ord_add(x, Ordinal::omega_pow(theta, t)));
    };
    while (coeff_ok(hi)) {
      lo = hi;
      hi = checked_mul_u64(hi, 2);
    }
    while (lo + 1 < hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      (coeff_ok(mid) ? lo : hi) = mid;
    }
    x = ord_add(x, Ordinal::omega_pow(theta, lo));
    if (theta.is_zero()) return x;
    cap = theta;
  }
}

// Largest m with godel_sq(m) <= c.
inline Ordinal godel_invsq_floor(const Ordinal& c) {
  if (c.is_natural()) return Ordinal(isqrt_u64(c.natural_value()));
  return max_satisfying([&](const Ordinal& m) { return godel_sq(m) <= c; });
}

}  // namespace detail

// The Goedel pairing: order type of the set of pairs strictly below (a, b)
// in the ordering by (max, then lexicographic on (first, second)).
inline Ordinal godel_pair(const Ordinal& a, const Ordinal& b) {
  const Ordinal& m = ord_max(a, b);
  Ordinal r;
  if (a < m) {
    r = a;
  } else if (b < m) {
    r = ord_add(m, b);
  } else {
    r = ord_add(m, m);
  }
  return ord_add(detail::godel_sq(m), r);
}

inline std::pair<Ordinal, Ordinal> godel_unpair(const Ordinal& c) {
  Ordinal m = detail::godel_invsq_floor(c);
  Ordinal r = ord_sub_left(c, detail::godel_sq(m));
  if (r < m) return {r, m};
  Ordinal r2 = ord_sub_left(r, m);
  if (r2 < m) return {m, r2};
  if (r2 == m) return {m, m};
  throw OrdinalOverflow("godel_unpair: pairing layer exceeded");
}

// Describes the omega-sequence value(k*|period| + i) = base + shift*k + period[i].
struct OrdinalTailDescription {
  Ordinal base;
  std::vector<Ordinal> period;  // nonempty
  Ordinal shift;                // 0, or every period entry below shift*omega

  bool well_formed() const {
    if (period.empty()) return false;
    if (shift.is_zero()) return true;
    Ordinal bound = ord_mul(shift, Ordinal::omega());
    for (const auto& p : period)
      if (!(p < bound)) return false;
    return true;
  }

  Ordinal value_at(std::uint64_t k) const {
    Ordinal s = ord_mul(shift, Ordinal(k / period.size()));
    return ord_add(ord_add(base, s), period[k % period.size()]);
  }
};

// Inferior limit of the described sequence: the minimum of base + period[i]
// when shift is 0, and the supremum base + shift*omega otherwise.
inline Ordinal tail_liminf(const OrdinalTailDescription& d) {
  if (!d.well_formed()) throw InvalidEvidence("ill-formed ordinal tail description");
  if (d.shift.is_zero()) {
    const Ordinal* least = &d.period[0];
    for (const auto& p : d.period)
      if (p < *least) least = &p;
    return ord_add(d.base, *least);
  }
  return ord_add(d.base, ord_mul(d.shift, Ordinal::omega()));
}

// ---- Ordinal literals ----------------------------------------------------
//
// literal  := term ('+' term)*
// term     := nat | 'w' ('^' exponent)? ('*' nat)?
// exponent := nat | 'w' ('^' exponent)? | '(' literal ')'
//
// Examples: 0, 17, w, w*2, w^2*3+w+5, w^w, w^(w+1)*4+1.

namespace detail {

struct OrdCursor {
  std::string_view s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(1, pos + 1, expected); }
};

inline std::uint64_t parse_nat(OrdCursor& c) {
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("digit");
  std::uint64_t v = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = checked_mul_u64(v, 10);
    v = checked_add_u64(v, static_cast<std::uint64_t>(c.peek() - '0'));
    ++c.pos;
  }
  return v;
}

inline Ordinal parse_ordinal_literal(OrdCursor& c);

inline Ordinal parse_exponent(OrdCursor& c) {
  if (c.eof()) c.fail("exponent");
  if (c.peek() == '(') {
    ++c.pos;
    Ordinal e = parse_ordinal_literal(c);
    if (c.eof() || c.peek() != ')') c.fail("')'");
    ++c.pos;
    return e;
  }
  if (c.peek() == 'w') {
    ++c.pos;
    if (!c.eof() && c.peek() == '^') {
      ++c.pos;
      return Ordinal::omega_pow(parse_exponent(c), 1);
    }
    return Ordinal::omega();
  }
  return Ordinal(parse_nat(c));
}

inline Ordinal parse_term(OrdCursor& c) {
  if (c.eof()) c.fail("ordinal term");
  if (c.peek() == '(') {
    ++c.pos;
    Ordinal r = parse_ordinal_literal(c);
    if (c.eof() || c.peek() != ')') c.fail("')'");
    ++c.pos;
    return r;
  }
  if (c.peek() == 'w') {
    ++c.pos;
    Ordinal e(std::uint64_t{1});
    if (!c.eof() && c.peek() == '^') {
      ++c.pos;
      e = parse_exponent(c);
    }
    std::uint64_t coeff = 1;
    if (!c.eof() && c.peek() == '*') {
      ++c.pos;
      coeff = parse_nat(c);
    }
    if (coeff == 0) c.fail("positive coefficient");
    return Ordinal::omega_pow(e, coeff);
  }
  return Ordinal(parse_nat(c));
}

inline Ordinal parse_ordinal_literal(OrdCursor& c) {
  Ordinal r = parse_term(c);
  while (!c.eof() && c.peek() == '+') {
    ++c.pos;
    r = ord_add(r, parse_term(c));
  }
  return r;
}

}  // namespace detail

// Parses an ordinal literal. When `consumed` is null the whole string must be
// a literal; otherwise parsing stops at the first character that cannot
// extend the literal and reports how much was consumed.
inline Ordinal parse_ordinal(std::string_view s, std::size_t* consumed = nullptr) {
  detail::OrdCursor c{s};
  Ordinal r = detail::parse_ordinal_literal(c);
  if (consumed) {
    *consumed = c.pos;
  } else if (!c.eof()) {
    c.fail("end of ordinal literal");
  }
  return r;
}

inline std::string to_string(const Ordinal& o) {
  if (o.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : o.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal(std::uint64_t{1}))) {
      std::string es = to_string(t.exponent);
      bool wrap = es.find('+') != std::string::npos || es.find('*') != std::string::npos;
      out += '^';
      if (wrap) out += '(';
      out += es;
      if (wrap) out += ')';
    }
    if (t.coefficient != 1) {
      out += '*';
      out += std::to_string(t.coefficient);
    }
  }
  return out;
}

inline std::size_t hash_value(const Ordinal& o) {
  std::size_t h = 0xa5a5a5a5u;
  for (const auto& t : o.terms()) {
    h ^= hash_value(t.exponent) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(t.coefficient) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ordmach
