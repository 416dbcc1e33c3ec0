#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordmach/errors.hpp"
#include "ordmach/ordinal.hpp"

namespace ordmach {

// Cell values over the binary alphabet plus the empty marker. The numeric
// order Empty < Zero < One is the order used by limit-stage liminfs.
enum class Cell : std::uint8_t { Empty = 0, Zero = 1, One = 2 };

inline char cell_to_char(Cell c) { return "_01"[static_cast<unsigned>(c)]; }

inline Cell cell_from_char(char ch) {
  switch (ch) {
    case '_': return Cell::Empty;
    case '0': return Cell::Zero;
    case '1': return Cell::One;
    default: throw SyntaxError(1, 1, "cell character '0', '1' or '_'");
  }
}

inline Cell cell_min(Cell a, Cell b) { return a < b ? a : b; }

// One periodically-worded interval [start, start+length). The value at
// start+d is word[c0(d) mod |word|] where c0 is the coefficient of w^0 in
// the CNF of d. Positions outside every piece read Empty.
struct TapePiece {
  Ordinal start;
  Ordinal length;    // >= 1
  std::string word;  // nonempty, over "01_"

  Ordinal end() const { return ord_add(start, length); }
};

inline bool operator==(const TapePiece& a, const TapePiece& b) {
  return a.start == b.start && a.length == b.length && a.word == b.word;
}

namespace detail {

constexpr std::size_t kMaterializeCap = 4096;

inline std::string rotate_left(const std::string& w, std::size_t r) {
  r %= w.size();
  return w.substr(r) + w.substr(0, r);
}

// Smallest cyclic period of w (w must equal a power of the result).
inline std::string primitive_root(const std::string& w) {
  for (std::size_t p = 1; p <= w.size() / 2; ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.substr(0, p);
  }
  return w;
}

// Minimal period p of the finite string s in the truncated sense
// s[i] == s[i mod p]; computed from the KMP border.
inline std::string minimal_period_word(const std::string& s) {
  std::vector<std::size_t> border(s.size() + 1, 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t b = border[i];
    while (b > 0 && s[i] != s[b]) b = border[b];
    border[i + 1] = (s[i] == s[b]) ? b + 1 : 0;
  }
  return s.substr(0, s.size() - border[s.size()]);
}

inline bool all_blank(const std::string& w) {
  return w.find_first_not_of('_') == std::string::npos;
}

inline bool same_block(const Ordinal& a, const Ordinal& b) {
  return a.limit_part() == b.limit_part();
}

}  // namespace detail

// A set-supported partial map from ordinals to symbols, held as a canonical
// sorted list of disjoint pieces. Canonical form: every piece is either
// "aligned" (start has no finite part) or confined to a single w-block;
// finite pieces are solid maximal runs with minimal-period words; words of
// infinite pieces are primitive; adjacent compatible pieces are merged.
class TapeContent {
 public:
  TapeContent() = default;

  static TapeContent from_pieces(std::vector<TapePiece> raw);
  static TapeContent single(const Ordinal& pos, Cell v) {
    if (v == Cell::Empty) return TapeContent();
    return from_pieces({TapePiece{pos, Ordinal(std::uint64_t{1}), std::string(1, cell_to_char(v))}});
  }

  const std::vector<TapePiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  // Least ordinal at or above every defined position.
  Ordinal support_bound() const { return pieces_.empty() ? Ordinal() : pieces_.back().end(); }

  bool has_finite_support() const {
    for (const auto& p : pieces_)
      if (!p.length.is_natural()) return false;
    return true;
  }

  // Defined positions with their symbols; requires finite support.
  std::vector<std::pair<Ordinal, Cell>> support_cells() const;

 private:
  std::vector<TapePiece> pieces_;
};

inline bool operator==(const TapeContent& a, const TapeContent& b) {
  return a.pieces() == b.pieces();
}

inline std::strong_ordering operator<=>(const TapeContent& a, const TapeContent& b) {
  const auto& x = a.pieces();
  const auto& y = b.pieces();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (auto c = ord_compare(x[i].start, y[i].start); c != std::strong_ordering::equal) return c;
    if (auto c = ord_compare(x[i].length, y[i].length); c != std::strong_ordering::equal) return c;
    if (auto c = x[i].word <=> y[i].word; c != std::strong_ordering::equal) return c;
  }
  return x.size() <=> y.size();
}

inline Cell tape_read(const TapeContent& t, const Ordinal& pos) {
  for (const auto& p : t.pieces()) {
    if (pos < p.start) return Cell::Empty;
    if (pos < p.end()) {
      Ordinal delta = ord_sub_left(pos, p.start);
      std::uint64_t idx = delta.finite_part() % p.word.size();
      return cell_from_char(p.word[idx]);
    }
  }
  return Cell::Empty;
}

namespace detail {

// Value of a piece at a finite offset k from its start (k < length for
// finite pieces). For every piece shape this is word[k mod |word|].
inline char piece_char_at(const TapePiece& p, std::uint64_t k) {
  return p.word[k % p.word.size()];
}

inline bool piece_is_finite(const TapePiece& p) { return p.length.is_natural(); }

// Splits one raw piece into canonical-shape fragments: pieces crossing out
// of a non-aligned start block split at the block end, with the tail keeping
// the original word (beyond its start block a piece reads absolutely,
// word[c0(pos) mod |word|]).
inline void split_to_blocks(TapePiece p, std::vector<TapePiece>& out) {
  if (p.word.empty()) throw DomainViolation("tape piece with empty word");
  if (p.word.find_first_not_of("01_") != std::string::npos)
    throw DomainViolation("tape piece word must be over 0, 1, _");
  if (p.length.is_zero()) return;
  if (p.start.finite_part() == 0 || piece_is_finite(p)) {
    // Aligned pieces and finite pieces never cross their block irregularly:
    // a finite piece stays inside the block of its start.
    out.push_back(std::move(p));
    return;
  }
  Ordinal blockEnd = ord_add(p.start.limit_part(), Ordinal::omega());
  if (p.end() <= blockEnd) {
    out.push_back(std::move(p));
    return;
  }
  out.push_back(TapePiece{p.start, ord_sub_left(blockEnd, p.start), p.word});
  out.push_back(TapePiece{blockEnd, ord_sub_left(p.end(), blockEnd), p.word});
}

// Normalizes one block-respecting piece into zero or more canonical pieces.
inline void normalize_piece(TapePiece p, std::vector<TapePiece>& out) {
  if (all_blank(p.word)) return;
  if (piece_is_finite(p)) {
    std::uint64_t len = p.length.natural_value();
    if (len <= kMaterializeCap) {
      std::string vals(len, '_');
      for (std::uint64_t i = 0; i < len; ++i) vals[i] = piece_char_at(p, i);
      std::uint64_t i = 0;
      while (i < len) {
        while (i < len && vals[i] == '_') ++i;
        std::uint64_t j = i;
        while (j < len && vals[j] != '_') ++j;
        if (j > i) {
          out.push_back(TapePiece{ord_add(p.start, Ordinal(i)), Ordinal(j - i),
                                  minimal_period_word(vals.substr(i, j - i))});
        }
        i = j;
      }
      return;
    }
    // Long finite pieces: primitive word and edge trims only.
    p.word = primitive_root(p.word);
    std::size_t lead = 0;
    while (p.word[lead % p.word.size()] == '_') ++lead;
    if (lead > 0) {
      p.start = ord_add(p.start, Ordinal(lead));
      len -= lead;
      p.word = rotate_left(p.word, lead);
    }
    while (len > 0 && p.word[(len - 1) % p.word.size()] == '_') --len;
    p.length = Ordinal(len);
    if (len > 0) out.push_back(std::move(p));
    return;
  }
  p.word = primitive_root(p.word);
  const std::size_t L = p.word.size();
  if (p.start.finite_part() == 0) {
    // Aligned: trim a trailing partial block, keep the phase.
    Ordinal lim = p.length.limit_part();
    std::uint64_t n = p.length.finite_part();
    while (n > 0 && p.word[(n - 1) % L] == '_') --n;
    p.length = ord_add(lim, Ordinal(n));
    out.push_back(std::move(p));
    return;
  }
  // Confined infinite piece [l+m, l+w): trim leading blanks. Conversion to
  // the aligned form happens later, once neighbouring pieces are known.
  std::size_t lead = 0;
  while (p.word[lead] == '_') ++lead;  // word not all blank
  if (lead > 0) {
    p.start = ord_add(p.start, Ordinal(lead));
    p.word = rotate_left(p.word, lead);
  }
  p.length = Ordinal::omega();
  out.push_back(std::move(p));
}

// Rewrites a confined piece as an aligned one when its leftward periodic
// extension is blank down to the block start and nothing else occupies that
// stretch of the block.
inline bool try_align(TapePiece& p) {
  if (piece_is_finite(p)) return false;
  std::uint64_t m = p.start.finite_part();
  if (m == 0) return false;
  const std::size_t L = p.word.size();
  for (std::uint64_t i = 0; i < m; ++i)
    if (p.word[static_cast<std::size_t>(((i % L) + L - (m % L)) % L)] != '_') return false;
  std::string aligned(L, '_');
  for (std::size_t x = 0; x < L; ++x) aligned[x] = p.word[((x + L) - (m % L)) % L];
  p = TapePiece{p.start.limit_part(), Ordinal::omega(), std::move(aligned)};
  return true;
}

// Combines two adjacent canonical-shape pieces. The infinite piece absorbs
// maximally from its neighbour so that the boundary between an explicit run
// and a periodic tail is a function of the semantics alone: an aligned piece
// extends rightward as far as its pattern matches, and a confined piece
// extends leftward over a matching finite run. Returns the replacement
// pieces (possibly still needing normalization), or nullopt when unchanged.
inline std::optional<std::vector<TapePiece>> try_combine(const TapePiece& p, const TapePiece& q) {
  if (!(p.end() == q.start)) return std::nullopt;
  const bool pFin = piece_is_finite(p), qFin = piece_is_finite(q);
  const std::size_t Lp = p.word.size(), Lq = q.word.size();
  if (pFin && qFin) {
    std::uint64_t lp = p.length.natural_value(), lq = q.length.natural_value();
    if (lp + lq <= kMaterializeCap) {
      std::string vals;
      vals.reserve(lp + lq);
      for (std::uint64_t i = 0; i < lp; ++i) vals += piece_char_at(p, i);
      for (std::uint64_t i = 0; i < lq; ++i) vals += piece_char_at(q, i);
      return {{TapePiece{p.start, Ordinal(lp + lq), minimal_period_word(vals)}}};
    }
    bool cont = true;
    for (std::uint64_t x = 0; x < std::min<std::uint64_t>(lq, std::lcm(Lp, Lq)) && cont; ++x)
      cont = piece_char_at(q, x) == p.word[(lp + x) % Lp];
    if (cont) return {{TapePiece{p.start, Ordinal(lp + lq), p.word}}};
    return std::nullopt;
  }
  if (!pFin && p.start.finite_part() != 0) {
    // A confined piece ends at its block boundary; nothing crosses it.
    return std::nullopt;
  }
  if (!pFin) {
    // p aligned-infinite: absorb the longest matching prefix of q.
    std::uint64_t off = p.length.finite_part();
    std::uint64_t bound = qFin ? q.length.natural_value()
                               : std::lcm<std::uint64_t>(Lp, Lq);
    std::uint64_t k = 0;
    while (k < bound && piece_char_at(q, k) == p.word[(off + k) % Lp]) ++k;
    if (k == bound)
      return {{TapePiece{p.start, ord_add(p.length, q.length), p.word}}};
    while (k > 0 && p.word[(off + k - 1) % Lp] == '_') --k;  // keep a solid edge
    if (k == 0) return std::nullopt;
    TapePiece p2{p.start, ord_add(p.length, Ordinal(k)), p.word};
    TapePiece q2{ord_add(q.start, Ordinal(k)),
                 qFin ? Ordinal(q.length.natural_value() - k) : q.length,
                 rotate_left(q.word, k % Lq)};
    return {{p2, q2}};
  }
  // p finite, q confined-infinite in the same block: q extends leftward over
  // the longest matching suffix of p.
  std::uint64_t lp = p.length.natural_value();
  auto left_pattern = [&](std::uint64_t x) {  // q's pattern x cells left of q.start
    return q.word[(Lq - (x % Lq)) % Lq];
  };
  std::uint64_t j = 0;
  while (j < lp && piece_char_at(p, lp - 1 - j) == left_pattern(j + 1)) ++j;
  while (j > 0 && left_pattern(j) == '_') --j;  // keep a solid edge
  if (j == 0) return std::nullopt;
  TapePiece q2{ord_add(q.start.limit_part(), Ordinal(q.start.finite_part() - j)),
               Ordinal::omega(), rotate_left(q.word, (Lq - (j % Lq)) % Lq)};
  if (j == lp) return {{q2}};
  return {{TapePiece{p.start, Ordinal(lp - j), p.word}, q2}};
}

inline std::vector<TapePiece> canonize(std::vector<TapePiece> raw) {
  std::vector<TapePiece> blocks;
  for (auto& p : raw) split_to_blocks(std::move(p), blocks);
  std::vector<TapePiece> norm;
  for (auto& p : blocks) normalize_piece(std::move(p), norm);
  std::sort(norm.begin(), norm.end(),
            [](const TapePiece& a, const TapePiece& b) { return a.start < b.start; });
  for (std::size_t i = 0; i + 1 < norm.size(); ++i)
    if (!(norm[i].end() <= norm[i + 1].start))
      throw DomainViolation("overlapping tape pieces");
  bool changed = true;
  int guard = 0;
  while (changed) {
    if (++guard > 64) throw DomainViolation("tape canonicalization did not converge");
    changed = false;
    for (std::size_t i = 0; i < norm.size(); ++i) {
      if (norm[i].start.finite_part() == 0 || piece_is_finite(norm[i])) continue;
      Ordinal blockStart = norm[i].start.limit_part();
      if (i > 0 && blockStart < norm[i - 1].end()) continue;
      changed |= try_align(norm[i]);
    }
    std::size_t i = 0;
    while (i + 1 < norm.size()) {
      if (auto combined = try_combine(norm[i], norm[i + 1])) {
        std::vector<TapePiece> renorm;
        for (auto& piece : *combined) {
          std::vector<TapePiece> blk;
          split_to_blocks(std::move(piece), blk);
          for (auto& b : blk) normalize_piece(std::move(b), renorm);
        }
        norm.erase(norm.begin() + static_cast<std::ptrdiff_t>(i),
                   norm.begin() + static_cast<std::ptrdiff_t>(i + 2));
        norm.insert(norm.begin() + static_cast<std::ptrdiff_t>(i), renorm.begin(), renorm.end());
        if (i > 0) --i;
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return norm;
}

// Fragments of `p` restricted to [lo, hi); hi absent means unbounded.
inline void clip_piece(const TapePiece& p, const Ordinal& lo, const Ordinal* hi,
                       std::vector<TapePiece>& out) {
  Ordinal s = ord_max(p.start, lo);
  Ordinal e = p.end();
  if (hi) e = ord_min(e, *hi);
  if (!(s < e)) return;
  std::uint64_t rot = s.finite_part();
  if (same_block(s, p.start)) rot -= p.start.finite_part();
  std::string w = rotate_left(p.word, rot % p.word.size());
  if (s.finite_part() > 0) {
    Ordinal blockEnd = ord_add(s.limit_part(), Ordinal::omega());
    if (e > blockEnd) {
      out.push_back(TapePiece{s, ord_sub_left(blockEnd, s), w});
      out.push_back(TapePiece{blockEnd, ord_sub_left(e, blockEnd), p.word});
      return;
    }
  }
  out.push_back(TapePiece{s, ord_sub_left(e, s), std::move(w)});
}

}  // namespace detail

inline TapeContent TapeContent::from_pieces(std::vector<TapePiece> raw) {
  TapeContent t;
  t.pieces_ = detail::canonize(std::move(raw));
  return t;
}

inline std::vector<std::pair<Ordinal, Cell>> TapeContent::support_cells() const {
  if (!has_finite_support()) throw DomainViolation("support is infinite");
  std::vector<std::pair<Ordinal, Cell>> cells;
  for (const auto& p : pieces_) {
    std::uint64_t len = p.length.natural_value();
    for (std::uint64_t i = 0; i < len; ++i) {
      char ch = detail::piece_char_at(p, i);
      if (ch != '_') cells.push_back({ord_add(p.start, Ordinal(i)), cell_from_char(ch)});
    }
  }
  return cells;
}

// Content restricted to [lo, hi); pass nullptr for an unbounded high end.
inline TapeContent tape_clip(const TapeContent& t, const Ordinal& lo, const Ordinal* hi) {
  std::vector<TapePiece> out;
  for (const auto& p : t.pieces()) detail::clip_piece(p, lo, hi, out);
  return TapeContent::from_pieces(std::move(out));
}

// Replaces the region [lo, hi) of `t` with `patch` (whose pieces must lie in
// the region).
inline TapeContent tape_overwrite(const TapeContent& t, const Ordinal& lo, const Ordinal& hi,
                                  const TapeContent& patch) {
  std::vector<TapePiece> out;
  for (const auto& p : t.pieces()) detail::clip_piece(p, Ordinal(), &lo, out);
  for (const auto& p : patch.pieces()) {
    if (p.start < lo || hi < p.end()) throw DomainViolation("patch outside region");
    out.push_back(p);
  }
  for (const auto& p : t.pieces()) detail::clip_piece(p, hi, nullptr, out);
  return TapeContent::from_pieces(std::move(out));
}

inline TapeContent tape_write(const TapeContent& t, const Ordinal& pos, Cell v) {
  if (tape_read(t, pos) == v) return t;
  return tape_overwrite(t, pos, ord_add(pos, Ordinal(std::uint64_t{1})), TapeContent::single(pos, v));
}

// Pointwise minimum (in the Empty < 0 < 1 order) of several contents; the
// cellwise liminf of a periodically repeating sequence of tapes.
inline TapeContent tape_pointwise_min(const std::vector<TapeContent>& tapes) {
  if (tapes.empty()) return TapeContent();
  std::vector<Ordinal> bounds;
  for (const auto& t : tapes) {
    for (const auto& p : t.pieces()) {
      bounds.push_back(p.start);
      bounds.push_back(p.end());
      if (p.start.finite_part() > 0)
        bounds.push_back(ord_add(p.start.limit_part(), Ordinal::omega()));
      if (p.end().finite_part() > 0)
        bounds.push_back(ord_add(p.end().limit_part(), Ordinal::omega()));
    }
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  std::vector<TapePiece> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const Ordinal& lo = bounds[i];
    const Ordinal& hi = bounds[i + 1];
    // Pattern of each tape on [lo, hi): a word and an absolute phase, or blank.
    struct Pat {
      const std::string* w;
      std::uint64_t phase;
    };
    std::vector<Pat> pats;
    bool allBlank = true;
    bool anyBlank = false;
    for (const auto& t : tapes) {
      const TapePiece* cover = nullptr;
      for (const auto& p : t.pieces())
        if (p.start <= lo && hi <= p.end()) cover = &p;
      if (cover) {
        pats.push_back(Pat{&cover->word, cover->start.finite_part() % cover->word.size()});
        allBlank = false;
      } else {
        anyBlank = true;
      }
    }
    if (allBlank || anyBlank) continue;  // some tape reads Empty: min is Empty
    std::uint64_t lstar = 1;
    for (const auto& pt : pats) lstar = std::lcm<std::uint64_t>(lstar, pt.w->size());
    if (lstar > detail::kMaterializeCap) throw OrdinalOverflow("pattern period too large");
    std::uint64_t s0 = lo.finite_part();
    std::string w(lstar, '_');
    for (std::uint64_t x = 0; x < lstar; ++x) {
      Cell m = Cell::One;
      for (const auto& pt : pats) {
        std::uint64_t L = pt.w->size();
        m = cell_min(m, cell_from_char((*pt.w)[((x + s0 + L) - pt.phase) % L]));
      }
      w[x] = cell_to_char(m);
    }
    out.push_back(TapePiece{lo, ord_sub_left(hi, lo), std::move(w)});
  }
  return TapeContent::from_pieces(std::move(out));
}

// Exact check that value(pos) == value(pos + delta) for every pos >= from,
// with natural delta >= 1. Positions and their translates always share an
// w-block, so the check decomposes per block: explicit scans over blocks
// containing piece boundaries plus a rotation condition on infinite words.
inline bool tape_delta_invariant_from(const TapeContent& t, const Ordinal& from,
                                      std::uint64_t delta) {
  if (delta == 0) return true;
  // Rotation condition for every infinite piece reaching beyond `from`.
  for (const auto& p : t.pieces()) {
    if (detail::piece_is_finite(p)) continue;
    if (p.end() <= from) continue;
    if (detail::rotate_left(p.word, delta % p.word.size()) != p.word) return false;
  }
  // Critical blocks: those holding a piece edge with a finite offset, plus
  // the block of `from` and of each finite piece.
  std::vector<Ordinal> blocks;
  blocks.push_back(from.limit_part());
  for (const auto& p : t.pieces()) {
    blocks.push_back(p.start.limit_part());
    blocks.push_back(p.end().limit_part());
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  for (const auto& blk : blocks) {
    if (ord_add(blk, Ordinal::omega()) <= from) continue;
    std::uint64_t lo = from.limit_part() == blk ? from.finite_part() : 0;
    std::uint64_t maxOff = 0;
    std::uint64_t maxLen = 1;
    for (const auto& p : t.pieces()) {
      maxLen = std::max<std::uint64_t>(maxLen, p.word.size());
      if (p.start.limit_part() == blk)
        maxOff = std::max(maxOff, p.start.finite_part() +
                                      (detail::piece_is_finite(p) ? p.length.natural_value() : 0));
      if (p.end().limit_part() == blk) maxOff = std::max(maxOff, p.end().finite_part());
    }
    std::uint64_t hi = maxOff + maxLen + delta + 2;
    for (std::uint64_t n = lo; n <= hi; ++n) {
      Ordinal pos = ord_add(blk, Ordinal(n));
      if (tape_read(t, pos) != tape_read(t, ord_add(pos, Ordinal(delta)))) return false;
    }
  }
  return true;
}

// Moves every piece at or above old_base to sit relative to new_base. Both
// bases must be limits (or 0) so w-block phases are preserved.
inline TapeContent tape_translate_tail(const TapeContent& t, const Ordinal& old_base,
                                       const Ordinal& new_base) {
  if (old_base.finite_part() != 0 || new_base.finite_part() != 0)
    throw DomainViolation("tail translation requires limit bases");
  std::vector<TapePiece> out;
  for (const auto& p : t.pieces()) {
    if (p.start < old_base) throw DomainViolation("piece below translation base");
    out.push_back(TapePiece{ord_add(new_base, ord_sub_left(p.start, old_base)), p.length, p.word});
  }
  return TapeContent::from_pieces(std::move(out));
}

// ---- Domain classes --------------------------------------------------------

enum class DomainClass { Star, OmegaWords, FiniteSupport, SingleMark, BoundedDomain, General };

inline bool is_single_mark(const TapeContent& t) {
  return t.pieces().size() == 1 && t.pieces()[0].length == Ordinal(std::uint64_t{1}) &&
         t.pieces()[0].word == "0";
}

// dom(x) is a natural number: total on an initial segment of the naturals.
inline bool is_star_word(const TapeContent& t) {
  if (t.empty()) return true;
  return t.pieces().size() == 1 && t.pieces()[0].start.is_zero() &&
         t.pieces()[0].length.is_natural() &&
         t.pieces()[0].word.find('_') == std::string::npos;
}

// dom(x) = w exactly: defined on every natural, nowhere else.
inline bool is_omega_word(const TapeContent& t) {
  if (t.pieces().empty()) return false;
  Ordinal cursor;
  for (const auto& p : t.pieces()) {
    if (!(p.start == cursor)) return false;
    if (p.word.find('_') != std::string::npos) return false;
    cursor = p.end();
  }
  return cursor == Ordinal::omega();
}

inline bool is_finite_domain(const TapeContent& t) { return t.has_finite_support(); }

inline DomainClass classify(const TapeContent& t) {
  if (is_single_mark(t)) return DomainClass::SingleMark;
  if (is_star_word(t)) return DomainClass::Star;
  if (is_omega_word(t)) return DomainClass::OmegaWords;
  if (is_finite_domain(t)) return DomainClass::FiniteSupport;
  return DomainClass::BoundedDomain;
}

inline const char* domain_class_name(DomainClass d) {
  switch (d) {
    case DomainClass::Star: return "Star";
    case DomainClass::OmegaWords: return "OmegaWords";
    case DomainClass::FiniteSupport: return "FiniteSupport";
    case DomainClass::SingleMark: return "SingleMark";
    case DomainClass::BoundedDomain: return "BoundedDomain";
    case DomainClass::General: return "General";
  }
  return "?";
}

// ---- The star pairing ------------------------------------------------------

// Combines two words into one: position godel_pair(0, n) carries w(n) and
// godel_pair(1, n) carries v(n). Requires finite supports; the image of an
// infinite periodic support under the pairing is not piecewise periodic.
inline TapeContent star_pair(const TapeContent& w, const TapeContent& v) {
  if (!w.has_finite_support() || !v.has_finite_support())
    throw OrdinalOverflow("star_pair requires finite supports");
  std::vector<TapePiece> out;
  Ordinal one(std::uint64_t{1});
  for (const auto& [pos, c] : w.support_cells())
    out.push_back(TapePiece{godel_pair(Ordinal(), pos), one, std::string(1, cell_to_char(c))});
  for (const auto& [pos, c] : v.support_cells())
    out.push_back(TapePiece{godel_pair(one, pos), one, std::string(1, cell_to_char(c))});
  return TapeContent::from_pieces(std::move(out));
}

inline std::pair<TapeContent, TapeContent> star_split(const TapeContent& u) {
  if (!u.has_finite_support()) throw OrdinalOverflow("star_split requires finite support");
  std::vector<TapePiece> first, second;
  Ordinal one(std::uint64_t{1});
  for (const auto& [pos, c] : u.support_cells()) {
    auto [sel, idx] = godel_unpair(pos);
    if (sel.is_zero())
      first.push_back(TapePiece{idx, one, std::string(1, cell_to_char(c))});
    else if (sel == one)
      second.push_back(TapePiece{idx, one, std::string(1, cell_to_char(c))});
    // cells whose selector is neither 0 nor 1 are outside the pairing range
  }
  return {TapeContent::from_pieces(std::move(first)), TapeContent::from_pieces(std::move(second))};
}

// ---- Tape literals ---------------------------------------------------------
//
// Semicolon-separated pieces `@START xLEN "word"`, `_` for the empty cell:
//   @0 xw "01"; @w x1 "1"
// The empty string denotes the empty content.

inline TapeContent parse_tape(std::string_view s) {
  std::vector<TapePiece> pieces;
  std::size_t i = 0;
  auto skip = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
  auto fail = [&](const std::string& what) -> void { throw SyntaxError(1, i + 1, what); };
  skip();
  while (i < s.size()) {
    if (s[i] != '@') fail("'@'");
    ++i;
    std::size_t used = 0;
    Ordinal start = parse_ordinal(s.substr(i), &used);
    if (used == 0) fail("ordinal");
    i += used;
    skip();
    if (i >= s.size() || s[i] != 'x') fail("'x'");
    ++i;
    Ordinal len = parse_ordinal(s.substr(i), &used);
    if (used == 0) fail("ordinal");
    i += used;
    skip();
    if (i >= s.size() || s[i] != '"') fail("'\"'");
    ++i;
    std::string word;
    while (i < s.size() && s[i] != '"') {
      if (s[i] != '0' && s[i] != '1' && s[i] != '_') fail("cell character");
      word += s[i++];
    }
    if (i >= s.size()) fail("closing '\"'");
    ++i;
    if (word.empty()) fail("nonempty word");
    if (len.is_zero()) fail("positive length");
    pieces.push_back(TapePiece{std::move(start), std::move(len), std::move(word)});
    skip();
    if (i < s.size()) {
      if (s[i] != ';') fail("';' or end");
      ++i;
      skip();
      if (i >= s.size()) fail("piece after ';'");
    }
  }
  return TapeContent::from_pieces(std::move(pieces));
}

inline std::string to_string(const TapeContent& t) {
  std::string out;
  bool first = true;
  for (const auto& p : t.pieces()) {
    if (!first) out += "; ";
    first = false;
    out += "@" + to_string(p.start) + " x" + to_string(p.length) + " \"" + p.word + "\"";
  }
  return out;
}

inline std::size_t hash_value(const TapeContent& t) {
  std::size_t h = 0x12345;
  for (const auto& p : t.pieces()) {
    h ^= hash_value(p.start) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= hash_value(p.length) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(p.word) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ordmach
