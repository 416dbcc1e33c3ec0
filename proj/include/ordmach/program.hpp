#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ordmach/ordinal.hpp"
#include "ordmach/tape.hpp"

namespace ordmach {

enum class Motion : std::uint8_t { Left = 0, Stay = 1, Right = 2 };

inline char motion_to_char(Motion m) { return "LNR"[static_cast<unsigned>(m)]; }

struct RuleKey {
  Ordinal state;
  Cell read;

  friend bool operator<(const RuleKey& a, const RuleKey& b) {
    if (auto c = ord_compare(a.state, b.state); c != std::strong_ordering::equal)
      return c == std::strong_ordering::less;
    return a.read < b.read;
  }
  friend bool operator==(const RuleKey& a, const RuleKey& b) {
    return a.state == b.state && a.read == b.read;
  }
};

struct RuleAction {
  Ordinal next;
  Cell write;
  Motion motion;

  friend bool operator==(const RuleAction& a, const RuleAction& b) {
    return a.next == b.next && a.write == b.write && a.motion == b.motion;
  }
};

// A finite rule table over ordinal-valued states. States 0, 1 and 2 are the
// start, halt and limit states. A program is "finite" when every state it
// mentions is a natural number, "transfinite" otherwise.
class Program {
 public:
  Program() = default;

  // Returns false when the (state, read) key is already present.
  bool add_rule(const Ordinal& state, Cell read, const Ordinal& next, Cell write, Motion motion) {
    return rules_.emplace(RuleKey{state, read}, RuleAction{next, write, motion}).second;
  }

  std::optional<RuleAction> find(const Ordinal& state, Cell read) const {
    auto it = rules_.find(RuleKey{state, read});
    if (it == rules_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<RuleKey, RuleAction>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }

  bool is_finite() const {
    for (const auto& [k, a] : rules_)
      if (!k.state.is_natural() || !a.next.is_natural()) return false;
    return true;
  }

  // Least ordinal strictly above every state mentioned by the rules.
  Ordinal state_bound() const {
    Ordinal bound;
    for (const auto& [k, a] : rules_) {
      bound = ord_max(bound, ord_add(k.state, Ordinal(std::uint64_t{1})));
      bound = ord_max(bound, ord_add(a.next, Ordinal(std::uint64_t{1})));
    }
    return bound;
  }

  friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }

 private:
  std::map<RuleKey, RuleAction> rules_;
};

namespace detail {

inline std::uint64_t cell_index(Cell c) { return static_cast<std::uint64_t>(c); }

inline std::optional<Cell> cell_from_index(const Ordinal& o) {
  if (!o.is_natural() || o.natural_value() > 2) return std::nullopt;
  return static_cast<Cell>(o.natural_value());
}

inline std::optional<Motion> motion_from_index(const Ordinal& o) {
  if (!o.is_natural() || o.natural_value() > 2) return std::nullopt;
  return static_cast<Motion>(o.natural_value());
}

}  // namespace detail

// Program wire format: each rule ((state, read) -> (next, write, motion))
// becomes one tape cell holding 1 at position
//   pair(pair(pair(state, read), next), pair(write, motion))
// with read/write indices enumerating {empty, 0, 1} as 0..2 and motions
// left/stay/right as 0..2.
inline TapeContent encode_program(const Program& p) {
  TapeContent t;
  for (const auto& [k, a] : p.rules()) {
    Ordinal k1 = godel_pair(k.state, Ordinal(detail::cell_index(k.read)));
    Ordinal k2 = godel_pair(k1, a.next);
    Ordinal k3 = godel_pair(Ordinal(detail::cell_index(a.write)),
                            Ordinal(static_cast<std::uint64_t>(a.motion)));
    t = tape_write(t, godel_pair(k2, k3), Cell::One);
  }
  return t;
}

// Total: cells that are not 1 or whose key unpairs to out-of-range indices
// are skipped; on duplicate (state, read) keys the lowest cell position wins.
inline Program decode_program(const TapeContent& w) {
  Program p;
  if (!w.has_finite_support()) return p;
  for (const auto& [pos, cell] : w.support_cells()) {
    if (cell != Cell::One) continue;
    auto [k2, k3] = godel_unpair(pos);
    auto [k1, next] = godel_unpair(k2);
    auto [writeIdx, motionIdx] = godel_unpair(k3);
    auto [state, readIdx] = godel_unpair(k1);
    auto read = detail::cell_from_index(readIdx);
    auto write = detail::cell_from_index(writeIdx);
    auto motion = detail::motion_from_index(motionIdx);
    if (!read || !write || !motion) continue;
    p.add_rule(state, *read, next, *write, *motion);
  }
  return p;
}

}  // namespace ordmach
