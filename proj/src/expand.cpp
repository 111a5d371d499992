#include "schurmzv/expand.hpp"

#include <algorithm>
#include <unordered_map>

namespace schurmzv {

namespace {

struct PredMasks {
  std::vector<std::uint32_t> weak, strict;
};

PredMasks pred_masks(const ChainSystem& sys) {
  PredMasks p;
  p.weak.assign(sys.n, 0);
  p.strict.assign(sys.n, 0);
  for (auto& [a, b] : sys.weak) p.weak[b] |= 1u << a;
  for (auto& [a, b] : sys.strict) p.strict[b] |= 1u << a;
  return p;
}

// T is a valid bottom level of `mask` iff no member has an unassigned strict
// predecessor and every unassigned weak predecessor of a member is in T.
bool valid_level(std::uint32_t T, std::uint32_t mask, const PredMasks& p) {
  for (std::uint32_t t = T; t;) {
    int v = __builtin_ctz(t);
    t &= t - 1;
    if (p.strict[v] & mask) return false;
    if (p.weak[v] & mask & ~T) return false;
  }
  return true;
}

}  // namespace

WordCombo expand_to_combo(const ChainSystem& sys) {
  if (sys.n > 30) throw domain_error("expand_to_combo: too many variables");
  PredMasks p = pred_masks(sys);
  std::unordered_map<std::uint32_t, WordCombo> memo;
  std::uint32_t full = sys.n == 0 ? 0 : (1u << sys.n) - 1;

  auto rec = [&](auto&& self, std::uint32_t mask) -> const WordCombo& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    WordCombo out;
    if (mask == 0) {
      out[Word{}] = 1;
    } else {
      for (std::uint32_t T = mask; T; T = (T - 1) & mask) {
        if (!valid_level(T, mask, p)) continue;
        long long letter = 0;
        for (std::uint32_t t = T; t;) {
          int v = __builtin_ctz(t);
          t &= t - 1;
          letter += sys.expo[v];
        }
        const WordCombo& rest = self(self, mask & ~T);
        for (auto& [w, c] : rest) {
          Word nw;
          nw.a.reserve(w.a.size() + 1);
          nw.a.push_back((int)letter);
          nw.a.insert(nw.a.end(), w.a.begin(), w.a.end());
          combo_add(out, nw, c);
        }
      }
    }
    return memo.emplace(mask, std::move(out)).first->second;
  };
  return rec(rec, full);
}

void for_each_level_sequence(
    const ChainSystem& sys,
    const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  if (sys.n > 30) throw domain_error("for_each_level_sequence: too many variables");
  PredMasks p = pred_masks(sys);
  std::uint32_t full = sys.n == 0 ? 0 : (1u << sys.n) - 1;
  std::vector<std::uint32_t> seq;

  // collect valid levels in ascending mask order so the stream is stable
  auto rec = [&](auto&& self, std::uint32_t mask) -> void {
    if (mask == 0) {
      f(seq);
      return;
    }
    std::vector<std::uint32_t> levels;
    for (std::uint32_t T = mask; T; T = (T - 1) & mask) {
      if (valid_level(T, mask, p)) levels.push_back(T);
    }
    std::sort(levels.begin(), levels.end());
    for (std::uint32_t T : levels) {
      seq.push_back(T);
      self(self, mask & ~T);
      seq.pop_back();
    }
  };
  rec(rec, full);
}

}  // namespace schurmzv
