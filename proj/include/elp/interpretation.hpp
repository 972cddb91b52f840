// SPDX-License-Identifier: Apache-2.0
//
// Interpretations (consistent sets of object literals), world views
// (non-empty collections of interpretations), and the satisfaction
// relations joining them to rules.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {

/// A set of object literals packed two bits per atom: bit 2a holds the
/// atom a, bit 2a+1 holds -a. Consistency means no atom carries both.
struct Interpretation {
  uint64_t bits = 0;

  static constexpr uint32_t kMaxAtoms = 32;

  static uint32_t slot(const ObjectLiteral& l) {
    return 2 * l.atom + (l.strong_neg ? 1u : 0u);
  }

  bool contains(const ObjectLiteral& l) const {
    return (bits >> slot(l)) & 1u;
  }

  Interpretation with(const ObjectLiteral& l) const {
    return Interpretation{bits | (uint64_t{1} << slot(l))};
  }

  bool consistent() const {
    constexpr uint64_t even = 0x5555555555555555ull;
    return (bits & (bits >> 1) & even) == 0;
  }

  bool subset_of(const Interpretation& other) const {
    return (bits & ~other.bits) == 0;
  }

  size_t size() const { return static_cast<size_t>(std::popcount(bits)); }
  bool empty() const { return bits == 0; }

  std::vector<ObjectLiteral> literals() const {
    std::vector<ObjectLiteral> out;
    for (uint64_t rest = bits; rest != 0; rest &= rest - 1) {
      const auto slot = static_cast<uint32_t>(std::countr_zero(rest));
      out.push_back(ObjectLiteral{slot / 2, (slot & 1) != 0});
    }
    return out;
  }

  friend auto operator<=>(const Interpretation&, const Interpretation&) =
      default;
};

/// Literal names of an interpretation, sorted by atom name.
inline std::vector<std::string> literal_names(const Interpretation& i,
                                              const SymbolTable& syms) {
  std::vector<std::string> names;
  for (const ObjectLiteral& l : i.literals()) names.push_back(render(l, syms));
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
    std::string_view ka = a, kb = b;
    if (ka.starts_with('-')) ka.remove_prefix(1);
    if (kb.starts_with('-')) kb.remove_prefix(1);
    return ka != kb ? ka < kb : a.size() < b.size();
  });
  return names;
}

inline std::string render(const Interpretation& i, const SymbolTable& syms) {
  std::string out = "{";
  bool first = true;
  for (const std::string& name : literal_names(i, syms)) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

/// A non-empty, duplicate-free collection of interpretations kept in
/// ascending bitset order.
struct WorldView {
  std::vector<Interpretation> members;

  static WorldView of(std::vector<Interpretation> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    if (ms.empty())
      throw std::invalid_argument("a world view must be non-empty");
    return WorldView{std::move(ms)};
  }

  bool contains(const Interpretation& i) const {
    return std::binary_search(members.begin(), members.end(), i);
  }

  friend auto operator<=>(const WorldView&, const WorldView&) = default;
};

inline std::string render(const WorldView& a, const SymbolTable& syms) {
  std::string out = "{ ";
  for (size_t i = 0; i < a.members.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(a.members[i], syms);
  }
  return out + " }";
}

/// A guessed subset of a program's epistemic negations.
struct PhiGuess {
  std::vector<EpNegLiteral> chosen;  // sorted, duplicate-free

  static PhiGuess of(std::vector<EpNegLiteral> eps) {
    std::sort(eps.begin(), eps.end());
    eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
    return PhiGuess{std::move(eps)};
  }

  bool contains(const EpNegLiteral& e) const {
    return std::binary_search(chosen.begin(), chosen.end(), e);
  }

  friend auto operator<=>(const PhiGuess&, const PhiGuess&) = default;
};

inline std::string render(const PhiGuess& phi, const SymbolTable& syms) {
  std::string out = "{";
  for (size_t i = 0; i < phi.chosen.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(phi.chosen[i], syms);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Interpretation universe
// ---------------------------------------------------------------------------

/// All consistent interpretations over the program's atoms, ascending by
/// bitset value. The slot for a strongly negated atom participates only
/// if that literal occurs somewhere in the program.
inline std::vector<Interpretation> interpretation_universe(const Program& p) {
  const uint32_t n = p.symbols.size();
  if (n > Interpretation::kMaxAtoms)
    throw std::length_error("atom count exceeds interpretation capacity");
  std::vector<bool> strong(n, false);
  for (const Rule& r : p.rules)
    for_each_object_literal(r, [&](const ObjectLiteral& l) {
      if (l.strong_neg) strong[l.atom] = true;
    });
  std::vector<uint64_t> masks{0};
  for (uint32_t a = 0; a < n; ++a) {
    const size_t count = masks.size();
    for (size_t k = 0; k < count; ++k) {
      masks.push_back(masks[k] | (uint64_t{1} << (2 * a)));
      if (strong[a]) masks.push_back(masks[k] | (uint64_t{1} << (2 * a + 1)));
    }
  }
  std::sort(masks.begin(), masks.end());
  std::vector<Interpretation> out;
  out.reserve(masks.size());
  for (uint64_t m : masks) out.push_back(Interpretation{m});
  return out;
}

// ---------------------------------------------------------------------------
// Satisfaction
// ---------------------------------------------------------------------------

inline bool sat_objective(const Interpretation& i, const ObjectLiteral& l) {
  return i.contains(l);
}
inline bool sat_objective(const Interpretation& i, const DefaultNegated& l) {
  return !i.contains(l.lit);
}
inline bool sat_objective(const Interpretation& i, const DoublyNegated& l) {
  return i.contains(l.lit);
}

/// K l holds if l is true in every member; M l if l is true in some
/// member; default negation flips the result.
inline bool sat_modal(const WorldView& a, const ModalLiteral& m) {
  if (a.members.empty())
    throw std::invalid_argument("modal satisfaction over an empty collection");
  bool base;
  if (m.op == ModalOp::K)
    base = std::all_of(a.members.begin(), a.members.end(),
                       [&](const Interpretation& i) { return i.contains(m.lit); });
  else
    base = std::any_of(a.members.begin(), a.members.end(),
                       [&](const Interpretation& i) { return i.contains(m.lit); });
  return m.default_neg ? !base : base;
}

/// Conjunctive body truth. `a` may be null only for modal-free bodies.
inline bool sat_body(const WorldView* a, const Interpretation& i,
                     const Rule& r) {
  for (const ExtendedLiteral& e : r.body) {
    const bool ok = std::visit([&](const auto& v) -> bool {
      using T = std::decay_t<decltype(v)>;
      if constexpr (std::is_same_v<T, ModalLiteral>) {
        if (a == nullptr)
          throw std::invalid_argument(
              "modal literal evaluated without a world view");
        return sat_modal(*a, v);
      } else {
        return sat_objective(i, v);
      }
    }, e);
    if (!ok) return false;
  }
  return true;
}

inline bool sat_head(const Interpretation& i, const Rule& r) {
  return std::any_of(r.head.begin(), r.head.end(),
                     [&](const ObjectLiteral& l) { return i.contains(l); });
}

inline bool sat_rule(const WorldView& a, const Interpretation& i,
                     const Rule& r) {
  return !sat_body(&a, i, r) || sat_head(i, r);
}

/// Rule satisfaction for modal-free evaluation.
inline bool sat_rule(const Interpretation& i, const Rule& r) {
  return !sat_body(nullptr, i, r) || sat_head(i, r);
}

inline bool is_model(const Interpretation& i, const Program& p) {
  return std::all_of(p.rules.begin(), p.rules.end(),
                     [&](const Rule& r) { return sat_rule(i, r); });
}

/// Every rule satisfied with respect to (a, I) for every member I.
inline bool satisfies(const WorldView& a, const Program& p) {
  for (const Rule& r : p.rules)
    for (const Interpretation& i : a.members)
      if (!sat_rule(a, i, r)) return false;
  return true;
}

}  // namespace elp
