// SPDX-License-Identifier: Apache-2.0
//
// Executable checkers for (subjective) constraint monotonicity, the
// constraint-as-query reading, and unfounded-set witnesses.
//
// The epistemic unfounded-set conditions are a witness-compatible
// reconstruction: conditions (a)-(c) follow the classical unfounded-set
// conditions for disjunctive programs, and condition (d) lets a positive
// K-literal whose atom sits inside the candidate set support circularly.
// Only positive K-literals trigger (d); M-literals never do.

#pragma once

#include "elp/solvers.hpp"

namespace elp {

// ---------------------------------------------------------------------------
// Constraint monotonicity
// ---------------------------------------------------------------------------

struct CmReport {
  SemanticsId semantics = SemanticsId::GL;
  SolveResult with_constraint;
  SolveResult without_constraint;
  // GL compares answer sets; the epistemic semantics compare world views.
  std::vector<Interpretation> violating_answer_sets;
  std::vector<WorldView> violating_world_views;
  bool holds = true;
};

/// Solves p u {c} and p and reports every result of the extended program
/// missing from the original one.
inline CmReport check_constraint_monotonicity(const Program& p, const Rule& c,
                                              SemanticsId s,
                                              const SolverLimits& limits = {}) {
  if (!c.is_constraint())
    throw std::invalid_argument("designated rule is not a constraint");
  CmReport report;
  report.semantics = s;
  report.with_constraint = solve(p.with_rule(c), s, limits);
  report.without_constraint = solve(p, s, limits);
  if (s == SemanticsId::GL) {
    std::set_difference(report.with_constraint.answer_sets.begin(),
                        report.with_constraint.answer_sets.end(),
                        report.without_constraint.answer_sets.begin(),
                        report.without_constraint.answer_sets.end(),
                        std::back_inserter(report.violating_answer_sets));
    report.holds = report.violating_answer_sets.empty();
  } else {
    std::set_difference(report.with_constraint.world_views.begin(),
                        report.with_constraint.world_views.end(),
                        report.without_constraint.world_views.begin(),
                        report.without_constraint.world_views.end(),
                        std::back_inserter(report.violating_world_views));
    report.holds = report.violating_world_views.empty();
  }
  return report;
}

/// Reads c as a query: solves p alone and keeps the results satisfying
/// c. The query takes no part in the computation.
inline SolveResult query_filter(const Program& p, const Rule& c, SemanticsId s,
                                const SolverLimits& limits = {}) {
  if (!c.is_constraint())
    throw std::invalid_argument("query rule is not a constraint");
  SolveResult r = solve(p, s, limits);
  if (s == SemanticsId::GL) {
    if (c.has_modal_body())
      throw std::invalid_argument("a gl query cannot contain modal literals");
    std::erase_if(r.answer_sets,
                  [&](const Interpretation& i) { return !sat_rule(i, c); });
  } else {
    auto fails = [&](const WorldView& a) {
      return std::any_of(a.members.begin(), a.members.end(),
                         [&](const Interpretation& i) {
                           return !sat_rule(a, i, c);
                         });
    };
    std::erase_if(r.world_views, fails);
    std::erase_if(r.se16, [&](const Se16WorldView& c16) {
      return fails(c16.world_view);
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Unfounded sets
// ---------------------------------------------------------------------------

struct UnfoundedPair {
  std::vector<uint32_t> atoms;  // sorted, non-empty
  Interpretation interpretation;

  friend auto operator<=>(const UnfoundedPair&, const UnfoundedPair&) = default;
};

struct UnfoundedWitness {
  std::vector<UnfoundedPair> pairs;  // canonical order, non-empty

  friend auto operator<=>(const UnfoundedWitness&, const UnfoundedWitness&) =
      default;
};

inline std::string render(const UnfoundedPair& pair, const SymbolTable& syms) {
  std::string out = "<{";
  for (size_t k = 0; k < pair.atoms.size(); ++k) {
    if (k > 0) out += ",";
    out += syms.name(pair.atoms[k]);
  }
  return out + "}, " + render(pair.interpretation, syms) + ">";
}

inline std::string render(const UnfoundedWitness& w, const SymbolTable& syms) {
  if (w.pairs.size() == 1) return render(w.pairs[0], syms);
  std::string out = "[";
  for (size_t k = 0; k < w.pairs.size(); ++k) {
    if (k > 0) out += ", ";
    out += render(w.pairs[k], syms);
  }
  return out + "]";
}

namespace detail {

inline uint64_t positive_atom_mask(const Interpretation& i) {
  uint64_t mask = 0;
  for (const ObjectLiteral& l : i.literals())
    if (!l.strong_neg) mask |= uint64_t{1} << l.atom;
  return mask;
}

inline std::vector<uint32_t> mask_to_atoms(uint64_t mask) {
  std::vector<uint32_t> out;
  for (uint64_t rest = mask; rest != 0; rest &= rest - 1)
    out.push_back(static_cast<uint32_t>(std::countr_zero(rest)));
  return out;
}

/// Conditions (a)-(d) for one pair against every rule whose head meets X.
/// `collection` may be null for modal-free programs; `union_mask` is the
/// union of the candidate sets of the whole collection.
inline bool unfounded_pair_ok(const Program& p, const WorldView* collection,
                              const Interpretation& i, uint64_t x_mask,
                              uint64_t union_mask) {
  for (const Rule& r : p.rules) {
    const bool head_meets_x =
        std::any_of(r.head.begin(), r.head.end(), [&](const ObjectLiteral& h) {
          return !h.strong_neg && ((x_mask >> h.atom) & 1);
        });
    if (!head_meets_x) continue;
    // (a) body false w.r.t. (collection, i)
    if (!sat_body(collection, i, r)) continue;
    // (b) positive objective body meets X
    const bool pos_body_meets_x = std::any_of(
        r.body.begin(), r.body.end(), [&](const ExtendedLiteral& e) {
          const auto* l = std::get_if<ObjectLiteral>(&e);
          return l != nullptr && !l->strong_neg && ((x_mask >> l->atom) & 1);
        });
    if (pos_body_meets_x) continue;
    // (c) head satisfied by i outside X
    const bool head_outside_x = std::any_of(
        r.head.begin(), r.head.end(), [&](const ObjectLiteral& h) {
          return i.contains(h) &&
                 !(!h.strong_neg && ((x_mask >> h.atom) & 1));
        });
    if (head_outside_x) continue;
    // (d) positive K-literal supported inside the candidate union
    const bool k_inside_union = std::any_of(
        r.body.begin(), r.body.end(), [&](const ExtendedLiteral& e) {
          const auto* m = std::get_if<ModalLiteral>(&e);
          return m != nullptr && m->op == ModalOp::K && !m->default_neg &&
                 !m->lit.strong_neg && ((union_mask >> m->lit.atom) & 1);
        });
    if (k_inside_union) continue;
    return false;
  }
  return true;
}

/// Calls fn with each size-`k` subset of `items` in lexicographic order
/// until fn returns true; reports whether any call did.
template <class Fn>
bool for_each_combination(const std::vector<uint32_t>& items, size_t k,
                          Fn&& fn) {
  std::vector<uint32_t> combo;
  combo.reserve(k);
  auto rec = [&](auto&& self, size_t from) -> bool {
    if (combo.size() == k) return fn(combo);
    for (size_t j = from; j + (k - combo.size()) <= items.size(); ++j) {
      combo.push_back(items[j]);
      if (self(self, j + 1)) return true;
      combo.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Smallest (by size, then lexicographically) non-empty X of atoms of i
/// whose every supporting rule is blocked, circular inside X, or already
/// satisfied outside X. Returns nothing when i is founded.
inline std::optional<UnfoundedWitness> find_unfounded_set(
    const Program& p, const Interpretation& i) {
  if (!p.non_epistemic())
    throw std::invalid_argument(
        "find_unfounded_set requires a non-epistemic program");
  if (!is_model(i, p))
    throw std::invalid_argument(
        "interpretation is not a model of the program");
  const std::vector<uint32_t> atoms =
      detail::mask_to_atoms(detail::positive_atom_mask(i));
  std::optional<UnfoundedWitness> found;
  for (size_t k = 1; k <= atoms.size() && !found; ++k)
    detail::for_each_combination(atoms, k, [&](const std::vector<uint32_t>& x) {
      uint64_t x_mask = 0;
      for (uint32_t a : x) x_mask |= uint64_t{1} << a;
      if (!detail::unfounded_pair_ok(p, nullptr, i, x_mask, x_mask))
        return false;
      found = UnfoundedWitness{{UnfoundedPair{x, i}}};
      return true;
    });
  return found;
}

/// Epistemic lift: a collection of pairs (X_j, I_j) with I_j in a, each
/// rule supporting some X_j blocked by one of conditions (a)-(d). The
/// witness with the smallest union of candidate sets is returned, holding
/// every pair compatible with that union.
inline std::optional<UnfoundedWitness> find_epistemic_unfounded(
    const Program& p, const WorldView& a) {
  for (const Rule& r : p.rules)
    if (!r.has_modal_body())
      for (const Interpretation& i : a.members)
        if (!sat_rule(i, r))
          throw std::invalid_argument(
              "a member of the collection is not a model of the objective "
              "part");
  if (!satisfies(a, p))
    throw std::invalid_argument(
        "the collection does not satisfy the program");

  uint64_t all_mask = 0;
  for (const Interpretation& i : a.members)
    all_mask |= detail::positive_atom_mask(i);
  const std::vector<uint32_t> atoms = detail::mask_to_atoms(all_mask);

  std::optional<UnfoundedWitness> found;
  for (size_t k = 1; k <= atoms.size() && !found; ++k)
    detail::for_each_combination(atoms, k, [&](const std::vector<uint32_t>& u) {
      uint64_t u_mask = 0;
      for (uint32_t atom : u) u_mask |= uint64_t{1} << atom;
      std::vector<UnfoundedPair> pairs;
      uint64_t covered = 0;
      for (const Interpretation& i : a.members) {
        const uint64_t base = u_mask & detail::positive_atom_mask(i);
        // every non-empty sub-mask of base
        for (uint64_t x = base; x != 0; x = (x - 1) & base) {
          if (detail::unfounded_pair_ok(p, &a, i, x, u_mask)) {
            pairs.push_back(UnfoundedPair{detail::mask_to_atoms(x), i});
            covered |= x;
          }
        }
      }
      if (pairs.empty() || covered != u_mask) return false;
      std::sort(pairs.begin(), pairs.end());
      found = UnfoundedWitness{std::move(pairs)};
      return true;
    });
  return found;
}

/// Re-evaluates conditions (a)-(d) for every pair of the witness; also
/// rejects structurally invalid witnesses.
inline bool verify_witness(const Program& p, const WorldView& a,
                           const UnfoundedWitness& w) {
  if (w.pairs.empty()) return false;
  uint64_t union_mask = 0;
  for (const UnfoundedPair& pair : w.pairs) {
    if (pair.atoms.empty()) return false;
    if (!a.contains(pair.interpretation)) return false;
    const uint64_t pos = detail::positive_atom_mask(pair.interpretation);
    for (uint32_t atom : pair.atoms) {
      if (((pos >> atom) & 1) == 0) return false;
      union_mask |= uint64_t{1} << atom;
    }
  }
  return std::all_of(w.pairs.begin(), w.pairs.end(),
                     [&](const UnfoundedPair& pair) {
                       uint64_t x_mask = 0;
                       for (uint32_t atom : pair.atoms)
                         x_mask |= uint64_t{1} << atom;
                       return detail::unfounded_pair_ok(
                           p, &a, pair.interpretation, x_mask, union_mask);
                     });
}

}  // namespace elp
