// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive desk-scale enumeration engines for the four semantics.
// Paper-sized programs have a handful of atoms; every engine trades
// performance for directness and re-checkable results.

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <unordered_map>

#include "elp/reducts.hpp"

namespace elp {

enum class SemanticsId { GL, G91, SE16, Narrative };

inline constexpr std::string_view to_string(SemanticsId s) {
  switch (s) {
    case SemanticsId::GL: return "gl";
    case SemanticsId::G91: return "g91";
    case SemanticsId::SE16: return "se16";
    case SemanticsId::Narrative: return "narrative";
  }
  return "?";
}

inline std::optional<SemanticsId> parse_semantics(std::string_view name) {
  if (name == "gl") return SemanticsId::GL;
  if (name == "g91") return SemanticsId::G91;
  if (name == "se16") return SemanticsId::SE16;
  if (name == "narrative") return SemanticsId::Narrative;
  return std::nullopt;
}

class CapExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FragmentViolation : public std::runtime_error {
 public:
  FragmentViolation(size_t rule_index, const std::string& message)
      : std::runtime_error("rule " + std::to_string(rule_index) + ": " +
                           message),
        rule_index_(rule_index) {}

  size_t rule_index() const { return rule_index_; }

 private:
  size_t rule_index_;
};

struct SolverLimits {
  uint32_t max_atoms_gl = 12;
  uint32_t max_atoms_epistemic = 4;
  // Collection engines enumerate 2^|universe| candidates; strong negation
  // can grow the universe past 2^atoms, so it is capped on its own.
  uint32_t max_universe = 20;
  uint32_t max_epistemic_negations = 16;
  uint32_t max_possible_answer_sets = 20;
  uint32_t max_disjunctive_choices = 4096;
};

struct SolveStats {
  uint64_t interpretations_checked = 0;
  uint64_t collections_checked = 0;
  std::chrono::microseconds elapsed{0};
};

namespace detail {

inline void check_atom_cap(const Program& p, uint32_t cap, const char* which) {
  if (p.symbols.size() > cap)
    throw CapExceeded("program has " + std::to_string(p.symbols.size()) +
                      " atoms; the " + which + " engine is capped at " +
                      std::to_string(cap) + " (raise with --max-atoms)");
  if (p.symbols.size() > Interpretation::kMaxAtoms)
    throw CapExceeded("program has " + std::to_string(p.symbols.size()) +
                      " atoms; interpretations hold at most " +
                      std::to_string(Interpretation::kMaxAtoms));
}

inline bool contains_sorted(const std::vector<Interpretation>& xs,
                            const Interpretation& i) {
  return std::binary_search(xs.begin(), xs.end(), i);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GL answer sets
// ---------------------------------------------------------------------------

/// All i with i a minimal model of the reduct of p w.r.t. i that also
/// satisfy every constraint, in ascending order.
inline std::vector<Interpretation> gl_answer_sets(const Program& p,
                                                  const SolverLimits& limits = {},
                                                  SolveStats* stats = nullptr) {
  if (!p.non_epistemic())
    throw std::invalid_argument(
        "gl semantics requires a non-epistemic program");
  detail::check_atom_cap(p, limits.max_atoms_gl, "gl");
  const auto universe = interpretation_universe(p);
  if (stats) stats->interpretations_checked += universe.size();

  // The reduct depends on i only through the literals under (double)
  // default negation; minimal models are memoized on that projection.
  std::vector<ObjectLiteral> neg_base;
  for (const Rule& r : p.rules)
    for (const ExtendedLiteral& e : r.body) {
      if (const auto* d = std::get_if<DefaultNegated>(&e))
        neg_base.push_back(d->lit);
      else if (const auto* dd = std::get_if<DoublyNegated>(&e))
        neg_base.push_back(dd->lit);
    }
  std::sort(neg_base.begin(), neg_base.end());
  neg_base.erase(std::unique(neg_base.begin(), neg_base.end()),
                 neg_base.end());

  std::unordered_map<uint64_t, std::vector<Interpretation>> memo;
  std::vector<Interpretation> out;
  for (const Interpretation& i : universe) {
    uint64_t sig = 0;
    for (size_t k = 0; k < neg_base.size(); ++k)
      if (i.contains(neg_base[k])) sig |= uint64_t{1} << k;
    auto it = memo.find(sig);
    if (it == memo.end())
      it = memo.emplace(sig, minimal_models(gl_reduct(p, i))).first;
    if (!detail::contains_sorted(it->second, i)) continue;
    const bool constraints_ok =
        std::all_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) {
          return !r.is_constraint() || sat_rule(i, r);
        });
    if (constraints_ok) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// G91 world views
// ---------------------------------------------------------------------------

/// Every non-empty collection A over the interpretation universe with
/// A equal to the answer sets of the modal reduct of p w.r.t. A.
inline std::vector<WorldView> g91_world_views(const Program& p,
                                              const SolverLimits& limits = {},
                                              SolveStats* stats = nullptr) {
  detail::check_atom_cap(p, limits.max_atoms_epistemic, "g91");
  const auto universe = interpretation_universe(p);
  const size_t n = universe.size();
  if (n > limits.max_universe)
    throw CapExceeded("interpretation universe has " + std::to_string(n) +
                      " members; collection enumeration is capped at 2^" +
                      std::to_string(limits.max_universe));
  if (stats) stats->interpretations_checked += n;

  struct ModalBase {
    ModalOp op;
    ObjectLiteral lit;
    uint64_t members = 0;  // universe indices where lit holds
  };
  std::vector<ModalBase> bases;
  for (const Rule& r : p.rules)
    for (const ExtendedLiteral& e : r.body)
      if (const auto* m = std::get_if<ModalLiteral>(&e)) {
        const bool seen =
            std::any_of(bases.begin(), bases.end(), [&](const ModalBase& b) {
              return b.op == m->op && b.lit == m->lit;
            });
        if (!seen) bases.push_back(ModalBase{m->op, m->lit, 0});
      }
  for (size_t j = 0; j < n; ++j)
    for (ModalBase& b : bases)
      if (universe[j].contains(b.lit)) b.members |= uint64_t{1} << j;

  auto answer_mask = [&](const std::vector<Interpretation>& answers) {
    uint64_t mask = 0;
    for (const Interpretation& i : answers) {
      const auto it = std::lower_bound(universe.begin(), universe.end(), i);
      if (it == universe.end() || *it != i)
        throw std::logic_error("answer set escaped the universe");
      mask |= uint64_t{1} << (it - universe.begin());
    }
    return mask;
  };

  const uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  std::unordered_map<uint64_t, uint64_t> memo;  // modal signature -> answers
  std::vector<WorldView> out;
  for (uint64_t a = 1; a <= all; ++a) {
    if (stats) ++stats->collections_checked;
    uint64_t sig = 0;
    for (size_t k = 0; k < bases.size(); ++k) {
      const ModalBase& b = bases[k];
      const bool truth = b.op == ModalOp::K ? (a & ~b.members) == 0
                                            : (a & b.members) != 0;
      if (truth) sig |= uint64_t{1} << k;
    }
    auto it = memo.find(sig);
    if (it == memo.end()) {
      const Program reduct =
          detail::strip_modals(p, [&](const ModalLiteral& m) {
            for (size_t k = 0; k < bases.size(); ++k)
              if (bases[k].op == m.op && bases[k].lit == m.lit) {
                const bool truth = (sig >> k) & 1;
                return m.default_neg ? !truth : truth;
              }
            throw std::logic_error("unindexed modal literal");
          });
      it = memo.emplace(sig, answer_mask(gl_answer_sets(reduct, limits)))
               .first;
    }
    if (it->second != a) continue;
    std::vector<Interpretation> members;
    for (uint64_t rest = a; rest != 0; rest &= rest - 1)
      members.push_back(universe[static_cast<size_t>(std::countr_zero(rest))]);
    out.push_back(WorldView{std::move(members)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// SE16 world views
// ---------------------------------------------------------------------------

/// Answer sets of a non-epistemic program; the base semantics under the
/// epistemic-negation construction. Defaults to GL.
using BaseSemantics = std::function<std::vector<Interpretation>(const Program&)>;

struct Se16WorldView {
  PhiGuess phi;
  WorldView world_view;

  friend auto operator<=>(const Se16WorldView&, const Se16WorldView&) = default;
};

/// Guess a subset phi of the epistemic negations, solve the rewritten
/// program under the base semantics, keep guesses justified by their own
/// answer-set collection, and return the candidates with subset-maximal
/// phi. Results are ordered by (world view, phi).
inline std::vector<Se16WorldView> se16_world_views(
    const Program& p, const SolverLimits& limits = {},
    SolveStats* stats = nullptr, const BaseSemantics& base = {}) {
  detail::check_atom_cap(p, limits.max_atoms_epistemic, "se16");
  const std::vector<EpNegLiteral> ep = epistemic_negations(p);
  if (ep.size() > limits.max_epistemic_negations)
    throw CapExceeded("program has " + std::to_string(ep.size()) +
                      " epistemic negations; the se16 engine is capped at " +
                      std::to_string(limits.max_epistemic_negations));
  if (stats) stats->interpretations_checked += interpretation_universe(p).size();
  const BaseSemantics solve_base =
      base ? base : BaseSemantics([&limits](const Program& q) {
        return gl_answer_sets(q, limits);
      });

  struct Candidate {
    uint32_t mask;
    PhiGuess phi;
    WorldView wv;
  };
  std::vector<Candidate> candidates;
  for (uint32_t mask = 0; mask < (uint32_t{1} << ep.size()); ++mask) {
    if (stats) ++stats->collections_checked;
    std::vector<EpNegLiteral> chosen;
    for (size_t k = 0; k < ep.size(); ++k)
      if ((mask >> k) & 1) chosen.push_back(ep[k]);
    const PhiGuess phi = PhiGuess::of(std::move(chosen));
    auto answers = solve_base(phi_reduct(p, phi));
    if (answers.empty()) continue;
    WorldView wv = WorldView::of(std::move(answers));
    const bool justified =
        std::all_of(phi.chosen.begin(), phi.chosen.end(),
                    [&](const EpNegLiteral& e) {
                      return std::any_of(
                          wv.members.begin(), wv.members.end(),
                          [&](const Interpretation& i) {
                            return e.inner_default_neg ? i.contains(e.inner)
                                                       : !i.contains(e.inner);
                          });
                    });
    if (justified) candidates.push_back({mask, phi, std::move(wv)});
  }

  std::vector<Se16WorldView> out;
  for (const Candidate& c : candidates) {
    const bool dominated =
        std::any_of(candidates.begin(), candidates.end(),
                    [&](const Candidate& other) {
                      return other.mask != c.mask &&
                             (other.mask & c.mask) == c.mask;
                    });
    if (!dominated) out.push_back(Se16WorldView{c.phi, c.wv});
  }
  std::sort(out.begin(), out.end(),
            [](const Se16WorldView& a, const Se16WorldView& b) {
              return std::tie(a.world_view, a.phi) <
                     std::tie(b.world_view, b.phi);
            });
  return out;
}

// ---------------------------------------------------------------------------
// Narrative world views
// ---------------------------------------------------------------------------

namespace detail {

inline void check_narrative_fragment(const Program& p) {
  for (size_t idx = 0; idx < p.rules.size(); ++idx) {
    const Rule& r = p.rules[idx];
    if (r.head.size() >= 2 && !r.body.empty())
      throw FragmentViolation(idx, "disjunctive head on a rule with a body");
    if (r.is_constraint()) continue;
    for (const ExtendedLiteral& e : r.body) {
      if (std::holds_alternative<DefaultNegated>(e) ||
          std::holds_alternative<DoublyNegated>(e))
        throw FragmentViolation(
            idx, "default-negated object literal in a non-constraint body");
      if (const auto* m = std::get_if<ModalLiteral>(&e))
        if (m->default_neg)
          throw FragmentViolation(
              idx, "default-negated modal literal in a non-constraint body");
    }
  }
}

}  // namespace detail

/// The constructive procedure: choose one disjunct per disjunctive fact
/// and close objectively into "possible answer sets"; form candidate
/// collections from them; close each collection under single-head rules
/// whose modal bodies hold in the collection; keep the collections that
/// satisfy every rule.
inline std::vector<WorldView> narrative_world_views(
    const Program& p, const SolverLimits& limits = {},
    SolveStats* stats = nullptr) {
  detail::check_atom_cap(p, limits.max_atoms_epistemic, "narrative");
  detail::check_narrative_fragment(p);

  std::vector<const Rule*> disjunctive;  // body-free, two or more disjuncts
  std::vector<const Rule*> objective;    // single head, modal-free body
  std::vector<const Rule*> single_head;  // single head, any body
  for (const Rule& r : p.rules) {
    if (r.head.size() >= 2) disjunctive.push_back(&r);
    if (r.head.size() == 1) {
      single_head.push_back(&r);
      if (!r.has_modal_body()) objective.push_back(&r);
    }
  }

  uint64_t combos = 1;
  for (const Rule* r : disjunctive) {
    combos *= r->head.size();
    if (combos > limits.max_disjunctive_choices)
      throw CapExceeded("too many disjunctive choices");
  }

  // Step A: possible answer sets, one per choice of disjuncts.
  std::vector<Interpretation> possible;
  for (uint64_t combo = 0; combo < combos; ++combo) {
    Interpretation i;
    uint64_t rest = combo;
    for (const Rule* r : disjunctive) {
      i = i.with(r->head[rest % r->head.size()]);
      rest /= r->head.size();
    }
    bool ok = i.consistent();
    bool changed = ok;
    while (changed && ok) {
      changed = false;
      for (const Rule* r : objective) {
        if (i.contains(r->head[0])) continue;
        const bool fires = std::all_of(
            r->body.begin(), r->body.end(), [&](const ExtendedLiteral& e) {
              return sat_objective(i, std::get<ObjectLiteral>(e));
            });
        if (fires) {
          i = i.with(r->head[0]);
          if (!i.consistent()) ok = false;
          changed = true;
        }
      }
    }
    if (ok) possible.push_back(i);
  }
  std::sort(possible.begin(), possible.end());
  possible.erase(std::unique(possible.begin(), possible.end()),
                 possible.end());
  if (possible.size() > limits.max_possible_answer_sets)
    throw CapExceeded("too many possible answer sets");
  if (stats) stats->interpretations_checked += possible.size();

  // Step B: candidate collections. Non-epistemic programs are read as
  // single-member collections.
  std::vector<std::vector<Interpretation>> candidates;
  if (p.non_epistemic()) {
    for (const Interpretation& i : possible) candidates.push_back({i});
  } else {
    const uint64_t all = (uint64_t{1} << possible.size()) - 1;
    for (uint64_t mask = 1; mask <= all; ++mask) {
      std::vector<Interpretation> ms;
      for (uint64_t rest = mask; rest != 0; rest &= rest - 1)
        ms.push_back(possible[static_cast<size_t>(std::countr_zero(rest))]);
      candidates.push_back(std::move(ms));
    }
  }

  std::set<WorldView> result;
  for (std::vector<Interpretation>& ms : candidates) {
    if (stats) ++stats->collections_checked;
    // Step C: modal closure to fixpoint.
    bool bad = false;
    bool changed = true;
    while (changed && !bad) {
      changed = false;
      const WorldView current = WorldView::of(ms);
      for (Interpretation& m : ms) {
        for (const Rule* r : single_head) {
          if (m.contains(r->head[0])) continue;
          const bool fires = std::all_of(
              r->body.begin(), r->body.end(), [&](const ExtendedLiteral& e) {
                if (const auto* mod = std::get_if<ModalLiteral>(&e))
                  return sat_modal(current, *mod);
                return sat_objective(m, std::get<ObjectLiteral>(e));
              });
          if (fires) {
            m = m.with(r->head[0]);
            if (!m.consistent()) {
              bad = true;
              break;
            }
            changed = true;
          }
        }
        if (bad) break;
      }
    }
    if (bad) continue;
    // Step D: keep collections satisfying every rule for every member.
    const WorldView wv = WorldView::of(std::move(ms));
    if (satisfies(wv, p)) result.insert(wv);
  }
  return {result.begin(), result.end()};
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

struct SolveResult {
  SemanticsId semantics = SemanticsId::GL;
  std::vector<Interpretation> answer_sets;  // GL only
  std::vector<WorldView> world_views;       // all other semantics
  std::vector<Se16WorldView> se16;          // SE16 only
  SolveStats stats;
};

inline SolveResult solve(const Program& p, SemanticsId s,
                         const SolverLimits& limits = {}) {
  SolveResult r;
  r.semantics = s;
  const auto start = std::chrono::steady_clock::now();
  switch (s) {
    case SemanticsId::GL:
      r.answer_sets = gl_answer_sets(p, limits, &r.stats);
      break;
    case SemanticsId::G91:
      r.world_views = g91_world_views(p, limits, &r.stats);
      break;
    case SemanticsId::SE16: {
      r.se16 = se16_world_views(p, limits, &r.stats);
      for (const Se16WorldView& c : r.se16) r.world_views.push_back(c.world_view);
      std::sort(r.world_views.begin(), r.world_views.end());
      r.world_views.erase(
          std::unique(r.world_views.begin(), r.world_views.end()),
          r.world_views.end());
      break;
    }
    case SemanticsId::Narrative:
      r.world_views = narrative_world_views(p, limits, &r.stats);
      break;
  }
  r.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace elp
