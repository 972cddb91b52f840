// SPDX-License-Identifier: Apache-2.0
//
// The seeded randomized property suite: constraint monotonicity of GL,
// unfounded-freeness of GL answer sets, antichain structure, and the
// fixpoint / maximality / collapse rechecks of the world-view engines.
// Shared between the unit tests and the acceptance runner.

#pragma once

#include "elp/properties.hpp"
#include "support/random_programs.hpp"

namespace testsupport {

struct PropertySuiteResult {
  uint64_t programs = 0;
  uint64_t cm_violations = 0;           // gl(p u {c}) not within gl(p)
  uint64_t unfounded_answer_sets = 0;   // gl answer set with a witness
  uint64_t non_model_answer_sets = 0;   // gl answer set not a model
  uint64_t antichain_failures = 0;      // constraint-free gl not an antichain
  uint64_t g91_fixpoint_failures = 0;   // returned view fails its recheck
  uint64_t g91_rejection_failures = 0;  // rejected view passes its recheck
  uint64_t se16_candidate_failures = 0;
  uint64_t se16_maximality_failures = 0;
  uint64_t collapse_failures = 0;       // non-epistemic g91/se16 vs gl

  bool all_zero() const {
    return cm_violations == 0 && unfounded_answer_sets == 0 &&
           non_model_answer_sets == 0 && antichain_failures == 0 &&
           g91_fixpoint_failures == 0 && g91_rejection_failures == 0 &&
           se16_candidate_failures == 0 && se16_maximality_failures == 0 &&
           collapse_failures == 0;
  }
};

inline bool subset_of(const std::vector<elp::Interpretation>& xs,
                      const std::vector<elp::Interpretation>& ys) {
  return std::all_of(xs.begin(), xs.end(), [&](const elp::Interpretation& i) {
    return std::binary_search(ys.begin(), ys.end(), i);
  });
}

/// Recomputes the SE16 candidate condition for one guess from scratch.
inline bool se16_candidate_for(const elp::Program& p, const elp::PhiGuess& phi,
                               elp::WorldView* out = nullptr) {
  auto answers = elp::gl_answer_sets(elp::phi_reduct(p, phi));
  if (answers.empty()) return false;
  const elp::WorldView wv = elp::WorldView::of(std::move(answers));
  for (const elp::EpNegLiteral& e : phi.chosen) {
    const bool justified =
        std::any_of(wv.members.begin(), wv.members.end(),
                    [&](const elp::Interpretation& i) {
                      return e.inner_default_neg ? i.contains(e.inner)
                                                 : !i.contains(e.inner);
                    });
    if (!justified) return false;
  }
  if (out) *out = wv;
  return true;
}

inline PropertySuiteResult run_property_suite(uint32_t seed, size_t programs) {
  std::mt19937 rng(seed);
  PropertySuiteResult res;
  for (size_t t = 0; t < programs; ++t) {
    ++res.programs;

    // Non-epistemic program: GL properties.
    GenOptions opt;
    opt.allow_strong_neg = t % 4 == 3;
    const elp::Program p = random_program(rng, opt);
    const auto answers = elp::gl_answer_sets(p);
    const elp::Rule c = random_constraint(rng, p, opt);
    if (!subset_of(elp::gl_answer_sets(p.with_rule(c)), answers))
      ++res.cm_violations;
    for (const elp::Interpretation& i : answers) {
      if (!elp::is_model(i, p)) ++res.non_model_answer_sets;
      if (elp::find_unfounded_set(p, i).has_value())
        ++res.unfounded_answer_sets;
    }
    elp::Program free = p;
    std::erase_if(free.rules,
                  [](const elp::Rule& r) { return r.is_constraint(); });
    const auto free_answers = elp::gl_answer_sets(free);
    for (const elp::Interpretation& x : free_answers)
      for (const elp::Interpretation& y : free_answers)
        if (x != y && x.subset_of(y)) ++res.antichain_failures;

    // Epistemic program: engine rechecks. Every tenth program runs at the
    // full 4-atom cap (65535 candidate collections).
    GenOptions ep_opt;
    ep_opt.max_atoms = t % 10 == 0 ? 4 : 3;
    ep_opt.allow_modal = true;
    const elp::Program e = random_program(rng, ep_opt);
    const auto views = elp::g91_world_views(e);
    for (const elp::WorldView& a : views) {
      const auto recheck = elp::gl_answer_sets(elp::modal_reduct(e, a));
      if (recheck != a.members) ++res.g91_fixpoint_failures;
    }
    // Spot-check a few rejected collections.
    {
      const auto univ = elp::interpretation_universe(e);
      size_t spotted = 0;
      for (uint64_t mask = 1; mask < (uint64_t{1} << univ.size()) && spotted < 3;
           ++mask) {
        std::vector<elp::Interpretation> ms;
        for (uint64_t rest = mask; rest != 0; rest &= rest - 1)
          ms.push_back(univ[static_cast<size_t>(std::countr_zero(rest))]);
        const elp::WorldView a = elp::WorldView::of(std::move(ms));
        if (std::binary_search(views.begin(), views.end(), a)) continue;
        ++spotted;
        if (elp::gl_answer_sets(elp::modal_reduct(e, a)) == a.members)
          ++res.g91_rejection_failures;
      }
    }
    const auto se16 = elp::se16_world_views(e);
    const auto ep_set = elp::epistemic_negations(e);
    for (const elp::Se16WorldView& cand : se16) {
      elp::WorldView recomputed{{elp::Interpretation{}}};
      if (!se16_candidate_for(e, cand.phi, &recomputed) ||
          recomputed != cand.world_view)
        ++res.se16_candidate_failures;
      // Exhaustive maximality recheck over the strict supersets.
      std::vector<elp::EpNegLiteral> rest;
      for (const elp::EpNegLiteral& x : ep_set)
        if (!cand.phi.contains(x)) rest.push_back(x);
      for (uint64_t mask = 1; mask < (uint64_t{1} << rest.size()); ++mask) {
        std::vector<elp::EpNegLiteral> chosen = cand.phi.chosen;
        for (uint64_t k = 0; k < rest.size(); ++k)
          if ((mask >> k) & 1) chosen.push_back(rest[k]);
        if (se16_candidate_for(e, elp::PhiGuess::of(std::move(chosen))))
          ++res.se16_maximality_failures;
      }
    }
    if (e.non_epistemic()) {
      const auto base = elp::gl_answer_sets(e);
      const bool g91_ok =
          base.empty() ? views.empty()
                       : views == std::vector<elp::WorldView>{
                             elp::WorldView::of(base)};
      bool se16_ok;
      if (base.empty())
        se16_ok = se16.empty();
      else
        se16_ok = se16.size() == 1 && se16[0].phi.chosen.empty() &&
                  se16[0].world_view.members == base;
      if (!g91_ok || !se16_ok) ++res.collapse_failures;
    }
  }
  return res;
}

}  // namespace testsupport
