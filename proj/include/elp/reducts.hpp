// SPDX-License-Identifier: Apache-2.0
//
// The three reduct constructions and minimal-model computation for
// positive programs.

#pragma once

#include "elp/interpretation.hpp"

namespace elp {
namespace detail {

inline void push_body_literal(std::vector<ExtendedLiteral>& body,
                              ExtendedLiteral e) {
  if (std::find(body.begin(), body.end(), e) == body.end())
    body.push_back(std::move(e));
}

/// Removes every rule with a modal literal rejected by `truth`, then
/// strips the remaining modal literals.
template <class Truth>
Program strip_modals(const Program& p, Truth&& truth) {
  Program out{{}, p.symbols};
  for (const Rule& r : p.rules) {
    Rule kept{r.head, {}};
    bool drop = false;
    for (const ExtendedLiteral& e : r.body) {
      if (const auto* m = std::get_if<ModalLiteral>(&e)) {
        if (!truth(*m)) {
          drop = true;
          break;
        }
      } else {
        push_body_literal(kept.body, e);
      }
    }
    if (!drop) out.rules.push_back(std::move(kept));
  }
  return out;
}

}  // namespace detail

/// Deletes each rule whose (doubly) default-negated body is falsified by
/// i, then deletes the surviving negated literals. Output is positive.
inline Program gl_reduct(const Program& p, const Interpretation& i) {
  if (!p.non_epistemic())
    throw std::invalid_argument("gl_reduct requires a non-epistemic program");
  Program out{{}, p.symbols};
  for (const Rule& r : p.rules) {
    Rule kept{r.head, {}};
    bool drop = false;
    for (const ExtendedLiteral& e : r.body) {
      if (const auto* l = std::get_if<ObjectLiteral>(&e)) {
        detail::push_body_literal(kept.body, *l);
      } else if (const auto* d = std::get_if<DefaultNegated>(&e)) {
        if (!sat_objective(i, *d)) {
          drop = true;
          break;
        }
      } else if (const auto* dd = std::get_if<DoublyNegated>(&e)) {
        if (!sat_objective(i, *dd)) {
          drop = true;
          break;
        }
      }
    }
    if (!drop) out.rules.push_back(std::move(kept));
  }
  return out;
}

/// Removes all rules with a modal literal that is not true in a, then
/// removes the remaining modal literals. Output is non-epistemic.
inline Program modal_reduct(const Program& p, const WorldView& a) {
  return detail::strip_modals(
      p, [&](const ModalLiteral& m) { return sat_modal(a, m); });
}

/// Rewrites each modal literal against the guessed epistemic negations:
/// a guessed negation makes its K-reading false (rule dropped) and its
/// M-reading true (literal dropped); an unguessed one leaves the literal
/// as (double) default negation over the object literal. Output is
/// non-epistemic but may carry double default negation.
inline Program phi_reduct(const Program& p, const PhiGuess& phi) {
  Program out{{}, p.symbols};
  for (const Rule& r : p.rules) {
    Rule kept{r.head, {}};
    bool drop = false;
    for (const ExtendedLiteral& e : r.body) {
      const auto* m = std::get_if<ModalLiteral>(&e);
      if (m == nullptr) {
        detail::push_body_literal(kept.body, e);
        continue;
      }
      const bool guessed =
          phi.contains(EpNegLiteral{m->lit, m->op == ModalOp::M});
      if (m->op == ModalOp::K) {
        if (guessed) {
          if (!m->default_neg) drop = true;  // K l became false
          // not K l became true: literal dropped
        } else {
          if (m->default_neg)
            detail::push_body_literal(kept.body, DefaultNegated{m->lit});
          else
            detail::push_body_literal(kept.body, DoublyNegated{m->lit});
        }
      } else {
        if (guessed) {
          if (m->default_neg) drop = true;  // not M l became false
          // M l became true: literal dropped
        } else {
          if (m->default_neg)
            detail::push_body_literal(kept.body, DefaultNegated{m->lit});
          else
            detail::push_body_literal(kept.body, DoublyNegated{m->lit});
        }
      }
      if (drop) break;
    }
    if (!drop) out.rules.push_back(std::move(kept));
  }
  return out;
}

/// Modal replacement against (phi, i) followed by the GL treatment of
/// the remaining default negation. Output is positive.
inline Program epistemic_reduct(const Program& p, const PhiGuess& phi,
                                const Interpretation& i) {
  return gl_reduct(phi_reduct(p, phi), i);
}

/// All subset-minimal consistent models of a positive program, as an
/// ascending antichain.
inline std::vector<Interpretation> minimal_models(const Program& p) {
  if (!p.is_positive())
    throw std::invalid_argument("minimal_models requires a positive program");
  std::vector<Interpretation> models;
  for (const Interpretation& i : interpretation_universe(p))
    if (is_model(i, p)) models.push_back(i);
  std::stable_sort(models.begin(), models.end(),
                   [](const Interpretation& a, const Interpretation& b) {
                     return a.size() < b.size();
                   });
  std::vector<Interpretation> mins;
  for (const Interpretation& m : models)
    if (std::none_of(mins.begin(), mins.end(), [&](const Interpretation& k) {
          return k.subset_of(m);
        }))
      mins.push_back(m);
  std::sort(mins.begin(), mins.end());
  return mins;
}

}  // namespace elp
