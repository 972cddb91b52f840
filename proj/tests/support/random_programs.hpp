// SPDX-License-Identifier: Apache-2.0
//
// Seeded random program generation for the property suites. Only the
// raw mt19937 stream is used (no distribution objects), so sequences
// are identical across platforms.

#pragma once

#include <random>

#include "elp/syntax.hpp"

namespace testsupport {

struct GenOptions {
  uint32_t min_atoms = 1;
  uint32_t max_atoms = 4;
  uint32_t max_rules = 5;
  uint32_t max_head = 2;
  uint32_t max_body = 3;
  bool allow_strong_neg = false;
  bool allow_default_neg = true;
  bool allow_modal = false;
  bool allow_constraints = true;
};

inline uint32_t pick(std::mt19937& rng, uint32_t n) {
  return static_cast<uint32_t>(rng() % n);
}

inline elp::ObjectLiteral random_object_literal(std::mt19937& rng,
                                                uint32_t atoms,
                                                bool allow_strong_neg) {
  return elp::ObjectLiteral{pick(rng, atoms),
                            allow_strong_neg && pick(rng, 4) == 0};
}

inline elp::ExtendedLiteral random_body_literal(std::mt19937& rng,
                                                uint32_t atoms,
                                                const GenOptions& opt) {
  const elp::ObjectLiteral lit =
      random_object_literal(rng, atoms, opt.allow_strong_neg);
  uint32_t kinds = 1;  // plain object literal
  if (opt.allow_default_neg) ++kinds;
  if (opt.allow_modal) kinds += 2;
  switch (pick(rng, kinds)) {
    case 0: return lit;
    case 1:
      if (opt.allow_default_neg) return elp::DefaultNegated{lit};
      [[fallthrough]];
    case 2:
      return elp::ModalLiteral{elp::ModalOp::K, lit, pick(rng, 3) == 0};
    default:
      return elp::ModalLiteral{elp::ModalOp::M, lit, pick(rng, 3) == 0};
  }
}

inline elp::Program random_program(std::mt19937& rng, const GenOptions& opt) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  elp::Program p;
  const uint32_t atoms =
      opt.min_atoms + pick(rng, opt.max_atoms - opt.min_atoms + 1);
  for (uint32_t a = 0; a < atoms; ++a) p.symbols.intern(names[a]);
  const uint32_t rule_count = 1 + pick(rng, opt.max_rules);
  for (uint32_t k = 0; k < rule_count; ++k) {
    elp::Rule r;
    const bool constraint = opt.allow_constraints && pick(rng, 5) == 0;
    if (!constraint) {
      const uint32_t head_size = 1 + pick(rng, opt.max_head);
      for (uint32_t h = 0; h < head_size; ++h) {
        const elp::ObjectLiteral l =
            random_object_literal(rng, atoms, opt.allow_strong_neg);
        if (std::find(r.head.begin(), r.head.end(), l) == r.head.end())
          r.head.push_back(l);
      }
    }
    const uint32_t body_size =
        constraint ? 1 + pick(rng, opt.max_body) : pick(rng, opt.max_body + 1);
    for (uint32_t b = 0; b < body_size; ++b) {
      elp::ExtendedLiteral e = random_body_literal(rng, atoms, opt);
      if (std::find(r.body.begin(), r.body.end(), e) == r.body.end())
        r.body.push_back(std::move(e));
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

inline elp::Rule random_constraint(std::mt19937& rng, const elp::Program& p,
                                   const GenOptions& opt) {
  elp::Rule c;
  const uint32_t atoms = p.symbols.size();
  const uint32_t body_size = 1 + pick(rng, 2);
  for (uint32_t b = 0; b < body_size; ++b) {
    elp::ExtendedLiteral e = random_body_literal(rng, atoms, opt);
    if (std::find(c.body.begin(), c.body.end(), e) == c.body.end())
      c.body.push_back(std::move(e));
  }
  return c;
}

}  // namespace testsupport
