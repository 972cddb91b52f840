// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "elp/report.hpp"
#include "elp/solvers.hpp"
#include "support/oracles.hpp"
#include "support/random_programs.hpp"

using namespace elp;

namespace {

Interpretation interp(const Program& p, std::initializer_list<const char*> names) {
  Interpretation i;
  for (const char* n : names)
    i = i.with(ObjectLiteral{p.symbols.find(n).value(), false});
  return i;
}

WorldView view(const Program& p,
               std::initializer_list<std::initializer_list<const char*>> ms) {
  std::vector<Interpretation> members;
  for (const auto& m : ms) members.push_back(interp(p, m));
  return WorldView::of(std::move(members));
}

const char* kPi1 = "p | q.\n:- not K p.\n";
const char* kPi2 = "a | b.\na :- b.\n:- not b.\n";
const char* kPi3 = "p | q.\np :- K q.\nq :- K p.\n:- not K p.\n";

}  // namespace

TEST_CASE("gl answer sets of the worked programs") {
  const Program pi2 = parse_program(kPi2);
  CHECK(gl_answer_sets(pi2).empty());
  const Program pi2_free = parse_program("a | b.\na :- b.\n");
  CHECK(gl_answer_sets(pi2_free) ==
        std::vector<Interpretation>{interp(pi2_free, {"a"})});
  const Program disj = parse_program("p | q.");
  CHECK(gl_answer_sets(disj) == std::vector<Interpretation>{
                                    interp(disj, {"p"}), interp(disj, {"q"})});
  CHECK_THROWS_AS(gl_answer_sets(parse_program("p :- K p.")),
                  std::invalid_argument);
}

TEST_CASE("gl answer sets with default negation cycles") {
  const Program even = parse_program("p :- not q.\nq :- not p.");
  CHECK(gl_answer_sets(even) ==
        std::vector<Interpretation>{interp(even, {"p"}), interp(even, {"q"})});
  CHECK(gl_answer_sets(parse_program("p :- not p.")).empty());
  const Program strong = parse_program("-a.\nb :- not a.");
  REQUIRE(gl_answer_sets(strong).size() == 1);
  CHECK(render(gl_answer_sets(strong)[0], strong.symbols) == "{-a,b}");
}

TEST_CASE("gl differential against the oracle") {
  std::mt19937 rng(6021);
  testsupport::GenOptions opt;
  for (int t = 0; t < 200; ++t) {
    opt.allow_strong_neg = t % 3 == 0;
    const Program p = testsupport::random_program(rng, opt);
    CHECK(oracle::lower(gl_answer_sets(p), p.symbols) ==
          oracle::to_set(oracle::gl_answer_sets(p)));
  }
}

TEST_CASE("g91 world views of the recursion programs") {
  const Program krec = parse_program("p :- K p.");
  CHECK(g91_world_views(krec) ==
        std::vector<WorldView>{view(krec, {{}}), view(krec, {{"p"}})});
  const Program mrec = parse_program("p :- M p.");
  CHECK(g91_world_views(mrec) ==
        std::vector<WorldView>{view(mrec, {{}}), view(mrec, {{"p"}})});
  CHECK(g91_world_views(parse_program(kPi1)).empty());
  const Program disj = parse_program("p | q.");
  CHECK(g91_world_views(disj) ==
        std::vector<WorldView>{view(disj, {{"p"}, {"q"}})});
  // mutual support through K is a g91 fixpoint
  const Program pi3 = parse_program(kPi3);
  CHECK(g91_world_views(pi3) ==
        std::vector<WorldView>{view(pi3, {{"p", "q"}})});
}

TEST_CASE("g91 differential against the oracle") {
  std::mt19937 rng(1211);
  testsupport::GenOptions opt;
  opt.allow_modal = true;
  opt.max_atoms = 2;
  for (int t = 0; t < 60; ++t) {
    opt.allow_strong_neg = t % 3 == 0;  // exercises K -a / M -a
    const Program p = testsupport::random_program(rng, opt);
    std::set<std::set<oracle::Interp>> expected;
    for (const auto& a : oracle::g91_world_views(p))
      expected.insert(oracle::to_set(a));
    CHECK(oracle::lower(g91_world_views(p), p.symbols) == expected);
  }
}

TEST_CASE("se16 world views of the worked programs") {
  const Program pi1 = parse_program(kPi1);
  const auto r1 = se16_world_views(pi1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].phi.chosen.empty());
  CHECK(r1[0].world_view == view(pi1, {{"p"}}));

  const Program krec = parse_program("p :- K p.");
  const auto r2 = se16_world_views(krec);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].world_view == view(krec, {{}}));
  REQUIRE(r2[0].phi.chosen.size() == 1);
  CHECK(render(r2[0].phi.chosen[0], krec.symbols) == "not p");

  const Program mrec = parse_program("p :- M p.");
  const auto r3 = se16_world_views(mrec);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].world_view == view(mrec, {{"p"}}));
  REQUIRE(r3[0].phi.chosen.size() == 1);
  CHECK(render(r3[0].phi.chosen[0], mrec.symbols) == "not not p");

  // pi3: the guarded mutual-support program keeps its intended view.
  const Program pi3 = parse_program(kPi3);
  const auto r4 = se16_world_views(pi3);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].world_view == view(pi3, {{"p", "q"}}));

  // with a GL base, the non-epistemic pi2 has no se16 world view
  CHECK(se16_world_views(parse_program(kPi2)).empty());
}

TEST_CASE("se16 differential against the exhaustive oracle") {
  auto agree = [](const Program& p) {
    std::set<std::set<oracle::Interp>> expected;
    for (const auto& c : oracle::se16_world_views(p))
      expected.insert(oracle::to_set(c.world_view));
    std::set<std::set<oracle::Interp>> got;
    for (const auto& c : se16_world_views(p))
      got.insert(oracle::lower(c.world_view.members, p.symbols));
    return got == expected;
  };
  CHECK(agree(parse_program(kPi1)));
  CHECK(agree(parse_program(kPi2)));
  CHECK(agree(parse_program(kPi3)));
  std::mt19937 rng(40992);
  testsupport::GenOptions opt;
  opt.allow_modal = true;
  opt.max_atoms = 2;
  for (int t = 0; t < 40; ++t) {
    opt.allow_strong_neg = t % 3 == 0;
    CHECK(agree(testsupport::random_program(rng, opt)));
  }
}

TEST_CASE("se16 base semantics hook") {
  // A base that never returns answer sets yields no world views.
  const auto empty_base = [](const Program&) {
    return std::vector<Interpretation>{};
  };
  CHECK(se16_world_views(parse_program(kPi1), {}, nullptr, empty_base).empty());
}

TEST_CASE("narrative world views of the worked programs") {
  const Program pi2 = parse_program(kPi2);
  CHECK(narrative_world_views(pi2) ==
        std::vector<WorldView>{view(pi2, {{"a", "b"}})});
  const Program pi3 = parse_program(kPi3);
  CHECK(narrative_world_views(pi3) ==
        std::vector<WorldView>{view(pi3, {{"p", "q"}})});
  const Program pi1 = parse_program(kPi1);
  CHECK(narrative_world_views(pi1) ==
        std::vector<WorldView>{view(pi1, {{"p"}})});
  const Program krec = parse_program("p :- K p.");
  CHECK(narrative_world_views(krec) ==
        std::vector<WorldView>{view(krec, {{}})});
}

TEST_CASE("narrative with several disjunctive facts") {
  // Two choice rules guarded by K a: every kept collection draws only
  // from the possible answer sets containing a.
  const Program p = parse_program("a | b.\nc | d.\n:- not K a.\n");
  CHECK(narrative_world_views(p) ==
        std::vector<WorldView>{view(p, {{"a", "c"}}),
                               view(p, {{"a", "c"}, {"a", "d"}}),
                               view(p, {{"a", "d"}})});
  // se16 keeps exactly the full pair under its empty guess
  const auto se = se16_world_views(p);
  REQUIRE(se.size() == 1);
  CHECK(se[0].world_view == view(p, {{"a", "c"}, {"a", "d"}}));
  // g91 has no fixpoint here
  CHECK(g91_world_views(p).empty());
}

TEST_CASE("narrative fragment violations are reported with the rule") {
  try {
    narrative_world_views(parse_program("p | q :- r."));
    FAIL("expected a fragment violation");
  } catch (const FragmentViolation& e) {
    CHECK(e.rule_index() == 0);
  }
  CHECK_THROWS_AS(narrative_world_views(parse_program("p.\nq :- not p.")),
                  FragmentViolation);
  CHECK_THROWS_AS(narrative_world_views(parse_program("q :- not K p.")),
                  FragmentViolation);
  // default negation stays legal inside constraints
  CHECK_NOTHROW(narrative_world_views(parse_program("p.\n:- not p.")));
}

TEST_CASE("solve dispatch") {
  const Program pi1 = parse_program(kPi1);
  CHECK(solve(pi1, SemanticsId::G91).world_views.empty());
  const SolveResult se16 = solve(pi1, SemanticsId::SE16);
  CHECK(se16.world_views == std::vector<WorldView>{view(pi1, {{"p"}})});
  const Program pi2_free = parse_program("a | b.\na :- b.\n");
  CHECK(solve(pi2_free, SemanticsId::GL).answer_sets ==
        std::vector<Interpretation>{interp(pi2_free, {"a"})});
  CHECK_THROWS_AS(solve(pi1, SemanticsId::GL), std::invalid_argument);
}

TEST_CASE("non-epistemic programs collapse to the base semantics") {
  std::mt19937 rng(777);
  testsupport::GenOptions opt;
  opt.max_atoms = 3;
  for (int t = 0; t < 100; ++t) {
    const Program p = testsupport::random_program(rng, opt);
    const auto base = gl_answer_sets(p);
    const auto views = g91_world_views(p);
    if (base.empty()) {
      CHECK(views.empty());
    } else {
      REQUIRE(views.size() == 1);
      CHECK(views[0].members == base);
    }
    const auto se = se16_world_views(p);
    if (base.empty()) {
      CHECK(se.empty());
    } else {
      REQUIRE(se.size() == 1);
      CHECK(se[0].phi.chosen.empty());
      CHECK(se[0].world_view.members == base);
    }
  }
}

TEST_CASE("caps are enforced and overridable") {
  const Program five = parse_program("a.\nb.\nc.\nd.\ne :- K a.");
  CHECK_THROWS_AS(g91_world_views(five), CapExceeded);
  CHECK_THROWS_AS(se16_world_views(five), CapExceeded);
  CHECK_THROWS_AS(narrative_world_views(five), CapExceeded);
  SolverLimits wide;
  wide.max_atoms_epistemic = 5;
  CHECK_FALSE(narrative_world_views(five, wide).empty());

  std::string big;
  for (char c = 'a'; c <= 'm'; ++c) big += std::string(1, c) + ".\n";
  CHECK_THROWS_AS(gl_answer_sets(parse_program(big)), CapExceeded);
  SolverLimits wide_gl;
  wide_gl.max_atoms_gl = 13;
  CHECK(gl_answer_sets(parse_program(big), wide_gl).size() == 1);

  // strong negation can blow up the universe past the collection cap
  SolverLimits tight;
  tight.max_universe = 8;
  const Program strong = parse_program("a | -a.\nb.\nc :- K b.");
  CHECK_THROWS_AS(g91_world_views(strong, tight), CapExceeded);
}

TEST_CASE("results are deterministic across runs") {
  const Program pi3 = parse_program(kPi3);
  for (SemanticsId s : {SemanticsId::G91, SemanticsId::SE16,
                        SemanticsId::Narrative}) {
    const auto a = solve(pi3, s);
    const auto b = solve(pi3, s);
    CHECK(results_json(a, pi3.symbols) == results_json(b, pi3.symbols));
  }
}

TEST_CASE("solver stats count the enumeration domains") {
  const Program disj = parse_program("p | q.");
  SolveStats stats;
  gl_answer_sets(disj, {}, &stats);
  CHECK(stats.interpretations_checked == 4);
  stats = {};
  g91_world_views(disj, {}, &stats);
  CHECK(stats.collections_checked == 15);
}
