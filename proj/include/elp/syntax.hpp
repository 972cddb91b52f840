// SPDX-License-Identifier: Apache-2.0
//
// Abstract syntax for propositional epistemic logic programs: interned
// atoms, object / extended literals, rules, programs, classification,
// and the canonical printer.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace elp {

/// Interned atom names. Ids are dense and assigned in first-use order,
/// so two programs parsed from the same text intern identically.
class SymbolTable {
 public:
  static bool valid_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9') || c == '_';
    });
  }

  uint32_t intern(std::string_view name) {
    if (auto it = index_.find(std::string(name)); it != index_.end())
      return it->second;
    if (!valid_name(name))
      throw std::invalid_argument("invalid atom name: '" + std::string(name) +
                                  "'");
    const auto id = static_cast<uint32_t>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
  }

  std::optional<uint32_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(uint32_t id) const { return names_.at(id); }
  uint32_t size() const { return static_cast<uint32_t>(names_.size()); }

  bool operator==(const SymbolTable& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, uint32_t> index_;
};

/// An atom or its strong negation.
struct ObjectLiteral {
  uint32_t atom = 0;
  bool strong_neg = false;

  friend auto operator<=>(const ObjectLiteral&, const ObjectLiteral&) = default;
};

enum class ModalOp : uint8_t { K, M };

/// K l, M l, not K l or not M l over an object literal l.
struct ModalLiteral {
  ModalOp op = ModalOp::K;
  ObjectLiteral lit;
  bool default_neg = false;

  friend auto operator<=>(const ModalLiteral&, const ModalLiteral&) = default;
};

/// not l: default negation of an object literal.
struct DefaultNegated {
  ObjectLiteral lit;

  friend auto operator<=>(const DefaultNegated&, const DefaultNegated&) =
      default;
};

/// not not l. The surface grammar rejects it; it only arises internally
/// when modal literals are rewritten into default negation.
struct DoublyNegated {
  ObjectLiteral lit;

  friend auto operator<=>(const DoublyNegated&, const DoublyNegated&) = default;
};

using ExtendedLiteral =
    std::variant<ObjectLiteral, DefaultNegated, DoublyNegated, ModalLiteral>;

inline bool is_modal(const ExtendedLiteral& e) {
  return std::holds_alternative<ModalLiteral>(e);
}
inline bool is_objective(const ExtendedLiteral& e) {
  return std::holds_alternative<ObjectLiteral>(e);
}

/// Disjunctive head (empty list encodes falsity) plus conjunctive body.
struct Rule {
  std::vector<ObjectLiteral> head;
  std::vector<ExtendedLiteral> body;

  bool is_constraint() const { return head.empty(); }

  bool has_modal_body() const {
    return std::any_of(body.begin(), body.end(), is_modal);
  }

  /// A constraint whose body literals are all modal.
  bool is_subjective_constraint() const {
    return is_constraint() && std::all_of(body.begin(), body.end(), is_modal);
  }

  bool operator==(const Rule&) const = default;
};

struct Program {
  std::vector<Rule> rules;
  SymbolTable symbols;

  bool non_epistemic() const {
    return std::none_of(rules.begin(), rules.end(),
                        [](const Rule& r) { return r.has_modal_body(); });
  }

  /// No default negation, no double negation, no modal literals.
  bool is_positive() const {
    for (const Rule& r : rules)
      for (const ExtendedLiteral& e : r.body)
        if (!is_objective(e)) return false;
    return true;
  }

  Program with_rule(Rule r) const {
    check_rule(r);
    Program out = *this;
    out.rules.push_back(std::move(r));
    return out;
  }

  Program without_rule(size_t index) const {
    if (index >= rules.size())
      throw std::out_of_range("rule index out of range");
    Program out = *this;
    out.rules.erase(out.rules.begin() + static_cast<ptrdiff_t>(index));
    return out;
  }

 private:
  void check_rule(const Rule& r) const {
    auto check = [this](const ObjectLiteral& l) {
      if (l.atom >= symbols.size())
        throw std::invalid_argument("rule references an unknown atom");
    };
    for (const ObjectLiteral& l : r.head) check(l);
    for (const ExtendedLiteral& e : r.body)
      std::visit([&](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ObjectLiteral>)
          check(v);
        else
          check(v.lit);
      }, e);
  }
};

/// Applies fn to every object literal occurring in the rule, including
/// the literals under default negation and modal operators.
template <class Fn>
void for_each_object_literal(const Rule& r, Fn&& fn) {
  for (const ObjectLiteral& l : r.head) fn(l);
  for (const ExtendedLiteral& e : r.body)
    std::visit([&](const auto& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ObjectLiteral>)
        fn(v);
      else
        fn(v.lit);
    }, e);
}

// ---------------------------------------------------------------------------
// Canonical printer
// ---------------------------------------------------------------------------

inline std::string render(const ObjectLiteral& l, const SymbolTable& syms) {
  return (l.strong_neg ? "-" : "") + syms.name(l.atom);
}

inline std::string render(const ExtendedLiteral& e, const SymbolTable& syms) {
  struct Visitor {
    const SymbolTable& syms;
    std::string operator()(const ObjectLiteral& l) const {
      return render(l, syms);
    }
    std::string operator()(const DefaultNegated& l) const {
      return "not " + render(l.lit, syms);
    }
    std::string operator()(const DoublyNegated& l) const {
      return "not not " + render(l.lit, syms);
    }
    std::string operator()(const ModalLiteral& m) const {
      std::string out = m.default_neg ? "not " : "";
      out += m.op == ModalOp::K ? "K " : "M ";
      return out + render(m.lit, syms);
    }
  };
  return std::visit(Visitor{syms}, e);
}

inline std::string render(const Rule& r, const SymbolTable& syms) {
  std::string out;
  for (size_t i = 0; i < r.head.size(); ++i) {
    if (i > 0) out += " | ";
    out += render(r.head[i], syms);
  }
  if (r.is_constraint() && r.body.empty()) return "false.";
  if (!r.body.empty()) {
    out += r.is_constraint() ? ":- " : " :- ";
    for (size_t i = 0; i < r.body.size(); ++i) {
      if (i > 0) out += ", ";
      out += render(r.body[i], syms);
    }
  }
  out += ".";
  return out;
}

/// Canonical text. parse_program(render(p)) is structurally equal to p.
inline std::string render(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules) {
    out += render(r, p.symbols);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural equality under atom names
// ---------------------------------------------------------------------------

// Programs built independently may intern the same atoms under different
// ids; equality compares rule structure with literals resolved to names.
inline bool structurally_equal(const Program& a, const Program& b) {
  if (a.rules.size() != b.rules.size()) return false;
  auto lit_eq = [&](const ObjectLiteral& x, const ObjectLiteral& y) {
    return x.strong_neg == y.strong_neg &&
           a.symbols.name(x.atom) == b.symbols.name(y.atom);
  };
  auto ext_eq = [&](const ExtendedLiteral& x, const ExtendedLiteral& y) {
    if (x.index() != y.index()) return false;
    if (const auto* mx = std::get_if<ModalLiteral>(&x)) {
      const auto& my = std::get<ModalLiteral>(y);
      return mx->op == my.op && mx->default_neg == my.default_neg &&
             lit_eq(mx->lit, my.lit);
    }
    auto inner = [](const ExtendedLiteral& e) {
      return std::visit([](const auto& v) -> ObjectLiteral {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ObjectLiteral>)
          return v;
        else
          return v.lit;
      }, e);
    };
    return lit_eq(inner(x), inner(y));
  };
  for (size_t i = 0; i < a.rules.size(); ++i) {
    const Rule& ra = a.rules[i];
    const Rule& rb = b.rules[i];
    if (ra.head.size() != rb.head.size() || ra.body.size() != rb.body.size())
      return false;
    for (size_t j = 0; j < ra.head.size(); ++j)
      if (!lit_eq(ra.head[j], rb.head[j])) return false;
    for (size_t j = 0; j < ra.body.size(); ++j)
      if (!ext_eq(ra.body[j], rb.body[j])) return false;
  }
  return true;
}

inline bool operator==(const Program& a, const Program& b) {
  return structurally_equal(a, b);
}

// ---------------------------------------------------------------------------
// Classification and epistemic negations
// ---------------------------------------------------------------------------

struct Classification {
  bool non_epistemic = true;
  std::vector<size_t> subjective_constraints;
  size_t atoms = 0;
};

inline Classification classify(const Program& p) {
  Classification c;
  c.non_epistemic = p.non_epistemic();
  c.atoms = p.symbols.size();
  for (size_t i = 0; i < p.rules.size(); ++i)
    if (p.rules[i].is_subjective_constraint())
      c.subjective_constraints.push_back(i);
  return c;
}

/// `not l` (inner_default_neg false) or `not ¬l` (inner_default_neg true):
/// the two shapes obtained by reading K l as ¬ not l and M l as not ¬l.
struct EpNegLiteral {
  ObjectLiteral inner;
  bool inner_default_neg = false;

  friend auto operator<=>(const EpNegLiteral&, const EpNegLiteral&) = default;
};

inline std::string render(const EpNegLiteral& e, const SymbolTable& syms) {
  return std::string("not ") + (e.inner_default_neg ? "not " : "") +
         render(e.inner, syms);
}

/// EP(p): one `not l` per K-literal occurrence over l, one `not ¬l` per
/// M-literal occurrence, deduplicated and canonically ordered.
inline std::vector<EpNegLiteral> epistemic_negations(const Program& p) {
  std::set<EpNegLiteral> out;
  for (const Rule& r : p.rules)
    for (const ExtendedLiteral& e : r.body)
      if (const auto* m = std::get_if<ModalLiteral>(&e))
        out.insert(EpNegLiteral{m->lit, m->op == ModalOp::M});
  return {out.begin(), out.end()};
}

}  // namespace elp
