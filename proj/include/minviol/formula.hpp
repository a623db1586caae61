#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minviol {

/// Raised when a formula cannot be brought into the supported fragment
/// (e.g. negation applied to a temporal subformula).
struct FormulaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind : uint8_t {
  True,
  False,
  Atom,
  NotAtom,
  Next,
  Until,
  Always,
  And,
  Or,
};

/// Immutable temporal-logic formula in canonical form.
///
/// Canonical form: negation only on atoms, `F x` stored as `true U x`,
/// implication expanded, And/Or flattened with children sorted and
/// deduplicated, constants folded. Two formulas denote the same canonical
/// tree iff operator== holds, which is what the automaton construction
/// uses to deduplicate states.
class Formula {
 public:
  Formula() : Formula(t()) {}

  static Formula t();
  static Formula f();
  static Formula atom(const std::string& name);
  static Formula not_atom(const std::string& name);
  static Formula next(const Formula& c);
  static Formula until(const Formula& lhs, const Formula& rhs);
  static Formula eventually(const Formula& c) { return until(t(), c); }
  static Formula always(const Formula& c);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula implies(const Formula& lhs, const Formula& rhs);
  /// Pushes negation to the atoms. Throws FormulaError if it reaches a
  /// temporal operator.
  static Formula negate(const Formula& c);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  std::span<const Formula> children() const { return node_->children; }
  const Formula& child(size_t i) const { return node_->children[i]; }

  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }
  /// No temporal operator anywhere in the tree.
  bool is_propositional() const { return node_->propositional; }

  bool operator==(const Formula& other) const { return compare(*this, other) == 0; }
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const { return compare(*this, other) < 0; }

  static int compare(const Formula& a, const Formula& b);
  size_t hash() const { return node_->hash; }

  /// Sorted, deduplicated atom names appearing in the formula.
  std::vector<std::string> atom_set() const;

  /// Concrete-syntax rendering; parse(str()) reproduces the same canonical
  /// formula.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
    size_t hash = 0;
    bool propositional = true;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

/// One-step expansion of `f` after reading one letter. `atoms` is sorted;
/// bit i of `letter` says whether atoms[i] holds.
Formula derivative(const Formula& f, std::span<const std::string> atoms, uint32_t letter);

/// Whether a residual formula counts as accepted: it is `true`, or a
/// conjunction whose every conjunct is Always over a propositional body
/// (no reach obligations left, no safety violation so far).
bool accepting_residual(const Formula& f);

}  // namespace minviol
