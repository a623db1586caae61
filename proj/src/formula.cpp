#include "minviol/formula.hpp"

#include <algorithm>
#include <set>

namespace minviol {

namespace {

size_t hash_combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int kind_rank(Kind k) { return static_cast<int>(k); }

}  // namespace

Formula Formula::make(Node node) {
  size_t h = hash_combine(0x51ab43f0, static_cast<size_t>(node.kind));
  h = hash_combine(h, std::hash<std::string>{}(node.name));
  node.propositional = node.kind != Kind::Next && node.kind != Kind::Until && node.kind != Kind::Always;
  for (const Formula& c : node.children) {
    h = hash_combine(h, c.hash());
    node.propositional = node.propositional && c.is_propositional();
  }
  node.hash = h;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::t() {
  static const Formula v = make(Node{Kind::True, "", {}});
  return v;
}

Formula Formula::f() {
  static const Formula v = make(Node{Kind::False, "", {}});
  return v;
}

Formula Formula::atom(const std::string& name) { return make(Node{Kind::Atom, name, {}}); }

Formula Formula::not_atom(const std::string& name) { return make(Node{Kind::NotAtom, name, {}}); }

Formula Formula::next(const Formula& c) {
  // X false can never be discharged; X true is kept (it still demands that
  // another letter exists).
  if (c.is_false()) return f();
  return make(Node{Kind::Next, "", {c}});
}

Formula Formula::until(const Formula& lhs, const Formula& rhs) {
  // until(_, false) is unsatisfiable. until(_, true) and until(false, _)
  // are deliberately not folded: on finite words they are not equivalent
  // to their infinite-word simplifications.
  if (rhs.is_false()) return f();
  return make(Node{Kind::Until, "", {lhs, rhs}});
}

Formula Formula::always(const Formula& c) {
  if (c.is_true()) return t();
  return make(Node{Kind::Always, "", {c}});
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (kind_rank(a.kind()) != kind_rank(b.kind())) {
    return kind_rank(a.kind()) < kind_rank(b.kind()) ? -1 : 1;
  }
  if (int c = a.node_->name.compare(b.node_->name); c != 0) return c < 0 ? -1 : 1;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  for (size_t i = 0; i < ca.size(); ++i) {
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  }
  return 0;
}

namespace {

// Flattens nested nodes of `kind` into `out`.
void flatten(Kind kind, const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    for (const Formula& c : f.children()) flatten(kind, c, out);
  } else {
    out.push_back(f);
  }
}

bool is_literal(const Formula& f) { return f.kind() == Kind::Atom || f.kind() == Kind::NotAtom; }

bool complementary(const Formula& a, const Formula& b) {
  if (!is_literal(a) || !is_literal(b)) return false;
  return a.kind() != b.kind() && a.atom_name() == b.atom_name();
}

// Is `x` among the children of `f` (which has kind `kind`)?
bool contains_child(const Formula& f, Kind kind, const Formula& x) {
  if (f.kind() != kind) return false;
  for (const Formula& c : f.children()) {
    if (c == x) return true;
  }
  return false;
}

}  // namespace

Formula Formula::conj(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (const Formula& c : children) flatten(Kind::And, c, flat);

  std::sort(flat.begin(), flat.end(), [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(), [](const Formula& a, const Formula& b) { return a == b; }),
             flat.end());

  std::vector<Formula> kept;
  for (const Formula& c : flat) {
    if (c.is_false()) return f();
    if (c.is_true()) continue;
    kept.push_back(c);
  }
  // Complement check on literals: a & !a -> false.
  for (size_t i = 0; i < kept.size(); ++i) {
    for (size_t j = i + 1; j < kept.size(); ++j) {
      if (complementary(kept[i], kept[j])) return f();
    }
  }
  // Absorption: x & (x | y) -> x.
  std::vector<Formula> result;
  for (size_t i = 0; i < kept.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < kept.size() && !absorbed; ++j) {
      if (i != j && contains_child(kept[i], Kind::Or, kept[j])) absorbed = true;
    }
    if (!absorbed) result.push_back(kept[i]);
  }
  if (result.empty()) return t();
  if (result.size() == 1) return result[0];
  return make(Node{Kind::And, "", std::move(result)});
}

Formula Formula::disj(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (const Formula& c : children) flatten(Kind::Or, c, flat);

  std::sort(flat.begin(), flat.end(), [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(), [](const Formula& a, const Formula& b) { return a == b; }),
             flat.end());

  std::vector<Formula> kept;
  for (const Formula& c : flat) {
    if (c.is_true()) return t();
    if (c.is_false()) continue;
    kept.push_back(c);
  }
  // No complement fold here: on finite words `a | !a` still requires that a
  // letter exists, so it is not `true`.
  std::vector<Formula> result;
  for (size_t i = 0; i < kept.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < kept.size() && !absorbed; ++j) {
      if (i != j && contains_child(kept[i], Kind::And, kept[j])) absorbed = true;
    }
    if (!absorbed) result.push_back(kept[i]);
  }
  if (result.empty()) return f();
  if (result.size() == 1) return result[0];
  return make(Node{Kind::Or, "", std::move(result)});
}

Formula Formula::implies(const Formula& lhs, const Formula& rhs) { return disj({negate(lhs), rhs}); }

Formula Formula::negate(const Formula& c) {
  switch (c.kind()) {
    case Kind::True:
      return f();
    case Kind::False:
      return t();
    case Kind::Atom:
      return not_atom(c.atom_name());
    case Kind::NotAtom:
      return atom(c.atom_name());
    case Kind::And: {
      std::vector<Formula> kids;
      for (const Formula& k : c.children()) kids.push_back(negate(k));
      return disj(std::move(kids));
    }
    case Kind::Or: {
      std::vector<Formula> kids;
      for (const Formula& k : c.children()) kids.push_back(negate(k));
      return conj(std::move(kids));
    }
    case Kind::Next:
    case Kind::Until:
    case Kind::Always:
      throw FormulaError("negation over a temporal operator is outside the supported fragment");
  }
  throw FormulaError("unreachable formula kind");
}

std::vector<std::string> Formula::atom_set() const {
  std::set<std::string> names;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (cur->kind() == Kind::Atom || cur->kind() == Kind::NotAtom) names.insert(cur->atom_name());
    for (const Formula& c : cur->children()) stack.push_back(&c);
  }
  return {names.begin(), names.end()};
}

namespace {

// Precedence for printing: unary (4) > Until (3) > And (2) > Or (1).
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Or:
      return 1;
    case Kind::And:
      return 2;
    case Kind::Until:
      return 3;
    default:
      return 4;
  }
}

void print(const Formula& f, int parent_prec, std::string& out) {
  int prec = precedence(f);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::True:
      out += "true";
      break;
    case Kind::False:
      out += "false";
      break;
    case Kind::Atom:
      out += f.atom_name();
      break;
    case Kind::NotAtom:
      out += '!';
      out += f.atom_name();
      break;
    case Kind::Next:
      out += "X ";
      print(f.child(0), 4, out);
      break;
    case Kind::Always:
      out += "G ";
      print(f.child(0), 4, out);
      break;
    case Kind::Until:
      if (f.child(0).is_true()) {  // print as the F sugar
        out += "F ";
        print(f.child(1), 4, out);
      } else {
        // Right-associative: the left operand needs parens when it is
        // itself an Until.
        print(f.child(0), 4, out);
        out += " U ";
        print(f.child(1), 3, out);
      }
      break;
    case Kind::And: {
      bool first = true;
      for (const Formula& c : f.children()) {
        if (!first) out += " & ";
        first = false;
        print(c, 3, out);
      }
      break;
    }
    case Kind::Or: {
      bool first = true;
      for (const Formula& c : f.children()) {
        if (!first) out += " | ";
        first = false;
        print(c, 2, out);
      }
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

namespace {

bool letter_holds(std::span<const std::string> atoms, uint32_t letter, const std::string& name) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
  if (it == atoms.end() || *it != name) return false;
  return (letter >> (it - atoms.begin())) & 1u;
}

}  // namespace

Formula derivative(const Formula& f, std::span<const std::string> atoms, uint32_t letter) {
  switch (f.kind()) {
    case Kind::True:
      return Formula::t();
    case Kind::False:
      return Formula::f();
    case Kind::Atom:
      return letter_holds(atoms, letter, f.atom_name()) ? Formula::t() : Formula::f();
    case Kind::NotAtom:
      return letter_holds(atoms, letter, f.atom_name()) ? Formula::f() : Formula::t();
    case Kind::And: {
      std::vector<Formula> kids;
      for (const Formula& c : f.children()) kids.push_back(derivative(c, atoms, letter));
      return Formula::conj(std::move(kids));
    }
    case Kind::Or: {
      std::vector<Formula> kids;
      for (const Formula& c : f.children()) kids.push_back(derivative(c, atoms, letter));
      return Formula::disj(std::move(kids));
    }
    case Kind::Next:
      return f.child(0);
    case Kind::Until: {
      // l U r  ->  d(r) | (d(l) & (l U r))
      Formula dr = derivative(f.child(1), atoms, letter);
      Formula dl = derivative(f.child(0), atoms, letter);
      return Formula::disj({dr, Formula::conj({dl, f})});
    }
    case Kind::Always: {
      // G c  ->  d(c) & G c
      Formula dc = derivative(f.child(0), atoms, letter);
      return Formula::conj({dc, f});
    }
  }
  throw FormulaError("unreachable formula kind");
}

bool accepting_residual(const Formula& f) {
  if (f.is_true()) return true;
  if (f.kind() == Kind::Always) return f.child(0).is_propositional();
  if (f.kind() == Kind::And) {
    for (const Formula& c : f.children()) {
      if (c.kind() != Kind::Always || !c.child(0).is_propositional()) return false;
    }
    return true;
  }
  return false;
}

}  // namespace minviol
