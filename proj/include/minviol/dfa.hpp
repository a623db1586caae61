#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "minviol/formula.hpp"

namespace minviol {

struct DfaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DfaOptions {
  size_t max_letters = 1u << 16;
  size_t max_states = 100000;
};

/// Complete deterministic finite automaton over letters that are subsets of
/// a fixed atom set. Letter bit i corresponds to atoms[i] (atoms sorted).
struct Dfa {
  std::vector<std::string> atoms;
  uint32_t num_letters = 1;
  int num_states = 0;
  int initial = 0;
  std::optional<int> sink;
  std::vector<int> transitions;  // [state * num_letters + letter]
  std::vector<char> accepting;
  std::vector<std::string> state_names;  // residual formulas, or generic labels

  int step(int state, uint32_t letter) const { return transitions[static_cast<size_t>(state) * num_letters + letter]; }

  /// Runs the word from the initial state and reports the final state.
  int run(std::span<const uint32_t> word) const {
    int q = initial;
    for (uint32_t sigma : word) q = step(q, sigma);
    return q;
  }

  /// Acceptance of a finite word. Accepting states are absorbing, so
  /// checking the final state is equivalent to checking whether any prefix
  /// reached acceptance.
  bool accepts(std::span<const uint32_t> word) const { return accepting[run(word)]; }

  bool is_absorbing(int state) const {
    for (uint32_t l = 0; l < num_letters; ++l) {
      if (step(state, l) != state) return false;
    }
    return true;
  }

  /// Deterministic text listing of states, letters, transitions and the
  /// accepting set.
  std::string dump() const;
};

/// Compiles a canonical formula into a complete DFA whose accepted words are
/// exactly the finite words some prefix of which discharges the formula.
/// States are residual formulas deduplicated by canonical form; accepting
/// states are made absorbing; the `false` residual is the sink.
Dfa formula_to_dfa(const Formula& f, const DfaOptions& opts = {});

/// Deterministic but possibly partial automaton, as fed to complete_dfa.
struct PartialAutomaton {
  std::vector<std::string> atoms;  // sorted
  int num_states = 0;
  int initial = 0;
  std::vector<std::tuple<int, uint32_t, int>> transitions;  // (from, letter, to)
  std::vector<int> accepting;
};

/// Totalizes the transition function: every undefined (state, letter) is
/// routed to an absorbing non-accepting sink, added only when needed.
/// Throws DfaError on nondeterminism or dangling indices.
Dfa complete_dfa(const PartialAutomaton& partial);

}  // namespace minviol
