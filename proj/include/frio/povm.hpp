#pragma once

#include <string>
#include <vector>

#include "frio/algebra.hpp"

namespace frio {

// Role of a measurement outcome: the inconclusive element, or the element
// that identifies ensemble state `state_index`.
struct OutcomeRole {
  enum class Kind { inconclusive, identify };
  Kind kind = Kind::inconclusive;
  std::size_t state_index = 0;

  static OutcomeRole inconclusive() { return {Kind::inconclusive, 0}; }
  static OutcomeRole identify(std::size_t i) { return {Kind::identify, i}; }
};

// Ordered list of POVM elements with role labels. By convention the
// inconclusive element comes first, but consumers go through the roles and
// never rely on position.
struct Povm {
  std::vector<Mat2> elements;
  std::vector<OutcomeRole> roles;

  std::size_t size() const { return elements.size(); }

  // {pi0, conclusive[0], conclusive[1], ...} labeled inconclusive,
  // identify(0), identify(1), ...
  static Povm with_inconclusive(Mat2 pi0, std::vector<Mat2> conclusive) {
    Povm p;
    p.elements.reserve(conclusive.size() + 1);
    p.roles.reserve(conclusive.size() + 1);
    p.elements.push_back(pi0);
    p.roles.push_back(OutcomeRole::inconclusive());
    for (std::size_t i = 0; i < conclusive.size(); ++i) {
      p.elements.push_back(conclusive[i]);
      p.roles.push_back(OutcomeRole::identify(i));
    }
    return p;
  }

  // All-inconclusive strategy: pi0 = identity, zero identify elements.
  static Povm trivial_strategy(std::size_t n_states) {
    return with_inconclusive(Mat2::identity(), std::vector<Mat2>(n_states, Mat2::zero()));
  }

  // Index of the (single) inconclusive element; -1 if absent.
  int inconclusive_index() const {
    for (std::size_t k = 0; k < roles.size(); ++k) {
      if (roles[k].kind == OutcomeRole::Kind::inconclusive) return static_cast<int>(k);
    }
    return -1;
  }

  // Index of the element identifying state i; -1 if absent.
  int identify_index(std::size_t i) const {
    for (std::size_t k = 0; k < roles.size(); ++k) {
      if (roles[k].kind == OutcomeRole::Kind::identify && roles[k].state_index == i) {
        return static_cast<int>(k);
      }
    }
    return -1;
  }
};

// Checks every POVM invariant and returns one description per violation,
// with the offending magnitude. Empty result means the POVM is valid.
std::vector<std::string> validate_povm(const Povm& povm);

inline bool povm_is_valid(const Povm& povm) { return validate_povm(povm).empty(); }

}  // namespace frio
