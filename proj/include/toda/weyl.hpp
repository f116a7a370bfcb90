#pragma once

#include <string>
#include <vector>

#include "toda/lie.hpp"

namespace toda {

// A Weyl group element is identified by its integer action matrix on
// fundamental-weight coordinates (faithful for crystallographic groups);
// the stored word is the first one found by breadth-first search and is
// reported for bookkeeping only.
struct WeylElement {
  std::vector<int> word;  // simple-reflection indices, 1-based; tau = s_{w[0]} o ... o s_{w[k-1]}
  IntMat action;          // weight coordinates b -> action * b
  IntMat coaction;        // coweight coordinates t -> coaction * t (inverse transpose)

  int length() const { return static_cast<int>(word.size()); }
  std::string word_string() const;  // "s1 s2 s1", "id" for the identity
};

class WeylGroup {
 public:
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& longest() const { return elements_[longest_]; }
  size_t order() const { return elements_.size(); }

  // Element whose action matrix matches the composition of the given word.
  const WeylElement& element_by_word(const CartanData& cartan,
                                     const std::vector<int>& word) const;

  friend WeylGroup enumerate_weyl(const CartanData&, size_t);

 private:
  std::vector<WeylElement> elements_;
  size_t longest_ = 0;
};

WeylElement simple_reflection(const CartanData& cartan, int i);

// Breadth-first closure over generator multiplication, deduplicated by
// action matrix; throws if the group exceeds the safety cap.
WeylGroup enumerate_weyl(const CartanData& cartan, size_t cap = 1000000);

Weight weight_action(const WeylElement& tau, const Weight& beta);
Coweight dual_action(const WeylElement& tau, const Coweight& h);

// tau(sum_i c_i E_i); all c_i must be positive so the result is an interior
// point of the chamber tau C0 (in particular regular).
Coweight chamber_point(const CartanData& cartan, const WeylElement& tau,
                       const std::vector<Rat>& c);

// sigma_i = <omega_i - tau omega_i, w0>.
std::vector<Rat> mass_vector(const CartanData& cartan, const WeylElement& tau,
                             const Coweight& w0);

// Number of positive roots sent to negative roots by tau.
int inversion_count(const CartanData& cartan, const WeylElement& tau);

// Parses "id", "s1 s2 s1" or "1 2 1" (commas also accepted).
std::vector<int> parse_word(const std::string& s, int rank);

}  // namespace toda
