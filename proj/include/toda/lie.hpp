#pragma once

#include <string>
#include <vector>

#include "toda/linalg.hpp"
#include "toda/rational.hpp"

namespace toda {

// Conventions used throughout the library
// ---------------------------------------
// Simple roots follow the Bourbaki ordering for every family (see the table
// in cartan_matrix()).  The Cartan matrix entry is a_ij = alpha_i(h_alpha_j),
// i.e. row i reads off the omega-coordinates of alpha_i.
//
// Weights are stored in fundamental-weight coordinates b (beta = sum b_k
// omega_k).  Coweights are stored in the coroot basis {h_alpha_1, ...,
// h_alpha_n}, so the weight/coweight pairing is the plain dot product
// <beta, H> = sum_k b_k t_k.  Root coordinates m (beta = sum m_j alpha_j)
// convert via m = (A^-1)^T b.

struct LieType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  static LieType parse(const std::string& s);  // "A2", "G2", ...
  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
  bool admissible() const;
  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
};

struct Weight {
  RatVec b;  // fundamental-weight coordinates
  int rank() const { return static_cast<int>(b.size()); }
  bool operator==(const Weight& o) const { return b == o.b; }
};

struct Coweight {
  RatVec t;  // coroot-basis coordinates
  int rank() const { return static_cast<int>(t.size()); }
  bool operator==(const Coweight& o) const { return t == o.t; }
};

// Singularity strengths gamma_i > -1 of the source term; mu_i = gamma_i + 1.
struct GammaVector {
  std::vector<Rat> gamma;

  explicit GammaVector(std::vector<Rat> g);
  int rank() const { return static_cast<int>(gamma.size()); }
  std::vector<Rat> mu() const;
};

class CartanData {
 public:
  explicit CartanData(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMat& cartan() const { return cartan_; }
  const RatMat& inverse_cartan() const { return inverse_cartan_; }
  // Positive roots in simple-root coordinates, sorted by (height, lex).
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

  Weight simple_root(int i) const;         // 1-based
  Weight fundamental_weight(int i) const;  // 1-based
  Weight weight_from_root_coords(const RatVec& m) const;
  RatVec weight_to_root_coords(const Weight& beta) const;
  Weight root_weight(const std::vector<int>& root_coords) const;

  Coweight coroot(int j) const;   // h_alpha_j, 1-based
  Coweight e_basis(int j) const;  // E_j with <alpha_i, E_j> = delta_ij

  // gamma^i = sum_j a^{ij} gamma_j.
  std::vector<Rat> gamma_upper(const GammaVector& g) const;

  std::string to_json_string() const;

 private:
  LieType type_;
  IntMat cartan_;
  RatMat inverse_cartan_;
  std::vector<std::vector<int>> positive_roots_;
};

// Cartan matrix from the classification tables; rejects inadmissible types.
IntMat cartan_matrix(LieType type);

// Number of positive roots for a finite type (used as an independent check
// against the reflection closure).
int positive_root_count(LieType type);

Rat pair(const Weight& beta, const Coweight& h);

// w0 is the coweight with <alpha_i, w0> = mu_i.
Coweight w0_from_gammas(const CartanData& cartan, const GammaVector& g);

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.b.size(); ++i) r.b[i] += b.b[i];
  return r;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.b.size(); ++i) r.b[i] -= b.b[i];
  return r;
}

inline Weight weight_scale(const Rat& c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.b) x *= c;
  return r;
}

}  // namespace toda
