#include "toda/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toda {

std::string WeylElement::word_string() const {
  if (word.empty()) return "id";
  std::ostringstream os;
  for (size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k];
  return os.str();
}

WeylElement simple_reflection(const CartanData& cartan, int i) {
  int n = cartan.rank();
  if (i < 1 || i > n) throw std::invalid_argument("reflection index out of range");
  WeylElement e;
  e.word = {i};
  // s_i: b -> b - b_i * (omega-coordinates of alpha_i); column i of the
  // action matrix is delta_{ki} - a_{ik}.
  e.action = int_identity(n);
  e.coaction = int_identity(n);
  for (int k = 0; k < n; ++k) {
    e.action[k][i - 1] -= cartan.cartan()[i - 1][k];
    e.coaction[i - 1][k] -= cartan.cartan()[i - 1][k];
  }
  return e;
}

WeylGroup enumerate_weyl(const CartanData& cartan, size_t cap) {
  int n = cartan.rank();
  std::vector<WeylElement> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection(cartan, i));

  WeylGroup group;
  std::map<IntMat, size_t> seen;
  WeylElement id;
  id.action = int_identity(n);
  id.coaction = int_identity(n);
  group.elements_.push_back(id);
  seen[id.action] = 0;

  for (size_t head = 0; head < group.elements_.size(); ++head) {
    for (int i = 1; i <= n; ++i) {
      WeylElement cand;
      cand.word = group.elements_[head].word;
      cand.word.push_back(i);
      cand.action = int_mul(group.elements_[head].action, gens[i - 1].action);
      if (seen.count(cand.action)) continue;
      cand.coaction = int_mul(group.elements_[head].coaction, gens[i - 1].coaction);
      seen[cand.action] = group.elements_.size();
      group.elements_.push_back(std::move(cand));
      if (group.elements_.size() > cap)
        throw std::invalid_argument("Weyl group exceeds safety cap of " +
                                    std::to_string(cap) + " elements for " +
                                    cartan.type().to_string());
    }
  }

  size_t max_len = 0, max_count = 0;
  for (size_t k = 0; k < group.elements_.size(); ++k) {
    size_t len = group.elements_[k].word.size();
    if (len > max_len) {
      max_len = len;
      group.longest_ = k;
      max_count = 1;
    } else if (len == max_len) {
      ++max_count;
    }
  }
  if (max_count != 1)
    throw std::runtime_error("longest element is not unique; enumeration is broken");
  return group;
}

Weight weight_action(const WeylElement& tau, const Weight& beta) {
  int n = beta.rank();
  Weight out;
  out.b = RatVec(n, Rat(0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) out.b[k] += Rat(tau.action[k][j]) * beta.b[j];
  return out;
}

Coweight dual_action(const WeylElement& tau, const Coweight& h) {
  int n = h.rank();
  Coweight out;
  out.t = RatVec(n, Rat(0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) out.t[k] += Rat(tau.coaction[k][j]) * h.t[j];
  return out;
}

Coweight chamber_point(const CartanData& cartan, const WeylElement& tau,
                       const std::vector<Rat>& c) {
  int n = cartan.rank();
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("rank mismatch");
  for (const Rat& v : c)
    if (v <= 0)
      throw std::invalid_argument("chamber coefficients must be positive");
  Coweight h0;
  h0.t = RatVec(n, Rat(0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) h0.t[k] += cartan.inverse_cartan()[k][j] * c[j];
  Coweight h = dual_action(tau, h0);
  for (const auto& root : cartan.positive_roots())
    if (pair(cartan.root_weight(root), h) == 0)
      throw std::runtime_error("chamber point is not regular");
  return h;
}

std::vector<Rat> mass_vector(const CartanData& cartan, const WeylElement& tau,
                             const Coweight& w0) {
  int n = cartan.rank();
  std::vector<Rat> sigma(n, Rat(0));
  for (int i = 1; i <= n; ++i) {
    Weight omega = cartan.fundamental_weight(i);
    Weight moved = weight_action(tau, omega);
    sigma[i - 1] = pair(weight_sub(omega, moved), w0);
  }
  return sigma;
}

int inversion_count(const CartanData& cartan, const WeylElement& tau) {
  int count = 0;
  for (const auto& root : cartan.positive_roots()) {
    Weight image = weight_action(tau, cartan.root_weight(root));
    RatVec m = cartan.weight_to_root_coords(image);
    bool negative = true;
    for (const Rat& x : m)
      if (x > 0) negative = false;
    if (negative) ++count;
  }
  return count;
}

const WeylElement& WeylGroup::element_by_word(const CartanData& cartan,
                                              const std::vector<int>& word) const {
  IntMat m = int_identity(cartan.rank());
  for (int i : word) m = int_mul(m, simple_reflection(cartan, i).action);
  for (const auto& e : elements_)
    if (e.action == m) return e;
  throw std::runtime_error("word does not match any enumerated element");
}

std::vector<int> parse_word(const std::string& s, int rank) {
  std::vector<int> word;
  std::string token;
  std::istringstream is(s);
  std::string cleaned = s;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream stream(cleaned);
  while (stream >> token) {
    if (token == "id" || token == "e") continue;
    if (token[0] == 's' || token[0] == 'S') token = token.substr(1);
    int idx;
    try {
      idx = std::stoi(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Weyl word token: '" + token + "'");
    }
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("reflection index out of range in word");
    word.push_back(idx);
  }
  return word;
}

}  // namespace toda
