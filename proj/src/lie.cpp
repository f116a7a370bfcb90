#include "toda/lie.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toda {

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type string: '" + s + "'");
  LieType t;
  t.family = static_cast<char>(toupper(static_cast<unsigned char>(s[0])));
  try {
    size_t pos = 0;
    t.rank = std::stoi(s.substr(1), &pos);
    if (pos + 1 != s.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type string: '" + s + "'");
  }
  if (!t.admissible())
    throw std::invalid_argument("inadmissible Lie type: " + t.to_string());
  return t;
}

bool LieType::admissible() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

IntMat cartan_matrix(LieType type) {
  if (!type.admissible())
    throw std::invalid_argument("inadmissible Lie type: " + type.to_string());
  int n = type.rank;
  IntMat a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) {  // simply-laced bond, 1-based
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (type.family) {
    case 'A':
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      // alpha_n is the short root: a_{n-1,n} = -2.
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'C':
      // alpha_n is the long root: a_{n,n-1} = -2.
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      // Chain 1-2-...-(n-1) with alpha_n attached to alpha_{n-2}.
      for (int i = 1; i < n - 1; ++i) chain(i, i + 1);
      chain(n - 2, n);
      break;
    case 'E':
      // Bourbaki numbering: chain 1-3-4-5-...-n with the branch node 2
      // attached to 4.
      chain(1, 3);
      for (int i = 3; i < n; ++i) chain(i, i + 1);
      chain(2, 4);
      break;
    case 'F':
      chain(1, 2);
      chain(3, 4);
      a[1][2] = -2;  // alpha_2 long, alpha_3 short
      a[2][1] = -1;
      break;
    case 'G':
      a[0][1] = -1;  // alpha_1 short, alpha_2 long
      a[1][0] = -3;
      break;
  }
  return a;
}

int positive_root_count(LieType type) {
  int n = type.rank;
  switch (type.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return type.rank == 6 ? 36 : (type.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: throw std::invalid_argument("inadmissible Lie type");
  }
}

namespace {

// Closure of the simple roots under the simple reflections, keeping only
// vectors with nonnegative coordinates.  Every positive root of height h+1
// is the reflection of a positive root of height h, so a breadth-first pass
// finds them all.
std::vector<std::vector<int>> close_positive_roots(const IntMat& a) {
  int n = static_cast<int>(a.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  size_t guard = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    if (++guard > 100000)
      throw std::runtime_error("positive-root closure failed to terminate");
    std::vector<int> m = queue[head];
    for (int j = 0; j < n; ++j) {
      long long pairing = 0;  // beta(h_alpha_j) = sum_i m_i a_ij
      for (int i = 0; i < n; ++i) pairing += static_cast<long long>(m[i]) * a[i][j];
      std::vector<int> refl = m;
      refl[j] -= static_cast<int>(pairing);
      bool positive = true;
      for (int v : refl)
        if (v < 0) positive = false;
      if (positive && seen.insert(refl).second) queue.push_back(refl);
    }
  }
  std::vector<std::vector<int>> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0);
    int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return roots;
}

}  // namespace

CartanData::CartanData(LieType type) : type_(type) {
  cartan_ = cartan_matrix(type);
  inverse_cartan_ = rat_inverse(rat_from_int(cartan_));
  positive_roots_ = close_positive_roots(cartan_);
  if (static_cast<int>(positive_roots_.size()) != positive_root_count(type))
    throw std::runtime_error("positive-root closure produced the wrong count for " +
                             type.to_string());
}

Weight CartanData::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple-root index out of range");
  Weight w;
  w.b = RatVec(cartan_[i - 1].begin(), cartan_[i - 1].end());
  return w;
}

Weight CartanData::fundamental_weight(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("weight index out of range");
  Weight w;
  w.b = RatVec(rank(), Rat(0));
  w.b[i - 1] = 1;
  return w;
}

Weight CartanData::weight_from_root_coords(const RatVec& m) const {
  if (static_cast<int>(m.size()) != rank()) throw std::invalid_argument("rank mismatch");
  Weight w;
  w.b = RatVec(rank(), Rat(0));
  // b = A^T m
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) w.b[k] += m[j] * cartan_[j][k];
  return w;
}

RatVec CartanData::weight_to_root_coords(const Weight& beta) const {
  if (beta.rank() != rank()) throw std::invalid_argument("rank mismatch");
  // m = (A^-1)^T b
  RatVec m(rank(), Rat(0));
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < rank(); ++k) m[j] += inverse_cartan_[k][j] * beta.b[k];
  return m;
}

Weight CartanData::root_weight(const std::vector<int>& root_coords) const {
  RatVec m(root_coords.begin(), root_coords.end());
  return weight_from_root_coords(m);
}

Coweight CartanData::coroot(int j) const {
  if (j < 1 || j > rank()) throw std::invalid_argument("coroot index out of range");
  Coweight h;
  h.t = RatVec(rank(), Rat(0));
  h.t[j - 1] = 1;
  return h;
}

Coweight CartanData::e_basis(int j) const {
  if (j < 1 || j > rank()) throw std::invalid_argument("index out of range");
  Coweight h;
  h.t = RatVec(rank(), Rat(0));
  for (int k = 0; k < rank(); ++k) h.t[k] = inverse_cartan_[k][j - 1];
  return h;
}

std::vector<Rat> CartanData::gamma_upper(const GammaVector& g) const {
  if (g.rank() != rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Rat> out(rank(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out[i] += inverse_cartan_[i][j] * g.gamma[j];
  return out;
}

GammaVector::GammaVector(std::vector<Rat> g) : gamma(std::move(g)) {
  for (const Rat& x : gamma)
    if (x <= -1)
      throw std::invalid_argument("gamma_i must exceed -1, got " + rat_to_pq(x));
}

std::vector<Rat> GammaVector::mu() const {
  std::vector<Rat> m = gamma;
  for (Rat& x : m) x += 1;
  return m;
}

Rat pair(const Weight& beta, const Coweight& h) {
  if (beta.rank() != h.rank()) throw std::invalid_argument("rank mismatch in pairing");
  Rat s(0);
  for (int k = 0; k < beta.rank(); ++k) s += beta.b[k] * h.t[k];
  return s;
}

Coweight w0_from_gammas(const CartanData& cartan, const GammaVector& g) {
  std::vector<Rat> mu = g.mu();
  Coweight w0;
  w0.t = RatVec(cartan.rank(), Rat(0));
  // w0 = sum_i mu_i E_i, so t_k = sum_i a^{ki} mu_i.
  for (int k = 0; k < cartan.rank(); ++k)
    for (int i = 0; i < cartan.rank(); ++i)
      w0.t[k] += cartan.inverse_cartan()[k][i] * mu[i];
  return w0;
}

std::string CartanData::to_json_string() const {
  std::ostringstream os;
  os << "{\"family\":\"" << type_.family << "\",\"rank\":" << rank() << ",\"cartan\":[";
  for (int i = 0; i < rank(); ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < rank(); ++j) os << (j ? "," : "") << cartan_[i][j];
    os << "]";
  }
  os << "],\"inverse_cartan\":[";
  for (int i = 0; i < rank(); ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < rank(); ++j)
      os << (j ? "," : "") << "\"" << rat_to_pq(inverse_cartan_[i][j]) << "\"";
    os << "]";
  }
  os << "],\"positive_roots\":[";
  for (size_t r = 0; r < positive_roots_.size(); ++r) {
    os << (r ? "," : "") << "[";
    for (int j = 0; j < rank(); ++j) os << (j ? "," : "") << positive_roots_[r][j];
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace toda
