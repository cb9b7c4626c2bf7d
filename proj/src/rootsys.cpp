#include "umac/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace umac {

std::size_t LabelsHash::operator()(const Labels& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 1099511628211ull;
  }
  return h;
}

const char* to_string(WeightClass c) {
  switch (c) {
    case WeightClass::minuscule: return "minuscule";
    case WeightClass::quasi_minuscule: return "quasi-minuscule";
    case WeightClass::small: return "small";
    case WeightClass::not_small: return "not-small";
  }
  return "?";
}

class OrbitCache {
 public:
  std::shared_ptr<const std::vector<Labels>> find(const Labels& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }
  std::shared_ptr<const std::vector<Labels>> insert(const Labels& key,
                                                    std::shared_ptr<const std::vector<Labels>> v) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(v));
    return it->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Labels, std::shared_ptr<const std::vector<Labels>>, LabelsHash> map_;
};

namespace {

QVec unit(int dim, int i, Rational s = 1) {
  QVec v(dim, Rational(0));
  v[i] = s;
  return v;
}

std::vector<QVec> bourbaki_simple_roots(char family, int n) {
  std::vector<QVec> s;
  auto chain = [&](int dim, int count) {
    for (int i = 0; i < count; ++i) {
      QVec v(dim, Rational(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
  };
  switch (family) {
    case 'A':
      chain(n + 1, n);
      break;
    case 'B':
      chain(n, n - 1);
      s.push_back(unit(n, n - 1));
      break;
    case 'C':
      chain(n, n - 1);
      s.push_back(unit(n, n - 1, 2));
      break;
    case 'D': {
      chain(n, n - 1);
      QVec v(n, Rational(0));
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    case 'G':
      s.push_back({1, -1, 0});
      s.push_back({-2, 1, 1});
      break;
    case 'F': {
      s.push_back({0, 1, -1, 0});
      s.push_back({0, 0, 1, -1});
      s.push_back({0, 0, 0, 1});
      Rational h(1, 2);
      s.push_back({h, -h, -h, -h});
      break;
    }
    case 'E': {
      Rational h(1, 2);
      std::vector<QVec> e8;
      e8.push_back({h, -h, -h, -h, -h, -h, -h, h});
      QVec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      e8.push_back(a2);
      for (int i = 0; i < 6; ++i) {
        QVec v(8, Rational(0));
        v[i + 1] = 1;
        v[i] = -1;
        e8.push_back(v);
      }
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
  }
  return s;
}

bool valid_type(char family, int n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
  }
  return false;
}

// Gauss-Jordan over the rationals; returns inverse and determinant
std::pair<std::vector<std::vector<Rational>>, Rational> invert(std::vector<std::vector<Rational>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvariantViolation("singular Cartan matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return {inv, det};
}

bool orbit_order_less(const RootSystem& R, const Labels& a, const Labels& b) {
  const auto ha = R.twice_height(a), hb = R.twice_height(b);
  if (ha != hb) return ha > hb;
  return a < b;
}

}  // namespace

bool cone_order_less(const RootSystem& R, const Labels& a, const Labels& b) {
  const auto ha = R.twice_height(a), hb = R.twice_height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

std::string format_labels(const Labels& lam) {
  std::string s = "[";
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + "]";
}

RootSystem RootSystem::build(const std::string& family, int rank) {
  if (family.size() != 1) throw ConfigError("unknown root system family '" + family + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
  if (!valid_type(f, rank))
    throw ConfigError("invalid root system " + std::string(1, f) + std::to_string(rank));
  return from_simple_roots(f, rank, bourbaki_simple_roots(f, rank), false);
}

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw ConfigError("invalid root system label '" + label + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw ConfigError("");
  } catch (...) {
    throw ConfigError("invalid root system label '" + label + "'");
  }
  return build(label.substr(0, 1), rank);
}

RootSystem RootSystem::from_simple_roots(char family, int rank, std::vector<QVec> simple,
                                         bool coroot_system) {
  RootSystem R;
  R.family_ = family;
  R.rank_ = rank;
  R.coroot_system_ = coroot_system;
  R.simple_ = std::move(simple);
  R.finish();
  return R;
}

RootSystem RootSystem::dual() const {
  std::vector<QVec> co;
  for (const auto& a : simple_) co.push_back(scaled(a, Rational(2) / inner(a, a)));
  char f = family_;
  if (f == 'B') f = 'C';
  else if (f == 'C') f = 'B';
  return from_simple_roots(f, rank_, std::move(co), !coroot_system_);
}

std::string RootSystem::label() const { return std::string(1, family_) + std::to_string(rank_); }

void RootSystem::finish() {
  const int n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  std::vector<Rational> sn(n);
  for (int i = 0; i < n; ++i) sn[i] = inner(simple_[i], simple_[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = 2 * inner(simple_[i], simple_[j]) / sn[j];
      if (!is_integer(v)) throw InvariantViolation("non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(v.numerator());
    }

  // closure of the simple roots under simple reflections, in simple-root coordinates
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * cartan_[j][i];
      if (p == 0) continue;
      auto c = b;
      c[i] -= p;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& b : seen)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (seen.size() != 2 * pos.size()) throw InvariantViolation("root set not symmetric");

  const int dim = ambient_dim();
  roots_.clear();
  root_coeffs_ = pos;
  for (const auto& b : pos) {
    QVec v(dim, Rational(0));
    for (int j = 0; j < n; ++j)
      if (b[j]) v = add(v, scaled(simple_[j], b[j]));
    roots_.push_back(v);
    norm2_.push_back(inner(v, v));
    height_.push_back(std::accumulate(b.begin(), b.end(), 0));
    Labels lab(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) lab[j] += b[i] * cartan_[i][j];
    root_labels_.push_back(lab);
  }
  for (std::size_t a = 0; a < pos.size(); ++a) {
    std::vector<int> cc(n, 0);
    for (int i = 0; i < n; ++i) {
      Rational v = pos[a][i] * sn[i] / norm2_[a];
      if (!is_integer(v)) throw InvariantViolation("non-integral coroot coefficient");
      cc[i] = static_cast<int>(v.numerator());
    }
    coroot_coeffs_.push_back(cc);
  }
  simple_index_.assign(n, -1);
  for (std::size_t a = 0; a < pos.size(); ++a)
    if (height_[a] == 1)
      for (int i = 0; i < n; ++i)
        if (pos[a][i] == 1) simple_index_[i] = static_cast<int>(a);

  short_norm2_ = *std::min_element(norm2_.begin(), norm2_.end());
  simply_laced_ = std::all_of(norm2_.begin(), norm2_.end(),
                              [&](const Rational& x) { return x == short_norm2_; });
  highest_ = static_cast<int>(roots_.size()) - 1;
  highest_short_ = -1;
  for (int a = 0; a < num_positive_roots(); ++a)
    if (is_short(a) && (highest_short_ < 0 || height_[a] > height_[highest_short_])) highest_short_ = a;

  coxeter_ = height_[highest_] + 1;
  dual_coxeter_ = 1;
  for (int c : coroot_coeffs_[highest_]) dual_coxeter_ += c;

  // exponents: #{k : e_k >= j} equals the number of roots of height j
  std::vector<int> count(coxeter_ + 1, 0);
  for (int h : height_) ++count[h];
  exponents_.clear();
  for (int j = 1; j < coxeter_; ++j) {
    const int next = j + 1 < coxeter_ ? count[j + 1] : 0;
    for (int r = 0; r < count[j] - next; ++r) exponents_.push_back(j);
  }
  weyl_order_ = 1;
  for (int e : exponents_) weyl_order_ *= static_cast<std::uint64_t>(e + 1);

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
  auto [inv, det] = invert(a);
  cartan_inv_ = inv;
  if (!is_integer(det)) throw InvariantViolation("non-integral index");
  index_ = static_cast<int>(det.numerator());
  fundamental_.clear();
  for (int i = 0; i < n; ++i) {
    QVec w(dim, Rational(0));
    for (int j = 0; j < n; ++j) w = add(w, scaled(simple_[j], cartan_inv_[i][j]));
    fundamental_.push_back(w);
  }
  twice_rho_check_.assign(n, 0);
  for (const auto& cc : coroot_coeffs_)
    for (int i = 0; i < n; ++i) twice_rho_check_[i] += cc[i];
  cache_ = std::make_shared<OrbitCache>();
}

std::optional<std::pair<int, int>> RootSystem::find_root(const QVec& v) const {
  for (int a = 0; a < num_positive_roots(); ++a) {
    if (roots_[a] == v) return std::make_pair(a, 1);
    bool neg = true;
    for (std::size_t k = 0; k < v.size() && neg; ++k) neg = (roots_[a][k] == -v[k]);
    if (neg) return std::make_pair(a, -1);
  }
  return std::nullopt;
}

QVec RootSystem::to_ambient(const Labels& lam) const {
  QVec v(ambient_dim(), Rational(0));
  for (int i = 0; i < rank_; ++i)
    if (lam[i]) v = add(v, scaled(fundamental_[i], lam[i]));
  return v;
}

QVec RootSystem::to_ambient(const QVec& lam) const {
  QVec v(ambient_dim(), Rational(0));
  for (int i = 0; i < rank_; ++i)
    if (lam[i] != 0) v = add(v, scaled(fundamental_[i], lam[i]));
  return v;
}

QVec RootSystem::rational_labels(const QVec& v) const {
  QVec lab(rank_);
  for (int i = 0; i < rank_; ++i) lab[i] = 2 * inner(v, simple_[i]) / inner(simple_[i], simple_[i]);
  return lab;
}

std::optional<Labels> RootSystem::to_labels(const QVec& v) const {
  const QVec lab = rational_labels(v);
  Labels out(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (!is_integer(lab[i])) return std::nullopt;
    out[i] = static_cast<int>(lab[i].numerator());
  }
  if (to_ambient(out) != v) return std::nullopt;
  return out;
}

int RootSystem::pairing(const Labels& lam, int a) const {
  const auto& cc = coroot_coeffs_[a];
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += lam[i] * cc[i];
  return s;
}

Rational RootSystem::pairing(const QVec& lam, int a) const {
  const auto& cc = coroot_coeffs_[a];
  Rational s(0);
  for (int i = 0; i < rank_; ++i) s += lam[i] * cc[i];
  return s;
}

std::int64_t RootSystem::twice_height(const Labels& lam) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<std::int64_t>(lam[i]) * twice_rho_check_[i];
  return s;
}

bool RootSystem::is_dominant(const Labels& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](int x) { return x >= 0; });
}

Labels RootSystem::reflect(const Labels& lam, int i) const {
  Labels out(lam);
  const int p = lam[i];
  if (p == 0) return out;
  for (int j = 0; j < rank_; ++j) out[j] -= p * cartan_[i][j];
  return out;
}

Labels RootSystem::apply(const WeylWord& w, const Labels& lam) const {
  Labels out(lam);
  for (int i : w.letters) out = reflect(out, i);
  return out;
}

Labels RootSystem::apply_inverse(const WeylWord& w, const Labels& lam) const {
  Labels out(lam);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect(out, *it);
  return out;
}

std::pair<Labels, WeylWord> RootSystem::dominant_representative(const Labels& lam) const {
  Labels cur(lam);
  WeylWord w;
  for (;;) {
    int i = 0;
    while (i < rank_ && cur[i] >= 0) ++i;
    if (i == rank_) break;
    cur = reflect(cur, i);
    w.letters.push_back(i);
  }
  return {cur, w};
}

int RootSystem::count_inversions(const Labels& lam) const {
  int k = 0;
  for (int a = 0; a < num_positive_roots(); ++a)
    if (pairing(lam, a) < 0) ++k;
  return k;
}

std::shared_ptr<const std::vector<Labels>> RootSystem::weyl_orbit(const Labels& lam) const {
  const Labels key = dominant_representative(lam).first;
  if (auto hit = cache_->find(key)) return hit;
  std::unordered_set<Labels, LabelsHash> seen{key};
  std::vector<Labels> frontier{key};
  std::vector<Labels> all{key};
  while (!frontier.empty()) {
    std::vector<Labels> next;
    for (const auto& x : frontier)
      for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        Labels y = reflect(x, i);
        if (seen.insert(y).second) {
          next.push_back(y);
          all.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(),
            [this](const Labels& a, const Labels& b) { return orbit_order_less(*this, a, b); });
  return cache_->insert(key, std::make_shared<const std::vector<Labels>>(std::move(all)));
}

std::vector<std::pair<Labels, int>> RootSystem::signed_regular_orbit(const Labels& lam) const {
  std::vector<std::pair<Labels, int>> out;
  for (const auto& x : *weyl_orbit(lam)) out.emplace_back(x, count_inversions(x) % 2 ? -1 : 1);
  return out;
}

Labels RootSystem::dual_weight(const Labels& lam) const {
  Labels neg(lam);
  for (auto& x : neg) x = -x;
  return dominant_representative(neg).first;
}

std::optional<std::vector<Rational>> RootSystem::simple_root_expansion(const Labels& diff) const {
  std::vector<Rational> x(rank_, Rational(0));
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k)
      if (diff[k]) x[j] += diff[k] * cartan_inv_[k][j];
  return x;
}

bool RootSystem::dominance_leq(const Labels& mu, const Labels& lam) const {
  Labels d(rank_);
  for (int i = 0; i < rank_; ++i) d[i] = lam[i] - mu[i];
  auto x = *simple_root_expansion(d);
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return is_integer(r) && r >= 0; });
}

std::vector<Labels> RootSystem::dominant_weights_below(const Labels& lam) const {
  std::unordered_set<Labels, LabelsHash> seen{lam};
  std::vector<Labels> stack{lam};
  while (!stack.empty()) {
    Labels x = stack.back();
    stack.pop_back();
    for (int a = 0; a < num_positive_roots(); ++a) {
      Labels y(x);
      for (int i = 0; i < rank_; ++i) y[i] -= root_labels_[a][i];
      if (is_dominant(y) && seen.insert(y).second) stack.push_back(y);
    }
  }
  std::vector<Labels> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [this](const Labels& a, const Labels& b) { return cone_order_less(*this, a, b); });
  return out;
}

std::vector<Labels> RootSystem::saturated_set(const Labels& lam) const {
  std::vector<Labels> out;
  for (const auto& mu : dominant_weights_below(lam)) {
    auto orb = weyl_orbit(mu);
    out.insert(out.end(), orb->begin(), orb->end());
  }
  std::sort(out.begin(), out.end(),
            [this](const Labels& a, const Labels& b) { return orbit_order_less(*this, a, b); });
  return out;
}

WeightClass RootSystem::classify(const Labels& omega) const {
  int max_all = 0, max_other = 0;
  bool is_root = false;
  for (int a = 0; a < num_positive_roots(); ++a) {
    const int p = pairing(omega, a);
    max_all = std::max(max_all, p);
    if (root_labels_[a] == omega) is_root = true;
    else max_other = std::max(max_other, p);
  }
  if (max_all <= 1) return WeightClass::minuscule;
  if (is_root && max_other <= 1) return WeightClass::quasi_minuscule;
  if (max_all <= 2) return WeightClass::small;
  return WeightClass::not_small;
}

std::vector<Labels> RootSystem::parabolic_orbit(const Labels& mu, const Labels& omega) const {
  auto [dom, w] = dominant_representative(mu);
  std::vector<int> gens;
  for (int i = 0; i < rank_; ++i)
    if (dom[i] == 0) gens.push_back(i);
  const Labels start = apply(w, omega);
  std::unordered_set<Labels, LabelsHash> seen{start};
  std::vector<Labels> stack{start};
  while (!stack.empty()) {
    Labels x = stack.back();
    stack.pop_back();
    for (int i : gens) {
      if (x[i] == 0) continue;
      Labels y = reflect(x, i);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  std::vector<Labels> out;
  out.reserve(seen.size());
  for (const auto& x : seen) out.push_back(apply_inverse(w, x));
  std::sort(out.begin(), out.end(),
            [this](const Labels& a, const Labels& b) { return orbit_order_less(*this, a, b); });
  return out;
}

Labels RootSystem::fundamental(int i) const {
  Labels l(rank_, 0);
  l[i] = 1;
  return l;
}

std::vector<Labels> RootSystem::small_weights() const {
  const auto& marks = coroot_coeffs_[highest_short_];
  std::vector<Labels> out;
  Labels cur(rank_, 0);
  // enumerate labels with sum marks_i * lam_i <= 2
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == rank_) {
      if (std::any_of(cur.begin(), cur.end(), [](int x) { return x != 0; })) out.push_back(cur);
      return;
    }
    for (int v = 0; v * marks[i] <= budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - v * marks[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 2);
  std::sort(out.begin(), out.end(),
            [this](const Labels& a, const Labels& b) { return cone_order_less(*this, a, b); });
  return out;
}

std::vector<Labels> RootSystem::minuscule_weights() const {
  std::vector<Labels> out;
  for (int i = 0; i < rank_; ++i)
    if (coroot_coeffs_[highest_short_][i] == 1) out.push_back(fundamental(i));
  return out;
}

std::string RootSystem::dump() const {
  std::ostringstream os;
  auto tuple = [&](const QVec& v, int sign) {
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) os << ", ";
      os << to_string(sign * v[k]);
    }
    os << ")\n";
  };
  os << "# " << label() << (coroot_system_ ? " coroots" : "") << " positive\n";
  for (const auto& r : roots_) tuple(r, 1);
  os << "# negative\n";
  for (const auto& r : roots_) tuple(r, -1);
  return os.str();
}

}  // namespace umac
