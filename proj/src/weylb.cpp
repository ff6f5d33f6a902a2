#include "qschur/weylb.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < rank(); ++k) {
    if (k) os << ",";
    os << window[k];
  }
  os << "]";
  return os.str();
}

SignedPerm sp_identity(int d) {
  SignedPerm w;
  w.window.resize(d);
  std::iota(w.window.begin(), w.window.end(), 1);
  return w;
}

SignedPerm sp_gen(int d, int t) {
  if (t < 0 || t >= d) throw std::invalid_argument("BadGenerator: s_" + std::to_string(t));
  SignedPerm w = sp_identity(d);
  if (t == 0)
    w.window[0] = -1;
  else
    std::swap(w.window[t - 1], w.window[t]);
  return w;
}

bool sp_valid(const SignedPerm& w) {
  int d = w.rank();
  std::vector<bool> seen(d + 1, false);
  for (int v : w.window) {
    int a = std::abs(v);
    if (a < 1 || a > d || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& w) {
  if (u.rank() != w.rank())
    throw std::invalid_argument("RankMismatch: composing signed permutations of different rank");
  SignedPerm r;
  r.window.resize(u.rank());
  for (int k = 1; k <= u.rank(); ++k) r.window[k - 1] = u(w(k));
  return r;
}

SignedPerm sp_inverse(const SignedPerm& w) {
  SignedPerm r;
  r.window.resize(w.rank());
  for (int k = 1; k <= w.rank(); ++k) {
    int v = w(k);
    if (v > 0)
      r.window[v - 1] = k;
    else
      r.window[-v - 1] = -k;
  }
  return r;
}

namespace {
// right descent: the generator index shortening w on the right, or -1
int right_descent(const SignedPerm& w) {
  if (w.rank() == 0) return -1;
  if (w.window[0] < 0) return 0;
  for (int t = 1; t < w.rank(); ++t)
    if (w.window[t - 1] > w.window[t]) return t;
  return -1;
}
}  // namespace

int length(const SignedPerm& w) {
  // inversions plus the sum of absolute values of negative entries
  int d = w.rank(), n = 0;
  for (int i = 0; i < d; ++i) {
    if (w.window[i] < 0) n += -w.window[i];
    for (int j = i + 1; j < d; ++j)
      if (w.window[i] > w.window[j]) ++n;
  }
  return n;
}

std::vector<int> reduced_word(const SignedPerm& w) {
  std::vector<int> peeled;
  SignedPerm ws = w;
  int t;
  while ((t = right_descent(ws)) >= 0) {
    peeled.push_back(t);
    ws = compose(ws, sp_gen(w.rank(), t));
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::vector<SignedPerm> enumerate_group(int d) {
  if (d < 0 || d > 6) throw std::invalid_argument("RankTooLarge: enumerate_group needs d <= 6");
  std::vector<SignedPerm> out;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      SignedPerm w;
      w.window.resize(d);
      for (int k = 0; k < d; ++k) w.window[k] = (mask >> k & 1) ? -perm[k] : perm[k];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPerm> enumerate_symmetric(int d) {
  std::vector<SignedPerm> out;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    SignedPerm w;
    w.window = perm;
    out.push_back(std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool CompositionB::valid() const {
  if (n < 1 || d < 0 || static_cast<int>(pos.size()) != r()) return false;
  for (int p : pos)
    if (p < 0) return false;
  int s = std::accumulate(pos.begin(), pos.end(), 0);
  if (odd()) return a0 >= 1 && a0 % 2 == 1 && a0 + 2 * s == 2 * d + 1;
  return a0 == 0 && s == d;
}

std::string CompositionB::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = static_cast<int>(pos.size()) - 1; i >= 0; --i) os << pos[i] << ",";
  if (odd()) os << a0 << ",";
  for (size_t i = 0; i < pos.size(); ++i) {
    os << pos[i];
    if (i + 1 < pos.size()) os << ",";
  }
  os << ")";
  return os.str();
}

namespace {
void compositions_into(int total, int parts, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions_into(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur;
  compositions_into(total, parts, cur, out);
  return out;
}
}  // namespace

std::vector<std::vector<int>> compositions_exact(int total, int parts) {
  return compositions(total, parts);
}

CompositionB weight_embed(const CompositionB& lam, int n_prime) {
  if (!lam.valid() || n_prime < lam.n || (lam.n % 2 == 1 && n_prime % 2 == 0))
    throw std::invalid_argument("InvalidWeight: bad embedding target");
  CompositionB out;
  out.n = n_prime;
  out.d = lam.d;
  out.pos = lam.pos;
  out.pos.resize(n_prime / 2, 0);
  if (n_prime % 2 == 1) out.a0 = lam.odd() ? lam.a0 : 1;
  if (!out.valid()) throw std::invalid_argument("InvalidWeight: embedding failed");
  return out;
}

std::vector<CompositionB> enumerate_weights(int n, int d) {
  if (n < 1) throw std::invalid_argument("InvalidWeight: n must be positive");
  std::vector<CompositionB> out;
  int r = n / 2;
  if (n % 2 == 0) {
    for (auto& c : compositions(d, r)) out.push_back({n, d, 0, c});
  } else {
    for (int a0 = 1; a0 <= 2 * d + 1; a0 += 2)
      for (auto& c : compositions((2 * d + 1 - a0) / 2, r)) out.push_back({n, d, a0, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parabolic_of(const CompositionB& lam) {
  if (!lam.valid()) throw std::invalid_argument("InvalidWeight: " + lam.str());
  std::vector<bool> removed(lam.d, false);
  // partial sums floor(a0/2), floor(a0/2)+lambda_1, ..., +lambda_{r-1};
  // sums reaching d fall outside the generator range and remove nothing
  long idx = lam.odd() ? lam.a0 / 2 : 0;
  if (idx < lam.d) removed[idx] = true;
  for (size_t i = 0; i + 1 < lam.pos.size(); ++i) {
    idx += lam.pos[i];
    if (idx < lam.d) removed[idx] = true;
  }
  std::vector<int> gens;
  for (int t = 0; t < lam.d; ++t)
    if (!removed[t]) gens.push_back(t);
  return gens;
}

GroupCache::GroupCache(int d) : d_(d) {
  elems_ = enumerate_group(d);
  for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i].window] = i;
  len_.resize(elems_.size());
  rmul_.assign(elems_.size() * std::max(d, 1), 0);
  lmul_.assign(elems_.size() * std::max(d, 1), 0);
  words_.resize(elems_.size());
  zeros_.resize(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i) {
    len_[i] = length(elems_[i]);
    words_[i] = reduced_word(elems_[i]);
    zeros_[i] = static_cast<int>(std::count(words_[i].begin(), words_[i].end(), 0));
    for (int t = 0; t < d; ++t) {
      rmul_[i * d + t] = index_.at(compose(elems_[i], sp_gen(d, t)).window);
      lmul_[i * d + t] = index_.at(compose(sp_gen(d, t), elems_[i]).window);
    }
  }
}

size_t GroupCache::id_of(const SignedPerm& w) const {
  auto it = index_.find(w.window);
  if (it == index_.end()) throw std::invalid_argument("unknown group element " + w.str());
  return it->second;
}

std::vector<size_t> GroupCache::subgroup(const std::vector<int>& gens) const {
  std::vector<bool> in(size(), false);
  std::vector<size_t> stack = {id_of(sp_identity(d_))}, out;
  in[stack[0]] = true;
  while (!stack.empty()) {
    size_t w = stack.back();
    stack.pop_back();
    out.push_back(w);
    for (int t : gens) {
      size_t u = rmul(w, t);
      if (!in[u]) {
        in[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
// the unique shortest element among ids; throws if the minimum is not unique
size_t unique_min(const std::vector<size_t>& ids, const std::vector<int>& len) {
  size_t best = ids[0];
  int count = 1;
  for (size_t i = 1; i < ids.size(); ++i) {
    if (len[ids[i]] < len[best]) {
      best = ids[i];
      count = 1;
    } else if (len[ids[i]] == len[best] && ids[i] != best) {
      ++count;
    }
  }
  if (count != 1)
    throw std::logic_error("coset minimum is not unique; parabolic data corrupt");
  return best;
}
}  // namespace

std::vector<size_t> GroupCache::coset_reps(const std::vector<int>& gens,
                                            const std::vector<size_t>* ambient) const {
  auto sub = subgroup(gens);
  std::vector<bool> seen(size(), false);
  std::vector<size_t> reps;
  std::vector<size_t> universe;
  if (ambient)
    universe = *ambient;
  else {
    universe.resize(size());
    for (size_t w = 0; w < size(); ++w) universe[w] = w;
  }
  for (size_t w : universe) {
    if (seen[w]) continue;
    std::vector<size_t> coset;
    for (size_t u : sub) {
      size_t x = w;
      for (int t : words_[u]) x = lmul(x, t);  // left factor u, built gen by gen
      coset.push_back(x);
      seen[x] = true;
    }
    reps.push_back(unique_min(coset, len_));
  }
  std::sort(reps.begin(), reps.end(), [&](size_t a, size_t b) {
    if (len_[a] != len_[b]) return len_[a] < len_[b];
    return elems_[a].window < elems_[b].window;
  });
  return reps;
}

std::vector<size_t> GroupCache::double_coset(size_t g, const std::vector<int>& gens_lam,
                                             const std::vector<int>& gens_mu) const {
  std::vector<bool> in(size(), false);
  std::vector<size_t> stack = {g}, out;
  in[g] = true;
  while (!stack.empty()) {
    size_t w = stack.back();
    stack.pop_back();
    out.push_back(w);
    for (int t : gens_lam) {
      size_t u = lmul(w, t);
      if (!in[u]) {
        in[u] = true;
        stack.push_back(u);
      }
    }
    for (int t : gens_mu) {
      size_t u = rmul(w, t);
      if (!in[u]) {
        in[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> GroupCache::double_coset_reps(const std::vector<int>& gens_lam,
                                                  const std::vector<int>& gens_mu,
                                                  const std::vector<size_t>* ambient) const {
  std::vector<bool> seen(size(), false);
  std::vector<size_t> reps;
  std::vector<size_t> universe;
  if (ambient)
    universe = *ambient;
  else {
    universe.resize(size());
    for (size_t w = 0; w < size(); ++w) universe[w] = w;
  }
  for (size_t w : universe) {
    if (seen[w]) continue;
    auto dc = double_coset(w, gens_lam, gens_mu);
    for (size_t x : dc) seen[x] = true;
    reps.push_back(unique_min(dc, len_));
  }
  std::sort(reps.begin(), reps.end(), [&](size_t a, size_t b) {
    if (len_[a] != len_[b]) return len_[a] < len_[b];
    return elems_[a].window < elems_[b].window;
  });
  return reps;
}

const GroupCache& group_cache(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GroupCache>> caches;
  std::lock_guard<std::mutex> lock(mu);
  auto it = caches.find(d);
  if (it == caches.end()) it = caches.emplace(d, std::make_unique<GroupCache>(d)).first;
  return *it->second;
}

std::vector<SignedPerm> coset_reps(const CompositionB& lam) {
  const auto& G = group_cache(lam.d);
  std::vector<SignedPerm> out;
  for (size_t id : G.coset_reps(parabolic_of(lam))) out.push_back(G.elem(id));
  return out;
}

std::vector<SignedPerm> coset_reps(const CompositionB& lam, const CompositionB& mu) {
  if (lam.n != mu.n || lam.d != mu.d)
    throw std::invalid_argument("InvalidWeight: mismatched weight parameters");
  const auto& G = group_cache(lam.d);
  std::vector<SignedPerm> out;
  for (size_t id : G.double_coset_reps(parabolic_of(lam), parabolic_of(mu)))
    out.push_back(G.elem(id));
  return out;
}

}  // namespace qschur
