/*
  The Weyl group of type B in window notation, together with the weight
  combinatorics feeding the Schur algebra: parabolic subgroups attached
  to weights and minimal-length (double) coset representatives.

  Conventions, fixed once for the whole toolkit:
    - window (w(1), ..., w(d)) with w(-k) = -w(k) implied;
    - composition applies the right factor first: (uw)(k) = u(w(k));
    - s_0 negates position 1, s_t (t >= 1) swaps positions t, t+1;
    - right multiplication by s_t shortens iff w(t) > w(t+1) (t >= 1),
      and by s_0 iff w(1) < 0.
*/
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qschur {

struct SignedPerm {
  std::vector<int> window;

  int rank() const { return static_cast<int>(window.size()); }
  bool is_identity() const {
    for (int k = 0; k < rank(); ++k)
      if (window[k] != k + 1) return false;
    return true;
  }
  int operator()(int k) const {  // k in [-d,-1] or [1,d]
    return k > 0 ? window[k - 1] : -window[-k - 1];
  }
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.window == b.window;
  }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.window < b.window;
  }
  std::string str() const;
};

SignedPerm sp_identity(int d);
SignedPerm sp_gen(int d, int t);  // s_t, 0 <= t <= d-1
SignedPerm compose(const SignedPerm& u, const SignedPerm& w);
SignedPerm sp_inverse(const SignedPerm& w);
bool sp_valid(const SignedPerm& w);

int length(const SignedPerm& w);
std::vector<int> reduced_word(const SignedPerm& w);

std::vector<SignedPerm> enumerate_group(int d);      // all of W^B(d), d <= 6
std::vector<SignedPerm> enumerate_symmetric(int d);  // the subgroup Sigma_d

/* Weight in Lambda^B(n,d): symmetric entries lambda_{-i} = lambda_i.
   For n = 2r+1 the center part a0 is odd and a0 + 2*sum(pos) = 2d+1;
   for n = 2r it is absent and sum(pos) = d. */
struct CompositionB {
  int n = 0, d = 0;
  int a0 = 0;               // center part, odd n only
  std::vector<int> pos;     // lambda_1 .. lambda_r

  int r() const { return n / 2; }
  bool odd() const { return n % 2 == 1; }
  bool valid() const;
  std::string str() const;
  friend bool operator==(const CompositionB& a, const CompositionB& b) {
    return a.n == b.n && a.d == b.d && a.a0 == b.a0 && a.pos == b.pos;
  }
  friend bool operator<(const CompositionB& a, const CompositionB& b) {
    if (a.a0 != b.a0) return a.a0 < b.a0;
    return a.pos < b.pos;
  }
};

std::vector<CompositionB> enumerate_weights(int n, int d);

/* All compositions of `total` into exactly `parts` nonnegative parts. */
std::vector<std::vector<int>> compositions_exact(int total, int parts);

/* The weight of Lambda^B(n,d) seen inside Lambda^B(n',d), zero-padded
   outward (center part 1 when passing from even n to odd n'). */
CompositionB weight_embed(const CompositionB& lam, int n_prime);

/* Generator indices of the parabolic subgroup W_lambda.  The removal
   indices are the partial sums floor(a0/2), floor(a0/2)+lambda_1, ...;
   even n runs through the weight embedding with a0 = 1, so index 0 is
   always removed there. */
std::vector<int> parabolic_of(const CompositionB& lam);

/* Group element tables for one rank, built once and shared. */
class GroupCache {
 public:
  explicit GroupCache(int d);

  int rank() const { return d_; }
  size_t size() const { return elems_.size(); }
  const SignedPerm& elem(size_t id) const { return elems_[id]; }
  size_t id_of(const SignedPerm& w) const;
  int len(size_t id) const { return len_[id]; }
  size_t rmul(size_t id, int t) const { return rmul_[id * d_ + t]; }
  size_t lmul(size_t id, int t) const { return lmul_[id * d_ + t]; }
  const std::vector<int>& word(size_t id) const { return words_[id]; }
  // number of s_0 letters in a reduced word (an invariant of the element)
  int zero_letters(size_t id) const { return zeros_[id]; }

  std::vector<size_t> subgroup(const std::vector<int>& gens) const;

  // minimal-length representatives of W_sub \ W, where W_sub is the
  // parabolic generated by `gens`; sorted by (length, window).  The
  // optional `ambient` restricts the partitioned set to a subgroup
  // containing W_sub (e.g. Sigma_d inside W^B(d)).
  std::vector<size_t> coset_reps(const std::vector<int>& gens,
                                 const std::vector<size_t>* ambient = nullptr) const;

  // minimal-length representatives of W_lam \ W / W_mu
  std::vector<size_t> double_coset_reps(const std::vector<int>& gens_lam,
                                        const std::vector<int>& gens_mu,
                                        const std::vector<size_t>* ambient = nullptr) const;

  // the full double coset W_lam g W_mu containing g
  std::vector<size_t> double_coset(size_t g, const std::vector<int>& gens_lam,
                                   const std::vector<int>& gens_mu) const;

 private:
  int d_;
  std::vector<SignedPerm> elems_;
  std::map<std::vector<int>, size_t> index_;
  std::vector<int> len_, zeros_;
  std::vector<size_t> rmul_, lmul_;
  std::vector<std::vector<int>> words_;
};

/* Shared per-rank cache; safe for concurrent use. */
const GroupCache& group_cache(int d);

std::vector<SignedPerm> coset_reps(const CompositionB& lam);
std::vector<SignedPerm> coset_reps(const CompositionB& lam, const CompositionB& mu);

}  // namespace qschur
