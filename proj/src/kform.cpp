#include "solvsym/kform.hpp"

namespace solvsym::algebra {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::size_t multi_index_rank(const MultiIndex& idx, int n) {
  // Count k-subsets that precede idx lexicographically.
  std::size_t rank = 0;
  int k = static_cast<int>(idx.size());
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < idx[t]; ++v) rank += binomial(n - v, k - t - 1);
    prev = idx[t];
  }
  return rank;
}

MultiIndex multi_index_unrank(std::size_t rank, int n, int k) {
  MultiIndex idx;
  idx.reserve(k);
  int v = 1;
  for (int t = 0; t < k; ++t) {
    while (true) {
      std::uint64_t block = binomial(n - v, k - t - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    idx.push_back(v);
    ++v;
  }
  return idx;
}

int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex* merged) {
  merged->clear();
  merged->reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      merged->push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a.
      inversions += static_cast<long>(a.size() - i);
      merged->push_back(b[j++]);
    }
  }
  while (i < a.size()) merged->push_back(a[i++]);
  while (j < b.size()) merged->push_back(b[j++]);
  return inversions % 2 == 0 ? 1 : -1;
}

std::string multi_index_label(const MultiIndex& idx) {
  std::string s;
  bool wide = !idx.empty() && idx.back() > 9;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (wide && i > 0) s += "_";
    s += std::to_string(idx[i]);
  }
  return s;
}

}  // namespace solvsym::algebra
