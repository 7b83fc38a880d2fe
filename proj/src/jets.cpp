#include "seeley/jets.hpp"

#include <stdexcept>

namespace seeley {

Tangent time_unit(int space_dim) { return Tangent{1.0, Vec::Zero(space_dim)}; }

Tangent space_part(const Tangent& w) { return Tangent{0.0, w.X}; }

namespace {

constexpr int kMaxSplitOrder = 16;

std::vector<std::vector<std::vector<IndexSplit>>> build_split_table() {
  std::vector<std::vector<std::vector<IndexSplit>>> table(kMaxSplitOrder + 1);
  for (int ell = 0; ell <= kMaxSplitOrder; ++ell) {
    table[ell].resize(ell + 1);
    for (unsigned mask = 0; mask < (1u << ell); ++mask) {
      IndexSplit s;
      s.ell = ell;
      for (int i = 0; i < ell; ++i) {
        if (mask & (1u << i)) {
          s.z.push_back(i + 1);
        } else {
          s.o.push_back(i + 1);
        }
      }
      s.p = static_cast<int>(s.z.size());
      table[ell][s.p].push_back(std::move(s));
    }
    // Bitmask order is not lexicographic in z; sort to pin the contract.
    for (auto& bucket : table[ell]) {
      std::sort(bucket.begin(), bucket.end(),
                [](const IndexSplit& a, const IndexSplit& b) { return a.z < b.z; });
    }
  }
  return table;
}

}  // namespace

const std::vector<IndexSplit>& enumerate_splits(int ell, int p) {
  if (ell < 0 || ell > kMaxSplitOrder) {
    throw std::invalid_argument("enumerate_splits: order out of range");
  }
  if (p < 0 || p > ell) {
    throw std::invalid_argument("enumerate_splits: requires 0 <= p <= ell");
  }
  static const auto table = build_split_table();
  return table[ell][p];
}

double chi_product(const IndexSplit& split, const TangentTuple& w) {
  if (static_cast<int>(w.size()) != split.ell) {
    throw std::invalid_argument("chi_product: tuple length does not match the split");
  }
  double prod = 1.0;
  for (int idx : split.z) prod *= w[idx - 1].lambda;
  return prod;
}

Vec symmetric_decompose(const JetForm& jet, const Point& at, const TangentTuple& w) {
  const int ell = static_cast<int>(w.size());
  const int m = static_cast<int>(at.x.size());
  Vec acc;
  for (int p = 0; p <= ell; ++p) {
    for (const IndexSplit& split : enumerate_splits(ell, p)) {
      double chi = chi_product(split, w);
      if (chi == 0.0 && acc.size() > 0) continue;
      TangentTuple args;
      args.reserve(ell);
      for (int idx : split.o) args.push_back(space_part(w[idx - 1]));
      for (int i = 0; i < p; ++i) args.push_back(time_unit(m));
      Vec term = jet(at, args);
      if (acc.size() == 0) {
        acc = chi * term;
      } else {
        acc += chi * term;
      }
    }
  }
  return acc;
}

}  // namespace seeley
