#pragma once

// Brute-force checks of the generalized induction theorem and the
// well-founded / finite-descent duality on finite binary relations, by
// enumerating every subset of the carrier.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace peano::oracle {

inline constexpr unsigned kMaxCarrier = 16;

// Elements 0..n-1; `below[m]` is the bit set of all y with y R m.
class FiniteRelation {
 public:
  explicit FiniteRelation(unsigned n) : n_(n), below_(n, 0) {
    if (n > kMaxCarrier) throw std::out_of_range("finite relation carrier is capped at 16");
  }

  FiniteRelation(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& pairs) : FiniteRelation(n) {
    for (auto [i, j] : pairs) add(i, j);
  }

  void add(unsigned i, unsigned j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("relation pair outside the carrier");
    below_[j] |= std::uint32_t{1} << i;
  }

  unsigned size() const noexcept { return n_; }
  bool related(unsigned i, unsigned j) const { return (below_[j] >> i) & 1U; }
  std::uint32_t below(unsigned m) const { return below_[m]; }
  std::uint32_t full() const noexcept { return n_ == 32 ? ~0U : (std::uint32_t{1} << n_) - 1; }

  std::vector<std::pair<unsigned, unsigned>> pairs() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        if (related(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  unsigned n_;
  std::vector<std::uint32_t> below_;
};

// Every nonempty subset has an element with nothing of the subset below it.
inline bool fin_well_founded(const FiniteRelation& r) {
  for (std::uint32_t s = 1; s <= r.full(); ++s) {
    bool has_minimal = false;
    for (unsigned m = 0; m < r.size() && !has_minimal; ++m)
      if (((s >> m) & 1U) && (r.below(m) & s) == 0) has_minimal = true;
    if (!has_minimal) return false;
  }
  return true;
}

// For every Y: (for all p, below(p) within Y implies p in Y) implies Y = X.
inline bool fin_induction_principle(const FiniteRelation& r) {
  for (std::uint32_t y = 0; y <= r.full(); ++y) {
    bool hypothesis = true;
    for (unsigned p = 0; p < r.size() && hypothesis; ++p)
      if ((r.below(p) & ~y) == 0 && !((y >> p) & 1U)) hypothesis = false;
    if (hypothesis && y != r.full()) return false;
  }
  return true;
}

// No nonempty Y in which every member has another member below it.
inline bool fin_finite_descent(const FiniteRelation& r) {
  for (std::uint32_t y = 1; y <= r.full(); ++y) {
    bool every_member_descends = true;
    for (unsigned m = 0; m < r.size() && every_member_descends; ++m)
      if (((y >> m) & 1U) && (r.below(m) & y) == 0) every_member_descends = false;
    if (every_member_descends) return false;
  }
  return true;
}

inline bool fin_theorem2_agrees(const FiniteRelation& r) { return fin_well_founded(r) == fin_induction_principle(r); }

inline bool fin_duality_agrees(const FiniteRelation& r) { return fin_well_founded(r) == fin_finite_descent(r); }

// Deterministic: each ordered pair is kept when a 53-bit uniform draw from
// mt19937_64(seed), taken in row-major order, falls below `density`.
inline FiniteRelation gen_relation(unsigned n, double density, std::uint64_t seed) {
  if (n > kMaxCarrier) throw std::out_of_range("gen_relation: n must be at most 16");
  if (!(density >= 0.0 && density <= 1.0)) throw std::out_of_range("gen_relation: density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  FiniteRelation r(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) r.add(i, j);
    }
  return r;
}

// Relation number `code` among all 2^(n*n) relations on n elements.
inline FiniteRelation relation_from_code(unsigned n, std::uint64_t code) {
  FiniteRelation r(n);
  for (unsigned b = 0; b < n * n; ++b)
    if ((code >> b) & 1U) r.add(b / n, b % n);
  return r;
}

struct FuzzSummary {
  std::uint64_t seed = 0;
  unsigned max_n = 0;
  std::size_t checked = 0;
  std::size_t theorem_agree = 0;
  std::size_t duality_agree = 0;
  std::optional<FiniteRelation> first_disagreement;

  bool all_agree() const { return theorem_agree == checked && duality_agree == checked; }
};

inline void tally(FuzzSummary& s, const FiniteRelation& r) {
  ++s.checked;
  const bool t = fin_theorem2_agrees(r);
  const bool d = fin_duality_agrees(r);
  s.theorem_agree += t;
  s.duality_agree += d;
  if ((!t || !d) && !s.first_disagreement) s.first_disagreement = r;
}

// `count` seeded relations; sizes in [1, max_n], densities in [0, 1].
inline FuzzSummary fuzz(unsigned max_n, std::size_t count, std::uint64_t seed) {
  if (max_n == 0 || max_n > kMaxCarrier) throw std::out_of_range("fuzz: n must lie in [1, 16]");
  FuzzSummary s;
  s.seed = seed;
  s.max_n = max_n;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<unsigned>(1 + rng() % max_n);
    const double density = static_cast<double>(rng() % 1001) / 1000.0;
    tally(s, gen_relation(n, density, rng()));
  }
  return s;
}

// Every relation on n <= max_n elements.
inline FuzzSummary exhaustive(unsigned max_n) {
  if (max_n > 4) throw std::out_of_range("exhaustive: n must be at most 4");
  FuzzSummary s;
  s.max_n = max_n;
  for (unsigned n = 0; n <= max_n; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) tally(s, relation_from_code(n, code));
  }
  return s;
}

// `count` relations on exactly n elements drawn uniformly from all of them.
inline FuzzSummary sampled(unsigned n, std::size_t count, std::uint64_t seed) {
  if (n > 5) throw std::out_of_range("sampled: n must be at most 5");
  FuzzSummary s;
  s.seed = seed;
  s.max_n = n;
  std::mt19937_64 rng(seed);
  const unsigned bits = n * n;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t code = bits == 64 ? rng() : rng() & ((std::uint64_t{1} << bits) - 1);
    tally(s, relation_from_code(n, code));
  }
  return s;
}

}  // namespace peano::oracle
