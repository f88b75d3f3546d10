#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mhorn {

/// Largest ambient size for which Horn triple catalogs are enumerated.
inline constexpr int kMaxCatalogSize = 8;

/// A subset of {1, ..., n}, stored as strictly increasing 1-based indices.
class IndexSubset {
 public:
  IndexSubset() = default;
  /// Throws DomainError unless elements are strictly increasing and lie in [1, n].
  IndexSubset(int n, std::vector<int> elements);

  static IndexSubset empty(int n) { return IndexSubset(n, {}); }
  static IndexSubset full(int n);

  int ambient() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool isEmpty() const { return elements_.empty(); }
  std::span<const int> elements() const { return elements_; }
  int operator[](std::size_t pos) const { return elements_[pos]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(int index) const;
  /// Complement in {1, ..., n}.
  IndexSubset complement() const;
  /// Sum over l of (s(l) - l).
  int shiftSum() const;

  std::string toString() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  int n_ = 0;
  std::vector<int> elements_;
};

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError on a negative or increasing part.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// Part i (0-based), zero past the end.
  int at(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool containsDiagram(const Partition& other) const;

  std::string toString() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A triple (I, J, K) of equal-cardinality subsets of {1, ..., n}.
class HornTriple {
 public:
  HornTriple() = default;
  /// Throws DimensionError if ambient sizes or cardinalities differ.
  HornTriple(IndexSubset i, IndexSubset j, IndexSubset k);

  static HornTriple emptyTriple(int n);

  const IndexSubset& I() const { return i_; }
  const IndexSubset& J() const { return j_; }
  const IndexSubset& K() const { return k_; }
  int ambient() const { return i_.ambient(); }
  int rank() const { return i_.size(); }

  /// sum_l (i(l)-l) + (j(l)-l) + (k(l)-l) == 2 r (n - r), in exact integer arithmetic.
  bool satisfiesDimensionIdentity() const;

  std::string toString() const;

  friend bool operator==(const HornTriple&, const HornTriple&) = default;
  friend auto operator<=>(const HornTriple&, const HornTriple&) = default;

 private:
  IndexSubset i_, j_, k_;
};

/// All Horn triples for one ambient size, ordered by r, then I, J, K.
struct TripleCatalog {
  int n = 0;
  std::vector<HornTriple> triples;

  std::size_t size() const { return triples.size(); }
  std::vector<HornTriple> ofRank(int r) const;
};

/// {n + 1 - k : k in K}.
IndexSubset bar(const IndexSubset& subset);

/// Schubert-condition partition of an r-subset: part l is (n - r + l - s(l)).
Partition coPartition(const IndexSubset& subset);

/// Complement of a partition inside the rows x cols box, rotated by 180 degrees.
/// Throws DomainError if the partition does not fit.
Partition boxComplement(const Partition& partition, int rows, int cols);

/// Littlewood-Richardson coefficient c^nu_{lam,mu}: the number of LR skew tableaux of
/// shape nu/lam and content mu.
std::uint64_t lrCoefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// Triple intersection number of the Schubert classes of I, J, K in Gr(r, n).
/// Zero whenever the dimension identity fails; one for the empty triple.
std::uint64_t tripleCoefficient(const HornTriple& triple);

/// Every triple with tripleCoefficient == 1 for r = 1..n, plus (empty, empty, empty) first.
/// Throws CapacityError unless 1 <= n <= kMaxCatalogSize.
TripleCatalog enumerateCatalog(int n);

/// All r-subsets of {1, ..., n} in lexicographic order.
std::vector<IndexSubset> subsetsOfSize(int n, int r);

}  // namespace mhorn
