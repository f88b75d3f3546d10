#include "mhorn/combinatorics.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "mhorn/errors.hpp"

namespace mhorn {

namespace {

std::string joinInts(std::span<const int> xs, char open, char close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << close;
  return os.str();
}

}  // namespace

IndexSubset::IndexSubset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  if (n < 0) throw DomainError("ambient size must be nonnegative");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > n)
      throw DomainError("subset element " + std::to_string(elements_[i]) + " outside [1, " +
                        std::to_string(n) + "]");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw DomainError("subset elements must be strictly increasing");
  }
}

IndexSubset IndexSubset::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return IndexSubset(n, std::move(all));
}

bool IndexSubset::contains(int index) const {
  return std::binary_search(elements_.begin(), elements_.end(), index);
}

IndexSubset IndexSubset::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n_ - size()));
  for (int k = 1; k <= n_; ++k)
    if (!contains(k)) rest.push_back(k);
  return IndexSubset(n_, std::move(rest));
}

int IndexSubset::shiftSum() const {
  int total = 0;
  for (std::size_t l = 0; l < elements_.size(); ++l) total += elements_[l] - static_cast<int>(l + 1);
  return total;
}

std::string IndexSubset::toString() const { return joinInts(elements_, '{', '}'); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::containsDiagram(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.at(i) > at(i)) return false;
  return true;
}

std::string Partition::toString() const { return joinInts(parts_, '(', ')'); }

HornTriple::HornTriple(IndexSubset i, IndexSubset j, IndexSubset k)
    : i_(std::move(i)), j_(std::move(j)), k_(std::move(k)) {
  if (i_.ambient() != j_.ambient() || i_.ambient() != k_.ambient())
    throw DimensionError("triple subsets live in different ambient sizes");
  if (i_.size() != j_.size() || i_.size() != k_.size())
    throw DimensionError("triple subsets have different cardinalities");
}

HornTriple HornTriple::emptyTriple(int n) {
  return HornTriple(IndexSubset::empty(n), IndexSubset::empty(n), IndexSubset::empty(n));
}

bool HornTriple::satisfiesDimensionIdentity() const {
  const int r = rank();
  const int n = ambient();
  return i_.shiftSum() + j_.shiftSum() + k_.shiftSum() == 2 * r * (n - r);
}

std::string HornTriple::toString() const {
  return "(" + i_.toString() + "," + j_.toString() + "," + k_.toString() + ")";
}

std::vector<HornTriple> TripleCatalog::ofRank(int r) const {
  std::vector<HornTriple> out;
  for (const auto& t : triples)
    if (t.rank() == r) out.push_back(t);
  return out;
}

IndexSubset bar(const IndexSubset& subset) {
  const int n = subset.ambient();
  std::vector<int> flipped;
  flipped.reserve(static_cast<std::size_t>(subset.size()));
  for (auto it = subset.elements().rbegin(); it != subset.elements().rend(); ++it) flipped.push_back(n + 1 - *it);
  return IndexSubset(n, std::move(flipped));
}

Partition coPartition(const IndexSubset& subset) {
  const int n = subset.ambient();
  const int r = subset.size();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int l = 1; l <= r; ++l) parts[static_cast<std::size_t>(l - 1)] = n - r + l - subset[static_cast<std::size_t>(l - 1)];
  return Partition(std::move(parts));
}

Partition boxComplement(const Partition& partition, int rows, int cols) {
  if (partition.length() > rows || partition.at(0) > cols)
    throw DomainError("partition " + partition.toString() + " does not fit in a " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " box");
  std::vector<int> parts(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) parts[static_cast<std::size_t>(i)] = cols - partition.at(rows - 1 - i);
  return Partition(std::move(parts));
}

namespace {

// Fills the skew shape nu/lam in reverse reading order (rows top to bottom,
// each row right to left), so the reading word is built left to right and the
// lattice condition is checked as each letter is placed.
class LrTableauCounter {
 public:
  LrTableauCounter(const Partition& lam, const Partition& mu, const Partition& nu)
      : lam_(lam), mu_(mu), nu_(nu), counts_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    grid_.resize(static_cast<std::size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r) {
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.at(r)), 0);
      for (int c = nu.at(r) - 1; c >= lam.at(r); --c) cells_.push_back({r, c});
    }
  }

  std::uint64_t count() { return place(0); }

 private:
  struct Cell {
    int row;
    int col;
  };

  std::uint64_t place(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    auto& row = grid_[static_cast<std::size_t>(r)];

    int hi = std::min(mu_.length(), r + 1);  // entries in row r+1 never exceed r+1
    if (c + 1 < nu_.at(r)) hi = std::min(hi, row[static_cast<std::size_t>(c + 1)]);
    int lo = 1;
    if (r > 0 && c >= lam_.at(r - 1)) lo = grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;

    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      auto& cv = counts_[static_cast<std::size_t>(v)];
      if (cv >= mu_.at(v - 1)) continue;
      if (v > 1 && cv >= counts_[static_cast<std::size_t>(v - 1)]) continue;
      ++cv;
      row[static_cast<std::size_t>(c)] = v;
      total += place(idx + 1);
      --cv;
    }
    row[static_cast<std::size_t>(c)] = 0;
    return total;
  }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
};

}  // namespace

std::uint64_t lrCoefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lam.weight() + mu.weight()) return 0;
  if (!nu.containsDiagram(lam)) return 0;
  LrTableauCounter counter(lam, mu, nu);
  return counter.count();
}

std::uint64_t tripleCoefficient(const HornTriple& triple) {
  if (!triple.satisfiesDimensionIdentity()) return 0;
  const int r = triple.rank();
  if (r == 0) return 1;
  const int n = triple.ambient();
  return lrCoefficient(coPartition(triple.I()), coPartition(triple.J()),
                       boxComplement(coPartition(triple.K()), r, n - r));
}

std::vector<IndexSubset> subsetsOfSize(int n, int r) {
  std::vector<IndexSubset> out;
  if (r < 0 || r > n) return out;
  std::vector<int> current(static_cast<std::size_t>(r));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.emplace_back(n, current);
    int pos = r - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - r + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < r; ++q) current[static_cast<std::size_t>(q)] = current[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

namespace {

std::vector<HornTriple> triplesOfRank(int n, int r) {
  std::vector<HornTriple> out;
  const auto subsets = subsetsOfSize(n, r);
  const int target = 2 * r * (n - r);
  for (const auto& i : subsets) {
    for (const auto& j : subsets) {
      const int needed = target - i.shiftSum() - j.shiftSum();
      if (needed < 0) continue;
      for (const auto& k : subsets) {
        if (k.shiftSum() != needed) continue;
        HornTriple t(i, j, k);
        if (tripleCoefficient(t) == 1) out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace

TripleCatalog enumerateCatalog(int n) {
  if (n < 1 || n > kMaxCatalogSize)
    throw CapacityError("catalog size n = " + std::to_string(n) + " outside supported range [1, " +
                        std::to_string(kMaxCatalogSize) + "]");
  TripleCatalog catalog;
  catalog.n = n;
  catalog.triples.push_back(HornTriple::emptyTriple(n));

  // Ranks are independent; results are concatenated in rank order.
  std::vector<std::future<std::vector<HornTriple>>> perRank;
  for (int r = 1; r <= n; ++r) perRank.push_back(std::async(std::launch::async, triplesOfRank, n, r));
  for (auto& f : perRank) {
    auto part = f.get();
    catalog.triples.insert(catalog.triples.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
  }
  return catalog;
}

}  // namespace mhorn
