#include "fh/primsets.hpp"

#include "fh/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace fh {

namespace {

template <typename Range>
std::string braced(const Range& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto v : r) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

ResidueSet::ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ == 0) throw std::invalid_argument("residue set: modulus must be positive");
  if (elements_.empty()) throw std::invalid_argument("residue set: must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("residue set: duplicate element");
  if (elements_.back() >= modulus_)
    throw std::invalid_argument("residue set: element " + std::to_string(elements_.back()) + " out of range [0," +
                                std::to_string(modulus_) + ")");
}

ResidueSet ResidueSet::full(std::uint64_t modulus) {
  std::vector<std::uint64_t> all(modulus);
  for (std::uint64_t i = 0; i < modulus; ++i) all[i] = i;
  return ResidueSet(modulus, std::move(all));
}

bool ResidueSet::contains(std::uint64_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::string ResidueSet::to_string() const { return braced(elements_); }

PrimitiveSet::PrimitiveSet(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("primitive set: duplicate element");
  if (!elements_.empty() && elements_.front() == 0) throw std::invalid_argument("primitive set: element 0");
  if (elements_.empty() || elements_.front() != 1) throw std::invalid_argument("primitive set: must contain 1");
}

bool PrimitiveSet::contains(std::uint64_t s) const { return std::binary_search(elements_.begin(), elements_.end(), s); }

std::vector<std::uint64_t> PrimitiveSet::without_one() const { return {elements_.begin() + 1, elements_.end()}; }

std::string PrimitiveSet::to_string() const { return braced(elements_); }

std::vector<std::int64_t> difference_set(const ResidueSet& x) {
  std::vector<std::int64_t> d;
  const auto e = x.elements();
  d.reserve(e.size() * e.size());
  for (std::uint64_t a : e)
    for (std::uint64_t b : e) d.push_back(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b));
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<std::int64_t> nonzero_differences(const ResidueSet& x) {
  auto d = difference_set(x);
  d.erase(std::remove(d.begin(), d.end(), 0), d.end());
  return d;
}

PrimitiveSet primitive_set(const ResidueSet& x) {
  const std::uint64_t m = x.modulus();
  const auto e = x.elements();
  std::vector<std::uint64_t> orders{1};
  // D(X) is symmetric, so positive differences suffice.
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) orders.push_back(m / std::gcd(m, e[j] - e[i]));
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return PrimitiveSet(std::move(orders));
}

std::uint64_t c_value(const PrimitiveSet& p) {
  std::uint64_t c = 1;
  for (std::uint64_t s : p.without_one()) c *= cyclotomic_at_one(s);
  return c;
}

std::uint64_t c_m(const ResidueSet& x) { return c_value(primitive_set(x)); }

ResidueSet shift(const ResidueSet& x, std::int64_t v) {
  const auto m = static_cast<std::int64_t>(x.modulus());
  const std::int64_t r = ((v % m) + m) % m;
  std::vector<std::uint64_t> out;
  out.reserve(x.size());
  for (std::uint64_t a : x.elements()) out.push_back((a + static_cast<std::uint64_t>(r)) % x.modulus());
  return ResidueSet(x.modulus(), std::move(out));
}

ResidueSet scale(const ResidueSet& x, std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("scale: factor must be positive");
  std::vector<std::uint64_t> out;
  out.reserve(x.size());
  for (std::uint64_t a : x.elements()) out.push_back(a * v);
  return ResidueSet(x.modulus() * v, std::move(out));
}

ResidueSet normalize(const ResidueSet& x) {
  // A shift contains 0 iff it moves some element to 0, so there are |X|
  // candidates.
  std::optional<ResidueSet> best;
  for (std::uint64_t a : x.elements()) {
    ResidueSet cand = shift(x, -static_cast<std::int64_t>(a));
    // Same modulus, so <=> is the lexicographic order on elements.
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

}  // namespace fh
