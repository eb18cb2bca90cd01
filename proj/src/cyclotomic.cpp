#include "fh/cyclotomic.hpp"

#include "fh/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace fh {

namespace {

constexpr std::array<char, 8> kMagic{'F', 'H', 'C', 'Y', 'C', 'L', 'O', '1'};

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::vector<unsigned char> bytes) : bytes_(std::move(bytes)) {}

  bool u64(std::uint64_t& v) {
    if (bytes_.size() - pos_ < 8) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{bytes_[pos_ + i]} << (8 * i);
    pos_ += 8;
    return true;
  }
  bool raw(std::size_t n, const unsigned char*& p) {
    if (bytes_.size() - pos_ < n) return false;
    p = bytes_.data() + pos_;
    pos_ += n;
    return true;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::vector<unsigned char> bytes_;
  std::size_t pos_ = 0;
};

IntPoly compute(CyclotomicTable& table, std::uint64_t s) {
  // x^s - 1
  std::vector<BigInt> c(s + 1);
  c[0] = -1;
  c[s] = 1;
  IntPoly acc(std::move(c));
  for (std::uint64_t d : divisors(s)) {
    if (d == s) break;
    auto [q, r] = divide_monic(acc, table.get(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    acc = std::move(q);
  }
  return acc;
}

bool plausible(std::uint64_t s, const IntPoly& p) {
  if (s == 0 || !p.is_monic()) return false;
  if (static_cast<std::uint64_t>(p.degree()) != euler_totient(s)) return false;
  return p.evaluate(1) == BigInt(cyclotomic_at_one(s));
}

}  // namespace

const IntPoly* CyclotomicTable::find(std::uint64_t s) const {
  std::shared_lock lock(mu_);
  auto it = table_.find(s);
  return it == table_.end() ? nullptr : it->second.get();
}

const IntPoly& CyclotomicTable::insert(std::uint64_t s, IntPoly poly) {
  std::unique_lock lock(mu_);
  auto [it, inserted] = table_.try_emplace(s, nullptr);
  if (inserted) it->second = std::make_unique<const IntPoly>(std::move(poly));
  return *it->second;
}

const IntPoly& CyclotomicTable::get(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("cyclotomic: s must be positive");
  if (const IntPoly* hit = find(s)) return *hit;
  // Computed outside the lock: compute() recurses into the table.
  return insert(s, compute(*this, s));
}

std::size_t CyclotomicTable::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

void CyclotomicTable::save(const std::filesystem::path& file) const {
  std::vector<unsigned char> out(kMagic.begin(), kMagic.end());
  {
    std::shared_lock lock(mu_);
    std::vector<std::uint64_t> keys;
    keys.reserve(table_.size());
    for (const auto& [s, _] : table_) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    put_u64(out, keys.size());
    for (std::uint64_t s : keys) {
      const auto& coeffs = table_.at(s)->coefficients();
      put_u64(out, s);
      put_u64(out, coeffs.size());
      for (const BigInt& c : coeffs) {
        std::vector<unsigned char> mag;
        if (c != 0) export_bits(BigInt(abs(c)), std::back_inserter(mag), 8);
        out.push_back(c < 0 ? 1 : 0);
        put_u64(out, mag.size());
        out.insert(out.end(), mag.begin(), mag.end());
      }
    }
  }
  const auto tmp = std::filesystem::path(file) += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!os) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw std::runtime_error("cannot replace " + file.string() + ": " + ec.message());
}

bool CyclotomicTable::load(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return false;
  Reader in(std::vector<unsigned char>(std::istreambuf_iterator<char>(is), {}));

  const unsigned char* magic = nullptr;
  if (!in.raw(kMagic.size(), magic) || std::memcmp(magic, kMagic.data(), kMagic.size()) != 0) return false;
  std::uint64_t count = 0;
  if (!in.u64(count)) return false;

  std::vector<std::pair<std::uint64_t, IntPoly>> entries;
  for (std::uint64_t e = 0; e < count; ++e) {
    std::uint64_t s = 0, n = 0;
    if (!in.u64(s) || !in.u64(n) || n > (1u << 24)) return false;
    std::vector<BigInt> coeffs(n);
    for (auto& c : coeffs) {
      const unsigned char* sign = nullptr;
      const unsigned char* bytes = nullptr;
      std::uint64_t len = 0;
      if (!in.raw(1, sign) || !in.u64(len) || !in.raw(len, bytes)) return false;
      if (len > 0) import_bits(c, bytes, bytes + len, 8);
      if (*sign == 1) c = -c;
    }
    IntPoly p(std::move(coeffs));
    if (!plausible(s, p)) return false;
    entries.emplace_back(s, std::move(p));
  }
  if (!in.done()) return false;
  for (auto& [s, p] : entries) insert(s, std::move(p));
  return true;
}

CyclotomicTable& cyclotomic_table() {
  static CyclotomicTable table;
  return table;
}

const IntPoly& cyclotomic(std::uint64_t s) { return cyclotomic_table().get(s); }

}  // namespace fh
