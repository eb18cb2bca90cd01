#include "fh/hadamard.hpp"

#include "fh/cyclotomic.hpp"
#include "fh/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fh {

namespace {

void require_square(const ResidueSet& rows, const ResidueSet& cols, std::string_view op) {
  if (rows.modulus() != cols.modulus())
    throw std::invalid_argument(std::string(op) + ": row and column moduli differ");
  if (rows.size() != cols.size())
    throw std::invalid_argument(std::string(op) + ": |J| = " + std::to_string(rows.size()) +
                                " differs from |K| = " + std::to_string(cols.size()));
}

void require_size(const ResidueSet& rows, const ResidueSet& cols, std::size_t n, std::string_view op) {
  require_square(rows, cols, op);
  if (rows.size() != n)
    throw std::invalid_argument(std::string(op) + ": needs |J| = |K| = " + std::to_string(n) + ", got " +
                                std::to_string(rows.size()));
}

/// Coefficients of X(z) mod (z^s - 1).
IntPoly folded_set_polynomial(std::uint64_t s, std::span<const std::uint64_t> xs) {
  std::vector<BigInt> c(s);
  for (std::uint64_t x : xs) c[x % s] += 1;
  return IntPoly(std::move(c));
}

/// Balance condition shared by the general 2x2 and 3x3 characterizations:
/// nu_r min and max sums equal nu_r(m) + 1 and, for every other prime p | m,
/// the nu_p max sum stays within nu_p(m).
std::vector<PadicViolation> padic_balance(std::uint64_t pivot, std::uint64_t m, const PrimitiveSet& pj,
                                          const PrimitiveSet& pk) {
  const auto a = pj.without_one();
  const auto b = pk.without_one();
  std::vector<PadicViolation> out;

  const unsigned target = (m % pivot == 0 ? p_adic_order(pivot, static_cast<std::int64_t>(m)) : 0) + 1;
  const auto ea = nu_extremes(pivot, std::span<const std::uint64_t>(a));
  const auto eb = nu_extremes(pivot, std::span<const std::uint64_t>(b));
  if (ea.min + eb.min != target) out.push_back({pivot, PadicViolation::Kind::MinSum, ea.min + eb.min, target});
  if (ea.max + eb.max != target) out.push_back({pivot, PadicViolation::Kind::MaxSum, ea.max + eb.max, target});

  for (const auto& [p, e] : factorize(m)) {
    if (p == pivot) continue;
    const unsigned sum = nu_extremes(p, std::span<const std::uint64_t>(a)).max +
                         nu_extremes(p, std::span<const std::uint64_t>(b)).max;
    if (sum > e) out.push_back({p, PadicViolation::Kind::MaxBound, sum, e});
  }
  return out;
}

SubmatrixVerdict balance_verdict(Rule rule, std::uint64_t pivot, const ResidueSet& rows, const ResidueSet& cols) {
  auto violations = padic_balance(pivot, rows.modulus(), primitive_set(rows), primitive_set(cols));
  SubmatrixVerdict v{violations.empty() ? Decision::Hadamard : Decision::NotHadamard, rule, {}};
  v.witness.padic = std::move(violations);
  return v;
}

}  // namespace

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Hadamard: return "Hadamard";
    case Decision::NotHadamard: return "NotHadamard";
    case Decision::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(Screening s) { return s == Screening::RuledOut ? "RuledOut" : "Inconclusive"; }

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Exact: return "exact";
    case Rule::Numeric: return "numeric";
    case Rule::Complement: return "complement";
    case Rule::PowerOfTwo2x2: return "2by2pow2";
    case Rule::TwicePrime2x2: return "2by2twiceprime";
    case Rule::General2x2: return "gen2by2";
    case Rule::General3x3: return "3by3";
  }
  return "?";
}

std::string PadicViolation::describe() const {
  std::ostringstream os;
  os << "nu_" << prime << (kind == Kind::MinSum ? " min" : " max") << " sum " << sum
     << (kind == Kind::MaxBound ? " > " : " != ") << bound;
  return os.str();
}

std::string Witness::describe() const {
  std::vector<std::string> parts;
  if (failing_order)
    parts.push_back("Phi_" + std::to_string(*failing_order) + " does not divide K(z)");
  for (const auto& v : padic) parts.push_back(v.describe());
  if (deviation) {
    std::ostringstream os;
    os << "max |H*H - nI| = " << *deviation;
    parts.push_back(os.str());
  }
  if (note) parts.push_back(*note);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

SubmatrixSpec::SubmatrixSpec(ResidueSet rows, ResidueSet cols) : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.modulus() != cols_.modulus()) throw std::invalid_argument("submatrix: row and column moduli differ");
}

IntPoly set_polynomial(const ResidueSet& x) {
  std::vector<BigInt> c(x.elements().back() + 1);
  for (std::uint64_t e : x.elements()) c[e] = 1;
  return IntPoly(std::move(c));
}

bool cyclotomic_divides_set(std::uint64_t s, const ResidueSet& x) {
  if (s == 0 || x.modulus() % s != 0)
    throw std::invalid_argument("cyclotomic_divides_set: " + std::to_string(s) + " does not divide the modulus");
  // Phi_s | z^s - 1, so reducing exponents mod s preserves divisibility.
  return poly_divides(cyclotomic(s), folded_set_polynomial(s, x.elements()));
}

bool rows_orthogonal(const ResidueSet& rows, const ResidueSet& cols) {
  if (rows.modulus() != cols.modulus()) throw std::invalid_argument("rows_orthogonal: moduli differ");
  for (std::uint64_t s : primitive_set(rows).without_one())
    if (!cyclotomic_divides_set(s, cols)) return false;
  return true;
}

SubmatrixVerdict is_hadamard_exact(const SubmatrixSpec& spec) {
  require_square(spec.rows(), spec.cols(), "is_hadamard_exact");
  for (std::uint64_t s : primitive_set(spec.rows()).without_one()) {
    if (!cyclotomic_divides_set(s, spec.cols())) {
      SubmatrixVerdict v{Decision::NotHadamard, Rule::Exact, {}};
      v.witness.failing_order = s;
      return v;
    }
  }
  return {Decision::Hadamard, Rule::Exact, {}};
}

SubmatrixVerdict is_hadamard_numeric(const SubmatrixSpec& spec, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("is_hadamard_numeric: tolerance must be positive");
  require_square(spec.rows(), spec.cols(), "is_hadamard_numeric");
  const std::uint64_t m = spec.m();
  const auto rows = spec.rows().elements();
  const auto cols = spec.cols().elements();
  const std::size_t n = rows.size();

  std::vector<std::complex<double>> h(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(rows[a]) * cols[b]) % m);
      h[a * n + b] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
    }

  double dev = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> acc = 0;
      for (std::size_t r = 0; r < n; ++r) acc += std::conj(h[r * n + i]) * h[r * n + j];
      if (i == j) acc -= static_cast<double>(n);
      dev = std::max(dev, std::abs(acc));
    }

  SubmatrixVerdict v{dev < tol ? Decision::Hadamard : Decision::NotHadamard, Rule::Numeric, {}};
  v.witness.deviation = dev;
  return v;
}

ScreeningResult necessary_c_divides(const ResidueSet& rows, std::size_t n) {
  if (rows.size() != n)
    throw std::invalid_argument("necessary_c_divides: |J| = " + std::to_string(rows.size()) + " but n = " +
                                std::to_string(n));
  const std::uint64_t c = c_m(rows);
  if (n % c != 0)
    return {Screening::RuledOut,
            "C = " + std::to_string(c) + " does not divide |J|=" + std::to_string(n) + ": ruled out for n=" +
                std::to_string(n)};
  return {Screening::Inconclusive, "C = " + std::to_string(c) + " divides |J|=" + std::to_string(n)};
}

ScreeningResult necessary_prime_powers(const ResidueSet& rows) {
  const std::uint64_t m = rows.modulus();
  const PrimitiveSet p = primitive_set(rows);
  for (const auto& [prime, e] : factorize(m)) {
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      if (!p.contains(pk))
        return {Screening::Inconclusive, "P lacks prime power " + std::to_string(pk)};
    }
  }
  for (std::uint64_t d : divisors(m))
    if (!p.contains(d))
      return {Screening::RuledOut, "P contains every prime-power divisor of m but lacks the factor " +
                                       std::to_string(d) + ": ruled out for every K"};
  return {Screening::Inconclusive, "P contains every divisor of m"};
}

SubmatrixVerdict sufficient_complement(const ResidueSet& rows, const ResidueSet& cols,
                                       const std::vector<std::uint64_t>& complement) {
  require_square(rows, cols, "sufficient_complement");
  const std::uint64_t m = cols.modulus();
  if (cols.size() * complement.size() != m)
    throw std::invalid_argument("sufficient_complement: K + A is not a complete residue system (|K||A| != m)");
  std::vector<bool> hit(m, false);
  for (std::uint64_t a : complement)
    for (std::uint64_t k : cols.elements()) {
      const std::uint64_t r = (k + a % m) % m;
      if (hit[r])
        throw std::invalid_argument("sufficient_complement: K + A hits residue " + std::to_string(r) + " twice");
      hit[r] = true;
    }

  for (std::uint64_t s : primitive_set(rows).without_one()) {
    if (poly_divides(cyclotomic(s), folded_set_polynomial(s, complement))) {
      SubmatrixVerdict v{Decision::Inconclusive, Rule::Complement, {}};
      v.witness.note = "Phi_" + std::to_string(s) + " divides A(z)";
      return v;
    }
  }
  return {Decision::Hadamard, Rule::Complement, {}};
}

namespace {

bool cover(std::uint64_t m, std::span<const std::uint64_t> k, std::vector<bool>& covered, std::size_t remaining,
           std::vector<std::uint64_t>& chosen) {
  if (remaining == 0) return true;
  const auto first = static_cast<std::uint64_t>(std::find(covered.begin(), covered.end(), false) - covered.begin());
  std::vector<std::uint64_t> shifts;
  for (std::uint64_t x : k) shifts.push_back((first + m - x) % m);
  std::sort(shifts.begin(), shifts.end());
  for (std::uint64_t a : shifts) {
    bool fits = true;
    for (std::uint64_t x : k) fits = fits && !covered[(x + a) % m];
    if (!fits) continue;
    for (std::uint64_t x : k) covered[(x + a) % m] = true;
    chosen.push_back(a);
    if (cover(m, k, covered, remaining - k.size(), chosen)) return true;
    chosen.pop_back();
    for (std::uint64_t x : k) covered[(x + a) % m] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> find_complement(const ResidueSet& cols) {
  const std::uint64_t m = cols.modulus();
  if (m % cols.size() != 0) return std::nullopt;
  std::vector<bool> covered(m, false);
  std::vector<std::uint64_t> chosen;
  if (!cover(m, cols.elements(), covered, m, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SubmatrixVerdict test_2x2_power_of_two(unsigned q, const ResidueSet& rows, const ResidueSet& cols) {
  require_size(rows, cols, 2, "test_2x2_power_of_two");
  if (q == 0 || q >= 63 || rows.modulus() != (std::uint64_t{1} << q))
    throw std::invalid_argument("test_2x2_power_of_two: modulus " + std::to_string(rows.modulus()) + " is not 2^" +
                                std::to_string(q));
  // P = {1, 2^a} with 1 <= a <= q; alpha = q - a.
  const int a = log2_exact(primitive_set(rows).elements()[1]);
  const int b = log2_exact(primitive_set(cols).elements()[1]);
  const int alpha = static_cast<int>(q) - a;
  const int beta = static_cast<int>(q) - b;
  if (alpha + beta == static_cast<int>(q) - 1) return {Decision::Hadamard, Rule::PowerOfTwo2x2, {}};
  SubmatrixVerdict v{Decision::NotHadamard, Rule::PowerOfTwo2x2, {}};
  v.witness.note = "alpha + beta = " + std::to_string(alpha + beta) + " != q - 1 = " + std::to_string(q - 1);
  return v;
}

SubmatrixVerdict test_2x2_twice_prime(std::uint64_t p, const ResidueSet& rows, const ResidueSet& cols) {
  require_size(rows, cols, 2, "test_2x2_twice_prime");
  if (p == 2 || !is_prime(p) || rows.modulus() != 2 * p)
    throw std::invalid_argument("test_2x2_twice_prime: modulus " + std::to_string(rows.modulus()) +
                                " is not 2p for the odd prime p = " + std::to_string(p));
  const std::uint64_t dj = primitive_set(rows).elements()[1];
  const std::uint64_t dk = primitive_set(cols).elements()[1];
  const bool ok = (dj == 2 && (dk == 2 || dk == 2 * p)) || (dj == 2 * p && dk == 2);
  if (ok) return {Decision::Hadamard, Rule::TwicePrime2x2, {}};
  SubmatrixVerdict v{Decision::NotHadamard, Rule::TwicePrime2x2, {}};
  v.witness.note = "({1," + std::to_string(dj) + "},{1," + std::to_string(dk) + "}) is not an admitted pair";
  return v;
}

SubmatrixVerdict test_2x2_general(const ResidueSet& rows, const ResidueSet& cols) {
  require_size(rows, cols, 2, "test_2x2_general");
  return balance_verdict(Rule::General2x2, 2, rows, cols);
}

SubmatrixVerdict test_3x3(const ResidueSet& rows, const ResidueSet& cols) {
  require_size(rows, cols, 3, "test_3x3");
  return balance_verdict(Rule::General3x3, 3, rows, cols);
}

SubmatrixVerdict is_hadamard(const SubmatrixSpec& spec) {
  require_square(spec.rows(), spec.cols(), "is_hadamard");
  switch (spec.rows().size()) {
    case 2: return test_2x2_general(spec.rows(), spec.cols());
    case 3: return test_3x3(spec.rows(), spec.cols());
    default: return is_hadamard_exact(spec);
  }
}

}  // namespace fh
