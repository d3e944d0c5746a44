#include "herbrand/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

using Coeff = TruncatedLaurentSeries::Coeff;

[[noreturn]] void bad_parameter(const std::string& what) { throw Error(ErrorCode::invalid_parameter, what); }

void check_prime(std::uint32_t p) {
  if (p >= 65536 || !is_prime(p)) bad_parameter("residue characteristic must be a prime below 65536");
}

Coeff pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Coeff>(r);
}

Coeff inv_mod(Coeff a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

void check_same_field(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  if (a.p() != b.p()) bad_parameter("series over different residue characteristics");
}

}  // namespace

TruncatedLaurentSeries::TruncatedLaurentSeries(std::uint32_t p, std::int64_t start, std::vector<Coeff> coefficients,
                                               std::int64_t absolute_precision)
    : p_(p), start_(start), coeffs_(std::move(coefficients)) {
  check_prime(p);
  if (start + static_cast<std::int64_t>(coeffs_.size()) > absolute_precision) {
    bad_parameter("coefficients extend past the absolute precision");
  }
  for (auto& c : coeffs_) c %= p;
  coeffs_.resize(static_cast<std::size_t>(absolute_precision - start), 0);
  normalize(absolute_precision);
}

TruncatedLaurentSeries::TruncatedLaurentSeries(std::uint32_t p, std::int64_t start, std::vector<Coeff> coefficients,
                                               std::int64_t absolute_precision, bool /*reduced*/)
    : p_(p), start_(start), coeffs_(std::move(coefficients)) {
  normalize(absolute_precision);
}

void TruncatedLaurentSeries::normalize(std::int64_t absolute_precision) {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    start_ = absolute_precision;
    return;
  }
  start_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

TruncatedLaurentSeries TruncatedLaurentSeries::zero(std::uint32_t p, std::int64_t absolute_precision) {
  return {p, absolute_precision, {}, absolute_precision};
}

TruncatedLaurentSeries TruncatedLaurentSeries::constant(std::uint32_t p, Coeff c, std::int64_t absolute_precision) {
  return monomial(p, c, 0, absolute_precision);
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(std::uint32_t p, Coeff c, std::int64_t exponent,
                                                        std::int64_t absolute_precision) {
  if (exponent >= absolute_precision) return zero(p, absolute_precision);
  return {p, exponent, {c}, absolute_precision};
}

Coeff TruncatedLaurentSeries::coefficient(std::int64_t k) const {
  if (k >= absolute_precision()) throw Error(ErrorCode::precision, "coefficient beyond the known precision");
  if (k < start_) return 0;
  return coeffs_[static_cast<std::size_t>(k - start_)];
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(std::int64_t absolute_precision) const {
  if (absolute_precision > this->absolute_precision()) {
    throw Error(ErrorCode::precision, "cannot raise the precision of a truncated series");
  }
  if (absolute_precision <= start_) return zero(p_, absolute_precision);
  std::vector<Coeff> c(coeffs_.begin(), coeffs_.begin() + (absolute_precision - start_));
  return {p_, start_, std::move(c), absolute_precision, true};
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = x ? p_ - x : 0;
  return {p_, start_, std::move(c), absolute_precision(), true};
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  check_same_field(a, b);
  const std::int64_t abs = std::min(a.absolute_precision(), b.absolute_precision());
  const std::int64_t start = std::min({a.start_, b.start_, abs});
  std::vector<Coeff> c(static_cast<std::size_t>(abs - start), 0);
  for (std::int64_t k = start; k < abs; ++k) {
    c[k - start] = static_cast<Coeff>((a.coefficient(k) + b.coefficient(k)) % a.p_);
  }
  return {a.p_, start, std::move(c), abs, true};
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) { return a + (-b); }

TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  check_same_field(a, b);
  const std::int64_t start = a.start_ + b.start_;
  const std::int64_t abs = std::min(a.start_ + b.absolute_precision(), b.start_ + a.absolute_precision());
  if (a.is_zero() || b.is_zero()) return TruncatedLaurentSeries::zero(a.p_, abs);
  const std::size_t len = static_cast<std::size_t>(abs - start);
  std::vector<Coeff> c(len, 0);
  const std::uint64_t p = a.p_;
  for (std::size_t k = 0; k < len; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[k - i];
    c[k] = static_cast<Coeff>(acc % p);
  }
  return {a.p_, start, std::move(c), abs, true};
}

TruncatedLaurentSeries TruncatedLaurentSeries::inverse() const {
  if (is_zero()) throw Error(ErrorCode::precision, "cannot invert a series that is zero to precision");
  const std::size_t n = coeffs_.size();
  const std::uint64_t p = p_;
  const Coeff lead_inv = inv_mod(coeffs_[0], p_);
  std::vector<Coeff> d(n, 0);
  d[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += static_cast<std::uint64_t>(coeffs_[i]) * d[k - i];
    acc %= p;
    d[k] = static_cast<Coeff>((p - acc) % p * lead_inv % p);
  }
  return {p_, -start_, std::move(d), -start_ + static_cast<std::int64_t>(n), true};
}

std::string TruncatedLaurentSeries::to_string(std::size_t max_terms) const {
  std::ostringstream out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (!coeffs_[i]) continue;
    if (shown++) out << " + ";
    const std::int64_t k = start_ + static_cast<std::int64_t>(i);
    if (coeffs_[i] != 1 || k == 0) out << coeffs_[i];
    if (k != 0) out << (coeffs_[i] != 1 ? "*" : "") << "t" << (k != 1 ? "^" + std::to_string(k) : "");
  }
  if (!shown) out << "0";
  out << " + O(t^" << absolute_precision() << ")";
  return out.str();
}

TruncatedLaurentSeries compose(const TruncatedLaurentSeries& x, const TruncatedLaurentSeries& y) {
  check_same_field(x, y);
  if (!y.valuation_is_exact() || y.valuation() < 1) {
    throw Error(ErrorCode::domain, "substituted series must have exact valuation at least 1");
  }
  const std::int64_t w = y.valuation();
  const std::int64_t abs = std::min(x.absolute_precision() * w, x.valuation() * w + y.precision());
  const std::uint32_t p = x.p();
  if (x.is_zero()) return TruncatedLaurentSeries::zero(p, abs);
  // y^i for i from v(x) upwards. The constant 1 is exact, so give it more
  // precision than any power needs.
  const std::int64_t slack = (std::abs(x.valuation()) + 1) * w + y.precision();
  TruncatedLaurentSeries power = TruncatedLaurentSeries::constant(p, 1, abs + slack);
  const auto step = x.valuation() < 0 ? y.inverse() : y;
  for (std::int64_t i = 0; i < std::abs(x.valuation()); ++i) power = power * step;
  auto sum = TruncatedLaurentSeries::zero(p, abs);
  for (std::int64_t i = x.valuation(); i < x.absolute_precision() && i * w < abs; ++i) {
    const Coeff a = x.coefficient(i);
    if (a) sum = sum + TruncatedLaurentSeries::constant(p, a, abs + slack) * power;
    power = power * y;
    power = power.truncated(std::min(abs, power.absolute_precision()));
  }
  return sum.truncated(abs);
}

// Powers y^0, y^1, ... of sigma(t), grown on demand.
struct SeriesAutomorphism::Powers {
  std::mutex mutex;
  std::vector<TruncatedLaurentSeries> list;
};

SeriesAutomorphism::SeriesAutomorphism(TruncatedLaurentSeries image_of_t)
    : image_(std::move(image_of_t)), powers_(std::make_shared<Powers>()) {
  if (!image_.valuation_is_exact() || image_.valuation() != 1) {
    bad_parameter("sigma(t) must have valuation exactly 1");
  }
}

SeriesAutomorphism SeriesAutomorphism::identity(std::uint32_t p, std::int64_t precision) {
  return SeriesAutomorphism(TruncatedLaurentSeries::monomial(p, 1, 1, precision + 1));
}

TruncatedLaurentSeries SeriesAutomorphism::apply(const TruncatedLaurentSeries& x) const {
  if (x.p() != p()) bad_parameter("series over different residue characteristics");
  if (x.valuation() < 0) return compose(x, image_);
  const std::int64_t n = image_.precision();
  const std::int64_t abs = std::min(x.absolute_precision(), x.valuation() + n);
  if (x.is_zero()) return TruncatedLaurentSeries::zero(p(), abs);
  const std::int64_t top = abs - 1;
  std::vector<const TruncatedLaurentSeries*> pw;
  {
    std::lock_guard lock(powers_->mutex);
    auto& list = powers_->list;
    if (list.empty()) list.push_back(TruncatedLaurentSeries::constant(p(), 1, n));
    while (static_cast<std::int64_t>(list.size()) <= top) list.push_back(list.back() * image_);
    // Elements of a vector may move while growing, so take addresses only now.
    for (std::int64_t i = 0; i <= top; ++i) pw.push_back(&list[static_cast<std::size_t>(i)]);
  }
  const std::int64_t start = x.valuation();
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(abs - start), 0);
  const std::uint64_t mod = p();
  for (std::int64_t i = start; i < abs; ++i) {
    const Coeff a = x.coefficient(i);
    if (!a) continue;
    const auto& yi = *pw[static_cast<std::size_t>(i)];
    const auto& c = yi.coefficients();
    for (std::int64_t k = yi.valuation(); k < abs; ++k) {
      auto& slot = acc[static_cast<std::size_t>(k - start)];
      slot = (slot + a * c[static_cast<std::size_t>(k - yi.valuation())]) % mod;
    }
  }
  std::vector<Coeff> c(acc.begin(), acc.end());
  return {p(), start, std::move(c), abs};
}

SeriesAutomorphism operator*(const SeriesAutomorphism& a, const SeriesAutomorphism& b) {
  return SeriesAutomorphism(a.apply(b.image_));
}

bool SeriesAutomorphism::is_identity() const {
  return (image_ - TruncatedLaurentSeries::monomial(p(), 1, 1, image_.absolute_precision())).is_zero();
}

std::uint32_t SeriesAutomorphism::order(std::uint32_t limit) const {
  SeriesAutomorphism power = *this;
  for (std::uint32_t k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = *this * power;
  }
  throw Error(ErrorCode::closure, "automorphism order exceeds " + std::to_string(limit));
}

std::uint32_t root_of_unity(std::uint32_t p, std::uint32_t e) {
  check_prime(p);
  if (e == 0 || (p - 1) % e != 0) bad_parameter("e must divide p - 1 for a root of unity in F_p");
  for (Coeff z = 1; z < p; ++z) {
    std::uint32_t k = 1;
    Coeff x = z;
    while (x != 1) {
      x = static_cast<Coeff>(static_cast<std::uint64_t>(x) * z % p);
      ++k;
    }
    if (k == e) return z;
  }
  bad_parameter("no root of unity of the requested order");
}

SeriesAutomorphism scaling_automorphism(std::uint32_t p, std::uint32_t zeta, std::int64_t precision) {
  if (zeta % p == 0) bad_parameter("scaling factor must be nonzero");
  return SeriesAutomorphism(TruncatedLaurentSeries::monomial(p, zeta, 1, precision + 1));
}

namespace {

// binom(a, k) mod p for a p-adic integer a known modulo p^L with p^L > k.
// By Lucas, binom(a, k) = prod binom(a_i, k_i) mod p over base-p digits, and
// only the digits of a below position L meet a nonzero digit of k.
Coeff lucas_binomial(std::uint64_t a, std::uint64_t k, std::uint32_t p) {
  std::uint64_t r = 1;
  while (k) {
    const std::uint64_t ai = a % p, ki = k % p;
    if (ki > ai) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      num = num * ((ai - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    r = r * num % p * inv_mod(static_cast<Coeff>(den), p) % p;
    a /= p;
    k /= p;
  }
  return static_cast<Coeff>(r);
}

std::uint64_t inverse_mod_power(std::int64_t m, std::uint64_t modulus) {
  // Extended Euclid on (m mod modulus, modulus).
  std::int64_t a = static_cast<std::int64_t>(static_cast<std::uint64_t>(m) % modulus);
  std::int64_t b = static_cast<std::int64_t>(modulus), x0 = 1, x1 = 0;
  while (b) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::pair{b, a - q * b};
    std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
  }
  const auto mod = static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(((x0 % mod) + mod) % mod);
}

}  // namespace

SeriesAutomorphism as_automorphism(std::uint32_t p, std::int64_t m, std::int64_t precision) {
  check_prime(p);
  if (m < 1) bad_parameter("m must be positive");
  if (m % p == 0) bad_parameter("gcd(m, p) must be 1");
  if (precision < 1) bad_parameter("precision must be positive");
  // sigma(t) = t sum_k binom(a, k) t^{mk} with a = -1/m in Z_p.
  const std::int64_t kmax = (precision - 1) / m;
  std::uint64_t modulus = p;
  while (modulus <= static_cast<std::uint64_t>(kmax)) modulus *= p;
  const std::uint64_t a = (modulus - inverse_mod_power(m, modulus)) % modulus;
  std::vector<Coeff> c(static_cast<std::size_t>(precision), 0);
  for (std::int64_t k = 0; k <= kmax; ++k) c[static_cast<std::size_t>(k * m)] = lucas_binomial(a, k, p);
  return SeriesAutomorphism(TruncatedLaurentSeries(p, 1, std::move(c), precision + 1));
}

std::int64_t measured_break(const SeriesAutomorphism& sigma) {
  const auto diff = sigma.image_of_t() - TruncatedLaurentSeries::monomial(sigma.p(), 1, 1,
                                                                           sigma.image_of_t().absolute_precision());
  if (diff.is_zero()) bad_parameter("measured_break(): automorphism is the identity to precision");
  return diff.valuation() - 1;
}

std::vector<SeriesAutomorphism> generated_group(std::span<const SeriesAutomorphism> gens, std::uint32_t p,
                                                std::int64_t precision, std::size_t limit) {
  std::vector<SeriesAutomorphism> group{SeriesAutomorphism::identity(p, precision)};
  for (const auto& g : gens) {
    if (g.p() != p || g.precision() != precision) {
      bad_parameter("generators must share the residue characteristic and precision");
    }
  }
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      auto next = g * group[i];
      if (std::find(group.begin(), group.end(), next) != group.end()) continue;
      if (group.size() == limit) {
        throw Error(ErrorCode::closure, "generated group has more than " + std::to_string(limit) + " elements");
      }
      group.push_back(std::move(next));
    }
  }
  return group;
}

namespace {

std::size_t index_in(std::span<const SeriesAutomorphism> group, const SeriesAutomorphism& g) {
  const auto it = std::find(group.begin(), group.end(), g);
  return it == group.end() ? group.size() : static_cast<std::size_t>(it - group.begin());
}

void check_closed(std::span<const SeriesAutomorphism> group) {
  if (group.empty()) throw Error(ErrorCode::closure, "empty automorphism set");
  for (const auto& a : group)
    for (const auto& b : group)
      if (index_in(group, a * b) == group.size()) {
        throw Error(ErrorCode::closure, "automorphism set is not closed under composition");
      }
}

}  // namespace

RamificationProfile profile_from_group(std::span<const SeriesAutomorphism> gens, std::uint32_t p,
                                       std::int64_t e_expected, std::int64_t precision) {
  const auto group = generated_group(gens, p, precision);
  if (static_cast<std::int64_t>(group.size()) != e_expected) {
    throw Error(ErrorCode::invalid_structure, "generated group has order " + std::to_string(group.size()) +
                                                  ", expected " + std::to_string(e_expected));
  }
  if (group.size() == 1) return catalog::unramified(1, p);
  // i(g) = v(g(t) - t), i(id) = infinity.
  std::vector<std::int64_t> level(group.size(), 0);
  std::int64_t top = 0;
  for (std::size_t i = 1; i < group.size(); ++i) {
    level[i] = measured_break(group[i]) + 1;
    top = std::max(top, level[i]);
  }
  bool abelian = true;
  for (const auto& a : group)
    for (const auto& b : group)
      if (!(a * b == b * a)) abelian = false;
  std::vector<FiltrationStep> steps;
  std::int64_t previous = -1;
  for (std::int64_t u = 0; u < top; ++u) {
    std::vector<std::size_t> members{0};
    for (std::size_t i = 1; i < group.size(); ++i)
      if (level[i] >= u + 1) members.push_back(i);
    for (auto a : members)
      for (auto b : members) {
        const auto c = index_in(group, group[a] * group[b]);
        if (std::find(members.begin(), members.end(), c) == members.end()) {
          throw Error(ErrorCode::invalid_structure, "ramification level " + std::to_string(u) + " is not a subgroup");
        }
      }
    const auto order = static_cast<std::int64_t>(members.size());
    if (order == previous) {
      steps.back().last_index = u;
    } else {
      steps.push_back({u, order});
      previous = order;
    }
  }
  return RamificationProfile::make(p, e_expected, 1, steps, abelian);
}

TruncatedLaurentSeries norm(const TruncatedLaurentSeries& x, std::span<const SeriesAutomorphism> group) {
  check_closed(group);
  auto result = group.front().apply(x);
  for (std::size_t i = 1; i < group.size(); ++i) result = result * group[i].apply(x);
  return result;
}

NormProbeReport norm_filtration_probe(std::span<const SeriesAutomorphism> group, const RamificationProfile& profile,
                                      std::int64_t n, std::uint32_t trials, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::domain, "n must be nonnegative");
  check_closed(group);
  const std::int64_t e = profile.inertia_order();
  if (static_cast<std::int64_t>(group.size()) != e * profile.residue_degree()) {
    throw Error(ErrorCode::invalid_structure, "group order does not match the profile degree");
  }
  const std::uint32_t p = group.front().p();
  const std::int64_t precision = group.front().precision();
  const Rational psi_n = build_psi(profile)(Rational(n));
  if (!psi_n.is_integer()) throw Error(ErrorCode::non_integral, "psi(n) is not an integer");
  const auto start = static_cast<std::int64_t>(psi_n.numerator());

  NormProbeReport report;
  report.n = n;
  report.start_valuation = start;
  report.required_valuation = e * n;
  report.trials = trials;
  report.seed = seed;
  report.min_valuation = precision;
  // One coefficient beyond e n is needed to see that the valuation reaches it.
  if (std::max(start, e * n) + e > precision) {
    throw Error(ErrorCode::precision, "precision " + std::to_string(precision) + " cannot decide the norm probe at n = " +
                                          std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coeff> any(0, p - 1), nonzero(1, p - 1);
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    // u = 1 + t^start r with r a unit; for start = 0 any unit u will do.
    std::vector<Coeff> c(static_cast<std::size_t>(precision - start));
    for (auto& x : c) x = any(rng);
    c[0] = nonzero(rng);
    const auto random = TruncatedLaurentSeries(p, start, std::move(c), precision);
    const auto u = start == 0 ? random : TruncatedLaurentSeries::constant(p, 1, precision) + random;
    const auto v = norm(u, group) - TruncatedLaurentSeries::constant(p, 1, precision);
    report.min_valuation = std::min(report.min_valuation, v.valuation());
    if (v.valuation() >= report.required_valuation) ++report.passed;
    if (v.valuation_is_exact() && v.valuation() == report.required_valuation) report.sharp = true;
  }
  return report;
}

bool torus_filtration_check(std::int64_t e, const Rational& r, std::uint32_t samples, std::int64_t precision,
                            std::uint64_t seed, std::uint32_t p) {
  check_prime(p);
  if (e < 1) bad_parameter("e must be positive");
  if (r < Rational(0)) throw Error(ErrorCode::domain, "r must be nonnegative");
  const Rational threshold = Rational(e) * r;
  if (threshold >= Rational(precision)) {
    throw Error(ErrorCode::precision, "e r is not below the precision");
  }
  const std::int64_t integral_threshold = static_cast<std::int64_t>(threshold.ceil());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coeff> any(0, p - 1), nonzero(1, p - 1);
  // Units 1 + t^k (c + ...), k >= 0, with 1 + c != 0 when k = 0.
  const std::int64_t lowest = p == 2 ? 1 : 0;
  std::uniform_int_distribution<std::int64_t> depth(lowest, precision - 1);
  const auto one = TruncatedLaurentSeries::constant(p, 1, precision);
  auto in_e = [&](const TruncatedLaurentSeries& u) { return Rational((u - one).valuation()) >= threshold; };
  auto in_f = [&](const TruncatedLaurentSeries& u) { return Rational((u - one).valuation(), e) >= r; };
  std::vector<TruncatedLaurentSeries> members;
  for (std::uint32_t s = 0; s < samples; ++s) {
    // Cover every depth up to the threshold and just past it before sampling.
    const std::int64_t k = s < static_cast<std::uint32_t>(precision - lowest) ? lowest + s : depth(rng);
    std::vector<Coeff> c(static_cast<std::size_t>(precision - k));
    for (auto& x : c) x = any(rng);
    do {
      c[0] = nonzero(rng);
    } while (k == 0 && c[0] == p - 1);
    const auto u = one + TruncatedLaurentSeries(p, k, std::move(c), precision);
    const bool e_side = in_e(u), f_side = in_f(u);
    if (e_side != f_side) return false;
    if (e_side != ((u - one).valuation() >= integral_threshold)) return false;
    if (e_side) members.push_back(u);
  }
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const auto product = members[i] * members[i + 1];
    if (!in_e(product) || !in_f(product)) return false;
  }
  return true;
}

}  // namespace herbrand
