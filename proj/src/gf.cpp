#include "wada/gf.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wada/error.hpp"
#include "wada/numeric.hpp"

namespace wada::gf {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

// Remainder of a by the monic polynomial b, coefficients low-to-high.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        const std::uint64_t sub = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool FieldElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) throw Error(ErrorKind::InvalidArgument, "is_irreducible expects a monic polynomial of degree >= 1");
  const std::size_t deg = poly.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    const std::uint64_t count = checked_pow(p, k);
    std::vector<std::uint32_t> divisor(k + 1, 0);
    divisor[k] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      const auto rem = poly_rem(poly, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

FieldCtx FieldCtx::build(std::uint32_t p, std::uint32_t d, const FieldConfig& config) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t size = 0;
  try {
    size = checked_pow(p, d);
  } catch (const Error&) {
    throw Error(ErrorKind::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(d) + ") exceeds 64 bits");
  }
  if (size > config.max_elements || size - 1 > kNoLog)
    throw Error(ErrorKind::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(d) + ") has " + std::to_string(size) +
                                              " elements, above the configured maximum " + std::to_string(config.max_elements));

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.d_ = d;
  ctx.size_ = size;
  const std::uint64_t order = size - 1;
  const auto factors = prime_factors(order);

  auto is_primitive = [&](const FieldElement& a) {
    if (a.is_zero() || ctx.pow(a, order) != ctx.one()) return false;
    return std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) { return ctx.pow(a, order / r) != ctx.one(); });
  };
  auto x_class = [&]() {
    auto r = poly_rem({0, 1}, ctx.modulus_, p);
    r.resize(d, 0);
    return FieldElement(std::move(r));
  };

  // Lexicographic over the lower coefficients, highest degree most significant.
  std::vector<std::uint32_t> first_irreducible;
  for (std::uint64_t code = 0; code < size; ++code) {
    std::vector<std::uint32_t> poly(d + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    poly[d] = 1;
    if (!is_irreducible(poly, p)) continue;
    if (first_irreducible.empty()) first_irreducible = poly;
    ctx.modulus_ = poly;
    const FieldElement x = x_class();
    if (is_primitive(x)) {
      ctx.generator_ = x;
      ctx.generator_is_x_ = true;
      break;
    }
  }
  if (!ctx.generator_is_x_) {
    if (first_irreducible.empty()) throw Error(ErrorKind::Internal, "no irreducible polynomial found");
    ctx.modulus_ = first_irreducible;
    for (std::uint64_t code = 1; code < size; ++code) {
      const FieldElement cand = ctx.decode(code);
      if (is_primitive(cand)) {
        ctx.generator_ = cand;
        break;
      }
    }
    if (ctx.generator_.coeffs().empty()) throw Error(ErrorKind::Internal, "no primitive element found");
  }

  ctx.log_table_.assign(size, kNoLog);
  FieldElement cur = ctx.one();
  for (std::uint64_t k = 0; k < order; ++k) {
    auto& slot = ctx.log_table_[ctx.encode(cur)];
    if (slot != kNoLog) throw Error(ErrorKind::Internal, "generator order is smaller than p^d - 1");
    slot = static_cast<std::uint32_t>(k);
    cur = ctx.generator_is_x_ ? ctx.mul_by_generator(cur) : ctx.mul(cur, ctx.generator_);
  }
  if (cur != ctx.one()) throw Error(ErrorKind::Internal, "generator power cycle did not close");
  return ctx;
}

FieldElement FieldCtx::zero() const { return FieldElement(std::vector<std::uint32_t>(d_, 0)); }

FieldElement FieldCtx::one() const {
  std::vector<std::uint32_t> c(d_, 0);
  c[0] = 1 % p_;
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::element(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() != d_) throw Error(ErrorKind::InvalidArgument, "element needs exactly d coordinates");
  for (auto c : coeffs)
    if (c >= p_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range [0, p)");
  return FieldElement(std::move(coeffs));
}

FieldElement FieldCtx::decode(std::uint64_t code) const {
  if (code >= size_) throw Error(ErrorKind::InvalidArgument, "element code out of range");
  std::vector<std::uint32_t> c(d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return FieldElement(std::move(c));
}

std::uint64_t FieldCtx::encode(const FieldElement& a) const {
  std::uint64_t code = 0;
  for (std::uint32_t i = d_; i-- > 0;) code = code * p_ + a[i];
  return code;
}

void FieldCtx::check(const FieldElement& a) const {
  if (a.coeffs().size() != d_) throw Error(ErrorKind::InvalidArgument, "element does not belong to this field");
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<std::uint32_t> c(d_);
  for (std::uint32_t i = 0; i < d_; ++i) c[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + b[i]) % p_);
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  check(a);
  std::vector<std::uint32_t> c(d_);
  for (std::uint32_t i = 0; i < d_; ++i) c[i] = a[i] == 0 ? 0 : p_ - a[i];
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldCtx::scale(const FieldElement& a, std::uint32_t s) const {
  check(a);
  std::vector<std::uint32_t> c(d_);
  for (std::uint32_t i = 0; i < d_; ++i) c[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * (s % p_) % p_);
  return FieldElement(std::move(c));
}

void FieldCtx::reduce(std::vector<std::uint32_t>& wide) const {
  wide = poly_rem(std::move(wide), modulus_, p_);
  wide.resize(d_, 0);
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<std::uint64_t> acc(2 * d_ - 1, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < d_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
  }
  std::vector<std::uint32_t> wide(acc.begin(), acc.end());
  reduce(wide);
  return FieldElement(std::move(wide));
}

FieldElement FieldCtx::mul_by_generator(const FieldElement& a) const {
  if (!generator_is_x_) return mul(a, generator_);
  check(a);
  if (d_ == 1) return mul(a, generator_);
  // Shift up one degree, then fold x^d back through the monic modulus.
  const std::uint64_t top = a[d_ - 1];
  std::vector<std::uint32_t> c(d_);
  c[0] = 0;
  for (std::uint32_t i = 1; i < d_; ++i) c[i] = a[i - 1];
  if (top != 0)
    for (std::uint32_t i = 0; i < d_; ++i) c[i] = static_cast<std::uint32_t>((c[i] + p_ - top * modulus_[i] % p_) % p_);
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::pow(const FieldElement& a, std::uint64_t k) const {
  check(a);
  if (a.is_zero()) return k == 0 ? one() : zero();
  k %= group_order();
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

FieldElement FieldCtx::frobenius(const FieldElement& a, std::uint32_t u) const {
  if (u >= d_) throw Error(ErrorKind::InvalidArgument, "frobenius power must lie in [0, d)");
  FieldElement r = a;
  for (std::uint32_t i = 0; i < u; ++i) r = pow(r, p_);
  return r;
}

FieldElement FieldCtx::trace_to_subfield(const FieldElement& a, std::uint32_t e) const {
  if (e == 0 || d_ % e != 0) throw Error(ErrorKind::InvalidArgument, "subfield degree " + std::to_string(e) + " does not divide " + std::to_string(d_));
  const std::uint64_t n = checked_pow(p_, e);
  FieldElement sum = zero();
  FieldElement term = a;
  for (std::uint32_t i = 0; i < d_ / e; ++i) {
    sum = add(sum, term);
    term = pow(term, n);
  }
  return sum;
}

std::uint64_t FieldCtx::log(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "log of zero");
  return log_table_[encode(a)];
}

FieldElement FieldCtx::exp(std::uint64_t k) const { return pow(generator_, k); }

}  // namespace wada::gf
