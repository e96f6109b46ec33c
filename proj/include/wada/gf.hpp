#pragma once

#include <cstdint>
#include <vector>

// Exact arithmetic in GF(p^d) over the power basis of a monic irreducible
// modulus, together with a distinguished primitive element and a complete
// discrete-log table.

namespace wada::gf {

struct FieldConfig {
  /// Upper bound on p^d; the log table holds one entry per element.
  std::uint64_t max_elements = std::uint64_t{1} << 26;
};

/// Coordinates in the power basis 1, x, ..., x^(d-1), each in [0, p).
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const noexcept;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<std::uint32_t> coeffs_;
};

/// Immutable after build(); safe to share between threads.
class FieldCtx {
 public:
  static FieldCtx build(std::uint32_t p, std::uint32_t d, const FieldConfig& config = {});

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t d() const noexcept { return d_; }
  /// p^d.
  std::uint64_t size() const noexcept { return size_; }
  /// Order of the multiplicative group, p^d - 1.
  std::uint64_t group_order() const noexcept { return size_ - 1; }
  /// Monic modulus, coefficients of x^0 .. x^d.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  const FieldElement& generator() const noexcept { return generator_; }
  /// True when the generator is the residue class of x.
  bool generator_is_x() const noexcept { return generator_is_x_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Element with the given coordinates; throws if the length or a digit is out of range.
  FieldElement element(std::vector<std::uint32_t> coeffs) const;
  /// Base-p digits of the integer code (x^0 least significant).
  FieldElement decode(std::uint64_t code) const;
  std::uint64_t encode(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// a * generator(); a shift-and-fold when the generator is x.
  FieldElement mul_by_generator(const FieldElement& a) const;
  /// Multiplication by an element of the prime field.
  FieldElement scale(const FieldElement& a, std::uint32_t c) const;
  /// Square-and-multiply; pow(0, 0) is one.
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;
  /// a^(p^u) for 0 <= u < d.
  FieldElement frobenius(const FieldElement& a, std::uint32_t u) const;
  /// Trace from GF(p^d) down to GF(p^e); e must divide d.
  FieldElement trace_to_subfield(const FieldElement& a, std::uint32_t e) const;

  /// Discrete log base generator(); a must be nonzero.
  std::uint64_t log(const FieldElement& a) const;
  /// generator()^k.
  FieldElement exp(std::uint64_t k) const;
  /// Raw table indexed by encode(a); entry for the zero code is unused.
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_table_; }

 private:
  FieldCtx() = default;
  void reduce(std::vector<std::uint32_t>& wide) const;
  void check(const FieldElement& a) const;

  std::uint32_t p_ = 0;
  std::uint32_t d_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_;
  bool generator_is_x_ = false;
  std::vector<std::uint32_t> log_table_;
};

/// Irreducibility by trial division with every monic polynomial of degree 1 .. deg/2.
/// Coefficients are low-to-high and the polynomial must be monic.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace wada::gf
