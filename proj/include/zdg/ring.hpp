#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace zdg {

/// Canonical element index of a finite ring, 0..order-1. Index 0 is always
/// the additive identity.
using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
inline constexpr std::uint32_t kMaxRingOrder = 1u << 20;

enum class RingKind { Zn, Field, Product };

/// A finite commutative ring with identity.
///
/// Element encodings:
///   Zn(n)     residue value.
///   Field(q)  q = p^k; coefficient vector (c_0 .. c_{k-1}) of the polynomial
///             representative, index = c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
///             Reduction is modulo the lexicographically least monic
///             irreducible of degree k (coefficients compared from c_0 up).
///   Product   mixed radix over the components, first component most
///             significant, so index order equals lexicographic tuple order.
///
/// Rings are immutable and cheap to copy (shared state).
class Ring {
 public:
  static Ring zn(std::uint32_t n);
  static Ring field(std::uint32_t q);
  static Ring product(std::vector<Ring> components);

  RingKind kind() const;
  std::uint32_t order() const;
  Element one() const;
  Element zero() const { return 0; }

  Element mul(Element a, Element b) const;
  Element add(Element a, Element b) const;

  /// Zn: modulus. Field: q. Product: order.
  std::uint32_t modulus() const;
  /// Field only: characteristic and extension degree.
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  /// Field with degree > 1: reducing polynomial coefficients c_0..c_k (c_k = 1).
  const std::vector<std::uint32_t>& reducing_polynomial() const;

  const std::vector<Ring>& components() const;
  std::vector<Element> decompose(Element x) const;
  Element compose(const std::vector<Element>& coords) const;

  /// True for Product rings whose components are all fields.
  bool is_field_product() const;
  bool is_boolean() const;

  std::string render(Element x) const;
  std::string describe() const;

  /// Exhaustive commutativity/associativity/identity/field-inverse checks.
  /// Throws std::logic_error on the first violation.
  void verify_axioms() const;

  struct State;

 private:
  explicit Ring(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

/// Parses "zn:N", "gf:Q", "bool:N" or "prod:fQ,fQ,...". Case-insensitive.
/// Rings of order <= 256 come out with verified arithmetic tables.
Ring make_ring(std::string_view spec);

/// Nonzero x with x*y = 0 for some nonzero y, ascending.
std::vector<Element> zero_divisors(const Ring& ring);

/// Brute-force zero-divisor listing straight from the definition.
std::vector<Element> zero_divisors_by_definition(const Ring& ring);

struct AnnihilatorSet {
  Element element = 0;
  std::vector<Element> members;  // ascending, always contains 0
};

AnnihilatorSet annihilator(const Ring& ring, Element x);

struct ZnContext {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> proper_divisors;  // ascending, excludes 1 and n
  std::uint32_t tau = 0;
  std::uint32_t phi = 0;
};

ZnContext zn_context(std::uint32_t n);

// Number theory helpers.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n);
std::uint32_t euler_phi(std::uint32_t n);
std::vector<std::uint32_t> divisors(std::uint32_t n);
bool is_prime(std::uint32_t n);
std::uint32_t gcd(std::uint32_t a, std::uint32_t b);

}  // namespace zdg
