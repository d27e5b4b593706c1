#include "zdg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zdg {

std::uint32_t gcd(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> small, large;
  for (std::uint32_t d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

ZnContext zn_context(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("zn_context: n must be >= 2");
  ZnContext ctx;
  ctx.n = n;
  for (std::uint32_t d : divisors(n))
    if (d != 1 && d != n) ctx.proper_divisors.push_back(d);
  ctx.tau = static_cast<std::uint32_t>(ctx.proper_divisors.size());
  ctx.phi = euler_phi(n);
  return ctx;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0 .. c_deg

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients come from `code`
// read with c_0 as the most significant digit. Iterating code ascending
// therefore walks the monic polynomials in low-degree-first lexicographic
// order.
Poly monic_from_code(std::uint64_t code, std::uint32_t deg, std::uint32_t p) {
  Poly poly(deg + 1, 0);
  poly[deg] = 1;
  for (std::uint32_t i = deg; i-- > 0;) {
    poly[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return poly;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, k, p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed ring spec: bad integer in " + std::string(what));
  return v;
}

}  // namespace

struct Ring::State {
  RingKind kind = RingKind::Zn;
  std::uint32_t order = 0;

  // Field data.
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  Poly poly;
  std::vector<std::uint32_t> exp_table, log_table;

  // Product data.
  std::vector<Ring> components;
  std::vector<std::uint32_t> strides;

  // Full tables for small rings.
  std::vector<std::uint16_t> mul_table, add_table;

  Element compute_mul(Element a, Element b) const;
  Element compute_add(Element a, Element b) const;
};

Element Ring::State::compute_mul(Element a, Element b) const {
  switch (kind) {
    case RingKind::Zn:
      return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % order);
    case RingKind::Field:
      if (k == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p);
      if (a == 0 || b == 0) return 0;
      return exp_table[(log_table[a] + log_table[b]) % (order - 1)];
    case RingKind::Product: {
      Element out = 0;
      for (std::size_t i = 0; i < components.size(); ++i) {
        const std::uint32_t m = components[i].order();
        const Element ai = (a / strides[i]) % m;
        const Element bi = (b / strides[i]) % m;
        out += components[i].mul(ai, bi) * strides[i];
      }
      return out;
    }
  }
  return 0;
}

Element Ring::State::compute_add(Element a, Element b) const {
  switch (kind) {
    case RingKind::Zn:
      return (a + b) % order;
    case RingKind::Field: {
      Element out = 0, scale = 1;
      for (std::uint32_t i = 0; i < k; ++i) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
      }
      return out;
    }
    case RingKind::Product: {
      Element out = 0;
      for (std::size_t i = 0; i < components.size(); ++i) {
        const std::uint32_t m = components[i].order();
        out += components[i].add((a / strides[i]) % m, (b / strides[i]) % m) * strides[i];
      }
      return out;
    }
  }
  return 0;
}

static void fill_tables(Ring::State& s) {
  if (s.order > 256) return;
  const std::size_t n = s.order;
  s.mul_table.resize(n * n);
  s.add_table.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      s.mul_table[a * n + b] = static_cast<std::uint16_t>(s.compute_mul(a, b));
      s.add_table[a * n + b] = static_cast<std::uint16_t>(s.compute_add(a, b));
    }
}

Ring Ring::zn(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("Z_n requires n >= 2");
  if (n > kMaxRingOrder) throw std::invalid_argument("ring order bound exceeded");
  auto s = std::make_shared<State>();
  s->kind = RingKind::Zn;
  s->order = n;
  fill_tables(*s);
  return Ring(std::move(s));
}

Ring Ring::field(std::uint32_t q) {
  if (q > kMaxFieldOrder) throw std::invalid_argument("field order bound exceeded");
  auto f = factorize(q);
  if (q < 2 || f.size() != 1) throw std::invalid_argument("field order must be a prime power");
  auto s = std::make_shared<State>();
  s->kind = RingKind::Field;
  s->order = q;
  s->p = f[0].first;
  s->k = f[0].second;
  if (s->k > 1) {
    s->poly = least_irreducible(s->p, s->k);
    // Polynomial products modulo the reducing polynomial, used only to find a
    // primitive element and tabulate its powers.
    auto to_poly = [&](Element x) {
      Poly v(s->k, 0);
      for (std::uint32_t i = 0; i < s->k; ++i) {
        v[i] = x % s->p;
        x /= s->p;
      }
      return v;
    };
    auto from_poly = [&](const Poly& v) {
      Element x = 0, scale = 1;
      for (std::size_t i = 0; i < v.size(); ++i) {
        x += v[i] * scale;
        scale *= s->p;
      }
      return x;
    };
    auto poly_mul = [&](Element a, Element b) {
      Poly pa = to_poly(a), pb = to_poly(b), prod(2 * s->k, 0);
      for (std::uint32_t i = 0; i < s->k; ++i)
        for (std::uint32_t j = 0; j < s->k; ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % s->p;
      return from_poly(poly_mod(prod, s->poly, s->p));
    };
    s->exp_table.assign(q - 1, 0);
    s->log_table.assign(q, 0);
    for (Element g = 2; g < q; ++g) {
      Element cur = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        s->exp_table[i] = cur;
        cur = poly_mul(cur, g);
        if (cur == 1 && i + 1 < q - 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    for (std::uint32_t i = 0; i < q - 1; ++i) s->log_table[s->exp_table[i]] = i;
  }
  fill_tables(*s);
  return Ring(std::move(s));
}

Ring Ring::product(std::vector<Ring> components) {
  if (components.empty()) throw std::invalid_argument("product needs at least one component");
  std::uint64_t order = 1;
  for (const Ring& c : components) {
    order *= c.order();
    if (order > kMaxRingOrder) throw std::invalid_argument("ring order bound exceeded");
  }
  auto s = std::make_shared<State>();
  s->kind = RingKind::Product;
  s->order = static_cast<std::uint32_t>(order);
  s->strides.assign(components.size(), 1);
  for (std::size_t i = components.size() - 1; i-- > 0;)
    s->strides[i] = s->strides[i + 1] * components[i + 1].order();
  s->components = std::move(components);
  fill_tables(*s);
  return Ring(std::move(s));
}

RingKind Ring::kind() const { return state_->kind; }
std::uint32_t Ring::order() const { return state_->order; }

Element Ring::one() const {
  if (state_->kind != RingKind::Product) return 1;
  Element out = 0;
  for (std::size_t i = 0; i < state_->components.size(); ++i)
    out += state_->components[i].one() * state_->strides[i];
  return out;
}

Element Ring::mul(Element a, Element b) const {
  const State& s = *state_;
  if (!s.mul_table.empty()) return s.mul_table[a * s.order + b];
  return s.compute_mul(a, b);
}

Element Ring::add(Element a, Element b) const {
  const State& s = *state_;
  if (!s.add_table.empty()) return s.add_table[a * s.order + b];
  return s.compute_add(a, b);
}

std::uint32_t Ring::modulus() const { return state_->order; }
std::uint32_t Ring::characteristic() const { return state_->p; }
std::uint32_t Ring::degree() const { return state_->k; }
const std::vector<std::uint32_t>& Ring::reducing_polynomial() const { return state_->poly; }
const std::vector<Ring>& Ring::components() const { return state_->components; }

std::vector<Element> Ring::decompose(Element x) const {
  const State& s = *state_;
  if (s.kind != RingKind::Product) return {x};
  std::vector<Element> out(s.components.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (x / s.strides[i]) % s.components[i].order();
  return out;
}

Element Ring::compose(const std::vector<Element>& coords) const {
  const State& s = *state_;
  if (s.kind != RingKind::Product) return coords.at(0);
  if (coords.size() != s.components.size()) throw std::invalid_argument("coordinate count mismatch");
  Element out = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= s.components[i].order()) throw std::out_of_range("coordinate out of range");
    out += coords[i] * s.strides[i];
  }
  return out;
}

bool Ring::is_field_product() const {
  if (state_->kind != RingKind::Product) return false;
  return std::all_of(state_->components.begin(), state_->components.end(),
                     [](const Ring& c) { return c.kind() == RingKind::Field; });
}

bool Ring::is_boolean() const {
  return is_field_product() &&
         std::all_of(state_->components.begin(), state_->components.end(),
                     [](const Ring& c) { return c.order() == 2; });
}

std::string Ring::render(Element x) const {
  const State& s = *state_;
  switch (s.kind) {
    case RingKind::Zn:
      return std::to_string(x);
    case RingKind::Field: {
      if (s.k == 1 || x == 0) return std::to_string(x);
      std::string out;
      std::vector<std::uint32_t> c(s.k);
      for (std::uint32_t i = 0; i < s.k; ++i) {
        c[i] = x % s.p;
        x /= s.p;
      }
      for (std::uint32_t i = s.k; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(c[i]);
          continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
      return out;
    }
    case RingKind::Product: {
      std::string out = "(";
      auto coords = decompose(x);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += s.components[i].render(coords[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string Ring::describe() const {
  const State& s = *state_;
  switch (s.kind) {
    case RingKind::Zn:
      return "Z_" + std::to_string(s.order);
    case RingKind::Field:
      return "GF(" + std::to_string(s.order) + ")";
    case RingKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < s.components.size(); ++i) {
        if (i) out += "x";
        out += s.components[i].describe();
      }
      return out;
    }
  }
  return {};
}

void Ring::verify_axioms() const {
  const std::uint32_t n = order();
  const Element e = one();
  auto fail = [&](const std::string& what) { throw std::logic_error(describe() + ": " + what); };
  for (Element a = 0; a < n; ++a) {
    if (mul(a, e) != a) fail("1 is not a multiplicative identity");
    if (mul(a, 0) != 0) fail("0 is not absorbing");
    if (add(a, 0) != a) fail("0 is not an additive identity");
    for (Element b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) fail("multiplication is not commutative");
      if (add(a, b) != add(b, a)) fail("addition is not commutative");
      const Element ab = mul(a, b);
      const Element apb = add(a, b);
      for (Element c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) fail("multiplication is not associative");
        if (mul(apb, c) != add(mul(a, c), mul(b, c))) fail("distributivity fails");
      }
    }
  }
  if (kind() == RingKind::Field) {
    for (Element a = 1; a < n; ++a) {
      bool has_inverse = false;
      for (Element b = 1; b < n && !has_inverse; ++b) has_inverse = mul(a, b) == e;
      if (!has_inverse) fail("nonzero element without inverse");
    }
  }
}

Ring make_ring(std::string_view spec_in) {
  const std::string spec = lower(spec_in);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("malformed ring spec: missing ':'");
  const std::string head = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);

  auto checked_order = [](std::uint64_t v) {
    if (v > kMaxRingOrder) throw std::invalid_argument("ring order bound exceeded");
    return static_cast<std::uint32_t>(v);
  };
  auto field_of = [](std::uint64_t q) {
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order bound exceeded");
    return Ring::field(static_cast<std::uint32_t>(q));
  };

  Ring ring = [&] {
    if (head == "zn") return Ring::zn(checked_order(parse_uint(body, "zn")));
    if (head == "gf") return field_of(parse_uint(body, "gf"));
    if (head == "bool") {
      const std::uint64_t count = parse_uint(body, "bool");
      if (count < 1) throw std::invalid_argument("malformed ring spec: bool needs n >= 1");
      if (count > 20) throw std::invalid_argument("ring order bound exceeded");
      return Ring::product(std::vector<Ring>(count, Ring::field(2)));
    }
    if (head == "prod") {
      std::vector<Ring> parts;
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.size() < 2 || item[0] != 'f')
          throw std::invalid_argument("malformed ring spec: product items look like fQ");
        parts.push_back(field_of(parse_uint(std::string_view(item).substr(1), "prod item")));
      }
      if (parts.empty() || body.back() == ',')
        throw std::invalid_argument("malformed ring spec: empty product item");
      return Ring::product(std::move(parts));
    }
    throw std::invalid_argument("malformed ring spec: unknown kind '" + head + "'");
  }();
  if (ring.order() <= 256) ring.verify_axioms();
  return ring;
}

namespace {

bool zero_or_zero_divisor(const Ring& ring, Element x) {
  switch (ring.kind()) {
    case RingKind::Zn:
      return gcd(x, ring.order()) > 1;
    case RingKind::Field:
      return x == 0;
    case RingKind::Product: {
      auto coords = ring.decompose(x);
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (zero_or_zero_divisor(ring.components()[i], coords[i])) return true;
      return false;
    }
  }
  return false;
}

}  // namespace

std::vector<Element> zero_divisors(const Ring& ring) {
  std::vector<Element> out;
  for (Element x = 1; x < ring.order(); ++x)
    if (zero_or_zero_divisor(ring, x)) out.push_back(x);
  return out;
}

std::vector<Element> zero_divisors_by_definition(const Ring& ring) {
  std::vector<Element> out;
  for (Element x = 1; x < ring.order(); ++x)
    for (Element y = 1; y < ring.order(); ++y)
      if (ring.mul(x, y) == 0) {
        out.push_back(x);
        break;
      }
  return out;
}

AnnihilatorSet annihilator(const Ring& ring, Element x) {
  if (x >= ring.order()) throw std::out_of_range("annihilator: element index out of range");
  AnnihilatorSet out;
  out.element = x;
  for (Element w = 0; w < ring.order(); ++w)
    if (ring.mul(x, w) == 0) out.members.push_back(w);
  return out;
}

}  // namespace zdg
