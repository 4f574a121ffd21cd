#include "zdg/ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "zdg/error.hpp"
#include "zdg/field_linalg.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

// ---------------------------------------------------------------------------
// RingDescriptor

std::uint64_t GaloisSpec::order() const { return nt::checked_pow(p, k).value_or(0); }

RingDescriptor::RingDescriptor(Kind kind, std::uint64_t cardinality)
    : kind_(std::move(kind)), cardinality_(cardinality) {}

RingDescriptor RingDescriptor::zn(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("Zn requires n >= 2, got " + std::to_string(n));
  return RingDescriptor(ZnSpec{n}, n);
}

RingDescriptor RingDescriptor::galois(std::uint64_t p, unsigned k) {
  if (!nt::is_prime(p)) throw InvalidArgument("GF characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("GF degree must be >= 1");
  auto q = nt::checked_pow(p, k);
  if (!q || *q > FieldTable::kMaxOrder) throw InvalidArgument("GF order too large");
  return RingDescriptor(GaloisSpec{p, k}, *q);
}

RingDescriptor RingDescriptor::galois_order(std::uint64_t q) {
  auto pk = nt::as_prime_power(q);
  if (!pk) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return galois(pk->prime, pk->exponent);
}

RingDescriptor RingDescriptor::matrix(unsigned n, GaloisSpec field) {
  if (n < 1) throw InvalidArgument("matrix order must be >= 1");
  const auto f = galois(field.p, field.k);
  auto card = nt::checked_pow(f.cardinality(), n * n);
  if (!card || *card > (std::uint64_t{1} << 63)) throw InvalidArgument("matrix ring cardinality too large");
  return RingDescriptor(MatrixSpec{n, field}, *card);
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  std::vector<RingDescriptor> flat;
  for (auto& f : factors) {
    if (const auto* p = std::get_if<ProductSpec>(&f.kind_)) {
      flat.insert(flat.end(), p->factors.begin(), p->factors.end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.size() < 2) throw InvalidArgument("a product needs at least two factors");
  std::uint64_t card = 1;
  for (const auto& f : flat) {
    auto next = nt::checked_mul(card, f.cardinality());
    if (!next || *next > (std::uint64_t{1} << 63)) throw InvalidArgument("product ring cardinality too large");
    card = *next;
  }
  return RingDescriptor(ProductSpec{std::move(flat)}, card);
}

bool RingDescriptor::is_commutative() const {
  return std::visit(
      [](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, MatrixSpec>) {
          return k.n == 1;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return std::all_of(k.factors.begin(), k.factors.end(), [](const auto& f) { return f.is_commutative(); });
        } else {
          return true;
        }
      },
      kind_);
}

bool RingDescriptor::is_semisimple() const {
  return std::visit(
      [](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ZnSpec>) {
          return nt::is_squarefree(k.n);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return std::all_of(k.factors.begin(), k.factors.end(), [](const auto& f) { return f.is_semisimple(); });
        } else {
          return true;
        }
      },
      kind_);
}

std::string RingDescriptor::to_string() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ZnSpec>) {
          return "Zn(" + std::to_string(k.n) + ")";
        } else if constexpr (std::is_same_v<T, GaloisSpec>) {
          return "GF(" + std::to_string(k.order()) + ")";
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          return "M(" + std::to_string(k.n) + ",GF(" + std::to_string(k.field.order()) + "))";
        } else {
          std::string out;
          for (const auto& f : k.factors) {
            if (!out.empty()) out += 'x';
            out += f.to_string();
          }
          return out;
        }
      },
      kind_);
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind_.index() != b.kind_.index()) return false;
  return std::visit(
      [&](const auto& ka) -> bool {
        using T = std::decay_t<decltype(ka)>;
        const auto& kb = std::get<T>(b.kind_);
        if constexpr (std::is_same_v<T, ZnSpec>) {
          return ka.n == kb.n;
        } else if constexpr (std::is_same_v<T, GaloisSpec>) {
          return ka.p == kb.p && ka.k == kb.k;
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          return ka.n == kb.n && ka.field.p == kb.field.p && ka.field.k == kb.field.k;
        } else {
          return ka.factors == kb.factors;
        }
      },
      a.kind_);
}

// ---------------------------------------------------------------------------
// Ring-spec parser

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
    end_position_ = text.size();
  }

  RingDescriptor parse() {
    if (chars_.empty()) fail("empty ring spec");
    std::vector<RingDescriptor> factors;
    factors.push_back(atom());
    while (peek() == 'x') {
      ++pos_;
      factors.push_back(atom());
    }
    if (pos_ != chars_.size()) fail(std::string("unexpected '") + chars_[pos_] + "'");
    if (factors.size() == 1) return std::move(factors.front());
    return wrap([&] { return RingDescriptor::product(std::move(factors)); });
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

  std::size_t position() const { return pos_ < positions_.size() ? positions_[pos_] : end_position_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, position()); }

  template <typename F>
  RingDescriptor wrap(F&& make) const {
    try {
      return make();
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), position());
    }
  }

  void expect(std::string_view token) {
    for (char c : token) {
      if (peek() != c) fail("expected '" + std::string(token) + "'");
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    if (chars_.size() - pos_ < token.size()) return false;
    if (std::string_view(chars_.data() + pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      auto next = nt::checked_mul(v, 10);
      if (!next || *next > UINT64_MAX - static_cast<std::uint64_t>(peek() - '0')) fail("integer overflow");
      v = *next + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  RingDescriptor atom() {
    const std::size_t start = pos_;
    if (accept("Zn(")) {
      const std::size_t at = pos_;
      const auto n = integer();
      expect(")");
      if (n < 2) {
        pos_ = at;
        fail("Zn requires n >= 2");
      }
      return RingDescriptor::zn(n);
    }
    if (accept("GF(")) {
      const std::size_t at = pos_;
      const auto q = integer();
      expect(")");
      auto pk = nt::as_prime_power(q);
      if (!pk) {
        pos_ = at;
        fail(std::to_string(q) + " is not a prime power");
      }
      pos_ = start;
      auto d = wrap([&] { return RingDescriptor::galois(pk->prime, pk->exponent); });
      pos_ = at;
      while (peek() != ')') ++pos_;
      ++pos_;
      return d;
    }
    if (accept("M(")) {
      const std::size_t at = pos_;
      const auto n = integer();
      if (n < 1 || n > 64) {
        pos_ = at;
        fail("matrix order must be in [1,64]");
      }
      expect(",");
      const std::size_t inner_at = pos_;
      RingDescriptor inner = atom();
      expect(")");
      const auto* g = std::get_if<GaloisSpec>(&inner.kind());
      if (g == nullptr) {
        pos_ = inner_at;
        fail("matrix entries must come from a GF");
      }
      const std::size_t after = pos_;
      pos_ = start;
      auto d = wrap([&] { return RingDescriptor::matrix(static_cast<unsigned>(n), *g); });
      pos_ = after;
      return d;
    }
    fail("expected Zn(, GF( or M(");
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

RingDescriptor parse_ring_spec(std::string_view text) { return SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// Field cache

std::shared_ptr<const FieldTable> construct_field(std::uint64_t p, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FieldTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const FieldTable>(p, k);
  return slot;
}

// ---------------------------------------------------------------------------
// Implementations

namespace detail {

class RingImpl {
 public:
  explicit RingImpl(RingDescriptor d) : descriptor(std::move(d)) {}
  virtual ~RingImpl() = default;

  virtual std::uint64_t one() const = 0;
  virtual std::uint64_t add(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::uint64_t neg(std::uint64_t a) const = 0;
  virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
  virtual bool is_unit(std::uint64_t a) const = 0;
  virtual std::string label(std::uint64_t a) const = 0;
  virtual ElementPayload payload(std::uint64_t a) const = 0;
  virtual std::uint64_t from_payload(const ElementPayload& p) const = 0;

  RingDescriptor descriptor;
};

namespace {

class ZnImpl final : public RingImpl {
 public:
  explicit ZnImpl(RingDescriptor d) : RingImpl(d), n_(std::get<ZnSpec>(d.kind()).n) {}

  std::uint64_t one() const override { return 1 % n_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % n_);
  }
  std::uint64_t neg(std::uint64_t a) const override { return (n_ - a) % n_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override { return nt::mul_mod(a, b, n_); }
  bool is_unit(std::uint64_t a) const override { return std::gcd(a, n_) == 1; }
  std::string label(std::uint64_t a) const override { return std::to_string(a); }
  ElementPayload payload(std::uint64_t a) const override {
    ElementPayload p;
    p.tag = ElementPayload::Tag::residue;
    p.residue = a;
    return p;
  }
  std::uint64_t from_payload(const ElementPayload& p) const override {
    if (p.tag != ElementPayload::Tag::residue || p.residue >= n_) throw InvalidArgument("payload shape mismatch");
    return p.residue;
  }

 private:
  std::uint64_t n_;
};

// M_n(GF(q)); n = 1 doubles as the field itself.
class MatrixImpl final : public RingImpl {
 public:
  MatrixImpl(RingDescriptor d, unsigned n, std::shared_ptr<const FieldTable> f, bool bare_field)
      : RingImpl(std::move(d)), n_(n), nn_(n * n), field_(std::move(f)), bare_field_(bare_field) {
    if (nn_ > kMaxEntries) throw InvalidArgument("matrix order too large");
  }

  static constexpr unsigned kMaxEntries = 64;
  using Buffer = std::array<std::uint64_t, kMaxEntries>;

  void decode(std::uint64_t code, Buffer& out) const {
    const std::uint64_t q = field_->order();
    for (unsigned i = nn_; i-- > 0;) {
      out[i] = code % q;
      code /= q;
    }
  }

  std::uint64_t encode(const Buffer& in) const {
    const std::uint64_t q = field_->order();
    std::uint64_t code = 0;
    for (unsigned i = 0; i < nn_; ++i) code = code * q + in[i];
    return code;
  }

  std::uint64_t one() const override {
    Buffer b{};
    for (unsigned i = 0; i < n_; ++i) b[i * n_ + i] = 1;
    return encode(b);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    if (bare_field_) return field_->add(a, b);
    Buffer x, y;
    decode(a, x);
    decode(b, y);
    for (unsigned i = 0; i < nn_; ++i) x[i] = field_->add(x[i], y[i]);
    return encode(x);
  }

  std::uint64_t neg(std::uint64_t a) const override {
    if (bare_field_) return field_->neg(a);
    Buffer x;
    decode(a, x);
    for (unsigned i = 0; i < nn_; ++i) x[i] = field_->neg(x[i]);
    return encode(x);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
    if (nn_ == 1) return field_->mul(a, b);
    Buffer x, y, z{};
    decode(a, x);
    decode(b, y);
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned k = 0; k < n_; ++k) {
        const std::uint64_t xik = x[i * n_ + k];
        if (xik == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
          z[i * n_ + j] = field_->add(z[i * n_ + j], field_->mul(xik, y[k * n_ + j]));
        }
      }
    }
    return encode(z);
  }

  FieldMatrix to_matrix(std::uint64_t a) const {
    Buffer x;
    decode(a, x);
    FieldMatrix m(n_, n_);
    std::copy_n(x.begin(), nn_, m.data.begin());
    return m;
  }

  unsigned rank(std::uint64_t a) const { return zdg::rank(*field_, to_matrix(a)); }

  bool is_unit(std::uint64_t a) const override {
    if (nn_ == 1) return a != 0;
    return rank(a) == n_;
  }

  std::string label(std::uint64_t a) const override {
    if (bare_field_) return field_->label(a);
    Buffer x;
    decode(a, x);
    std::string out = "[";
    for (unsigned i = 0; i < n_; ++i) {
      out += i == 0 ? "[" : ",[";
      for (unsigned j = 0; j < n_; ++j) {
        if (j > 0) out += ',';
        out += field_->label(x[i * n_ + j]);
      }
      out += ']';
    }
    return out + "]";
  }

  ElementPayload payload(std::uint64_t a) const override {
    ElementPayload p;
    if (bare_field_) {
      p.tag = ElementPayload::Tag::field;
      p.coefficients = field_->coefficients(a);
      return p;
    }
    p.tag = ElementPayload::Tag::matrix;
    p.order = n_;
    Buffer x;
    decode(a, x);
    p.entries.assign(x.begin(), x.begin() + nn_);
    return p;
  }

  std::uint64_t from_payload(const ElementPayload& p) const override {
    if (bare_field_) {
      if (p.tag != ElementPayload::Tag::field || p.coefficients.size() != field_->degree())
        throw InvalidArgument("payload shape mismatch");
      for (auto c : p.coefficients)
        if (c >= field_->characteristic()) throw InvalidArgument("payload not canonical");
      return field_->from_coefficients(p.coefficients);
    }
    if (p.tag != ElementPayload::Tag::matrix || p.order != n_ || p.entries.size() != nn_)
      throw InvalidArgument("payload shape mismatch");
    Buffer x{};
    for (unsigned i = 0; i < nn_; ++i) {
      if (p.entries[i] >= field_->order()) throw InvalidArgument("payload not canonical");
      x[i] = p.entries[i];
    }
    return encode(x);
  }

  unsigned order() const { return n_; }
  const FieldTable& field() const { return *field_; }

 private:
  unsigned n_;
  unsigned nn_;
  std::shared_ptr<const FieldTable> field_;
  bool bare_field_;
};

}  // namespace

class ProductImpl final : public RingImpl {
 public:
  ProductImpl(RingDescriptor d, std::vector<Ring> factors) : RingImpl(std::move(d)), factors_(std::move(factors)) {
    weights_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size() - 1; i-- > 0;) weights_[i] = weights_[i + 1] * factors_[i + 1].cardinality();
  }

  std::uint64_t component(std::uint64_t a, std::size_t i) const {
    return (a / weights_[i]) % factors_[i].cardinality();
  }

  template <typename F>
  std::uint64_t zip(std::uint64_t a, std::uint64_t b, F&& op) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out += op(factors_[i], RingElement{component(a, i)}, RingElement{component(b, i)}).code * weights_[i];
    }
    return out;
  }

  std::uint64_t one() const override {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) out += factors_[i].one().code * weights_[i];
    return out;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    return zip(a, b, [](const Ring& r, RingElement x, RingElement y) { return r.add(x, y); });
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
    return zip(a, b, [](const Ring& r, RingElement x, RingElement y) { return r.mul(x, y); });
  }
  std::uint64_t neg(std::uint64_t a) const override {
    return zip(a, 0, [](const Ring& r, RingElement x, RingElement) { return r.neg(x); });
  }
  bool is_unit(std::uint64_t a) const override {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!factors_[i].is_unit(RingElement{component(a, i)})) return false;
    }
    return true;
  }
  std::string label(std::uint64_t a) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i > 0) out += ',';
      out += factors_[i].label(RingElement{component(a, i)});
    }
    return out + ")";
  }
  ElementPayload payload(std::uint64_t a) const override {
    ElementPayload p;
    p.tag = ElementPayload::Tag::tuple;
    for (std::size_t i = 0; i < factors_.size(); ++i) p.components.push_back(factors_[i].payload(RingElement{component(a, i)}));
    return p;
  }
  std::uint64_t from_payload(const ElementPayload& p) const override {
    if (p.tag != ElementPayload::Tag::tuple || p.components.size() != factors_.size())
      throw InvalidArgument("payload shape mismatch");
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) out += factors_[i].from_payload(p.components[i]).code * weights_[i];
    return out;
  }

  std::uint64_t compose(std::span<const RingElement> parts) const {
    if (parts.size() != factors_.size()) throw InvalidArgument("component count mismatch");
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].code >= factors_[i].cardinality()) throw InvalidArgument("component out of range");
      out += parts[i].code * weights_[i];
    }
    return out;
  }

  const std::vector<Ring>& factors() const { return factors_; }

 private:
  std::vector<Ring> factors_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(RingDescriptor descriptor) {
  const auto& kind = descriptor.kind();
  if (const auto* zn = std::get_if<ZnSpec>(&kind)) {
    (void)zn;
    impl_ = std::make_shared<detail::ZnImpl>(std::move(descriptor));
  } else if (const auto* g = std::get_if<GaloisSpec>(&kind)) {
    auto f = construct_field(g->p, g->k);
    impl_ = std::make_shared<detail::MatrixImpl>(std::move(descriptor), 1, std::move(f), true);
  } else if (const auto* m = std::get_if<MatrixSpec>(&kind)) {
    auto f = construct_field(m->field.p, m->field.k);
    const unsigned n = m->n;
    impl_ = std::make_shared<detail::MatrixImpl>(std::move(descriptor), n, std::move(f), false);
  } else {
    std::vector<Ring> factors;
    for (const auto& fd : std::get<ProductSpec>(kind).factors) factors.emplace_back(fd);
    impl_ = std::make_shared<detail::ProductImpl>(std::move(descriptor), std::move(factors));
  }
}

const RingDescriptor& Ring::descriptor() const noexcept { return impl_->descriptor; }

void Ring::check(RingElement a) const {
  if (a.code >= cardinality()) {
    throw InvalidArgument("element label " + std::to_string(a.code) + " does not belong to " + descriptor().to_string());
  }
}

RingElement Ring::one() const { return {impl_->one()}; }

RingElement Ring::add(RingElement a, RingElement b) const {
  check(a);
  check(b);
  return {impl_->add(a.code, b.code)};
}

RingElement Ring::neg(RingElement a) const {
  check(a);
  return {impl_->neg(a.code)};
}

RingElement Ring::sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

RingElement Ring::mul(RingElement a, RingElement b) const {
  check(a);
  check(b);
  return {impl_->mul(a.code, b.code)};
}

bool Ring::is_unit(RingElement a) const {
  check(a);
  return impl_->is_unit(a.code);
}

std::string Ring::label(RingElement a) const {
  check(a);
  return impl_->label(a.code);
}

ElementPayload Ring::payload(RingElement a) const {
  check(a);
  return impl_->payload(a.code);
}

RingElement Ring::from_payload(const ElementPayload& payload) const { return {impl_->from_payload(payload)}; }

std::vector<RingElement> Ring::elements(std::uint64_t cap) const {
  if (cardinality() > cap) {
    throw CapExceeded(descriptor().to_string() + " has " + std::to_string(cardinality()) +
                      " elements, above the enumeration cap " + std::to_string(cap));
  }
  std::vector<RingElement> out(cardinality());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i].code = i;
  return out;
}

std::vector<RingElement> Ring::units(std::uint64_t cap) const {
  std::vector<RingElement> out;
  for (auto a : elements(cap)) {
    if (impl_->is_unit(a.code)) out.push_back(a);
  }
  return out;
}

std::vector<RingElement> Ring::zero_divisors(std::uint64_t cap) const {
  std::vector<RingElement> out;
  for (auto a : elements(cap)) {
    if (a.code != 0 && !impl_->is_unit(a.code)) out.push_back(a);
  }
  return out;
}

std::size_t Ring::factor_count() const {
  if (const auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get())) return p->factors().size();
  return 1;
}

Ring Ring::factor(std::size_t i) const {
  if (const auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get())) return p->factors().at(i);
  if (i != 0) throw InvalidArgument("factor index out of range");
  return *this;
}

RingElement Ring::component(RingElement a, std::size_t i) const {
  check(a);
  if (const auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get())) {
    if (i >= p->factors().size()) throw InvalidArgument("factor index out of range");
    return {p->component(a.code, i)};
  }
  if (i != 0) throw InvalidArgument("factor index out of range");
  return a;
}

RingElement Ring::compose(std::span<const RingElement> components) const {
  if (const auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get())) return {p->compose(components)};
  if (components.size() != 1) throw InvalidArgument("component count mismatch");
  check(components[0]);
  return components[0];
}

namespace {
const detail::MatrixImpl& as_matrix(const std::shared_ptr<const detail::RingImpl>& impl) {
  const auto* m = dynamic_cast<const detail::MatrixImpl*>(impl.get());
  if (m == nullptr) throw InvalidArgument(impl->descriptor.to_string() + " is not a matrix ring or field");
  return *m;
}
}  // namespace

const FieldTable& Ring::field() const { return as_matrix(impl_).field(); }

unsigned Ring::matrix_order() const { return as_matrix(impl_).order(); }

std::vector<std::uint64_t> Ring::matrix_entries(RingElement a) const {
  check(a);
  return as_matrix(impl_).to_matrix(a.code).data;
}

RingElement Ring::from_matrix_entries(std::span<const std::uint64_t> entries) const {
  const auto& m = as_matrix(impl_);
  const unsigned nn = m.order() * m.order();
  if (entries.size() != nn) throw InvalidArgument("matrix entry count mismatch");
  detail::MatrixImpl::Buffer b{};
  for (unsigned i = 0; i < nn; ++i) {
    if (entries[i] >= m.field().order()) throw InvalidArgument("matrix entry out of range");
    b[i] = entries[i];
  }
  return {m.encode(b)};
}

unsigned Ring::rank(RingElement a) const {
  check(a);
  return as_matrix(impl_).rank(a.code);
}

}  // namespace zdg
