#include "fracmatch/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace fracmatch {

namespace mp = boost::multiprecision;

Int even_part(const Int& n) {
  if (n == 0) return 0;
  return Int(1) << mp::lsb(n);
}

Int odd_part(const Int& n) {
  if (n == 0) return 1;
  return n >> mp::lsb(n);
}

int twos_exponent(const Int& n) {
  if (n <= 0) throw std::invalid_argument("twos_exponent: need n > 0");
  return static_cast<int>(mp::lsb(n));
}

void Rat::reduce() {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ < 0) throw std::invalid_argument("negative rational not supported");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = mp::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rat::Rat(long long num, long long den) : num_(num), den_(den) { reduce(); }
Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

std::optional<Rat> Rat::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_digits(ns) || !is_digits(ds)) return std::nullopt;
  try {
    Int n{std::string(ns)};
    Int d{std::string(ds)};
    if (d == 0) return std::nullopt;
    return Rat(std::move(n), std::move(d));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Rat Rat::from_string(std::string_view text) {
  auto r = parse(text);
  if (!r) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  return *r;
}

std::string Rat::str() const { return num_.str() + "/" + den_.str(); }

Rat Rat::half() const {
  Rat r;
  if (num_ == 0) return r;
  r.num_ = num_;
  r.den_ = den_ * 2;
  if (r.num_ != 0 && (r.num_ & 1) == 0) {
    r.num_ >>= 1;
    r.den_ >>= 1;
  }
  return r;
}

Rat Rat::sub_clamped(const Rat& a, const Rat& b, bool* clamped) {
  if (clamped) *clamped = false;
  if (b > a) {
    if (clamped) *clamped = true;
    return Rat();
  }
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Int even_denom(const Rat& x) { return even_part(x.den()); }
Int odd_denom(const Rat& x) { return odd_part(x.den()); }

int class_index(const Rat& x) { return static_cast<int>(mp::lsb(x.den())); }

bool in_class_range(const Rat& x, int lo, int hi) {
  int c = class_index(x);
  return c >= lo && (hi < 0 || c <= hi);
}

bool in_dyadic(const Rat& x, int d) {
  if (x.num() > x.den()) return false;  // outside [0,1]
  return odd_denom(x) == 1 && class_index(x) <= d;
}

bool ValueSet::contains(const Rat& x) const {
  switch (kind) {
    case Kind::Dyadic:
      return in_dyadic(x, param);
    case Kind::MaxClass:
      return x.num() <= x.den() && in_class_range(x, 0, param);
  }
  return false;
}

std::string ValueSet::str() const {
  switch (kind) {
    case Kind::Dyadic:
      return "S(" + std::to_string(param) + ")";
    case Kind::MaxClass:
      return "R<=" + std::to_string(param);
  }
  return "?";
}

std::optional<ValueSet> ValueSet::parse(std::string_view text) {
  auto read_int = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) return std::nullopt;
    return v;
  };
  if (text.size() >= 4 && text.substr(0, 2) == "S(" && text.back() == ')') {
    if (auto v = read_int(text.substr(2, text.size() - 3))) return dyadic(*v);
    return std::nullopt;
  }
  if (text.size() >= 4 && text.substr(0, 3) == "R<=") {
    if (auto v = read_int(text.substr(3))) return max_class(*v);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fracmatch
