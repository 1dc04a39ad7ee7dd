#pragma once

// Exact non-negative rationals with arbitrary-precision components, plus the
// denominator-class machinery used throughout: every positive integer q splits
// uniquely as q = e(q) * o(q) with e(q) a power of two and o(q) odd, and
// rationals in [0,1] are classified by the exponent of e(q) of their reduced
// denominator. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fracmatch {

using Int = boost::multiprecision::cpp_int;

// Largest power of two dividing n (even part). even_part(0) == 0 by convention.
Int even_part(const Int& n);

// n with all factors of two removed (odd part). odd_part(0) == 1 by convention.
Int odd_part(const Int& n);

// Number of trailing zero bits of n; requires n > 0.
int twos_exponent(const Int& n);

class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long num, long long den = 1);
  Rat(Int num, Int den);  // reduces; throws std::invalid_argument on den == 0 or negative value

  // Accepts "p/q" as well as the bare-integer shorthands "0" and "1".
  static std::optional<Rat> parse(std::string_view text);
  // Like parse but throws std::invalid_argument with `what` context on failure.
  static Rat from_string(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  // Always the reduced "p/q" form, e.g. "0/1", "1/2", "5/3".
  std::string str() const;

  Rat half() const;  // exact division by two

  // max(a - b, 0). On feasible inputs the clamp never fires; *clamped lets
  // tests assert that.
  static Rat sub_clamped(const Rat& a, const Rat& b, bool* clamped = nullptr);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
  Int num_, den_;  // den_ > 0, gcd(num_, den_) == 1, num_ >= 0
  void reduce();
};

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }

// Even/odd parts of the reduced denominator of x.
Int even_denom(const Rat& x);
Int odd_denom(const Rat& x);

// n such that even_denom(x) == 2^n.
int class_index(const Rat& x);

// lo <= class_index(x) <= hi. Pass hi < 0 for "no upper bound".
bool in_class_range(const Rat& x, int lo, int hi);

// Membership in {i / 2^d : 0 <= i <= 2^d}: x in [0,1] with denominator a
// power of two dividing 2^d.
bool in_dyadic(const Rat& x, int d);

// A named family of admissible edge values, selectable on the command line:
//   "S(d)"  -> dyadic grid {i/2^d}
//   "R<=n"  -> [0,1] rationals with class_index <= n
struct ValueSet {
  enum class Kind { Dyadic, MaxClass };
  Kind kind;
  int param;

  bool contains(const Rat& x) const;
  std::string str() const;
  static std::optional<ValueSet> parse(std::string_view text);
  static ValueSet dyadic(int d) { return {Kind::Dyadic, d}; }
  static ValueSet max_class(int n) { return {Kind::MaxClass, n}; }
};

}  // namespace fracmatch
