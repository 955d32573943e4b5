// Exact scalar domains: arbitrary-precision rationals and odd prime fields GF(p).
// No floating point anywhere in the engine.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace titsforge {

// Thrown when a mathematical precondition (characteristic gate, domain
// restriction, missing trace, ...) is violated.
struct GateError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid far beyond 2^31.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rational scalars (characteristic 0)
// ---------------------------------------------------------------------------

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rat(long num, long den) {
    if (den == 0) throw GateError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }

  Rat inv() const {
    if (is_zero()) throw GateError("division by zero in Q");
    return Rat(mpq_class(1) / v_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& b) {
    v_ += b.v_;
    return *this;
  }
  Rat& operator-=(const Rat& b) {
    v_ -= b.v_;
    return *this;
  }
  Rat& operator*=(const Rat& b) {
    v_ *= b.v_;
    return *this;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  const mpq_class& raw() const { return v_; }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

struct RatField {
  using Elem = Rat;

  long characteristic() const { return 0; }

  Elem zero() const { return Rat(); }
  Elem one() const { return Rat(1); }
  Elem of(long n) const { return Rat(n); }
  Elem ratio(long num, long den) const { return Rat(num, den); }

  Elem parse(const std::string& s) const {
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rat(mpq_class(mpz_class(s)));
      mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw GateError("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rat(q);
    } catch (const std::invalid_argument&) {
      throw GateError("malformed rational scalar: '" + s + "'");
    }
  }

  std::string str(const Elem& e) const { return e.str(); }

  // Small integers with a spread comfortably above the Schwartz-Zippel floor.
  Elem random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<long> d(-25, 25);
    return Rat(d(rng));
  }
  Elem random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
      Elem e = random(rng);
      if (!e.is_zero()) return e;
    }
  }

  bool operator==(const RatField&) const { return true; }
};

// ---------------------------------------------------------------------------
// Prime field scalars GF(p), p an odd prime < 2^31
// ---------------------------------------------------------------------------

// Residues carry their modulus; a default-constructed Mod is the "universal
// zero" compatible with any modulus.
class Mod {
 public:
  Mod() : v_(0), p_(0) {}
  Mod(uint32_t v, uint32_t p) : v_(v % p), p_(p) {}

  bool is_zero() const { return v_ == 0; }
  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  Mod inv() const {
    if (v_ == 0) throw GateError("division by zero in GF(p)");
    return Mod(static_cast<uint32_t>(detail::powmod_u64(v_, p_ - 2, p_)), p_);
  }

  friend Mod operator+(const Mod& a, const Mod& b) {
    uint32_t p = join(a, b);
    if (p == 0) return Mod();
    return Mod((a.v_ + b.v_) % p, p);
  }
  friend Mod operator-(const Mod& a, const Mod& b) {
    uint32_t p = join(a, b);
    if (p == 0) return Mod();
    return Mod((a.v_ + p - b.v_) % p, p);
  }
  friend Mod operator*(const Mod& a, const Mod& b) {
    if (a.v_ == 0 || b.v_ == 0) return Mod(0, a.p_ ? a.p_ : (b.p_ ? b.p_ : 1));
    uint32_t p = join(a, b);
    return Mod(static_cast<uint32_t>((static_cast<uint64_t>(a.v_) * b.v_) % p), p);
  }
  Mod operator-() const { return p_ ? Mod(p_ - v_, p_) : Mod(); }
  Mod& operator+=(const Mod& b) { return *this = *this + b; }
  Mod& operator-=(const Mod& b) { return *this = *this - b; }
  Mod& operator*=(const Mod& b) { return *this = *this * b; }
  friend bool operator==(const Mod& a, const Mod& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw GateError("mixed moduli in GF(p) comparison");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Mod& a, const Mod& b) { return !(a == b); }

 private:
  static uint32_t join(const Mod& a, const Mod& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw GateError("mixed moduli in GF(p) arithmetic");
    return a.p_;
  }
  uint32_t v_, p_;
};

struct ModField {
  using Elem = Mod;

  explicit ModField(uint64_t p) {
    if (p == 2) throw GateError("characteristic 2 is not supported");
    if (p >= (1ull << 31)) throw GateError("prime too large (p < 2^31 required)");
    if (!detail::is_prime_u64(p)) throw GateError("characteristic must be 0 or an odd prime, got " + std::to_string(p));
    p_ = static_cast<uint32_t>(p);
  }

  long characteristic() const { return p_; }
  uint32_t p() const { return p_; }

  Elem zero() const { return Mod(0, p_); }
  Elem one() const { return Mod(1, p_); }
  Elem of(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Mod(static_cast<uint32_t>(r), p_);
  }
  Elem ratio(long num, long den) const { return of(num) * of(den).inv(); }

  Elem parse(const std::string& s) const {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        // Reduce via GMP so arbitrarily long digit strings are fine.
        mpz_class z(s);
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return Mod(static_cast<uint32_t>(r.get_ui()), p_);
      }
      return parse(s.substr(0, slash)) * parse(s.substr(slash + 1)).inv();
    } catch (const std::invalid_argument&) {
      throw GateError("malformed GF(p) scalar: '" + s + "'");
    }
  }

  std::string str(const Elem& e) const { return std::to_string(e.value()); }

  Elem random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<uint32_t> d(0, p_ - 1);
    return Mod(d(rng), p_);
  }
  Elem random_nonzero(std::mt19937_64& rng) const {
    std::uniform_int_distribution<uint32_t> d(1, p_ - 1);
    return Mod(d(rng), p_);
  }

  bool operator==(const ModField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

// Runtime field descriptor, as it appears on the CLI and in algebra files.
struct FieldSpec {
  long characteristic = 0;

  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q" || s == "0") return {0};
    std::string t = s;
    if (t.rfind("fp:", 0) == 0) t = t.substr(3);
    try {
      size_t pos = 0;
      long p = std::stol(t, &pos);
      if (pos != t.size() || p < 0) throw std::invalid_argument(s);
      return {p};
    } catch (const std::exception&) {
      throw GateError("unrecognized field '" + s + "' (expected q or fp:<odd prime>)");
    }
  }

  std::string str() const { return characteristic == 0 ? "q" : "fp:" + std::to_string(characteristic); }
};

// field_make: validates the characteristic. Returns the right Field object via
// the visitor in cli/tables code; here we only expose the two constructors.
inline RatField make_rat_field() { return RatField{}; }
inline ModField make_mod_field(long p) {
  if (p <= 0) throw GateError("characteristic must be 0 or an odd prime");
  return ModField(static_cast<uint64_t>(p));
}

}  // namespace titsforge
