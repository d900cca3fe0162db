#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <string>

namespace trop {

/// Exact rational scalar. All arithmetic and comparisons are exact; there is
/// no tolerance anywhere in this library.
using Rat = mpq_class;

/// Builds a canonical rational p/q (mpq_class(p, q) alone does not reduce).
inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// Rational extended with a bottom element representing -infinity.
/// Bottom is the identity for max and annihilates addition. The default
/// constructed value is bottom, so a freshly resized matrix of ExtRat models
/// the all -inf matrix.
class ExtRat {
 public:
  ExtRat() : finite_(false) {}
  ExtRat(const Rat& v) : value_(v), finite_(true) {}  // NOLINT: implicit by design
  ExtRat(long v) : value_(v), finite_(true) {}        // NOLINT

  static ExtRat bottom() { return ExtRat(); }

  bool is_finite() const { return finite_; }
  const Rat& value() const { return value_; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_ || !b.finite_) return bottom();
    return ExtRat(Rat(a.value_ + b.value_));
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRat& x) {
    return x.finite_ ? (os << x.value_) : (os << "-inf");
  }

 private:
  Rat value_;
  bool finite_;
};

inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

inline std::string ext_to_string(const ExtRat& x) {
  return x.is_finite() ? rat_to_string(x.value()) : std::string("-inf");
}

}  // namespace trop

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

template <>
struct NumTraits<trop::ExtRat> : GenericNumTraits<trop::ExtRat> {
  using Real = trop::ExtRat;
  using NonInteger = trop::ExtRat;
  using Nested = trop::ExtRat;
  using Literal = long;
  static inline Real epsilon() { return trop::ExtRat(0); }
  static inline Real dummy_precision() { return trop::ExtRat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen
