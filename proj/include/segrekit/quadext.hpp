#ifndef SEGREKIT_QUADEXT_HPP
#define SEGREKIT_QUADEXT_HPP

#include <array>
#include <memory>

#include "segrekit/rational.hpp"

namespace segrekit {

// Element of Q[s1, s2, s3] / (s1^2 - q1, s2^2 - q2, s3^2 - q3) for fixed
// rational squares q.  Coordinates are indexed by the bitmask of s-exponents.
// The generators model real square roots, so conjugation is the identity;
// this is the coefficient ring of the symbolic-parameter embedding check.
class QuadExt {
 public:
  using Squares = std::array<Rat, 3>;

  QuadExt() { c_.fill(Rat(0)); }
  QuadExt(long v) {
    c_.fill(Rat(0));
    c_[0] = v;
  }
  explicit QuadExt(Rat v) {
    c_.fill(Rat(0));
    c_[0] = std::move(v);
  }

  static QuadExt generator(int i, std::shared_ptr<const Squares> sq) {
    QuadExt x;
    x.c_[std::size_t(1) << i] = 1;
    x.sq_ = std::move(sq);
    return x;
  }

  bool is_zero() const {
    for (const Rat& v : c_)
      if (v != 0) return false;
    return true;
  }

  QuadExt conj() const { return *this; }

  const Rat& coord(int mask) const { return c_[std::size_t(mask)]; }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    QuadExt r;
    r.sq_ = merge(a, b);
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    QuadExt r;
    r.sq_ = merge(a, b);
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    QuadExt r;
    r.sq_ = merge(a, b);
    for (std::size_t i = 0; i < 8; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        if (b.c_[j] == 0) continue;
        Rat v(a.c_[i] * b.c_[j]);
        std::size_t shared = i & j;
        for (int bit = 0; bit < 3; ++bit)
          if (shared & (std::size_t(1) << bit)) {
            if (!r.sq_) throw std::logic_error("QuadExt: generator product without squares");
            v *= (*r.sq_)[std::size_t(bit)];
          }
        r.c_[i ^ j] += v;
      }
    }
    return r;
  }
  QuadExt& operator+=(const QuadExt& b) { return *this = *this + b; }
  QuadExt& operator-=(const QuadExt& b) { return *this = *this - b; }
  QuadExt& operator*=(const QuadExt& b) { return *this = *this * b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

 private:
  static std::shared_ptr<const Squares> merge(const QuadExt& a, const QuadExt& b) {
    if (a.sq_ && b.sq_ && *a.sq_ != *b.sq_)
      throw std::invalid_argument("QuadExt: mixing different extensions");
    return a.sq_ ? a.sq_ : b.sq_;
  }

  std::array<Rat, 8> c_;
  std::shared_ptr<const Squares> sq_;
};

}  // namespace segrekit

#endif
