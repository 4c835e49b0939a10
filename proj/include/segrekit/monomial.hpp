#ifndef SEGREKIT_MONOMIAL_HPP
#define SEGREKIT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace segrekit {

// The symbolic layer works over four fixed variables: the holomorphic pair
// (z, w) and their formal conjugate partners (zbar, wbar).  After
// complexification the barred slots are free variables in their own right;
// (xi, eta, xibar, etabar) are the same slots under other names.
enum class Var : int { Z = 0, W = 1, ZB = 2, WB = 3 };

constexpr int kNumVars = 4;

inline Var bar_partner(Var v) {
  switch (v) {
    case Var::Z:  return Var::ZB;
    case Var::W:  return Var::WB;
    case Var::ZB: return Var::Z;
    case Var::WB: return Var::W;
  }
  throw std::logic_error("bad Var");
}

inline const char* var_name(Var v) {
  switch (v) {
    case Var::Z:  return "z";
    case Var::W:  return "w";
    case Var::ZB: return "zbar";
    case Var::WB: return "wbar";
  }
  throw std::logic_error("bad Var");
}

Var var_from_name(const std::string& name);

struct Monomial {
  std::array<uint32_t, kNumVars> e{0, 0, 0, 0};

  uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  uint32_t& operator[](Var v) { return e[static_cast<int>(v)]; }

  uint32_t total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial divide(const Monomial& o) const {  // *this / o, assumes o.divides(*this)
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic: total degree first, then z > w > zbar > wbar.
// Canonical for serialization, so term order is deterministic everywhere.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

inline Monomial mono(uint32_t z, uint32_t w = 0, uint32_t zb = 0, uint32_t wb = 0) {
  Monomial m;
  m.e = {z, w, zb, wb};
  return m;
}

inline Monomial mono_var(Var v, uint32_t k = 1) {
  Monomial m;
  m[v] = k;
  return m;
}

}  // namespace segrekit

#endif
