#ifndef SEGREKIT_RATIONAL_MAP_HPP
#define SEGREKIT_RATIONAL_MAP_HPP

#include <json.hpp>
#include <vector>

#include "segrekit/hypersurface.hpp"
#include "segrekit/rational_function.hpp"

namespace segrekit {

// Outcome of the probabilistic gcd-normalization check: the components are
// restricted to seeded random affine lines and the univariate gcds compared.
// A common factor survives on essentially every line; accidental root
// sharing on a single line is downgraded to a warning.
struct NormalizationCertificate {
  int lines_total = 0;
  int lines_flagged = 0;
  bool inconclusive = false;  // exactly one flagged line
  uint64_t seed = 0;
};

inline constexpr uint64_t kDefaultProbeSeed = 0x8f1bbcdcbfa53e0bULL;

// (P_1, ..., P_N) / R with holomorphic polynomial components in (z, w).
class RationalMap {
 public:
  // Runs the common-factor detector; throws std::invalid_argument
  // ("not normalized") when two or more probe lines exhibit a common factor.
  static RationalMap make(std::vector<Poly> numerators, Poly denominator,
                          uint64_t seed = kDefaultProbeSeed);

  int target_dim() const { return static_cast<int>(numerators_.size()); }
  const std::vector<Poly>& numerators() const { return numerators_; }
  const Poly& denominator() const { return denominator_; }
  const NormalizationCertificate& certificate() const { return cert_; }

  // max(deg P_j, deg R), total degree in (z, w).
  int degree() const;

  // Component values at an exact point; throws at a pole.
  std::vector<ComplexRational> eval(const Point2& p) const;
  ComplexRational denominator_at(const Point2& p) const;

  nlohmann::json to_json() const;
  static RationalMap from_json(const nlohmann::json& j, uint64_t seed = kDefaultProbeSeed);

 private:
  RationalMap() = default;
  std::vector<Poly> numerators_;
  Poly denominator_;
  NormalizationCertificate cert_;
};

// F restricted to the Segre graph: z := xi, w := phi(conj(p), xi), with the
// common univariate gcd of (numerators, denominator) cancelled exactly.
struct RestrictedMap {
  std::vector<Poly> numerators;  // univariate in xi (slot Var::Z)
  Poly denominator;
  int degree = 0;          // max degree after cancellation, denominator monic
  int cancelled_degree = 0;  // degree of the cancelled common factor

  RationalFunction component(std::size_t j) const {
    return RationalFunction(numerators.at(j), denominator, Var::Z);
  }
};

// Throws "Q_p inside pole set" when the denominator restricts to zero.
RestrictedMap restrict_to_segre(const RationalMap& F, const HypersurfaceParams& params,
                                const Point2& p);

}  // namespace segrekit

#endif
