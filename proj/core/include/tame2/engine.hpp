#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tame2/autmap.hpp"
#include "tame2/principality.hpp"

namespace tame2 {

/// The subring of K(R) a reduction runs against: the whole ring, a
/// localization at a prime, or the fraction field itself (when the ring is a
/// field kind every membership test is trivially true).
class RingView {
 public:
  static RingView whole(Ring r);
  static RingView local(Ring r, PrimeSpec p);

  const Ring& ring() const { return ring_; }
  const Ring& field() const { return field_; }
  bool is_local() const { return prime_.has_value(); }
  const PrimeSpec& prime() const { return *prime_; }

  /// Membership of an element of K(R) in the view's subring.
  bool contains(const Coeff& k_elem) const;
  /// Unit test in the view: both the element and its inverse belong.
  bool unit_in_view(const Coeff& k_elem) const;
  /// Principality of (a, b) with a, b in the ring, local or global.
  ModuleVerdict reduce_pair(const Coeff& a, const Coeff& b) const;

  std::string str() const;

 private:
  Ring ring_, field_;
  std::optional<PrimeSpec> prime_;
};

// Machine-checkable reasons a reduction cannot continue over a view.
struct ObsDegreeDivisibility {
  int d1, d2;
};
struct ObsCoefficientNotInRing {
  FracCoeff c;
  int step;
};
struct ObsNonPrincipalPair {
  Coeff a, b;
  ModuleVerdict verdict;
};
struct ObsFinalAffineNotInvertible {
  Coeff det;  // element of K(R)
};
struct ObsPrincipalityUnknown {
  Coeff a, b;
  std::string reason;
};
using Obstruction = std::variant<ObsDegreeDivisibility, ObsCoefficientNotInRing,
                                 ObsNonPrincipalPair, ObsFinalAffineNotInvertible,
                                 ObsPrincipalityUnknown>;

std::string obstruction_kind(const Obstruction& o);
std::string obstruction_str(const Obstruction& o);
/// Re-checks the obstruction against the view it was produced under.
bool obstruction_reverify(const Obstruction& o, const RingView& view);

/// One reduction step: either a factor strictly lowering the degree, the
/// affine base case, a view-level obstruction, or evidence that the map is
/// not an automorphism at all.
struct StepReduced {
  Factor applied;  // over K(R); the applied map, not its inverse
  PolyMap next;
};
struct StepAlreadyAffine {};
struct StepBlocked {
  Obstruction obstruction;
};
struct StepNotAutomorphism {
  std::string reason;
};
using StepResult = std::variant<StepReduced, StepAlreadyAffine, StepBlocked, StepNotAutomorphism>;

/// Single step of the degree-lowering reduction. The input may be over the
/// view's ring or its fraction field; components must be nonconstant.
StepResult reduction_step(const PolyMap& f, const RingView& view);

class TameVerdict {
 public:
  enum class Status { Tame, NotTame, NotAutomorphism, Unknown };

  static TameVerdict tame(Decomposition d, std::vector<DegVec> trace);
  static TameVerdict not_tame(Obstruction o, std::vector<DegVec> trace);
  static TameVerdict not_automorphism(std::string reason, std::vector<DegVec> trace);
  static TameVerdict unknown(std::string reason, std::vector<DegVec> trace);

  Status status() const { return status_; }
  bool is_tame() const { return status_ == Status::Tame; }
  const Decomposition& decomposition() const;
  const Obstruction& obstruction() const;
  const std::string& reason() const { return reason_; }
  /// Degree pair before each reduction step, in order.
  const std::vector<DegVec>& degree_trace() const { return trace_; }

  std::string status_str() const;

 private:
  Status status_ = Status::Unknown;
  std::optional<Decomposition> decomposition_;
  std::optional<Obstruction> obstruction_;
  std::string reason_;
  std::vector<DegVec> trace_;
};

/// Decides membership of f in the tame subgroup over r, with a certificate:
/// either a factor list recomposing to f exactly, or an obstruction. The
/// input must be given over r itself.
TameVerdict decide_tame(const PolyMap& f, const Ring& r);

/// Same decision over the localization at p.
TameVerdict decide_locally_tame(const PolyMap& f, const Ring& r, const PrimeSpec& p);

/// Inverse of an automorphism, computed over the fraction field by factor
/// inversion; throws std::domain_error when f is not an automorphism.
PolyMap inverse_over_fraction_field(const PolyMap& f);

/// Whether f lies in the automorphism group over r: tame over K(R) with an
/// inverse whose coefficients stay in r.
bool is_automorphism(const PolyMap& f, const Ring& r);

/// Smallest localization of a principal ideal domain over which f becomes
/// tame, described by the inverted element r together with the obstructing
/// primes and the reduction step that forced each.
///
/// Minimality: at every step that forces a constant c = num/den, c is the
/// ratio of top components of the current map, which is uniquely determined;
/// any reduction over an intermediate ring S must pass through the same
/// constants, so S must invert every prime dividing the collected
/// denominators. Conversely inverting exactly those primes admits the whole
/// reduction, because two-generator reductions never obstruct over a
/// principal ideal domain.
struct OverringResult {
  Coeff r;  // product of the distinct obstructing primes; 1 when already tame
  std::vector<std::pair<Coeff, int>> obstructing_primes;  // prime, first step
};
OverringResult minimal_tame_localization(const PolyMap& f, const Ring& r);

/// Embed a map over R into K(R) coefficientwise.
PolyMap embed_map(const PolyMap& f);
/// Convert a map's coefficients into a compatible ring (throws if outside).
PolyMap convert_map(const PolyMap& f, const Ring& target);

}  // namespace tame2
