#pragma once

#include <optional>
#include <string>

#include "tame2/coeff.hpp"
#include "tame2/prime.hpp"

namespace tame2 {

/// Certificate that the ideal (a, b) is principal: g*a0 == a, g*b0 == b and
/// s*a0 + t*b0 == 1. The generator g always lies in the ring; for local
/// verdicts the remaining entries live in the fraction field, with
/// membership in the localization checked separately.
struct PrincipalCert {
  Coeff g, a0, b0, s, t;
};

struct NotPrincipalWitness {
  std::string kind;    // e.g. "no-element-of-ideal-norm", "groebner-basis-not-unit"
  std::string detail;  // human-readable data backing the claim
};

/// Outcome of a two-generator principality decision.
class ModuleVerdict {
 public:
  enum class Status { Principal, NotPrincipal, Unknown };

  static ModuleVerdict principal(PrincipalCert c);
  static ModuleVerdict not_principal(NotPrincipalWitness w);
  static ModuleVerdict unknown(std::string reason);

  Status status() const { return status_; }
  bool is_principal() const { return status_ == Status::Principal; }
  bool is_not_principal() const { return status_ == Status::NotPrincipal; }
  bool is_unknown() const { return status_ == Status::Unknown; }
  const PrincipalCert& cert() const;
  const NotPrincipalWitness& witness() const;
  const std::string& reason() const { return reason_; }

  /// Re-checks the certificate identities against the generating pair.
  bool verify(const Coeff& a, const Coeff& b) const;

  std::string str() const;

 private:
  Status status_ = Status::Unknown;
  std::optional<PrincipalCert> cert_;
  std::optional<NotPrincipalWitness> witness_;
  std::string reason_;
};

/// Decides whether the ideal (a, b) of the ring of a and b is principal and
/// produces a full certificate or a machine-checkable witness. Unknown can
/// occur only over the cuspidal ring, whose bounded oracle is incomplete.
ModuleVerdict two_gen_reduce(const Coeff& a, const Coeff& b);

/// Principality of (a, b) in the localization at P. Certificate entries a0,
/// b0, s, t live in the fraction field with denominators outside P.
ModuleVerdict two_gen_reduce_at(const Coeff& a, const Coeff& b, const PrimeSpec& P);

/// Norm of the ideal (a, b) of ZZ[r5] as a lattice index; (a, b) != (0, 0).
Int quad_ideal_norm(const Coeff& a, const Coeff& b);

}  // namespace tame2
