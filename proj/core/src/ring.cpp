#include "tame2/ring.hpp"

#include <stdexcept>

#include "tame2/coeff.hpp"

namespace tame2 {

// Private-constructor friend shim: build descriptors field by field.
struct RingBuilder {
  static std::shared_ptr<RingDescriptor> fresh() {
    return std::shared_ptr<RingDescriptor>(new RingDescriptor());
  }
  static RingKind& kind(RingDescriptor& r) { return r.kind_; }
  static RingTraits& traits(RingDescriptor& r) { return r.traits_; }
  static std::int64_t& p(RingDescriptor& r) { return r.p_; }
  static std::string& gen1(RingDescriptor& r) { return r.gen1_; }
  static std::string& gen2(RingDescriptor& r) { return r.gen2_; }
  static Ring& base(RingDescriptor& r) { return r.base_; }
  static std::shared_ptr<const Coeff>& mult(RingDescriptor& r) { return r.multiplier_; }
};

RingDescriptor::~RingDescriptor() = default;

Ring RingDescriptor::rationals() {
  static Ring r = [] {
    auto d = RingBuilder::fresh();
    RingBuilder::kind(*d) = RingKind::Rationals;
    RingBuilder::traits(*d) = {true, true, true, true, true, true};
    return Ring(d);
  }();
  return r;
}

Ring RingDescriptor::prime_field(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(Int(p))) {
    throw std::invalid_argument("prime_field: modulus must be a prime below 2^31");
  }
  auto d = RingBuilder::fresh();
  RingBuilder::kind(*d) = RingKind::PrimeField;
  RingBuilder::traits(*d) = {true, true, true, true, true, true};
  RingBuilder::p(*d) = p;
  return d;
}

Ring RingDescriptor::integers() {
  static Ring r = [] {
    auto d = RingBuilder::fresh();
    RingBuilder::kind(*d) = RingKind::Integers;
    RingBuilder::traits(*d) = {true, true, true, false, true, true};
    return Ring(d);
  }();
  return r;
}

Ring RingDescriptor::univar(std::string gen) {
  if (gen.empty()) throw std::invalid_argument("univar: empty generator name");
  auto d = RingBuilder::fresh();
  RingBuilder::kind(*d) = RingKind::UnivarPoly;
  RingBuilder::traits(*d) = {true, true, true, false, true, true};
  RingBuilder::gen1(*d) = std::move(gen);
  return d;
}

Ring RingDescriptor::bivar(std::string gen1, std::string gen2) {
  if (gen1.empty() || gen2.empty() || gen1 == gen2) {
    throw std::invalid_argument("bivar: need two distinct generator names");
  }
  auto d = RingBuilder::fresh();
  RingBuilder::kind(*d) = RingKind::BivarPoly;
  RingBuilder::traits(*d) = {true, false, true, false, false, false};
  RingBuilder::gen1(*d) = std::move(gen1);
  RingBuilder::gen2(*d) = std::move(gen2);
  return d;
}

Ring RingDescriptor::localized(const Ring& base, const Coeff& multiplier) {
  if (!base) throw std::invalid_argument("localized: null base");
  switch (base->kind()) {
    case RingKind::Integers:
    case RingKind::UnivarPoly:
    case RingKind::BivarPoly:
      break;
    default:
      throw std::invalid_argument("localized: base must be a gcd-capable polynomial-like ring");
  }
  if (!multiplier.valid() || !same_ring(multiplier.ring(), base)) {
    throw std::invalid_argument("localized: multiplier must belong to the base ring");
  }
  if (multiplier.is_zero() || is_unit(multiplier)) {
    throw std::invalid_argument("localized: multiplier must be a nonzero nonunit");
  }
  auto d = RingBuilder::fresh();
  RingBuilder::kind(*d) = RingKind::Localized;
  const RingTraits& bt = base->traits();
  RingBuilder::traits(*d) = {bt.has_gcd, bt.has_ext_gcd, true, false, bt.is_pid, bt.is_dedekind};
  RingBuilder::base(*d) = base;
  RingBuilder::mult(*d) = std::make_shared<const Coeff>(multiplier);
  return d;
}

Ring RingDescriptor::quad_sqrt_minus5() {
  static Ring r = [] {
    auto d = RingBuilder::fresh();
    RingBuilder::kind(*d) = RingKind::QuadSqrtMinus5;
    RingBuilder::traits(*d) = {false, false, true, false, false, true};
    return Ring(d);
  }();
  return r;
}

Ring RingDescriptor::cuspidal_cubic() {
  static Ring r = [] {
    auto d = RingBuilder::fresh();
    RingBuilder::kind(*d) = RingKind::CuspidalCubic;
    RingBuilder::traits(*d) = {false, false, false, false, false, false};
    RingBuilder::gen1(*d) = "t";
    return Ring(d);
  }();
  return r;
}

Ring RingDescriptor::fraction_field_over(const Ring& base) {
  auto d = RingBuilder::fresh();
  RingBuilder::kind(*d) = RingKind::FractionField;
  RingBuilder::traits(*d) = {true, true, true, true, true, true};
  RingBuilder::base(*d) = base;
  return d;
}

const std::string& RingDescriptor::gen_name(int i) const {
  if (kind_ == RingKind::Localized || kind_ == RingKind::FractionField) return base_->gen_name(i);
  if (i == 0) return gen1_;
  if (i == 1 && kind_ == RingKind::BivarPoly) return gen2_;
  throw std::out_of_range("RingDescriptor::gen_name");
}

const Ring& RingDescriptor::base() const {
  if (!base_) throw std::logic_error("RingDescriptor::base: ring has no base");
  return base_;
}

const Coeff& RingDescriptor::multiplier() const {
  if (!multiplier_) throw std::logic_error("RingDescriptor::multiplier: not a localized ring");
  return *multiplier_;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::Rationals:
      return "QQ";
    case RingKind::PrimeField:
      return "GF(" + std::to_string(p_) + ")";
    case RingKind::Integers:
      return "ZZ";
    case RingKind::UnivarPoly:
      return "QQ[" + gen1_ + "]";
    case RingKind::BivarPoly:
      return "QQ[" + gen1_ + "," + gen2_ + "]";
    case RingKind::Localized:
      return base_->name() + "[1/(" + multiplier_->str() + ")]";
    case RingKind::QuadSqrtMinus5:
      return "ZZ[r5]";
    case RingKind::CuspidalCubic:
      return "QQ[t^2,t^3]";
    case RingKind::FractionField:
      return "Frac(" + base_->name() + ")";
  }
  return "?";
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case RingKind::Rationals:
    case RingKind::Integers:
    case RingKind::QuadSqrtMinus5:
    case RingKind::CuspidalCubic:
      return true;
    case RingKind::PrimeField:
      return a->char_p() == b->char_p();
    case RingKind::UnivarPoly:
      return a->gen_name(0) == b->gen_name(0);
    case RingKind::BivarPoly:
      return a->gen_name(0) == b->gen_name(0) && a->gen_name(1) == b->gen_name(1);
    case RingKind::Localized:
      return same_ring(a->base(), b->base()) && a->multiplier() == b->multiplier();
    case RingKind::FractionField:
      return same_ring(a->base(), b->base());
  }
  return false;
}

Ring fraction_field_of(const Ring& r) {
  if (!r) throw std::invalid_argument("fraction_field_of: null ring");
  if (r->traits().is_field) return r;
  switch (r->kind()) {
    case RingKind::Integers:
      return RingDescriptor::rationals();
    case RingKind::Localized:
      return fraction_field_of(r->base());
    case RingKind::CuspidalCubic:
      return RingDescriptor::fraction_field_over(RingDescriptor::univar(r->gen_name(0)));
    default:
      return RingDescriptor::fraction_field_over(r);
  }
}

Ring fraction_base_of(const Ring& r) {
  if (!r) throw std::invalid_argument("fraction_base_of: null ring");
  switch (r->kind()) {
    case RingKind::FractionField:
      return r->base();
    case RingKind::Localized:
      return fraction_base_of(r->base());
    case RingKind::CuspidalCubic:
      return RingDescriptor::univar(r->gen_name(0));
    case RingKind::Rationals:
      return RingDescriptor::integers();
    default:
      return r;
  }
}

}  // namespace tame2
