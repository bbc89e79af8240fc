#include "tame2/engine.hpp"

#include <sstream>
#include <stdexcept>

namespace tame2 {

RingView RingView::whole(Ring r) {
  RingView v;
  v.field_ = fraction_field_of(r);
  v.ring_ = std::move(r);
  return v;
}

RingView RingView::local(Ring r, PrimeSpec p) {
  if (!same_ring(p.ring(), r)) throw std::invalid_argument("RingView::local: prime ring mismatch");
  RingView v;
  v.field_ = fraction_field_of(r);
  v.ring_ = std::move(r);
  v.prime_ = std::move(p);
  return v;
}

bool RingView::contains(const Coeff& k_elem) const {
  if (prime_) return in_local_ring(k_elem, *prime_);
  return try_into_ring(k_elem, ring_).has_value();
}

bool RingView::unit_in_view(const Coeff& k_elem) const {
  if (k_elem.is_zero()) return false;
  return contains(k_elem) && contains(k_elem.inv());
}

ModuleVerdict RingView::reduce_pair(const Coeff& a, const Coeff& b) const {
  if (prime_) return two_gen_reduce_at(a, b, *prime_);
  return two_gen_reduce(a, b);
}

std::string RingView::str() const {
  if (prime_) return ring_->name() + " at " + prime_->str();
  return ring_->name();
}

std::string obstruction_kind(const Obstruction& o) {
  struct V {
    std::string operator()(const ObsDegreeDivisibility&) const { return "degree_divisibility"; }
    std::string operator()(const ObsCoefficientNotInRing&) const {
      return "coefficient_not_in_ring";
    }
    std::string operator()(const ObsNonPrincipalPair&) const { return "non_principal_pair"; }
    std::string operator()(const ObsFinalAffineNotInvertible&) const {
      return "final_affine_not_invertible";
    }
    std::string operator()(const ObsPrincipalityUnknown&) const { return "principality_unknown"; }
  };
  return std::visit(V{}, o);
}

std::string obstruction_str(const Obstruction& o) {
  std::ostringstream os;
  if (const auto* d = std::get_if<ObsDegreeDivisibility>(&o)) {
    os << "degrees (" << d->d1 << ", " << d->d2 << ") divide neither way";
  } else if (const auto* c = std::get_if<ObsCoefficientNotInRing>(&o)) {
    os << "forced coefficient " << c->c.str() << " lies outside the ring (step " << c->step
       << ")";
  } else if (const auto* p = std::get_if<ObsNonPrincipalPair>(&o)) {
    os << "top-component pair (" << p->a.str() << ", " << p->b.str()
       << ") generates a non-principal ideal; " << p->verdict.str();
  } else if (const auto* f = std::get_if<ObsFinalAffineNotInvertible>(&o)) {
    os << "final affine determinant " << f->det.str() << " is not a unit";
  } else if (const auto* u = std::get_if<ObsPrincipalityUnknown>(&o)) {
    os << "principality of (" << u->a.str() << ", " << u->b.str() << ") undecided: " << u->reason;
  }
  return os.str();
}

bool obstruction_reverify(const Obstruction& o, const RingView& view) {
  if (const auto* d = std::get_if<ObsDegreeDivisibility>(&o)) {
    return d->d1 > 0 && d->d2 > 0 && d->d1 % d->d2 != 0 && d->d2 % d->d1 != 0;
  }
  if (const auto* c = std::get_if<ObsCoefficientNotInRing>(&o)) {
    Coeff k = embed_in_fraction_field(c->c.num) * embed_in_fraction_field(c->c.den).inv();
    return !view.contains(k);
  }
  if (const auto* p = std::get_if<ObsNonPrincipalPair>(&o)) {
    return p->verdict.is_not_principal() && view.reduce_pair(p->a, p->b).is_not_principal();
  }
  if (const auto* f = std::get_if<ObsFinalAffineNotInvertible>(&o)) {
    return !view.unit_in_view(f->det);
  }
  if (const auto* u = std::get_if<ObsPrincipalityUnknown>(&o)) {
    return view.reduce_pair(u->a, u->b).is_unknown();
  }
  return false;
}

PolyMap embed_map(const PolyMap& f) {
  Ring k = fraction_field_of(f.ring());
  if (same_ring(k, f.ring())) return f;
  return PolyMap(embed_poly(f.f1()), embed_poly(f.f2()));
}

PolyMap convert_map(const PolyMap& f, const Ring& target) {
  auto conv = [&](const Coeff& c) { return convert_to_ring(embed_in_fraction_field(c), target); };
  return PolyMap(f.f1().map_coefficients(target, conv), f.f2().map_coefficients(target, conv));
}

namespace {

// Collected fraction denominators during a localization-searching run.
struct DenomCollector {
  std::vector<std::pair<FracCoeff, int>> constants;  // forced constant, step
};

struct StepOutcome {
  enum class Tag { Reduced, Affine, Blocked, NotAuto };
  Tag tag = Tag::Affine;
  std::optional<Factor> applied;
  std::optional<PolyMap> next;
  std::optional<Obstruction> obstruction;
  std::string reason;
};

StepOutcome make_reduced(Factor f, PolyMap next) {
  StepOutcome s;
  s.tag = StepOutcome::Tag::Reduced;
  s.applied = std::move(f);
  s.next = std::move(next);
  return s;
}

StepOutcome make_blocked(Obstruction o) {
  StepOutcome s;
  s.tag = StepOutcome::Tag::Blocked;
  s.obstruction = std::move(o);
  return s;
}

StepOutcome make_not_auto(std::string reason) {
  StepOutcome s;
  s.tag = StepOutcome::Tag::NotAuto;
  s.reason = std::move(reason);
  return s;
}

// One degree-lowering step on a map over K(R). Does not handle the affine
// base case; callers check deg == (1, 1) first.
StepOutcome step_once(const PolyMap& cur, const RingView& view, int step_index,
                      DenomCollector* collector) {
  const Ring& K = cur.ring();
  DegVec d = deg_vec(cur);

  if (d.d1 != d.d2) {
    int dmin = std::min(d.d1, d.d2), dmax = std::max(d.d1, d.d2);
    if (dmax % dmin != 0) return make_blocked(ObsDegreeDivisibility{d.d1, d.d2});
    unsigned e = static_cast<unsigned>(dmax / dmin);
    bool big_is_first = d.d1 > d.d2;
    const BiPoly& big = big_is_first ? cur.f1() : cur.f2();
    const BiPoly& small = big_is_first ? cur.f2() : cur.f1();
    auto c = power_proportionality(big.top_component(), small.top_component(), e);
    if (!c) {
      return make_not_auto("top component of the higher-degree component is not a constant "
                           "multiple of the required power of the other");
    }
    Coeff ck = embed_in_fraction_field(c->num) * embed_in_fraction_field(c->den).inv();
    if (collector) {
      collector->constants.emplace_back(*c, step_index);
    } else if (!view.contains(ck)) {
      return make_blocked(ObsCoefficientNotInRing{*c, step_index});
    }
    // Subtract ck * small^e from the big component.
    std::vector<Coeff> p(e + 1, Coeff::zero(K));
    p[e] = -ck;
    Factor phi = make_elementary(K, big_is_first ? 1 : 2, std::move(p));
    BiPoly correction = small.pow(e).scaled(ck);
    PolyMap next = big_is_first ? PolyMap(cur.f1() - correction, cur.f2())
                                : PolyMap(cur.f1(), cur.f2() - correction);
    return make_reduced(std::move(phi), std::move(next));
  }

  // Equal degrees > 1: the affine reduction through the ideal pair.
  BiPoly h1 = cur.f1().top_component(), h2 = cur.f2().top_component();
  auto lambda = power_proportionality(h2, h1, 1);
  if (!lambda) {
    return make_not_auto("equal-degree top components are not proportional over the fraction "
                         "field");
  }
  IdealPair pair = extract_ideal_pair(h1, h2, view.ring());
  ModuleVerdict verdict = view.reduce_pair(pair.a, pair.b);
  if (verdict.is_not_principal()) {
    return make_blocked(ObsNonPrincipalPair{pair.a, pair.b, verdict});
  }
  if (verdict.is_unknown()) {
    return make_blocked(ObsPrincipalityUnknown{pair.a, pair.b, verdict.reason()});
  }
  const PrincipalCert& cert = verdict.cert();
  Coeff b0 = embed_in_fraction_field(cert.b0), a0 = embed_in_fraction_field(cert.a0);
  Coeff s = embed_in_fraction_field(cert.s), t = embed_in_fraction_field(cert.t);
  Factor phi = make_affine(K, {b0, -a0, s, t}, {Coeff::zero(K), Coeff::zero(K)});
  PolyMap next(cur.f1().scaled(b0) - cur.f2().scaled(a0),
               cur.f1().scaled(s) + cur.f2().scaled(t));
  auto nd1 = next.f1().total_degree();
  if (nd1 && *nd1 >= d.d1) {
    throw std::logic_error("reduction step failed to lower the first component's degree");
  }
  return make_reduced(std::move(phi), std::move(next));
}

struct RunResult {
  enum class Tag { Tame, Blocked, NotAuto };
  Tag tag = Tag::Tame;
  std::vector<Factor> applied;  // over K, in application order
  std::optional<Factor> final_affine;
  std::optional<Obstruction> obstruction;
  std::string reason;
  std::vector<DegVec> trace;
  PolyMap reduced_to;

  explicit RunResult(PolyMap id) : reduced_to(std::move(id)) {}
};

RunResult run_reduction(const PolyMap& f_over_k, const RingView& view,
                        DenomCollector* collector) {
  RunResult out(f_over_k);
  PolyMap cur = f_over_k;
  const Ring& K = cur.ring();
  int step = 0;
  while (true) {
    if (cur.f1().is_constant() || cur.f2().is_constant()) {
      out.tag = RunResult::Tag::NotAuto;
      out.reason = "a component reduced to a constant";
      return out;
    }
    DegVec d = deg_vec(cur);
    out.trace.push_back(d);
    if (d.d1 == 1 && d.d2 == 1) {
      std::array<Coeff, 4> m{cur.f1().coeff(1, 0), cur.f1().coeff(0, 1), cur.f2().coeff(1, 0),
                             cur.f2().coeff(0, 1)};
      std::array<Coeff, 2> t{cur.f1().coeff(0, 0), cur.f2().coeff(0, 0)};
      Coeff det = m[0] * m[3] - m[1] * m[2];
      if (det.is_zero()) {
        out.tag = RunResult::Tag::NotAuto;
        out.reason = "affine part has zero determinant";
        return out;
      }
      if (!collector && !view.unit_in_view(det)) {
        out.tag = RunResult::Tag::Blocked;
        out.obstruction = ObsFinalAffineNotInvertible{det};
        return out;
      }
      out.final_affine = make_affine(K, std::move(m), std::move(t));
      out.reduced_to = cur;
      return out;
    }
    StepOutcome s = step_once(cur, view, step, collector);
    switch (s.tag) {
      case StepOutcome::Tag::Reduced:
        out.applied.push_back(std::move(*s.applied));
        cur = std::move(*s.next);
        ++step;
        break;
      case StepOutcome::Tag::Blocked:
        out.tag = RunResult::Tag::Blocked;
        out.obstruction = std::move(s.obstruction);
        return out;
      case StepOutcome::Tag::NotAuto:
        out.tag = RunResult::Tag::NotAuto;
        out.reason = std::move(s.reason);
        return out;
      case StepOutcome::Tag::Affine:
        throw std::logic_error("unexpected affine outcome from step_once");
    }
  }
}

TameVerdict verdict_from_run(RunResult&& run, const PolyMap& original_k, const RingView& view) {
  switch (run.tag) {
    case RunResult::Tag::NotAuto:
      return TameVerdict::not_automorphism(run.reason, std::move(run.trace));
    case RunResult::Tag::Blocked: {
      Obstruction o = std::move(*run.obstruction);
      // Degree divisibility is a fraction-field fact: its failure rules out
      // the automorphism property itself, over any view.
      if (std::holds_alternative<ObsDegreeDivisibility>(o)) {
        return TameVerdict::not_automorphism(obstruction_str(o), std::move(run.trace));
      }
      if (std::holds_alternative<ObsPrincipalityUnknown>(o)) {
        return TameVerdict::unknown(obstruction_str(o), std::move(run.trace));
      }
      return TameVerdict::not_tame(std::move(o), std::move(run.trace));
    }
    case RunResult::Tag::Tame:
      break;
  }
  std::vector<Factor> factors;
  factors.reserve(run.applied.size() + 1);
  for (const Factor& phi : run.applied) factors.push_back(factor_inverse(phi));
  factors.push_back(std::move(*run.final_affine));
  if (!view.is_local() && !same_ring(view.ring(), view.field())) {
    for (Factor& f : factors) f = factor_convert(f, view.ring());
  }
  Decomposition d(std::move(factors), original_k);
  if (!d.verify()) throw std::logic_error("tame certificate failed recomposition");
  return TameVerdict::tame(std::move(d), std::move(run.trace));
}

}  // namespace

StepResult reduction_step(const PolyMap& f, const RingView& view) {
  PolyMap cur = same_ring(f.ring(), view.field()) ? f : embed_map(f);
  if (cur.f1().is_constant() || cur.f2().is_constant()) {
    throw std::domain_error("reduction_step: constant component");
  }
  DegVec d = deg_vec(cur);
  if (d.d1 == 1 && d.d2 == 1) return StepAlreadyAffine{};
  StepOutcome s = step_once(cur, view, 0, nullptr);
  switch (s.tag) {
    case StepOutcome::Tag::Reduced:
      return StepReduced{std::move(*s.applied), std::move(*s.next)};
    case StepOutcome::Tag::Blocked:
      return StepBlocked{std::move(*s.obstruction)};
    case StepOutcome::Tag::NotAuto:
      return StepNotAutomorphism{std::move(s.reason)};
    default:
      throw std::logic_error("reduction_step: unexpected outcome");
  }
}

TameVerdict TameVerdict::tame(Decomposition d, std::vector<DegVec> trace) {
  TameVerdict v;
  v.status_ = Status::Tame;
  v.decomposition_ = std::move(d);
  v.trace_ = std::move(trace);
  return v;
}

TameVerdict TameVerdict::not_tame(Obstruction o, std::vector<DegVec> trace) {
  TameVerdict v;
  v.status_ = Status::NotTame;
  v.obstruction_ = std::move(o);
  v.reason_ = obstruction_str(*v.obstruction_);
  v.trace_ = std::move(trace);
  return v;
}

TameVerdict TameVerdict::not_automorphism(std::string reason, std::vector<DegVec> trace) {
  TameVerdict v;
  v.status_ = Status::NotAutomorphism;
  v.reason_ = std::move(reason);
  v.trace_ = std::move(trace);
  return v;
}

TameVerdict TameVerdict::unknown(std::string reason, std::vector<DegVec> trace) {
  TameVerdict v;
  v.status_ = Status::Unknown;
  v.reason_ = std::move(reason);
  v.trace_ = std::move(trace);
  return v;
}

const Decomposition& TameVerdict::decomposition() const {
  if (!decomposition_) throw std::logic_error("TameVerdict: no decomposition");
  return *decomposition_;
}

const Obstruction& TameVerdict::obstruction() const {
  if (!obstruction_) throw std::logic_error("TameVerdict: no obstruction");
  return *obstruction_;
}

std::string TameVerdict::status_str() const {
  switch (status_) {
    case Status::Tame:
      return "tame";
    case Status::NotTame:
      return "not_tame";
    case Status::NotAutomorphism:
      return "not_automorphism";
    case Status::Unknown:
      return "unknown";
  }
  return "?";
}

TameVerdict decide_tame(const PolyMap& f, const Ring& r) {
  if (!same_ring(f.ring(), r)) {
    throw std::invalid_argument("decide_tame: map must be given over the target ring");
  }
  RingView view = RingView::whole(r);
  PolyMap fk = embed_map(f);
  RunResult run = run_reduction(fk, view, nullptr);
  return verdict_from_run(std::move(run), fk, view);
}

TameVerdict decide_locally_tame(const PolyMap& f, const Ring& r, const PrimeSpec& p) {
  if (!same_ring(f.ring(), r)) {
    throw std::invalid_argument("decide_locally_tame: map must be given over the target ring");
  }
  RingView view = RingView::local(r, p);
  PolyMap fk = embed_map(f);
  RunResult run = run_reduction(fk, view, nullptr);
  return verdict_from_run(std::move(run), fk, view);
}

PolyMap inverse_over_fraction_field(const PolyMap& f) {
  Ring k = fraction_field_of(f.ring());
  PolyMap fk = embed_map(f);
  TameVerdict v = decide_tame(fk, k);
  if (!v.is_tame()) {
    throw std::domain_error("inverse_over_fraction_field: not an automorphism (" + v.reason() +
                            ")");
  }
  const auto& factors = v.decomposition().factors();
  PolyMap inv = PolyMap::identity(k);
  bool started = false;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    PolyMap m = factor_to_map(factor_inverse(*it));
    inv = started ? compose(inv, m) : m;
    started = true;
  }
  return inv;
}

bool is_automorphism(const PolyMap& f, const Ring& r) {
  Ring k = fraction_field_of(r);
  if (!same_ring(fraction_field_of(f.ring()), k)) {
    throw std::invalid_argument("is_automorphism: fraction fields differ");
  }
  PolyMap fk = embed_map(f);
  auto in_r = [&](const PolyMap& m) {
    for (const auto& term : m.f1().terms()) {
      if (!try_into_ring(term.second, r).has_value()) return false;
    }
    for (const auto& term : m.f2().terms()) {
      if (!try_into_ring(term.second, r).has_value()) return false;
    }
    return true;
  };
  if (!in_r(fk)) return false;
  TameVerdict v = decide_tame(fk, k);
  if (!v.is_tame()) return false;
  return in_r(inverse_over_fraction_field(fk));
}

OverringResult minimal_tame_localization(const PolyMap& f, const Ring& r) {
  if (!(r->kind() == RingKind::Integers || r->kind() == RingKind::UnivarPoly)) {
    throw std::invalid_argument(
        "minimal_tame_localization: supported over the integers and univariate polynomial "
        "rings only");
  }
  if (!same_ring(f.ring(), r)) {
    throw std::invalid_argument("minimal_tame_localization: map must be given over the ring");
  }
  if (!is_automorphism(f, r)) {
    throw std::domain_error("minimal_tame_localization: not an automorphism over the ring");
  }
  RingView view = RingView::whole(r);
  DenomCollector collector;
  PolyMap fk = embed_map(f);
  RunResult run = run_reduction(fk, view, &collector);
  if (run.tag != RunResult::Tag::Tame) {
    throw std::logic_error("minimal_tame_localization: reduction of a verified automorphism "
                           "blocked unexpectedly");
  }

  OverringResult out{Coeff::one(r), {}};
  auto note_prime = [&](const Coeff& p, int step) {
    for (const auto& [q, s] : out.obstructing_primes) {
      if (q == p) return;
    }
    out.obstructing_primes.emplace_back(p, step);
  };
  for (const auto& [c, step] : collector.constants) {
    const Coeff& den = c.den;
    if (is_unit(den)) continue;
    if (r->kind() == RingKind::Integers) {
      for (const Int& p : distinct_prime_factors(den.as_int())) {
        note_prime(Coeff::from_int(r, p), step);
      }
    } else {
      for (const UPoly& p : upoly_split_factors(den.as_upoly())) {
        note_prime(Coeff::from_upoly(r, p), step);
      }
    }
  }
  for (const auto& [p, step] : out.obstructing_primes) out.r = out.r * p;
  return out;
}

}  // namespace tame2
