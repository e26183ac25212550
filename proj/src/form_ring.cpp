#include "oddu/form_ring.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "oddu/error.hpp"

namespace oddu {

HermitianScalars validate_scalars(const FieldCtx& F, Elem lambda, Elem mu) {
  if (!F.contains(lambda) || !F.contains(mu))
    throw Error(Errc::Parse, "scalar outside field");
  if (F.mul(F.bar(lambda), lambda) != F.one())
    throw Error(Errc::LambdaNotUnitary, "bar(lambda)*lambda != 1");
  if (F.mul(F.bar(mu), lambda) != mu) throw Error(Errc::MuConditionFailed, "mu != bar(mu)*lambda");
  for (Elem x : F.elements()) {
    if (F.bar(F.bar(x)) != F.mul(F.mul(lambda, x), F.bar(lambda)))
      throw Error(Errc::InvolutionSquareFailed,
                  "bar(bar(x)) != lambda*x*bar(lambda) at x=" + F.format(x));
  }
  return {lambda, mu};
}

Elem HermitianRing::lambda(int sign) const {
  return sign > 0 ? scalars.lambda : F().inv(scalars.lambda);
}

Elem HermitianRing::mu(int sign) const { return sign > 0 ? scalars.mu : F().bar(scalars.mu); }

Elem HermitianRing::lambda_pow(int e) const {
  if (e == 0) return F().one();
  if (e == 1) return scalars.lambda;
  if (e == -1) return F().inv(scalars.lambda);
  throw Error(Errc::InternalInvariant, "lambda exponent outside {-1,0,1}");
}

HPair h_add(const HermitianRing& ring, int sign, HPair a, HPair b) {
  const FieldCtx& F = ring.F();
  Elem cross = F.mul(F.mul(F.bar(a.x), ring.mu(sign)), b.x);
  return {F.add(a.x, b.x), F.sub(F.add(a.y, b.y), cross)};
}

HPair h_neg(const HermitianRing& ring, int sign, HPair a) {
  const FieldCtx& F = ring.F();
  Elem m = F.mul(F.mul(F.bar(a.x), ring.mu(sign)), a.x);
  return {F.neg(a.x), F.sub(F.neg(a.y), m)};
}

HPair h_sub(const HermitianRing& ring, int sign, HPair a, HPair b) {
  return h_add(ring, sign, a, h_neg(ring, sign, b));
}

HPair h_scale(const HermitianRing& ring, int, HPair a, Elem c) {
  const FieldCtx& F = ring.F();
  return {F.mul(a.x, c), F.mul(F.mul(F.bar(c), a.y), c)};
}

Elem trace(const HermitianRing& ring, HPair a, int sign) {
  const FieldCtx& F = ring.F();
  Elem m = F.mul(F.mul(F.bar(a.x), ring.mu(sign)), a.x);
  return F.add(F.add(m, a.y), F.mul(F.bar(a.y), ring.lambda(sign)));
}

FormParameter::FormParameter(const FieldCtx& field, DeltaKind kind, int sign,
                             std::vector<HPair> generators, std::vector<HPair> elements)
    : kind_(kind), sign_(sign), q_(field.size()), generators_(std::move(generators)),
      elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(std::size_t(q_) * q_, false);
  for (HPair a : elements_) member_[std::size_t(a.x.v) * q_ + a.y.v] = true;
}

std::vector<HPair> delta_min_elements(const HermitianRing& ring, int sign) {
  const FieldCtx& F = ring.F();
  std::vector<HPair> out;
  for (Elem x : F.elements())
    out.push_back({F.zero(), F.sub(x, F.mul(F.bar(x), ring.lambda(sign)))});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HPair> delta_max_elements(const HermitianRing& ring, int sign) {
  const FieldCtx& F = ring.F();
  std::vector<HPair> out;
  for (Elem x : F.elements())
    for (Elem y : F.elements())
      if (trace(ring, {x, y}, sign) == F.zero()) out.push_back({x, y});
  return out;
}

std::vector<HPair> module_closure(const HermitianRing& ring, int sign,
                                  const std::vector<HPair>& gens, bool include_min) {
  const FieldCtx& F = ring.F();
  const std::size_t q = std::size_t(F.size());
  std::vector<HPair> steps;
  std::vector<bool> step_seen(q * q, false);
  auto add_step = [&](HPair a) {
    std::size_t key = std::size_t(a.x.v) * q + a.y.v;
    if (!step_seen[key]) {
      step_seen[key] = true;
      steps.push_back(a);
    }
  };
  if (include_min)
    for (HPair a : delta_min_elements(ring, sign)) add_step(a);
  for (HPair g : gens)
    for (Elem c : F.elements()) add_step(h_scale(ring, sign, g, c));

  std::vector<bool> seen(q * q, false);
  std::vector<HPair> out;
  std::deque<HPair> work;
  seen[0] = true;
  work.push_back({F.zero(), F.zero()});
  while (!work.empty()) {
    HPair a = work.front();
    work.pop_front();
    out.push_back(a);
    for (HPair s : steps) {
      HPair b = h_add(ring, sign, a, s);
      std::size_t key = std::size_t(b.x.v) * q + b.y.v;
      if (!seen[key]) {
        seen[key] = true;
        work.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void assert_parameter(const HermitianRing& ring, const FormParameter& p) {
  const FieldCtx& F = ring.F();
  const int s = p.sign();
  if (!p.contains({F.zero(), F.zero()}))
    throw Error(Errc::InternalInvariant, "parameter misses (0,0)");
  for (HPair a : delta_min_elements(ring, s))
    if (!p.contains(a)) throw Error(Errc::InternalInvariant, "parameter misses delta_min");
  // Full pairwise closure check on small parameters, a prefix otherwise.
  const std::size_t probe = p.size() <= 1024 ? p.size() : 64;
  for (HPair a : p.elements()) {
    if (trace(ring, a, s) != F.zero())
      throw Error(Errc::InternalInvariant, "parameter leaves delta_max");
  }
  for (std::size_t i = 0; i < probe; ++i) {
    HPair a = p.elements()[i];
    for (Elem c : F.elements())
      if (!p.contains(h_scale(ring, s, a, c)))
        throw Error(Errc::InternalInvariant, "parameter not scale closed");
    for (HPair b : p.elements())
      if (!p.contains(h_add(ring, s, a, b)))
        throw Error(Errc::InternalInvariant, "parameter not additively closed");
  }
}

}  // namespace

FormParameter build_parameter(const HermitianRing& ring, DeltaKind kind,
                              const std::vector<HPair>& generators) {
  const FieldCtx& F = ring.F();
  std::vector<HPair> elems;
  std::vector<HPair> gens;
  switch (kind) {
    case DeltaKind::Min:
      elems = delta_min_elements(ring);
      break;
    case DeltaKind::Max:
      elems = delta_max_elements(ring);
      break;
    case DeltaKind::KTimesZero:
      for (Elem x : F.elements()) {
        if (trace(ring, {x, F.zero()}) != F.zero())
          throw Error(Errc::KTimesZeroInvalid,
                      "(x,0) outside ker trace at x=" + F.format(x));
      }
      gens.push_back({F.one(), F.zero()});
      elems = module_closure(ring, 1, gens);
      break;
    case DeltaKind::Generated:
      for (HPair g : generators) {
        if (!F.contains(g.x) || !F.contains(g.y))
          throw Error(Errc::Parse, "generator outside field");
        if (trace(ring, g) != F.zero())
          throw Error(Errc::GeneratorOutsideMax,
                      "generator (" + F.format(g.x) + ";" + F.format(g.y) + ") has nonzero trace");
      }
      gens = generators;
      elems = module_closure(ring, 1, gens);
      break;
  }
  FormParameter p(F, kind, 1, std::move(gens), std::move(elems));
  assert_parameter(ring, p);
  return p;
}

FormParameter flip_sign(const HermitianRing& ring, const FormParameter& p) {
  const FieldCtx& F = ring.F();
  std::vector<HPair> elems;
  elems.reserve(p.size());
  for (HPair a : p.elements()) elems.push_back({a.x, F.bar(a.y)});
  std::vector<HPair> gens;
  for (HPair a : p.generators()) gens.push_back({a.x, F.bar(a.y)});
  FormParameter out(F, p.kind(), -p.sign(), std::move(gens), std::move(elems));
  assert_parameter(ring, out);
  return out;
}

bool FormSetup::admits_tlevel() const {
  const FieldCtx& f = F();
  if (scalars.mu != f.zero()) return false;
  for (Elem x : f.elements())
    if (!delta.contains({x, f.zero()})) return false;
  return true;
}

FormSetup make_setup(std::shared_ptr<const FieldCtx> field, HermitianScalars scalars,
                     DeltaKind kind, const std::vector<HPair>& generators, int n, int rank_cap) {
  if (n < 1 || n > rank_cap)
    throw Error(Errc::RankOutOfRange,
                "n=" + std::to_string(n) + " outside [1," + std::to_string(rank_cap) + "]");
  FormSetup s;
  s.field = std::move(field);
  s.scalars = validate_scalars(*s.field, scalars.lambda, scalars.mu);
  s.delta = build_parameter(s, kind, generators);
  s.delta_inv = flip_sign(s, s.delta);
  s.n = n;
  s.j_delta.assign(std::size_t(s.F().size()), false);
  for (HPair a : s.delta.elements()) s.j_delta[a.x.v] = true;
  return s;
}

FormSetup with_rank(const FormSetup& setup, int n, int rank_cap) {
  if (n < 1 || n > rank_cap)
    throw Error(Errc::RankOutOfRange,
                "n=" + std::to_string(n) + " outside [1," + std::to_string(rank_cap) + "]");
  FormSetup s = setup;
  s.n = n;
  return s;
}

}  // namespace oddu
