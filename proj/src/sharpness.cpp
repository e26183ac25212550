#include "oddu/sharpness.hpp"

#include <algorithm>
#include <thread>

#include "oddu/error.hpp"
#include "oddu/presets.hpp"

namespace oddu {

namespace {

// Runs fn(lo, hi, out) on contiguous chunks of [0, count) and returns the
// chunk outputs in chunk order, so merging them is order-stable.
template <class Out, class Fn>
std::vector<Out> chunked(std::size_t count, unsigned threads, Fn fn) {
  unsigned t = std::max(1u, threads);
  if (count < 64) t = 1;
  const std::size_t step = (count + t - 1) / t;
  std::vector<Out> outs(t);
  if (t == 1) {
    fn(std::size_t(0), count, outs[0]);
    return outs;
  }
  std::vector<std::thread> pool;
  for (unsigned c = 0; c < t; ++c) {
    const std::size_t lo = std::min(count, c * step), hi = std::min(count, lo + step);
    pool.emplace_back([&, lo, hi, c] { fn(lo, hi, outs[c]); });
  }
  for (auto& th : pool) th.join();
  return outs;
}

struct Candidate {
  std::size_t from;
  std::size_t gen;
  UMatrix m;
};

}  // namespace

std::optional<std::size_t> ClassOrbit::find(const UMatrix& m) const {
  auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

EWord ClassOrbit::conjugator(std::size_t k) const {
  EWord w;
  while (k != 0) {
    w.push_back(generators[via[k]]);
    k = parent[k];
  }
  return w;
}

ClassOrbit orbit_bfs(const FormSetup& s, const UMatrix& base, std::size_t cap,
                     unsigned threads) {
  return orbit_bfs(s, base, all_transvections(s), cap, threads);
}

ClassOrbit orbit_bfs(const FormSetup& s, const UMatrix& base, std::vector<Atom> generators,
                     std::size_t cap, unsigned threads) {
  const FieldCtx& F = s.F();
  if (!is_member(s, base)) throw Error(Errc::NotMember, "orbit base is not in the group");
  ClassOrbit orb;
  orb.base = base;
  orb.generators = std::move(generators);
  std::vector<UMatrix> g, gi;
  for (const Atom& a : orb.generators) {
    g.push_back(atom_matrix(s, a));
    gi.push_back(inverse(F, g.back()));
  }
  orb.elements.push_back(base);
  orb.parent.push_back(0);
  orb.via.push_back(0);
  orb.index.emplace(base, 0);

  std::size_t lo = 0;
  while (lo < orb.elements.size()) {
    const std::size_t hi = orb.elements.size();
    auto parts = chunked<std::vector<Candidate>>(
        hi - lo, threads, [&](std::size_t a, std::size_t b, std::vector<Candidate>& out) {
          for (std::size_t k = lo + a; k < lo + b; ++k)
            for (std::size_t q = 0; q < g.size(); ++q) {
              UMatrix m = mul(F, mul(F, g[q], orb.elements[k]), gi[q]);
              if (!orb.index.count(m)) out.push_back({k, q, std::move(m)});
            }
        });
    for (auto& part : parts)
      for (auto& c : part) {
        if (orb.index.count(c.m)) continue;
        if (orb.elements.size() >= cap)
          throw Error(Errc::OrbitCapExceeded,
                      "orbit exceeds cap " + std::to_string(cap));
        orb.index.emplace(c.m, orb.elements.size());
        orb.elements.push_back(std::move(c.m));
        orb.parent.push_back(c.from);
        orb.via.push_back(c.gen);
      }
    lo = hi;
  }

  orb.closed_under_inverse = std::all_of(orb.elements.begin(), orb.elements.end(),
                                         [&](const UMatrix& m) { return orb.contains(inverse(F, m)); });
  return orb;
}

namespace {

// One layer X^k: element e = layer_{k-1}[prev] * X[x].
struct Layer {
  std::vector<UMatrix> elems;
  std::vector<std::size_t> prev;
  std::vector<std::size_t> x;
  std::unordered_map<UMatrix, std::size_t, UMatrixHash> index;
};

struct XEntry {
  std::size_t orbit_idx;
  int exp;
};

}  // namespace

ProductSearchResult min_product_length(const FormSetup& s, const ClassOrbit& orbit,
                                       const UMatrix& target, int m_max, std::size_t cap,
                                       unsigned threads) {
  const FieldCtx& F = s.F();
  ProductSearchResult res;
  res.target = target;
  res.m_max = m_max;
  if (m_max <= 0) return res;

  std::vector<XEntry> xs;
  std::vector<UMatrix> xm;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    xs.push_back({k, 1});
    xm.push_back(orbit.elements[k]);
  }
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    UMatrix inv = inverse(F, orbit.elements[k]);
    if (orbit.contains(inv)) continue;
    xs.push_back({k, -1});
    xm.push_back(std::move(inv));
  }

  std::vector<Layer> layers(1);
  for (std::size_t q = 0; q < xm.size(); ++q) {
    if (layers[0].index.count(xm[q])) continue;
    layers[0].index.emplace(xm[q], layers[0].elems.size());
    layers[0].elems.push_back(xm[q]);
    layers[0].prev.push_back(0);
    layers[0].x.push_back(q);
  }
  res.level_sizes.push_back(layers[0].elems.size());

  auto need = [&](int k) {
    while (int(layers.size()) < k) {
      const Layer& last = layers.back();
      auto parts = chunked<std::vector<Candidate>>(
          last.elems.size(), threads, [&](std::size_t a, std::size_t b, std::vector<Candidate>& out) {
            std::unordered_map<UMatrix, char, UMatrixHash> seen;
            for (std::size_t e = a; e < b; ++e)
              for (std::size_t q = 0; q < xm.size(); ++q) {
                UMatrix m = mul(F, last.elems[e], xm[q]);
                if (seen.emplace(m, 0).second) out.push_back({e, q, std::move(m)});
              }
          });
      Layer next;
      for (auto& part : parts)
        for (auto& c : part) {
          if (next.index.count(c.m)) continue;
          if (next.elems.size() >= cap)
            throw Error(Errc::FrontierCapExceeded,
                        "layer " + std::to_string(layers.size() + 1) + " exceeds cap " +
                            std::to_string(cap));
          next.index.emplace(c.m, next.elems.size());
          next.elems.push_back(std::move(c.m));
          next.prev.push_back(c.from);
          next.x.push_back(c.gen);
        }
      layers.push_back(std::move(next));
      res.level_sizes.push_back(layers.back().elems.size());
    }
  };

  auto factors_of = [&](int k, std::size_t e) {
    std::vector<std::size_t> seq;
    for (int l = k; l >= 1; --l) {
      const Layer& L = layers[std::size_t(l - 1)];
      seq.push_back(L.x[e]);
      e = L.prev[e];
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };

  for (int m = 1; m <= m_max; ++m) {
    const int a = (m + 1) / 2, b = m - a;
    need(a);
    const Layer& La = layers[std::size_t(a - 1)];
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    if (b == 0) {
      if (auto it = La.index.find(target); it != La.index.end()) hit = {{it->second, 0}};
    } else {
      const Layer& Lb = layers[std::size_t(b - 1)];
      for (std::size_t e = 0; e < Lb.elems.size() && !hit; ++e) {
        auto it = La.index.find(mul(F, target, inverse(F, Lb.elems[e])));
        if (it != La.index.end()) hit = {{it->second, e}};
      }
    }
    if (!hit) continue;
    auto seq = factors_of(a, hit->first);
    if (b) {
      auto tail = factors_of(b, hit->second);
      seq.insert(seq.end(), tail.begin(), tail.end());
    }
    for (std::size_t q : seq)
      res.witness.push_back({orbit.conjugator(xs[q].orbit_idx), xs[q].exp});
    ConjugateWord cw{orbit.base, res.witness, target, std::nullopt};
    if (!verify_certificate(s, cw))
      throw Error(Errc::InternalInvariant, "product search witness does not verify");
    res.found_m = m;
    return res;
  }
  return res;
}

Thm2Report check_thm2(int n, std::size_t cap, std::size_t frontier_cap, unsigned threads) {
  const FormSetup s = preset("sp2", n);
  const FieldCtx& F = s.F();
  Thm2Report rep;
  rep.n = n;
  const UMatrix base = transvection_extra(s, 1, {F.zero(), F.one()});
  const UMatrix target = transvection_short(s, 1, 2, F.one());
  const ClassOrbit C = orbit_bfs(s, base, cap, threads);
  rep.orbit_size = C.size();
  rep.inverse_closed = C.closed_under_inverse;
  rep.in_C = C.contains(target);
  rep.in_CC = false;
  for (const UMatrix& c : C.elements)
    if (C.contains(mul(F, inverse(F, c), target))) {
      rep.in_CC = true;
      break;
    }
  auto sr = min_product_length(s, C, target, 4, frontier_cap, threads);
  rep.min_m = sr.found_m;
  rep.level_sizes = sr.level_sizes;
  rep.witness_verified = sr.found_m.has_value();
  auto cw = factor_short(s, base, 1, 2, F.one());
  rep.factor_short_length = cw.length();
  rep.factor_short_verified = verify_certificate(s, cw);
  return rep;
}

Thm3Report check_thm3_staged() {
  const FormSetup s = preset("pr8", 3);
  const FieldCtx& F = s.F();
  Thm3Report rep;
  const Elem x = F.primitive();
  rep.x = F.format(x);
  rep.x_order = F.order(x);

  UMatrix alpha = UMatrix::identity(s.n);
  alpha(0, 0) = x;
  const UMatrix beta = mul(F, alpha, transvection_extra(s, 1, {F.zero(), F.one()}));
  rep.beta_member = bool(is_member(s, beta));
  const Elem d = det(F, beta);
  rep.det_beta_is_x = d == x;

  // Every factor ^tau beta^{+-1} has determinant d^{+-1}; T_12(1) has 1.
  rep.stage_a = det(F, transvection_short(s, 1, 2, F.one())) == F.one();
  for (int m = 1; m <= 3; ++m)
    for (int mask = 0; mask < (1 << m); ++mask) {
      int sum = 0;
      for (int b = 0; b < m; ++b) sum += (mask >> b & 1) ? 1 : -1;
      const bool trivial = F.pow(d, sum) == F.one();
      const bool expected = m == 2 && sum == 0;
      if (trivial != expected) rep.stage_a = false;
      ++rep.stage_a_sequences;
    }

  for (Elem k : F.units())
    if (F.mul(k, k) == F.one()) rep.stage_b_roots.push_back(F.format(k));
  rep.stage_b = rep.stage_b_roots.size() == 1 && rep.stage_b_roots[0] == F.format(F.one());

  for (Elem u1 : F.elements())
    for (Elem u2 : F.elements())
      for (Elem v1 : F.elements())
        for (Elem v2 : F.elements()) {
          ++rep.stage_c_tuples;
          if (F.mul(u1, u2) == F.add(F.mul(v1, v2), F.one()) && F.mul(u1, u1) == F.mul(v1, v1) &&
              F.mul(u2, u2) == F.mul(v2, v2))
            ++rep.stage_c_solutions;
        }
  rep.stage_c = rep.stage_c_tuples == 4096 && rep.stage_c_solutions == 0;
  return rep;
}

Thm4Report check_thm4_lower(int n, std::size_t cap, std::size_t frontier_cap,
                            unsigned threads) {
  Thm4Report rep;
  {
    const FormSetup s = preset("k0", n);
    const FieldCtx& F = s.F();
    const HPair one{F.one(), F.zero()};
    const UMatrix sigma =
        mul(F, transvection_extra(s, 1, one), transvection_extra(s, -1, one));
    const UMatrix target = transvection_extra(s, -1, one);
    const ClassOrbit C = orbit_bfs(s, sigma, cap, threads);
    rep.kx0_orbit_size = C.size();
    rep.kx0_in_orbit = C.contains(target) || C.contains(inverse(F, target));
    auto sr = min_product_length(s, C, target, 2, frontier_cap, threads);
    rep.kx0_min_m = sr.found_m;
    rep.kx0_witness_verified = sr.found_m.has_value();
  }
  {
    const FormSetup s = preset("pr4", n);
    const FieldCtx& F = s.F();
    const std::vector<int> tc{0, 1};
    const Elem t = F.from_coeffs(tc);
    UMatrix alpha = UMatrix::identity(s.n);
    alpha(0, 0) = t;
    const Elem d = det(F, alpha);
    rep.gf4_det = F.format(d);
    const UMatrix target = transvection_extra(s, 1, {F.one(), F.zero()});
    rep.gf4_det_obstruction =
        d != F.one() && F.inv(d) != F.one() && det(F, target) == F.one();
    auto cw = factor_tlevel(s, alpha, 1, F.one());
    rep.gf4_length = cw.length();
    rep.gf4_verified = verify_certificate(s, cw);
  }
  return rep;
}

ProbeReport probe_open_questions(const FormSetup& s, const UMatrix& sigma,
                                 const std::vector<Atom>& targets, int m_max, std::size_t cap,
                                 std::size_t frontier_cap, unsigned threads) {
  ProbeReport rep;
  rep.m_max = m_max;
  if (m_max <= 0) return rep;
  const ClassOrbit C = orbit_bfs(s, sigma, cap, threads);
  rep.orbit_size = C.size();
  for (const Atom& a : targets) {
    auto sr = min_product_length(s, C, atom_matrix(s, a), m_max, frontier_cap, threads);
    rep.rows.push_back({a, sr.found_m, sr.level_sizes});
  }
  return rep;
}

}  // namespace oddu
