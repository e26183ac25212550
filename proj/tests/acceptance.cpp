// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "oddu/error.hpp"
#include "oddu/presets.hpp"
#include "oddu/sharpness.hpp"
#include "oddu/text_io.hpp"

using namespace oddu;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::vector<std::string> kRelationSetups = {"sp2", "pr2", "pr8", "gf5", "gf9"};
const std::vector<std::string> kAllSetups = {"sp2", "pr2", "pr8", "gf5", "gf9", "k0", "pr4", "gf3"};

UVector random_vector(const FormSetup& s, std::mt19937_64& rng) {
  UVector u(s.n);
  for (auto& c : u.c) c = Elem{std::uint16_t(rng() % std::uint64_t(s.F().size()))};
  return u;
}

UVector add(const FieldCtx& F, const UVector& u, const UVector& v) {
  UVector w(u.n);
  for (std::size_t i = 0; i < w.c.size(); ++i) w.c[i] = F.add(u.c[i], v.c[i]);
  return w;
}

UVector scale(const FieldCtx& F, const UVector& u, Elem x) {
  UVector w = u;
  for (auto& c : w.c) c = F.mul(c, x);
  return w;
}

Outcome relations() {
  Outcome o;
  auto t0 = Clock::now();
  int checked = 0;
  for (const auto& name : kRelationSetups)
    for (int n : {3, 4}) {
      auto rep = check_relations(preset(name, n), 200, 20240601);
      for (const auto& r : rep.results) {
        if (r.failed) o.fail(name + " n=" + std::to_string(n) + " " + r.name + ": " + r.counterexample);
        if (!r.skipped && r.passed < 200)
          o.fail(name + " " + r.name + " only " + std::to_string(r.passed) + " samples");
        checked += r.skipped ? 0 : 1;
      }
    }
  double dt = since(t0);
  if (dt >= 60) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = std::to_string(checked) + " relation runs, " + std::to_string(dt) + " s";
  return o;
}

Outcome membership() {
  Outcome o;
  std::mt19937_64 rng(2);
  int words = 0, corrupt = 0;
  for (const auto& name : kAllSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    int cw = 0, cc = 0;
    while (cw < 500 || cc < 100) {
      UMatrix g = eval_word(s, random_word(s, rng, 1 + int(rng() % 20)));
      if (cw < 500) {
        ++cw;
        if (!is_member(s, g) || !member_oracle(s, g)) o.fail(name + ": word not accepted");
      }
      if (cc < 100) {
        UMatrix c = g;
        int r = int(rng() % 7), k = int(rng() % 7);
        c.raw(r, k) = F.add(c.raw(r, k), Elem{std::uint16_t(1 + rng() % std::uint64_t(F.size() - 1))});
        ++cc;
        if (bool(is_member(s, c)) != member_oracle(s, c)) o.fail(name + ": disagreement on corruption");
      }
    }
    words += cw;
    corrupt += cc;
  }
  if (o.ok) o.detail = std::to_string(words) + " words, " + std::to_string(corrupt) + " corruptions, 100% agreement";
  return o;
}

Outcome polarity_identities() {
  Outcome o;
  std::mt19937_64 rng(3);
  int count = 0;
  for (const auto& name : kAllSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    auto mins = delta_min_elements(s);
    for (int t = 0; t < 200; ++t, ++count) {
      UMatrix g = eval_word(s, random_word(s, rng, 10));
      UVector u = random_vector(s, rng), v = random_vector(s, rng);
      Elem x{std::uint16_t(rng() % std::uint64_t(F.size()))};
      Elem y{std::uint16_t(rng() % std::uint64_t(F.size()))};
      if (polarity(s, apply(F, g, u)) != row_apply(F, polarity(s, u), inverse(F, g)))
        o.fail(name + ": polarity does not intertwine");
      Elem b = form_B(s, u, v);
      if (dot(F, polarity(s, u), v) != b) o.fail(name + ": tilde(u) v != B(u,v)");
      if (form_B(s, add(F, u, v), v) != F.add(b, form_B(s, v, v))) o.fail(name + ": B not additive");
      if (form_B(s, scale(F, u, x), scale(F, v, y)) != F.mul(F.mul(F.bar(x), b), y))
        o.fail(name + ": B not sesquilinear");
      if (b != F.mul(F.bar(form_B(s, v, u)), s.lambda())) o.fail(name + ": B not lambda-Hermitian");
      if (form_Q(s, scale(F, u, x)) != h_scale(s, 1, form_Q(s, u), x)) o.fail(name + ": Q(ux)");
      if (trace(s, form_Q(s, u)) != form_B(s, u, u)) o.fail(name + ": tr Q(u) != B(u,u)");
      HPair rhs = h_add(s, 1, h_add(s, 1, form_Q(s, u), form_Q(s, v)), {F.zero(), b});
      HPair diff = h_sub(s, 1, form_Q(s, add(F, u, v)), rhs);
      if (std::find(mins.begin(), mins.end(), diff) == mins.end()) o.fail(name + ": Q(u+v)");
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome decompositions() {
  Outcome o;
  int count = 0;
  for (const auto& name : kAllSetups) {
    auto s = preset(name, 3);
    for (int i : theta_hb(3))
      for (int j : theta_hb(3)) {
        if (i == j || i == -j) continue;
        auto p = build_perm(s, i, j);
        ++count;
        if (eval_word(s, p.word) != p.matrix) o.fail(name + ": P word");
        for (Elem x : s.F().units()) {
          auto d = build_diag(s, i, j, x);
          ++count;
          if (eval_word(s, d.word) != d.matrix) o.fail(name + ": D word");
        }
      }
  }
  if (o.ok) o.detail = std::to_string(count) + " word/closed-form pairs";
  return o;
}

Outcome factor_bounds() {
  Outcome o;
  std::mt19937_64 rng(5);
  int shorts = 0, extras = 0;
  double worst = 0;
  for (const auto& name : kAllSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    for (int t = 0; t < 50; ++t) {
      UMatrix sigma;
      do sigma = eval_word(s, random_word(s, rng, 1 + int(rng() % 12)));
      while (level_of(s, sigma).kind != LevelKind::Full);
      const auto hb = theta_hb(3);
      int i = hb[rng() % hb.size()], j;
      do j = hb[rng() % hb.size()];
      while (j == i || j == -i);
      Elem x = F.units()[rng() % F.units().size()];
      auto t0 = Clock::now();
      auto cw = factor_short(s, sigma, i, j, x);
      bool ok = verify_certificate(s, cw);
      double dt = since(t0);
      worst = std::max(worst, dt);
      ++shorts;
      if (cw.length() > 4 || !ok || dt >= 1) o.fail(name + ": short certificate out of bounds");
      const auto& par = s.delta_signed(-eps(i)).elements();
      if (par.size() < 2) continue;
      HPair a = par[1 + rng() % (par.size() - 1)];
      t0 = Clock::now();
      auto ce = factor_extra(s, sigma, i, a);
      ok = verify_certificate(s, ce);
      dt = since(t0);
      worst = std::max(worst, dt);
      ++extras;
      if (ce.length() > 12 || !ok || dt >= 1) o.fail(name + ": extra certificate out of bounds");
    }
  }
  if (o.ok)
    o.detail = std::to_string(shorts) + " short, " + std::to_string(extras) +
               " extra, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome tlevel_bounds() {
  Outcome o;
  std::mt19937_64 rng(6);
  int count = 0;
  for (const auto& [name, bound] : std::vector<std::pair<std::string, std::size_t>>{
           {"pr2", 1}, {"k0", 2}, {"pr4", 2}}) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    std::vector<Atom> gens;
    for (const Atom& a : all_transvections(s))
      if (a.kind == AtomKind::Extra && a.y.v == 0) gens.push_back(a);
    int done = 0;
    while (done < 40) {
      EWord w;
      for (int k = 0, m = 1 + int(rng() % 4); k < m; ++k) w.push_back(gens[rng() % gens.size()]);
      UMatrix sigma = conj(F, eval_word(s, random_word(s, rng, 4)), eval_word(s, w));
      if (level_of(s, sigma).kind != LevelKind::TLevel) continue;
      ++done;
      for (int i : theta_hb(3))
        for (Elem x : F.units()) {
          auto cw = factor_tlevel(s, sigma, i, x);
          ++count;
          if (cw.length() > bound || !verify_certificate(s, cw))
            o.fail(name + ": T-level certificate of length " + std::to_string(cw.length()));
        }
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " certificates";
  return o;
}

Outcome symplectic_lower() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = check_thm2(3, kDefaultOrbitCap, kDefaultFrontierCap, 4);
  double dt = since(t0);
  if (r.orbit_size != 63) o.fail("orbit size " + std::to_string(r.orbit_size));
  if (r.in_C || r.in_CC) o.fail("target found in C or CC");
  if (!r.min_m || (*r.min_m != 3 && *r.min_m != 4)) o.fail("least m not in {3,4}");
  if (!r.witness_verified) o.fail("witness does not verify");
  if (dt >= 300) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok)
    o.detail = "orbit 63, least m for this instance = " + std::to_string(*r.min_m) + ", " +
               std::to_string(dt) + " s";
  return o;
}

Outcome proctor_staged() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = check_thm3_staged();
  double dt = since(t0);
  if (!r.stage_a) o.fail("stage (a)");
  if (!r.stage_b) o.fail("stage (b)");
  if (!r.stage_c || r.stage_c_tuples != 4096 || r.stage_c_solutions != 0) o.fail("stage (c)");
  if (!r.ok()) o.fail("report not ok");
  if (dt >= 10) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = "x of order " + std::to_string(r.x_order) + ", 0/4096 tuples, " + std::to_string(dt) + " s";
  return o;
}

Outcome tlevel_lower() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = check_thm4_lower(3, kDefaultOrbitCap, kDefaultFrontierCap, 4);
  double dt = since(t0);
  if (r.kx0_orbit_size == 0 || r.kx0_orbit_size >= kDefaultOrbitCap) o.fail("orbit not within cap");
  if (r.kx0_in_orbit) o.fail("target in orbit");
  if (r.kx0_min_m != 2 || !r.kx0_witness_verified) o.fail("target not found in X^2");
  if (dt >= 300) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = "orbit " + std::to_string(r.kx0_orbit_size) + ", found in X^2, " + std::to_string(dt) + " s";
  return o;
}

std::pair<int, std::string> spawn(const std::string& args) {
  std::string cmd = std::string(ODDU_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Outcome determinism() {
  Outcome o;
  fs::path dir = fs::temp_directory_path() / ("oddu_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> runs = {
      "relations --setup @sp2 --samples 200 --seed 7",
      "relations --setup @gf9:4 --samples 50 --seed 11",
      "level --setup @pr2 --word 'X(1,1,0)'",
      "sharpness thm2 --threads 2",
      "sharpness thm3",
      "sharpness thm4",
      "probe --setup @sp2 --word 'X(1,0,1)' --targets 'S(1,2,1);S(1,-2,1);X(2,0,1)' --mmax 4",
  };
  struct Fac {
    std::string setup, word, target;
  };
  const std::vector<Fac> facs = {
      {"@sp2", "X(1,0,1)", "S(1,2,1)"},
      {"@sp2", "X(1,0,1)", "X(-2,0,1)"},
      {"@gf5", "D(1,2,2)", "S(1,3,1)"},
      {"@pr2", "X(1,1,0);X(2,1,0)", "X(1,1,0)"},
      {"@k0", "X(1,1,0)", "X(2,1,0)"},
      {"@pr4", "S(1,2,0,1);X(3,1,1,0,1)", "X(-1,1,0,0,1)"},
      {"@gf9", "S(1,-2,1,1);X(2,0,0,0,0)", "S(3,1,0,2)"},
  };
  int certs = 0;
  for (std::size_t k = 0; k < facs.size(); ++k) {
    fs::path cert = dir / ("c" + std::to_string(k) + ".txt");
    std::string args = "factorize --setup " + facs[k].setup + " --word '" + facs[k].word +
                       "' --target '" + facs[k].target + "'";
    runs.push_back(args);
    auto [code, out] = spawn(args + " --out " + cert.string());
    if (code != 0) {
      o.fail("factorize failed: " + args + ": " + out);
      continue;
    }
    auto v = spawn("verify --setup " + facs[k].setup + " --cert " + cert.string());
    if (v.first != 0) o.fail("certificate does not re-verify: " + cert.string());
    ++certs;
  }
  for (const auto& a : runs) {
    auto r1 = spawn(a);
    auto r2 = spawn(a);
    if (r1.first != 0) o.fail("run failed: " + a + ": " + r1.second);
    if (r1 != r2) o.fail("output differs: " + a);
  }
  fs::remove_all(dir);
  if (o.ok)
    o.detail = std::to_string(runs.size()) + " runs byte-identical, " + std::to_string(certs) +
               " certificates re-verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"relation suite", relations},
      {"membership oracle equivalence", membership},
      {"polarity and form identities", polarity_identities},
      {"D/P decompositions", decompositions},
      {"factorization bounds", factor_bounds},
      {"T-level bounds", tlevel_bounds},
      {"symplectic GF(2) lower bound", symplectic_lower},
      {"Proctor GF(8) staged checks", proctor_staged},
      {"T-level lower bound, K x 0 case", tlevel_lower},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
