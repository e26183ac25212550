#include "oddu/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <thread>

#include "oddu/error.hpp"
#include "oddu/presets.hpp"
#include "oddu/sharpness.hpp"
#include "oddu/text_io.hpp"

namespace oddu {

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

std::size_t env_cap(std::size_t fallback) {
  const char* v = std::getenv("ODDU_CAP");
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    unsigned long long c = std::stoull(v, &used);
    if (used == std::string(v).size() && c > 0) return std::size_t(c);
  } catch (const std::exception&) {
  }
  throw Error(Errc::Parse, std::string("ODDU_CAP must be a positive integer, got '") + v + "'");
}

struct Options {
  std::string setup;
  std::uint64_t seed = 1;
  int samples = 200;
  std::string matrix;
  std::string word;
  std::string target;
  std::string targets;
  std::string cert;
  std::string out;
  std::size_t cap = 0;
  std::size_t frontier_cap = 0;
  int mmax = 4;
  int n = 3;
  unsigned threads = 0;
};

std::string setup_line(const FormSetup& s) {
  std::string t = format_setup(s);
  std::replace(t.begin(), t.end(), '\n', ' ');
  while (!t.empty() && t.back() == ' ') t.pop_back();
  return "setup: " + t + "\n";
}

UMatrix element_arg(const FormSetup& s, const Options& o, std::string* ref) {
  if (o.matrix.empty() == o.word.empty())
    throw Error(Errc::Parse, "give exactly one of --matrix or --word");
  if (!o.matrix.empty()) {
    if (ref) *ref = o.matrix;
    UMatrix m = load_matrix(s.F(), o.matrix);
    if (m.n() != s.n) throw Error(Errc::RankOutOfRange, "matrix rank differs from setup rank");
    return m;
  }
  if (ref) *ref = "word:" + o.word;
  return eval_word(s, parse_word(s.F(), o.word));
}

std::string opt_m(const std::optional<int>& m) { return m ? std::to_string(*m) : "none"; }

std::string sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out.empty() ? "-" : out;
}

int do_relations(const Options& o, std::ostream& r) {
  const FormSetup s = load_setup(o.setup);
  if (o.samples < 1) throw Error(Errc::Parse, "--samples must be positive");
  const RelationReport rep = check_relations(s, o.samples, o.seed);
  r << setup_line(s) << "seed: " << o.seed << "\nsamples: " << o.samples << "\n";
  r << std::left << std::setw(10) << "relation" << std::setw(8) << "passed" << std::setw(8)
    << "failed" << "note\n";
  int failed = 0, skipped = 0;
  for (const auto& x : rep.results) {
    std::ostringstream row;
    row << std::left << std::setw(10) << x.name << std::setw(8) << x.passed << std::setw(8)
        << x.failed << (x.skipped ? "skipped (no admissible indices)" : x.counterexample);
    std::string line = row.str();
    while (!line.empty() && line.back() == ' ') line.pop_back();
    r << line << "\n";
    failed += x.failed;
    skipped += x.skipped;
  }
  r << "RESULT relations.ok=" << yn(rep.all_ok()) << " relations.failed=" << failed
    << " relations.skipped=" << skipped << " relations.samples=" << o.samples
    << " seed=" << o.seed << "\n";
  return rep.all_ok() ? 0 : 1;
}

int do_level(const Options& o, std::ostream& r) {
  const FormSetup s = load_setup(o.setup);
  const UMatrix m = element_arg(s, o, nullptr);
  const LevelClass lc = level_of(s, m);
  r << setup_line(s) << "seed: " << o.seed << "\n";
  r << "level: " << to_string(lc.kind) << "\n";
  r << "witness: " << (lc.witness.empty() ? "-" : lc.witness) << "\n";
  r << "RESULT level=" << to_string(lc.kind) << " seed=" << o.seed << "\n";
  return 0;
}

int do_factorize(const Options& o, std::ostream& r) {
  const FormSetup s = load_setup(o.setup);
  std::string base_ref;
  const UMatrix sigma = element_arg(s, o, &base_ref);
  if (o.target.empty()) throw Error(Errc::Parse, "--target is required");
  const Atom target = parse_atom(s.F(), o.target);
  const LevelClass lc = level_of(s, sigma);
  const ConjugateWord cw = factorize(s, sigma, target);
  const bool ok = verify_certificate(s, cw);

  CertificateText ct{base_ref, format_atom(s.F(), target), cw.factors};
  if (!o.out.empty()) {
    const std::filesystem::path cert(o.out);
    const std::filesystem::path base = cert.string() + ".base";
    write_file(base, format_matrix(s.F(), sigma));
    ct.base_ref = base.filename().string();
    write_file(cert, format_certificate(s.F(), ct));
  }
  r << setup_line(s) << "seed: " << o.seed << "\n";
  r << "level: " << to_string(lc.kind) << "\ntarget: " << ct.target_ref
    << "\nlength: " << cw.length() << "\ncertificate:\n"
    << format_certificate(s.F(), ct);
  r << "RESULT factorize.length=" << cw.length() << " factorize.verified=" << yn(ok)
    << " seed=" << o.seed << "\n";
  return ok ? 0 : 1;
}

int do_verify(const Options& o, std::ostream& r) {
  const FormSetup s = load_setup(o.setup);
  if (o.cert.empty()) throw Error(Errc::Parse, "--cert is required");
  const std::filesystem::path path(o.cert);
  const CertificateText ct = parse_certificate(s.F(), read_file(path));
  const ConjugateWord cw = resolve_certificate(s, ct, path.parent_path());
  const bool ok = verify_certificate(s, cw);
  r << setup_line(s) << "seed: " << o.seed << "\n";
  r << "base: " << ct.base_ref << "\ntarget: " << ct.target_ref << "\nlength: " << cw.length()
    << "\nverified: " << yn(ok) << "\n";
  r << "RESULT verify.ok=" << yn(ok) << " verify.length=" << cw.length() << " seed=" << o.seed
    << "\n";
  return ok ? 0 : 1;
}

int do_thm2(const Options& o, std::ostream& r) {
  auto rep = check_thm2(o.n, o.cap, o.frontier_cap, o.threads);
  r << "check: symplectic GF(2), n=" << rep.n << ", C = E-orbit of X(1,0,1), target S(1,2,1)\n";
  r << "seed: " << o.seed << "\n";
  r << "orbit size            " << rep.orbit_size << "\n";
  r << "C = C^-1              " << yn(rep.inverse_closed) << "\n";
  r << "target in C           " << yn(rep.in_C) << "\n";
  r << "target in CC          " << yn(rep.in_CC) << "\n";
  r << "least m (m_max=4)     " << opt_m(rep.min_m) << "\n";
  r << "|X^k|                 " << sizes(rep.level_sizes) << "\n";
  r << "factor_short length   " << rep.factor_short_length
    << (rep.factor_short_verified ? " (verified)" : " (NOT verified)") << "\n";
  r << "note: least m is computed for this instance only\n";
  r << "RESULT thm2.in_C=" << yn(rep.in_C) << " thm2.in_CC=" << yn(rep.in_CC)
    << " thm2.min_m=" << opt_m(rep.min_m) << " thm2.orbit=" << rep.orbit_size
    << " thm2.inverse_closed=" << yn(rep.inverse_closed)
    << " thm2.factor_short_length=" << rep.factor_short_length << " thm2.ok=" << yn(rep.ok())
    << "\n";
  return rep.ok() ? 0 : 1;
}

int do_thm3(const Options& o, std::ostream& r) {
  auto rep = check_thm3_staged();
  r << "check: Proctor GF(8), n=3, beta = diag(x at 0) X(1,0,1), x=" << rep.x << " of order "
    << rep.x_order << "\n";
  r << "seed: " << o.seed << "\n";
  r << "beta in G             " << yn(rep.beta_member) << "\n";
  r << "det(beta) = x         " << yn(rep.det_beta_is_x) << "\n";
  r << "(a) sign sequences    " << rep.stage_a_sequences << " checked, " << yn(rep.stage_a) << "\n";
  r << "(b) roots of k^2=1    ";
  for (std::size_t i = 0; i < rep.stage_b_roots.size(); ++i)
    r << (i ? " " : "") << rep.stage_b_roots[i];
  r << ", " << yn(rep.stage_b) << "\n";
  r << "(c) tuples            " << rep.stage_c_tuples << " checked, " << rep.stage_c_solutions
    << " solutions, " << yn(rep.stage_c) << "\n";
  r << "RESULT thm3.stage_a=" << yn(rep.stage_a) << " thm3.stage_b=" << yn(rep.stage_b)
    << " thm3.stage_c=" << yn(rep.stage_c) << " thm3.solutions=" << rep.stage_c_solutions
    << " thm3.ok=" << yn(rep.ok()) << "\n";
  return rep.ok() ? 0 : 1;
}

int do_thm4(const Options& o, std::ostream& r) {
  auto rep = check_thm4_lower(o.n, o.cap, o.frontier_cap, o.threads);
  r << "check: T level lower bounds, n=" << o.n << "\n";
  r << "seed: " << o.seed << "\n";
  r << "GF(2), mu=0, delta=K x 0, sigma = X(1,1,0) X(-1,1,0)\n";
  r << "  orbit size          " << rep.kx0_orbit_size << "\n";
  r << "  X(-1,1,0) in X      " << yn(rep.kx0_in_orbit) << "\n";
  r << "  least m (m_max=2)   " << opt_m(rep.kx0_min_m)
    << (rep.kx0_witness_verified ? " (witness verified)" : "") << "\n";
  r << "Proctor GF(4), alpha = diag(t at 0), target X(1,1,0)\n";
  r << "  det(alpha)          " << rep.gf4_det << "\n";
  r << "  length 1 excluded   " << yn(rep.gf4_det_obstruction) << "\n";
  r << "  certificate length  " << rep.gf4_length
    << (rep.gf4_verified ? " (verified)" : " (NOT verified)") << "\n";
  r << "RESULT thm4.kx0_in_orbit=" << yn(rep.kx0_in_orbit)
    << " thm4.kx0_min_m=" << opt_m(rep.kx0_min_m) << " thm4.kx0_orbit=" << rep.kx0_orbit_size
    << " thm4.gf4_det_obstruction=" << yn(rep.gf4_det_obstruction)
    << " thm4.gf4_length=" << rep.gf4_length << " thm4.ok=" << yn(rep.ok()) << "\n";
  return rep.ok() ? 0 : 1;
}

int do_probe(const Options& o, std::ostream& r) {
  const FormSetup s = load_setup(o.setup);
  const UMatrix sigma = element_arg(s, o, nullptr);
  const EWord targets = parse_word(s.F(), o.targets);
  for (const Atom& a : targets) validate_atom(s, a);
  auto rep = probe_open_questions(s, sigma, targets, o.mmax, o.cap, o.frontier_cap, o.threads);
  r << setup_line(s) << "seed: " << o.seed << "\nm_max: " << o.mmax
    << "\norbit size: " << rep.orbit_size << "\n";
  r << std::left << std::setw(20) << "target" << std::setw(8) << "min_m" << "|X^k|\n";
  for (const auto& row : rep.rows)
    r << std::setw(20) << format_atom(s.F(), row.target) << std::setw(8)
      << (row.min_m ? std::to_string(*row.min_m) : ">" + std::to_string(o.mmax))
      << sizes(row.level_sizes) << "\n";
  r << "note: empirical, no claim beyond m_max\n";
  r << "RESULT probe.rows=" << rep.rows.size() << " probe.orbit=" << rep.orbit_size
    << " probe.m_max=" << o.mmax;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) r << " probe.m" << i << "=" << opt_m(rep.rows[i].min_m);
  r << " seed=" << o.seed << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd unitary groups over finite fields: relations, levels, certificates, covering numbers"};
  app.require_subcommand(1);
  Options o;

  auto add_setup = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--setup", o.setup, "Setup file, or @preset[:n] (" +
                                                      [] {
                                                        std::string s;
                                                        for (auto& n : preset_names()) s += (s.empty() ? "" : ",") + n;
                                                        return s;
                                                      }() + ")");
    if (required) opt->required();
  };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed (echoed in the report)"); };
  auto add_out = [&](CLI::App* c, const std::string& what) { c->add_option("--out", o.out, what); };
  auto add_elem = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrix, "Matrix file (n=<n> then 2n+1 rows, storage order)");
    c->add_option("--word", o.word, "Element as an E-word, e.g. \"S(1,2,1);X(1,0,1)\"");
  };
  auto add_caps = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "Orbit cap (default 100000, or ODDU_CAP)");
    c->add_option("--frontier-cap", o.frontier_cap, "Cap on each product layer (default 2000000, or ODDU_CAP)");
    c->add_option("--threads", o.threads, "Worker threads for orbit and layer expansion (output does not depend on it)");
  };

  auto* rel = app.add_subcommand("relations", "Check the elementary relations on random samples");
  add_setup(rel, true);
  add_seed(rel);
  rel->add_option("--samples", o.samples, "Samples per relation (default 200)");
  add_out(rel, "Write the report here instead of stdout");

  auto* lvl = app.add_subcommand("level", "Classify the level of an element");
  add_setup(lvl, true);
  add_seed(lvl);
  add_elem(lvl);
  add_out(lvl, "Write the report here instead of stdout");

  auto* fac = app.add_subcommand("factorize", "Emit a conjugate-word certificate for a transvection target");
  add_setup(fac, true);
  add_seed(fac);
  add_elem(fac);
  fac->add_option("--target", o.target, "Target atom, S(i,j,x) or X(i,x,y)")->required();
  add_out(fac, "Write the certificate here (plus <out>.base holding the matrix)");

  auto* ver = app.add_subcommand("verify", "Re-check a certificate file");
  add_setup(ver, true);
  add_seed(ver);
  ver->add_option("--cert", o.cert, "Certificate file")->required();
  add_out(ver, "Write the report here instead of stdout");

  auto* shp = app.add_subcommand("sharpness", "Lower-bound reproductions and covering probes");
  shp->require_subcommand(1);
  auto* t2 = shp->add_subcommand("thm2", "Symplectic GF(2): T_12(1) outside C and CC, least m");
  t2->add_option("--n", o.n, "Rank (default 3)");
  add_seed(t2);
  add_caps(t2);
  add_out(t2, "Write the report here instead of stdout");
  auto* t3 = shp->add_subcommand("thm3", "Proctor GF(8): staged determinant and exhaustion checks");
  add_seed(t3);
  add_out(t3, "Write the report here instead of stdout");
  auto* t4 = shp->add_subcommand("thm4", "T level: length 2 needed in both lower-bound cases");
  t4->add_option("--n", o.n, "Rank (default 3)");
  add_seed(t4);
  add_caps(t4);
  add_out(t4, "Write the report here instead of stdout");

  auto add_probe = [&](CLI::App* c) {
    add_setup(c, true);
    add_seed(c);
    add_elem(c);
    c->add_option("--targets", o.targets, "Targets as a ';' list of atoms")->required();
    c->add_option("--mmax", o.mmax, "Largest product length searched (default 4)");
    add_caps(c);
    add_out(c, "Write the report here instead of stdout");
  };
  auto* sp = shp->add_subcommand("probe", "Least m with target in (C u C^-1)^m");
  add_probe(sp);
  auto* prb = app.add_subcommand("probe", "Same as 'sharpness probe'");
  add_probe(prb);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream report;
  int code = 2;
  try {
    if (o.cap == 0) o.cap = env_cap(kDefaultOrbitCap);
    if (o.frontier_cap == 0) o.frontier_cap = env_cap(kDefaultFrontierCap);
    if (o.threads == 0) o.threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    if (rel->parsed()) code = do_relations(o, report);
    else if (lvl->parsed()) code = do_level(o, report);
    else if (fac->parsed()) code = do_factorize(o, report);
    else if (ver->parsed()) code = do_verify(o, report);
    else if (t2->parsed()) code = do_thm2(o, report);
    else if (t3->parsed()) code = do_thm3(o, report);
    else if (t4->parsed()) code = do_thm4(o, report);
    else if (sp->parsed() || prb->parsed()) code = do_probe(o, report);
    if (!o.out.empty() && !fac->parsed()) write_file(o.out, report.str());
    else out << report.str();
  } catch (const Error& e) {
    out << report.str();
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace oddu
