#include "oddu/text_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "oddu/error.hpp"
#include "oddu/presets.hpp"

namespace oddu {

namespace {

std::string trim(std::string_view t) {
  std::size_t a = 0, b = t.size();
  while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
  return std::string(t.substr(a, b - a));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto& l : out)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return out;
}

[[noreturn]] void at_line(int line, const Error& e) {
  throw Error(e.code(), "line " + std::to_string(line) + ": " + e.detail());
}

int parse_int(const std::string& v, int line, const char* key) {
  try {
    std::size_t used = 0;
    int out = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + key + " needs an integer, got '" +
                                 v + "'");
  }
}

// "(x,y)" with x and y literals of equal digit count.
HPair parse_pair(const FieldCtx& F, std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw Error(Errc::Parse, "pair must look like (x,y), got '" + t + "'");
  auto d = parse_digit_list(std::string_view(t).substr(1, t.size() - 2));
  if (d.empty() || d.size() % 2 || int(d.size()) > 2 * F.degree())
    throw Error(Errc::Parse, "pair '" + t + "' needs 2 literals of equal length");
  const std::size_t h = d.size() / 2;
  return {F.from_digits(std::span<const long long>(d.data(), h)),
          F.from_digits(std::span<const long long>(d.data() + h, h))};
}

std::vector<int> first_irreducible(int p, int k) {
  std::vector<int> poly(std::size_t(k + 1), 0);
  poly[std::size_t(k)] = 1;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long long c = 0; c < total; ++c) {
    long long v = c;
    for (int i = 0; i < k; ++i) {
      poly[std::size_t(i)] = int(v % p);
      v /= p;
    }
    if (is_irreducible(p, poly)) return poly;
  }
  throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

FormSetup parse_setup(std::string_view text) {
  static const char* const known[] = {"field.p", "field.deg", "field.modulus", "involution",
                                      "lambda",  "mu",        "delta",         "n"};
  std::map<std::string, std::pair<std::string, int>> kv;
  int line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected key=value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string val = trim(std::string_view(line).substr(eq + 1));
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (kv.count(key))
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    kv[key] = {val, line_no};
  }
  auto need = [&](const char* key) -> const std::pair<std::string, int>& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(Errc::Parse, std::string("missing key '") + key + "'");
    return it->second;
  };

  const auto& [p_text, p_line] = need("field.p");
  const int p = parse_int(p_text, p_line, "field.p");
  int k = 1, k_line = p_line;
  if (auto it = kv.find("field.deg"); it != kv.end()) {
    k = parse_int(it->second.first, it->second.second, "field.deg");
    k_line = it->second.second;
  }
  InvolutionKind inv = InvolutionKind::Identity;
  int inv_line = p_line;
  if (auto it = kv.find("involution"); it != kv.end()) {
    inv_line = it->second.second;
    if (it->second.first == "identity") inv = InvolutionKind::Identity;
    else if (it->second.first == "frobenius") inv = InvolutionKind::FrobeniusHalf;
    else
      throw Error(Errc::Parse, "line " + std::to_string(inv_line) +
                                   ": involution must be identity or frobenius");
  }

  std::shared_ptr<FieldCtx> F;
  const auto mod_it = kv.find("field.modulus");
  try {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    std::vector<int> modulus;
    if (mod_it != kv.end())
      for (long long d : parse_digit_list(mod_it->second.first)) modulus.push_back(int(d));
    else if (k >= 1)
      modulus = first_irreducible(p, k);
    F = std::make_shared<FieldCtx>(p, k, modulus, inv);
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::NotPrime: at_line(p_line, e);
      case Errc::BadInvolution: at_line(inv_line, e);
      case Errc::FieldTooLarge: at_line(k_line, e);
      default: at_line(mod_it != kv.end() ? mod_it->second.second : k_line, e);
    }
  }

  auto elem = [&](const char* key) {
    const auto& [v, line] = need(key);
    try {
      return F->parse(v);
    } catch (const Error& e) {
      at_line(line, e);
    }
  };
  const Elem lambda = elem("lambda");
  const Elem mu = elem("mu");

  DeltaKind kind = DeltaKind::Max;
  std::vector<HPair> gens;
  const auto& [d_text, d_line] = need("delta");
  if (d_text == "min") kind = DeltaKind::Min;
  else if (d_text == "max") kind = DeltaKind::Max;
  else if (d_text == "kx0") kind = DeltaKind::KTimesZero;
  else if (d_text.rfind("gen:", 0) == 0) {
    kind = DeltaKind::Generated;
    std::string_view rest = std::string_view(d_text).substr(4);
    try {
      std::size_t start = 0;
      while (start < rest.size()) {
        std::size_t end = rest.find(';', start);
        std::string tok = trim(rest.substr(start, end == std::string_view::npos ? end : end - start));
        if (!tok.empty()) gens.push_back(parse_pair(*F, tok));
        if (end == std::string_view::npos) break;
        start = end + 1;
      }
    } catch (const Error& e) {
      at_line(d_line, e);
    }
  } else {
    throw Error(Errc::Parse, "line " + std::to_string(d_line) +
                                 ": delta must be min, max, kx0 or gen:(x,y);...");
  }

  const auto& [n_text, n_line] = need("n");
  const int n = parse_int(n_text, n_line, "n");

  try {
    validate_scalars(*F, lambda, mu);
  } catch (const Error& e) {
    at_line(need(e.code() == Errc::MuConditionFailed ? "mu" : "lambda").second, e);
  }
  try {
    return make_setup(F, {lambda, mu}, kind, gens, n);
  } catch (const Error& e) {
    at_line(e.code() == Errc::RankOutOfRange ? n_line : d_line, e);
  }
}

FormSetup load_setup(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') {
    std::string name = ref.substr(1);
    int n = 3;
    if (auto c = name.find(':'); c != std::string::npos) {
      n = parse_int(name.substr(c + 1), 0, "preset rank");
      name = name.substr(0, c);
    }
    return preset(name, n);
  }
  return parse_setup(read_file(ref));
}

std::string format_setup(const FormSetup& s) {
  const FieldCtx& F = s.F();
  std::ostringstream o;
  o << "field.p=" << F.p() << "\nfield.deg=" << F.degree() << "\nfield.modulus=";
  for (std::size_t i = 0; i < F.modulus().size(); ++i) o << (i ? "," : "") << F.modulus()[i];
  o << "\ninvolution="
    << (F.involution() == InvolutionKind::Identity ? "identity" : "frobenius")
    << "\nlambda=" << F.format(s.lambda()) << "\nmu=" << F.format(s.mu()) << "\ndelta=";
  switch (s.delta.kind()) {
    case DeltaKind::Min: o << "min"; break;
    case DeltaKind::Max: o << "max"; break;
    case DeltaKind::KTimesZero: o << "kx0"; break;
    case DeltaKind::Generated: {
      o << "gen:";
      bool first = true;
      for (HPair g : s.delta.generators()) {
        o << (first ? "" : ";") << "(" << F.format(g.x) << "," << F.format(g.y) << ")";
        first = false;
      }
      break;
    }
  }
  o << "\nn=" << s.n << "\n";
  return o.str();
}

UMatrix parse_matrix(const FieldCtx& F, std::string_view text) {
  std::vector<std::string> rows;
  for (const std::string& raw : split_lines(text)) {
    std::string l = trim(raw.substr(0, raw.find('#')));
    if (!l.empty()) rows.push_back(l);
  }
  if (rows.empty() || rows[0].rfind("n=", 0) != 0)
    throw Error(Errc::Parse, "matrix file must start with n=<n>");
  const int n = parse_int(trim(rows[0].substr(2)), 1, "n");
  if (n < 1 || n > 64) throw Error(Errc::RankOutOfRange, "matrix rank " + std::to_string(n));
  const int d = 2 * n + 1;
  if (int(rows.size()) != d + 1)
    throw Error(Errc::Parse, "expected " + std::to_string(d) + " rows, got " +
                                 std::to_string(rows.size() - 1));
  UMatrix m(n);
  for (int r = 0; r < d; ++r) {
    std::istringstream in(rows[std::size_t(r + 1)]);
    std::string tok;
    int c = 0;
    while (in >> tok) {
      if (c >= d)
        throw Error(Errc::Parse, "row " + std::to_string(r + 1) + " has too many entries");
      auto digits = parse_digit_list(tok);
      if (digits.empty() || int(digits.size()) > F.degree())
        throw Error(Errc::Parse, "bad literal '" + tok + "'");
      for (long long v : digits)
        if (v < 0 || v >= F.p()) throw Error(Errc::Parse, "digit out of range in '" + tok + "'");
      m.raw(r, c++) = F.parse(tok);
    }
    if (c != d)
      throw Error(Errc::Parse, "row " + std::to_string(r + 1) + " needs " + std::to_string(d) +
                                   " entries");
  }
  return m;
}

std::string format_matrix(const FieldCtx& F, const UMatrix& m) {
  std::string out = "n=" + std::to_string(m.n()) + "\n";
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out += ' ';
      out += F.format(m.raw(r, c));
    }
    out += '\n';
  }
  return out;
}

UMatrix load_matrix(const FieldCtx& F, const std::filesystem::path& path) {
  return parse_matrix(F, read_file(path));
}

std::string format_certificate(const FieldCtx& F, const CertificateText& c) {
  std::string out = "base: " + c.base_ref + "\ntarget: " + c.target_ref + "\n";
  for (const ConjFactor& f : c.factors) {
    out += "conj: " + (f.conj.empty() ? std::string("e") : format_word(F, f.conj));
    out += f.exp > 0 ? " exp: +1\n" : " exp: -1\n";
  }
  return out;
}

CertificateText parse_certificate(const FieldCtx& F, std::string_view text) {
  CertificateText c;
  bool have_base = false, have_target = false;
  int line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    const std::string l = trim(raw.substr(0, raw.find('#')));
    if (l.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": " + what);
    };
    if (l.rfind("base:", 0) == 0) {
      if (have_base) fail("duplicate base");
      c.base_ref = trim(std::string_view(l).substr(5));
      have_base = true;
    } else if (l.rfind("target:", 0) == 0) {
      if (have_target) fail("duplicate target");
      c.target_ref = trim(std::string_view(l).substr(7));
      have_target = true;
    } else if (l.rfind("conj:", 0) == 0) {
      auto e = l.rfind("exp:");
      if (e == std::string::npos) fail("factor line needs 'exp:'");
      std::string word = trim(std::string_view(l).substr(5, e - 5));
      std::string exp = trim(std::string_view(l).substr(e + 4));
      ConjFactor f;
      if (exp == "+1" || exp == "1") f.exp = 1;
      else if (exp == "-1") f.exp = -1;
      else fail("exp must be +1 or -1");
      try {
        if (word != "e") f.conj = parse_word(F, word);
      } catch (const Error& err) {
        at_line(line_no, err);
      }
      c.factors.push_back(std::move(f));
    } else {
      fail("unexpected line '" + l + "'");
    }
  }
  if (!have_base || !have_target) throw Error(Errc::Parse, "certificate needs base: and target:");
  return c;
}

namespace {

UMatrix resolve_ref(const FormSetup& s, const std::string& ref, const std::filesystem::path& dir,
                    bool allow_atom) {
  if (ref.rfind("word:", 0) == 0) {
    EWord w = parse_word(s.F(), std::string_view(ref).substr(5));
    return eval_word(s, w);
  }
  if (allow_atom && ref.size() > 2 && ref[1] == '(' && std::string("SXDP").find(ref[0]) != std::string::npos)
    return atom_matrix(s, parse_atom(s.F(), ref));
  std::filesystem::path p(ref);
  if (p.is_relative()) p = dir / p;
  return load_matrix(s.F(), p);
}

}  // namespace

ConjugateWord resolve_certificate(const FormSetup& s, const CertificateText& c,
                                  const std::filesystem::path& dir) {
  ConjugateWord cw;
  cw.base = resolve_ref(s, c.base_ref, dir, false);
  cw.target = resolve_ref(s, c.target_ref, dir, true);
  cw.factors = c.factors;
  if (cw.base.n() != s.n || cw.target.n() != s.n)
    throw Error(Errc::RankOutOfRange, "certificate rank differs from setup rank");
  return cw;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot read '" + path.string() + "'");
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace oddu
