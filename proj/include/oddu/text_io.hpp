#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "oddu/factor.hpp"

namespace oddu {

/// Setup file: key=value lines, '#' starts a comment. Keys: field.p, field.deg,
/// field.modulus, involution, lambda, mu, delta, n. Errors carry "line N:".
FormSetup parse_setup(std::string_view text);
/// A path, or "@name" / "@name:n" for a preset.
FormSetup load_setup(const std::string& ref);
std::string format_setup(const FormSetup& s);

/// "n=<n>" then 2n+1 rows in storage order (1..n, 0, -n..-1).
UMatrix parse_matrix(const FieldCtx& F, std::string_view text);
std::string format_matrix(const FieldCtx& F, const UMatrix& m);
UMatrix load_matrix(const FieldCtx& F, const std::filesystem::path& path);

/// Certificate file as written: refs are kept verbatim.
///   base: <matrix file | word:<E-word>>
///   target: <atom | matrix file | word:<E-word>>
///   conj: <E-word or e> exp: +1|-1
struct CertificateText {
  std::string base_ref;
  std::string target_ref;
  std::vector<ConjFactor> factors;
};

std::string format_certificate(const FieldCtx& F, const CertificateText& c);
CertificateText parse_certificate(const FieldCtx& F, std::string_view text);
/// Resolves refs (file paths relative to `dir`) into a checkable certificate.
ConjugateWord resolve_certificate(const FormSetup& s, const CertificateText& c,
                                  const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace oddu
