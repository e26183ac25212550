#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oddu/odd_unitary.hpp"

namespace oddu {

enum class AtomKind { Short, Extra, Diag, Perm };

/// Short(i,j,x) = T_ij(x), Extra(i,(x,y)) = T_i(x,y), Diag(i,j,x) = D_ij(x),
/// Perm(i,j) = P_ij. Unused fields stay zero.
struct Atom {
  AtomKind kind = AtomKind::Short;
  int i = 0;
  int j = 0;
  Elem x;
  Elem y;

  static Atom shorty(int i, int j, Elem x) { return {AtomKind::Short, i, j, x, {}}; }
  static Atom extra(int i, HPair a) { return {AtomKind::Extra, i, 0, a.x, a.y}; }
  static Atom diag(int i, int j, Elem x) { return {AtomKind::Diag, i, j, x, {}}; }
  static Atom perm(int i, int j) { return {AtomKind::Perm, i, j, {}, {}}; }

  friend bool operator==(const Atom&, const Atom&) = default;
};

using EWord = std::vector<Atom>;

UMatrix transvection_short(const FormSetup& s, int i, int j, Elem x);
UMatrix transvection_extra(const FormSetup& s, int i, HPair a);

struct Decomposed {
  UMatrix matrix;
  EWord word;
};

Decomposed build_diag(const FormSetup& s, int i, int j, Elem x);
Decomposed build_perm(const FormSetup& s, int i, int j);

/// Throws BadIndices / ParameterNotInDelta / ZeroScalar on an invalid atom.
void validate_atom(const FormSetup& s, const Atom& a);
UMatrix atom_matrix(const FormSetup& s, const Atom& a);
UMatrix eval_word(const FormSetup& s, const EWord& w);
Atom inverse_atom(const FormSetup& s, const Atom& a);
EWord inverse_word(const FormSetup& s, const EWord& w);
EWord concat(EWord a, const EWord& b);

/// Uniformly chosen Short or Extra atom; Extra parameters come from the
/// materialized parameter set.
Atom random_transvection(const FormSetup& s, std::mt19937_64& rng);
EWord random_word(const FormSetup& s, std::mt19937_64& rng, int length);

/// All elementary transvections with nonzero parameter (the conjugating set
/// X used by the sharpness searches), in deterministic order.
std::vector<Atom> all_transvections(const FormSetup& s);

/// Recognizes a matrix equal to a single nontrivial short or extra short
/// transvection.
std::optional<Atom> recognize_transvection(const FormSetup& s, const UMatrix& m);

std::string format_atom(const FieldCtx& F, const Atom& a);
std::string format_word(const FieldCtx& F, const EWord& w);
Atom parse_atom(const FieldCtx& F, std::string_view text);
EWord parse_word(const FieldCtx& F, std::string_view text);

struct RelationResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  bool skipped = false;
  std::string counterexample;
};

struct RelationReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<RelationResult> results;
  bool all_ok() const;
};

RelationReport check_relations(const FormSetup& s, int samples, std::uint64_t seed);

}  // namespace oddu
