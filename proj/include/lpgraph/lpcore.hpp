#pragma once

#include <string>
#include <vector>

#include "lpgraph/poly.hpp"

namespace lpgraph {

/// A seed of rank n over the position symbols Z_1..Z_n.
///
/// vars[p] grounds Z_{p+1} in the ambient variables (X/A, or any symbols not
/// of tag Z); exchange[p] is F_{p+1}, a polynomial in the other Z's with
/// coefficients in Z[A]; hat_den[p] is F/hatF, a monomial in the Z's.
struct Seed {
  std::vector<LaurentPoly> vars;
  std::vector<LaurentPoly> exchange;
  std::vector<Monomial> hat_den;

  int n() const { return static_cast<int>(vars.size()); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Assembles a seed and fills the hat denominators from
/// hatF_i = prod_{j != i} Z_j^{-den(F_i, Z_j, F_j)} F_i.
/// Throws InvalidInput on size mismatch or when a denominator is undefined.
Seed make_seed(std::vector<LaurentPoly> vars, std::vector<LaurentPoly> exchange);

/// p divided by its Z-monomial content; A-factors belong to the
/// coefficients and stay.
LaurentPoly without_z_content(const LaurentPoly& p);

/// Position symbol Z_p (1-based).
inline Var zsym(int p) { return Var::Z(p); }

struct SeedReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks that each F_i is a nonzero non-unit polynomial in the Z's and A's,
/// is divisible by no Z, does not involve Z_i, and that the hat cache
/// matches both the den formula and the defining property: substituting
/// Z_j <- F_j / Z into hatF_i gives a Laurent polynomial not divisible by F_j.
/// Irreducibility is not tested.
SeedReport validate_seed(const Seed& t);

/// F_i / hat_den[i] (1-based position).
LaurentPoly hat_f(const Seed& t, int i);

/// The grounded value of a polynomial over the seed's Z symbols.
LaurentPoly ground(const Seed& t, const LaurentPoly& p);

/// Mutation at position i (1-based): x'_i = hatF_i / x_i, F'_j through
/// substitution, iterated removal of common factors with hatF_i|_{Z_j<-0},
/// and the monomial correction. Signs: each F' and the grounded x'_i have a
/// positive least term. Throws Internal when a step that must be exact
/// is not.
Seed mutate(const Seed& t, int i);

/// Positionwise equivalence: x_i / x'_i = +-1 and F_i / F'_i = +-1 in the
/// ambient field.
bool seeds_equivalent(const Seed& a, const Seed& b);

struct CommutationReport {
  bool precondition = false;
  std::string reason;        // why the precondition failed
  bool commutes = false;     // mu_i mu_j t ~ mu_j mu_i t
  bool four_cycle = false;   // mu_j mu_i mu_j mu_i t ~ t and mu_i mu_j mu_i mu_j t ~ t
  bool ok() const { return precondition && commutes && four_cycle; }
};

/// Requires i != j, Z_j absent from F_i and F_i / F_j not a unit; otherwise
/// reports the failed precondition.
CommutationReport check_commutation(const Seed& t, int i, int j);

/// Replays `path` from t with t's cluster variables replaced by `symbols`
/// (defaults to X_1..X_n when empty) and returns the final cluster as
/// Laurent polynomials in those symbols. Throws Internal when an expansion
/// is not Laurent.
std::vector<LaurentPoly> expand_in_cluster(const Seed& t, const std::vector<int>& path,
                                           std::vector<Var> symbols = {});

/// Renames Z_p to names[p - 1] in p.
LaurentPoly name_symbols(const LaurentPoly& p, const std::vector<Var>& names);

}  // namespace lpgraph
