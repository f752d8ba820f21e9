#pragma once

#include "grstage/exterior.hpp"
#include "grstage/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grstage {

/// Finite-support permutation of the nonzero integers; identity outside
/// the stored support.
class Permutation {
 public:
  Permutation() = default;  // identity

  static Permutation identity() { return Permutation{}; }
  static Permutation transposition(SignedIndex a, SignedIndex b);
  /// The mapping must be a bijection of its own key set (checked).
  static Permutation from_mapping(std::map<SignedIndex, SignedIndex> mapping);

  SignedIndex operator()(SignedIndex i) const;
  Permutation inverse() const;
  /// (a.after(b))(i) == a(b(i)).
  Permutation after(const Permutation& inner) const;
  bool is_identity() const { return map_.empty(); }
  /// Support entries, identity points omitted.
  const std::map<SignedIndex, SignedIndex>& mapping() const { return map_; }
  /// True when the support stays inside the stage symbol set.
  bool preserves(const Stage& stage) const;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::map<SignedIndex, SignedIndex> map_;
};

/// Signed action on a wedge variable: applies the permutation to every
/// label and re-canonicalizes; the sign is the sorting parity.
std::pair<WedgeIndex, int> act_on_wedge(const Permutation& sigma,
                                        const WedgeIndex& key);

/// Factor-wise signed action on a monomial.
std::pair<Monomial, int> act_on_monomial(const Permutation& sigma,
                                         const Monomial& m);

/// Key-wise signed action on a sparse element (labels permuted within one
/// stage; the permutation must preserve the stage symbols).
ExteriorElement act_on_element(const Permutation& sigma,
                               const ExteriorElement& omega);

struct DivisionWitness {
  Permutation sigma;
  Monomial cofactor;
};

/// Divisibility modulo the stage symmetric group: a witness (sigma, z)
/// with sigma(x) * z == y as unsigned monomials, if one exists. Complete
/// backtracking search; signs are ignored.
std::optional<DivisionWitness> divides_mod_group(const Monomial& x,
                                                 const Monomial& y);

/// The degree-2 monomial X_A * X_{B_n} with A = {-2} u {2..p} and
/// B_n = {-(n-1)..-1} u {1} u {n+1..p}. Requires n >= 3, positives >= n,
/// negatives >= n-1.
Monomial antichain_element(int n, const Stage& stage);

struct AntichainPairResult {
  int n = 0;
  int m = 0;
  Stage stage;
  std::optional<DivisionWitness> forward;   // a_n b_n | a_m b_m ?
  std::optional<DivisionWitness> backward;  // a_m b_m | a_n b_n ?
  bool incomparable() const { return !forward && !backward; }
};

struct AntichainReport {
  int max_n = 0;
  std::vector<AntichainPairResult> pairs;
  bool all_incomparable() const;
  std::string to_json() const;
};

/// Checks every pair 3 <= n < m <= max_n in both directions. With a stage
/// given, all pairs run there; otherwise each pair runs at the minimal
/// covering stage (m-1, m+2).
AntichainReport antichain_verify(int max_n, std::optional<Stage> stage);

/// All distinct unsigned images of the monomial under the stage symmetric
/// group, enumerated combinatorially from factor index-set patterns.
/// Sorted by the term order.
std::vector<Monomial> orbit(const Monomial& m);

}  // namespace grstage
