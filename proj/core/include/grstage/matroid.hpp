#pragma once

#include "grstage/exterior.hpp"
#include "grstage/grassmann.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace grstage {

/// Matroid given by its explicit basis family. Ground elements and basis
/// members are kept numerically sorted.
class Matroid {
 public:
  using Basis = std::vector<SignedIndex>;  // sorted ascending

  Matroid(std::vector<SignedIndex> ground, int rank, std::set<Basis> bases);

  const std::vector<SignedIndex>& ground() const { return ground_; }
  int rank() const { return rank_; }
  const std::set<Basis>& bases() const { return bases_; }

  bool in_ground(SignedIndex e) const;
  /// e lies in no basis.
  bool is_loop(SignedIndex e) const;
  /// e lies in every basis.
  bool is_coloop(SignedIndex e) const;
  /// Exhaustive basis-exchange check.
  bool check_basis_exchange() const;

  std::string to_json() const;

  bool operator==(const Matroid&) const = default;

 private:
  std::vector<SignedIndex> ground_;
  int rank_;
  std::set<Basis> bases_;
};

/// Basis family read off the support of a decomposable point; nullopt for
/// the zero point. Throws on non-decomposable input.
std::optional<Matroid> matroid_of(const ConePoint& omega);

/// Deletion M \ e. Deleting a coloop would drop the rank; that case
/// returns nullopt instead of an invalid same-rank matroid.
std::optional<Matroid> delete_element(const Matroid& m, SignedIndex e);

/// Contraction M / e, rank drops by one. Contracting a loop returns
/// nullopt (the matching cone-map image is zero there).
std::optional<Matroid> contract_element(const Matroid& m, SignedIndex e);

struct MinorStep {
  enum class Op { Delete, Contract };
  Op op;
  SignedIndex element;
};

struct MinorWitness {
  std::vector<MinorStep> steps;  // applied to the larger matroid
  /// ground of the smaller matroid -> surviving ground of the larger one.
  std::map<SignedIndex, SignedIndex> relabeling;
};

/// Brute-force minor test: does some deletion/contraction sequence on n
/// followed by a relabeling yield m?
std::optional<MinorWitness> is_minor(const Matroid& m, const Matroid& n);

/// One leg of the cone-map / minor correspondence.
struct CorrespondenceCase {
  enum class Status { Verified, Failed, SkippedLoop, SkippedColoop, NotApplicable };
  Status status = Status::NotApplicable;
  std::string detail;
  bool counts_as_pass() const { return status == Status::Verified; }
  bool is_failure() const { return status == Status::Failed; }
};

struct CorrespondenceReport {
  CorrespondenceCase contraction;  // theta leg, removes label p
  CorrespondenceCase deletion;     // xi leg, removes label -n
  bool ok() const {
    return !contraction.is_failure() && !deletion.is_failure();
  }
};

/// Checks that the cone maps act on supports as contraction of the top
/// positive label and deletion of the bottom negative label. Loop and
/// coloop cases are reported as skipped, never as passes.
CorrespondenceReport correspondence_check(const ConePoint& omega);

}  // namespace grstage
