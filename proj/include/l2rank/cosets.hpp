#pragma once

#include "l2rank/presentation.hpp"

#include <vector>

namespace l2rank {

enum class EnumerationStatus { closed, exceeded_budget };

/// Permutation action of the generators on the cosets of a subgroup.
///
/// A closed table is complete and standardized: coset 0 is the subgroup and
/// the remaining cosets are numbered in breadth-first order of first
/// appearance (generators in order, each followed by its inverse).
class CosetTable {
 public:
  CosetTable() = default;

  /// Table for a transitive action given by one image vector per generator.
  /// Throws InvalidArgument if the vectors are not permutations of a common
  /// set or the action is intransitive.
  static CosetTable from_action(std::vector<std::vector<int>> action);

  static CosetTable exceeded(int num_generators, int defined);

  EnumerationStatus status() const { return status_; }
  bool closed() const { return status_ == EnumerationStatus::closed; }
  int index() const { return num_cosets_; }
  int num_generators() const { return static_cast<int>(forward_.size()); }
  /// Cosets defined during enumeration, including ones later merged.
  int cosets_defined() const { return defined_; }

  int act(int coset, const Letter& l) const {
    return l.inverse ? backward_[static_cast<std::size_t>(l.generator)][static_cast<std::size_t>(coset)]
                     : forward_[static_cast<std::size_t>(l.generator)][static_cast<std::size_t>(coset)];
  }
  int act(int coset, const Word& w) const;

  const std::vector<std::vector<int>>& action() const { return forward_; }

  /// Every relator traced from every coset returns to its start.
  bool satisfies(const Presentation& p) const;

 private:
  EnumerationStatus status_ = EnumerationStatus::exceeded_budget;
  int num_cosets_ = 0;
  int defined_ = 0;
  std::vector<std::vector<int>> forward_;
  std::vector<std::vector<int>> backward_;

  friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&, int);
};

/// HLT coset enumeration of the subgroup generated by `subgroup_gens`.
/// At most `max_cosets` cosets are ever defined; beyond that the result has
/// status exceeded_budget.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        int max_cosets);

enum class TrivialityVerdict { certified_trivial, inconclusive };

/// Enumerates <gens | relators + killed> over the trivial subgroup; a
/// one-coset result certifies that `killed` normally generates the group.
TrivialityVerdict trivial_quotient_check(const Presentation& p, const std::vector<Word>& killed,
                                         int max_cosets);

/// Presentation of the subgroup of a closed table on Schreier generators
/// s<coset>_<generator> (breadth-first transversal), with relators the
/// rewritten conjugates of every relator at every coset. Generators killed
/// by length-one relators are eliminated.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

/// Free rank of the abelianized subgroup.
int subgroup_betti1(const Presentation& p, const CosetTable& t);

}  // namespace l2rank
