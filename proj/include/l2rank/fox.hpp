#pragma once

#include "l2rank/group_ring.hpp"
#include "l2rank/integer_matrix.hpp"
#include "l2rank/presentation.hpp"

#include <vector>

namespace l2rank {

/// Fox derivative d w / d x_j in Z[F_n].
GroupRingElement fox_derivative(const Word& w, int j);

/// Rows indexed by relators, columns by generators.
GroupRingMatrix fox_jacobian(const Presentation& p);

/// The relator Jacobian together with the Fox rows of caller-chosen extra
/// words, stacked underneath it.
struct JacobianBundle {
  Presentation presentation;
  GroupRingMatrix jacobian;
  std::vector<Word> extension_words;
  GroupRingMatrix extended;
};

JacobianBundle extend_jacobian(const Presentation& p, const std::vector<Word>& extra);

/// Entrywise augmentation.
IntegerMatrix augment_matrix(const GroupRingMatrix& m);

/// Augmented Jacobian built row by row without materializing the dense
/// group ring matrix; suited to the large presentations produced by
/// Reidemeister-Schreier rewriting.
SparseIntegerMatrix augmented_jacobian(const Presentation& p);

}  // namespace l2rank
