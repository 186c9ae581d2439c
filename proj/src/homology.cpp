#include "l2rank/homology.hpp"

#include "l2rank/fox.hpp"
#include "l2rank/integer_matrix.hpp"

namespace l2rank {

Betti1 betti1(const Presentation& p) {
  const SNFResult snf = smith_normal_form(augment_matrix(fox_jacobian(p)));
  return {p.num_generators() - snf.rank, snf.torsion};
}

int betti1_rank(const Presentation& p) {
  return p.num_generators() - exact_rank(augmented_jacobian(p));
}

bool is_perfect(const Presentation& p) {
  const Betti1 h = betti1(p);
  return h.rank == 0 && h.torsion.empty();
}

}  // namespace l2rank
