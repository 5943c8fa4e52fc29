#include "handlecalc/homology.hpp"

namespace handlecalc {

std::optional<BigInt> AbelianGroup::order() const {
  if (free_rank > 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

AbelianGroup cokernel(const IntegerMatrix& m) {
  AbelianGroup g;
  if (m.rows() == 0) return g;
  if (m.cols() == 0) {
    g.free_rank = m.rows();
    return g;
  }
  const auto snf = smith_normal_form(m);
  for (const auto& d : snf.diagonal()) {
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = m.rows() - snf.rank;
  return g;
}

IntegerMatrix boundary_presentation(const HandleDecomposition& d) {
  const Index n2 = d.num_two_handles();
  const Index n1 = d.num_one_handles();
  IntegerMatrix p = IntegerMatrix::Zero(n2 + n1, n2 + n1);
  p.topLeftCorner(n2, n2) = d.linking_matrix();
  p.topRightCorner(n2, n1) = d.run_through_matrix();
  p.bottomLeftCorner(n1, n2) = d.run_through_matrix().transpose();
  return p;
}

AbelianGroup boundary_first_homology(const HandleDecomposition& d) {
  return cokernel(boundary_presentation(d));
}

HomologyProfile homology(const HandleDecomposition& d) {
  HomologyProfile out;
  const IntegerMatrix boundary_map = d.run_through_matrix().transpose();
  out.h1 = cokernel(boundary_map);
  out.h2_basis = integer_kernel_basis(boundary_map);
  out.h2_rank = out.h2_basis.cols();
  out.intersection_form = out.h2_basis.transpose() * d.linking_matrix() * out.h2_basis;
  out.inertia = inertia(out.intersection_form);
  return out;
}

bool is_homology_trivial(const HandleDecomposition& d) {
  const auto profile = homology(d);
  return profile.h1.is_trivial() && profile.h2_rank == 0;
}

}  // namespace handlecalc
