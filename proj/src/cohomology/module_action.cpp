#include "liecoh/cohomology/module_action.hpp"

#include "liecoh/error.hpp"

namespace liecoh {

ModuleAction::ModuleAction(const LieAlgebra& g, std::vector<Matrix> rho, std::string name)
    : rho_(std::move(rho)), name_(std::move(name)) {
  const std::size_t n = g.dim();
  if (rho_.size() != n) throw Error(ErrorKind::DimensionMismatch, "module action needs one matrix per basis vector");
  dim_m_ = n == 0 ? 0 : rho_.front().rows();
  for (const auto& r : rho_) {
    if (r.rows() != dim_m_ || r.cols() != dim_m_) {
      throw Error(ErrorKind::DimensionMismatch, "module action matrices must be square of equal size");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix expected(dim_m_, dim_m_);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(g.c(i, j, k)) != 0) expected += g.c(i, j, k) * rho_[k];
      }
      if (!(commutator(rho_[i], rho_[j]) == expected)) {
        throw Error(ErrorKind::PreconditionViolated, "not a representation: rho([e" + std::to_string(i + 1) + ",e" +
                                                         std::to_string(j + 1) + "]) != [rho, rho]");
      }
    }
  }
}

ModuleAction trivial_module(const LieAlgebra& g) {
  require_lie_algebra(g);
  return ModuleAction(g, std::vector<Matrix>(g.dim(), Matrix(1, 1)), "trivial");
}

ModuleAction adjoint_module(const LieAlgebra& g) {
  require_lie_algebra(g);
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(g.ad(i));
  return ModuleAction(g, std::move(rho), "adjoint");
}

ModuleAction coadjoint_module(const LieAlgebra& g) {
  require_lie_algebra(g);
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(Scalar(-1) * g.ad(i).transpose());
  return ModuleAction(g, std::move(rho), "coadjoint");
}

}  // namespace liecoh
