#pragma once

#include <string>
#include <vector>

#include "liecoh/liealg/lie_algebra.hpp"

namespace liecoh {

/// A representation of g on M = k^{dim_m}: rho(i) is the action of e_{i+1}.
class ModuleAction {
 public:
  /// Checks rho_i rho_j - rho_j rho_i = sum_k c_ij^k rho_k; throws
  /// PreconditionViolated otherwise and DimensionMismatch on bad shapes.
  ModuleAction(const LieAlgebra& g, std::vector<Matrix> rho, std::string name = {});

  std::size_t dim_g() const noexcept { return rho_.size(); }
  std::size_t dim_m() const noexcept { return dim_m_; }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  const std::vector<Matrix>& rhos() const noexcept { return rho_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t dim_m_ = 0;
  std::vector<Matrix> rho_;
  std::string name_;
};

/// One-dimensional module with zero action.
ModuleAction trivial_module(const LieAlgebra& g);
/// rho(i) = ad(e_i).
ModuleAction adjoint_module(const LieAlgebra& g);
/// (x . f)(y) = -f([x, y]), i.e. rho(i) = -ad(e_i)^T in the dual basis.
ModuleAction coadjoint_module(const LieAlgebra& g);

}  // namespace liecoh
