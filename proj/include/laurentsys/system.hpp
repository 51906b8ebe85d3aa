#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "laurentsys/field.hpp"
#include "laurentsys/linalg.hpp"
#include "laurentsys/poly.hpp"
#include "laurentsys/sequence.hpp"

namespace laurentsys {

/// Autoregressive system with behavior B = ker R(X) = { W : R(X) o W = 0 },
/// R a k x l matrix of Laurent polynomials.
class System {
 public:
  explicit System(PolyMatrix r) : r_(std::move(r)) {}

  const PolyMatrix& matrix() const noexcept { return r_; }
  std::size_t equations() const noexcept { return r_.rows(); }
  std::size_t signals() const noexcept { return r_.cols(); }
  std::size_t rank() const noexcept { return r_.rank(); }
  const Field& field() const noexcept { return r_.field(); }

 private:
  PolyMatrix r_;
};

/// Whether R o W is identically zero. For periodic W the check is complete
/// because R o W is periodic on the same lattice.
/// Throws DimensionMismatch, RankMismatch, MixedFieldError.
bool behavior_contains(const System& s, const SeqVector& w);

/// The (k D) x (l D) matrix M, D = prod N_i, with R o W = 0 iff M w = 0
/// for the stacked coordinates w of a periodic W (component j outermost,
/// then row-major fundamental domain). Entry rule:
///
///   M[(i,beta),(j,gamma)] = sum { R_ij,alpha : alpha + beta == gamma mod N }.
///
/// Throws RankMismatch, InvalidPeriods.
DenseMatrix periodic_system_matrix(const System& s, const std::vector<std::int64_t>& periods);

/// Basis of the period-N part of the behavior.
struct KernelBasis {
  std::size_t rank;
  Field field;
  std::vector<std::int64_t> periods;
  std::size_t components;
  std::vector<SeqVector> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Exact nullspace of periodic_system_matrix, returned as periodic signal
/// vectors in reduced echelon order. Throws FloatFieldUnsupported.
KernelBasis periodic_kernel_basis(const System& s, const std::vector<std::int64_t>& periods);

/// l D - rank(M), without building the basis.
std::size_t kernel_dimension(const System& s, const std::vector<std::int64_t>& periods);

/// Stacked coordinate vector of a periodic signal vector.
std::vector<FieldValue> stack(const SeqVector& w);
/// Inverse of stack(). Throws DimensionMismatch.
SeqVector unstack(const std::vector<FieldValue>& coords, std::size_t components,
                  const std::vector<std::int64_t>& periods, const Field& field);

}  // namespace laurentsys
