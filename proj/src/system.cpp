#include "laurentsys/system.hpp"

#include <string>

#include "laurentsys/error.hpp"
#include "laurentsys/operators.hpp"

namespace laurentsys {

bool behavior_contains(const System& s, const SeqVector& w) {
  return shift(s.matrix(), w).is_zero();
}

DenseMatrix periodic_system_matrix(const System& s, const std::vector<std::int64_t>& periods) {
  if (periods.size() != s.rank()) {
    throw RankMismatch(std::to_string(periods.size()) + " periods for a rank-" + std::to_string(s.rank()) +
                       " system");
  }
  const PeriodicSeq domain = PeriodicSeq::zero(periods, s.field());
  const std::size_t d = domain.domain_size();
  DenseMatrix m(s.equations() * d, s.signals() * d, s.field());
  for (std::size_t i = 0; i < s.equations(); ++i) {
    for (std::size_t j = 0; j < s.signals(); ++j) {
      for (const auto& [alpha, coeff] : s.matrix()(i, j)) {
        for (std::size_t beta = 0; beta < d; ++beta) {
          const std::size_t gamma = domain.flat_index(alpha + domain.domain_point(beta));
          m(i * d + beta, j * d + gamma) += coeff;
        }
      }
    }
  }
  return m;
}

KernelBasis periodic_kernel_basis(const System& s, const std::vector<std::int64_t>& periods) {
  if (!s.field().is_exact()) {
    throw FloatFieldUnsupported("kernel computation needs an exact field, got " + s.field().to_string());
  }
  KernelBasis out{s.rank(), s.field(), periods, s.signals(), {}};
  for (const auto& coords : nullspace_basis(periodic_system_matrix(s, periods))) {
    out.basis.push_back(unstack(coords, s.signals(), periods, s.field()));
  }
  return out;
}

std::size_t kernel_dimension(const System& s, const std::vector<std::int64_t>& periods) {
  if (!s.field().is_exact()) {
    throw FloatFieldUnsupported("kernel computation needs an exact field, got " + s.field().to_string());
  }
  const DenseMatrix m = periodic_system_matrix(s, periods);
  return m.cols() - matrix_rank(m);
}

std::vector<FieldValue> stack(const SeqVector& w) {
  std::vector<FieldValue> coords;
  for (const auto& component : w.periodic()) {
    coords.insert(coords.end(), component.values().begin(), component.values().end());
  }
  return coords;
}

SeqVector unstack(const std::vector<FieldValue>& coords, std::size_t components,
                  const std::vector<std::int64_t>& periods, const Field& field) {
  const std::size_t d = domain_size(periods);
  if (components == 0 || coords.size() != components * d) {
    throw DimensionMismatch("expected " + std::to_string(components * d) + " stacked coordinates, got " +
                            std::to_string(coords.size()));
  }
  std::vector<PeriodicSeq> parts;
  parts.reserve(components);
  for (std::size_t j = 0; j < components; ++j) {
    std::vector<FieldValue> values(coords.begin() + static_cast<std::ptrdiff_t>(j * d),
                                   coords.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
    parts.emplace_back(periods, std::move(values), field);
  }
  return SeqVector(std::move(parts));
}

}  // namespace laurentsys
