#pragma once

#include "laurentsys/field.hpp"
#include "laurentsys/poly.hpp"
#include "laurentsys/sequence.hpp"

namespace laurentsys {

/// The pairing <d, W> = sum_alpha d_alpha W_alpha. The sum runs over the
/// support of d, so it is finite for every representable W.
/// Throws RankMismatch, MixedFieldError.
FieldValue scalar_product(const LaurentPoly& d, const FiniteSeq& w);
FieldValue scalar_product(const LaurentPoly& d, const PeriodicSeq& w);
FieldValue scalar_product(const LaurentPoly& d, const Sequence& w);

/// The shift action sigma_d(W) = d(X) o W(Y):
///
///   (d o W)_beta = sum_alpha d_alpha W_{alpha + beta}.
///
/// Note the index is alpha + beta (a correlation, not a convolution): this
/// is what makes sigma_d the adjoint of multiplication by d. For finite W
/// the support of the result lies in supp(W) - supp(d).
FiniteSeq shift(const LaurentPoly& d, const FiniteSeq& w);
/// Same periods as w; evaluated on the fundamental domain.
PeriodicSeq shift(const LaurentPoly& d, const PeriodicSeq& w);
Sequence shift(const LaurentPoly& d, const Sequence& w);

/// R(X) o W(Y) = (sum_j R_ij o W_j)_i. Throws DimensionMismatch when
/// R.cols() != W.size().
SeqVector shift(const PolyMatrix& r, const SeqVector& w);

/// Whether <c d, W> == <c, d o W>. The left side goes through polynomial
/// multiplication, the right side through the shift; neither reuses the
/// other.
bool check_adjoint(const LaurentPoly& c, const LaurentPoly& d, const Sequence& w);

}  // namespace laurentsys
