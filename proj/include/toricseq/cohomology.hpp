#pragma once

// Dimensions of H^0, H^1, H^2 of line bundles O(D) on a toric surface.

#include <optional>

#include "toricseq/surface.hpp"

namespace toricseq {

struct CohomologyDims {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;

  Int euler() const { return h0 - h1 + h2; }
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Riemann-Roch on a rational surface: 1 + (D^2 - D.K) / 2.
Int euler_char(const DivisorClass& d);

/// Lattice points m with <m, v_i> >= -c_i for all i.
Int h0(const DivisorClass& d);

/// h0 directly, h2 = h0(K - D) by Serre duality, h1 from the Euler
/// characteristic. Throws InternalInconsistency if h1 would be negative.
CohomologyDims cohomology_dims(const DivisorClass& d);

/// True iff all three cohomology groups vanish.
bool vanishes_totally(const DivisorClass& d);

/// Box half-width that contains every character contributing to any H^i(O(D)).
Int oracle_box_bound(const DivisorClass& d);

/// Independent check: sums, over characters m in the box, the reduced
/// cohomology of the set of rays with <m, v_i> < -c_i (a union of arcs on the
/// circle of rays).
CohomologyDims oracle_cohomology_dims(const DivisorClass& d, std::optional<Int> bound = std::nullopt);

}  // namespace toricseq
