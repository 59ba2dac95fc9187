#pragma once

/// Jones-Wenzl idempotents, their non-semisimple relatives, and the
/// projection/injection morphisms between them.
///
/// All builders are memoized per (kind, m, r, ring); the cache is thread
/// safe and idempotent.

#include "smalltl/tangles.hpp"

namespace smalltl {

/// The m-th Jones-Wenzl idempotent f_m on m strands.
/// Generic ring: any m >= 0. Root(r): 0 <= m <= r-1 or m = 2r-1; the range
/// r <= m <= 2r-2 (and m > 2r-1) throws PoleAtRootOfUnity.
TLMorphism build_f(int m, RingTag tag);

/// The negligible morphism h_m on m strands, r <= m <= 2r-2. The generic
/// ring needs r explicitly; a Root tag must carry the same r.
TLMorphism build_h(int m, int r, RingTag tag);

/// The non-semisimple idempotent g_m on m strands, r <= m <= 2r-2.
/// Generic: f_m + h_m / [r]. Root(r): built by the closed recursion that
/// avoids the pole.
TLMorphism build_g(int m, int r, RingTag tag);

/// Projection p_m : m -> 2r-2-m and injection i_m : 2r-2-m -> m between the
/// split objects g_m and f_{2r-2-m} (root ring only), r <= m <= 2r-2.
TLMorphism build_p(int m, int r, RingTag tag);
TLMorphism build_i(int m, int r, RingTag tag);

}  // namespace smalltl
