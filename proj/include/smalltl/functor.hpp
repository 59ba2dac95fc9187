#pragma once

/// The functor from the diagram category at an odd root of unity to module
/// maps between tensor powers of the fundamental module. Tangles act through
/// cap and cup slices, so an image is computed without ever leaving sparse
/// column form; named idempotents and the extended generators are cached per
/// context.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smalltl/jw.hpp"
#include "smalltl/linalg.hpp"
#include "smalltl/tangles.hpp"
#include "smalltl/uq.hpp"

namespace smalltl {

/// id^{x left} x m x id^{x right} acting on basis-indexed sparse vectors.
/// The wrapped matrix must have power-of-two dimensions.
struct IdSlice {
    const SparseMat* m = nullptr;
    int left = 0;
    int right = 0;
};

std::map<int, Cyc> apply_id_slice(const IdSlice& s, const std::map<int, Cyc>& v);

/// A scaled composite of slices, applied first to last.
struct SliceTerm {
    Cyc coeff;
    std::vector<IdSlice> word;
};

/// Exact equality of two sums of composites, checked column by column so the
/// products are never materialized.
bool slice_sums_equal(int source_dim, const std::vector<SliceTerm>& lhs,
                      const std::vector<SliceTerm>& rhs, const CycField* F);

/// Evaluates a sum of composites into a matrix with 2^source_strands columns.
SparseMat slice_sum_matrix(int source_strands, int target_strands,
                           const std::vector<SliceTerm>& terms, const CycField* F);

class FunctorContext {
  public:
    explicit FunctorContext(int r);

    int r() const { return r_; }
    const CycField* field() const { return F_; }
    RingTag tag() const { return RingTag::root(r_); }

    /// Single generators as matrices: cap is 1 x 4, cup is 4 x 1.
    const SparseMat& cap_matrix() const { return cap_; }
    const SparseMat& cup_matrix() const { return cup_; }

    /// Images of tangles with few boundary points are cached per context.
    SparseMat image_of_tangle(const Tangle& t);
    /// Generic coefficients are specialized first and may raise
    /// PoleAtRootOfUnity; root coefficients must match r.
    SparseMat image_of_morphism(const TLMorphism& f);

    const SparseMat& f_image(int m);  ///< 0 <= m <= r-1 or m = 2r-1
    const SparseMat& g_image(int m);  ///< r <= m <= 2r-2
    const SparseMat& h_image(int m);  ///< r <= m <= 2r-2

    const SparseMat& projector_half(int sign);  ///< 2r-1 strands -> r-1
    const SparseMat& injector_half(int sign);   ///< r-1 strands -> 2r-1

    // Named module morphisms conjugated into tensor power coordinates.
    SparseMat hatted_epsilon(int m);
    SparseMat hatted_pi(int m);
    SparseMat hatted_iota(int m);
    SparseMat hatted_gamma(int m, int sign);

    /// Columns embed the standard basis of the named module into tensor power
    /// coordinates; cobases are the dual rows restricted to the summand.
    const CycMatrix& basis_simple(int m);
    const CycMatrix& basis_projective(int m);
    const CycMatrix& basis_big();
    const CycMatrix& cobasis_simple(int m);
    const CycMatrix& cobasis_projective(int m);
    const CycMatrix& cobasis_big();

  private:
    int r_;
    const CycField* F_;
    SparseMat cap_, cup_;
    std::map<Tangle, SparseMat> tangle_cache_;
    std::map<std::string, SparseMat> named_;
    std::map<std::string, CycMatrix> bases_;

    SparseMat uncached_tangle(const Tangle& t);
    SparseMat conjugated(const CycMatrix& v, const CycMatrix& mid, const CycMatrix& w) const;
};

/// Labeled checks that the functor sends the named idempotents and partial
/// projectors to their module counterparts, plus functoriality on sampled
/// tangle pairs.
std::vector<std::pair<std::string, bool>> functor_checks(int r, unsigned seed = 20240229);

}  // namespace smalltl
