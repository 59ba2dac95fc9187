#pragma once

/// Representations of the small quantum group at a primitive odd root of
/// unity: simple and projective modules on fixed bases, tensor powers of the
/// fundamental module, embedded copies inside tensor powers, the named
/// morphisms between them, hom space computation, and the projector oracles
/// characterized by kernel conditions on weight blocks.

#include <string>
#include <utility>
#include <vector>

#include "smalltl/linalg.hpp"

namespace smalltl {

/// A module given by the matrices of E, F, K on a fixed ordered basis.
struct BasedModule {
    int r = 0;
    std::vector<std::string> labels;
    CycMatrix actE, actF, actK;

    int dim() const { return static_cast<int>(labels.size()); }
    const CycField* field() const { return CycField::get(r); }
};

/// Defining relations together with E^r = F^r = 0 and K^r = 1.
bool hopf_invariants_hold(const BasedModule& M);

/// X_m, 0 <= m <= r-1, basis a_0, ..., a_m.
BasedModule simple_module(int m, int r);
/// P_m, r <= m <= 2r-2, basis a_0.., x_0.., y_0.., b_0.. in that order.
BasedModule projective_module(int m, int r);
/// The 2r-dimensional simple, presented as two copies of X_{r-1} with the
/// "+" block first; basis a_0^+, ..., a_{r-1}^+, a_0^-, ..., a_{r-1}^-.
BasedModule big_module(int r);

/// Left block labels are suffixed "+", right block labels "-".
BasedModule direct_sum(const BasedModule& M, const BasedModule& N);
/// Basis (i, j) -> i * dim(N) + j; E acts as E x K + 1 x E and F as
/// K^{-1} x F + F x 1.
BasedModule tensor_product(const BasedModule& M, const BasedModule& N);
/// X_1^{x n}; labels are bitstrings, the rightmost factor varying fastest.
BasedModule tensor_power(int n, int r);

// Sparse generator actions on the tensor power basis (dimension 2^n),
// cached per (n, r).
const SparseMat& tensor_E(int n, int r);
const SparseMat& tensor_F(int n, int r);
const SparseMat& tensor_K(int n, int r);

CycVec vec_tensor(const CycVec& a, const CycVec& b);

/// A labeled family of vectors inside the 2^n-dimensional tensor power.
struct EmbeddedBasis {
    int n = 0;
    int r = 0;
    std::vector<std::string> labels;
    std::vector<CycVec> vectors;

    int index_of(const std::string& label) const;
    const CycVec& vec(const std::string& label) const { return vectors[index_of(label)]; }
};

EmbeddedBasis embed_simple(int m, int r);      ///< X_m in X^{x m}, 0 <= m <= r-1
EmbeddedBasis embed_projective(int m, int r);  ///< P_m in X^{x m}, r <= m <= 2r-2
EmbeddedBasis embed_two_sided(int r);          ///< both halves of X^{x 2r-1}'s top summand
EmbeddedBasis embed_simple_supplement(int m, int r);      ///< X'_{m-2} in X^{x m}, 2 <= m <= r-1
EmbeddedBasis embed_two_sided_supplement(int r);          ///< X'^{pm}_{r-1} in X^{x r+1}
EmbeddedBasis embed_projective_supplement(int m, int r);  ///< P'_{m-2} in X^{x m}, r+2 <= m <= 2r-1

/// Action matrices of an invariant span in its own basis. Throws
/// SolverFailure if the vectors are dependent or the span is not invariant.
BasedModule restrict_to_span(const EmbeddedBasis& basis);

bool is_intertwiner(const BasedModule& src, const BasedModule& dst, const CycMatrix& f);

// Named morphisms as matrices with respect to the bases fixed above.
// sign is +1 or -1 where applicable.
CycMatrix morphism_epsilon(int m, int r);          ///< P_m -> P_m
CycMatrix morphism_pi(int m, int r);               ///< P_m -> X_{2r-m-2}
CycMatrix morphism_iota(int m, int r);             ///< X_{2r-m-2} -> P_m
CycMatrix morphism_gamma(int m, int r, int sign);  ///< P_m -> P_{3r-m-2}
CycMatrix morphism_pi_pm(int r, int sign);         ///< X_{2r-1} -> X_{r-1}
CycMatrix morphism_iota_pm(int r, int sign);       ///< X_{r-1} -> X_{2r-1}

/// Basis of intertwiners src -> dst. Requires diagonal K on both sides.
std::vector<CycMatrix> hom_space(const BasedModule& src, const BasedModule& dst);

/// Which kernel characterization is used to build a projector oracle.
enum class KernelRoute { ByE, ByF };

/// Projector X^{x m} -> X^{x m} with image the embedded X_m, built per
/// weight block from the kernel of a power of E (or F), independently of
/// any diagrammatic input. 0 <= m <= r-1.
SparseMat phi_oracle(int m, int r, KernelRoute route);
/// The analogous projectors onto the two embedded halves at m = 2r-1. The
/// "+" half is characterized through kernels of E powers, the "-" half
/// through kernels of F powers.
SparseMat phi_pm_oracle(int r, int sign);

std::string module_map_to_json(const CycMatrix& f);
CycMatrix module_map_from_json(const std::string& text, int r);

/// Labeled results: Hopf invariants, hom space dimensions, the named
/// morphism relations, and agreement of restricted spans with the abstract
/// action matrices.
std::vector<std::pair<std::string, bool>> module_structure_checks(int r);

/// Labeled results for the quantitative basis identities: highest/lowest
/// weight formulas, generator power formulas, coproduct powers, projector
/// values on split bases and the expansion identities, plus oracle
/// self-consistency.
std::vector<std::pair<std::string, bool>> appendix_checks(int r);

}  // namespace smalltl
