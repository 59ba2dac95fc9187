#pragma once

/// The extended diagram category. Objects are strand counts; morphisms are
/// expression trees built from Temperley-Lieb morphisms at a fixed odd root
/// together with the two splitting injectors i+/i- (r-1 strands to 2r-1)
/// and the matching projectors p+/p- (2r-1 strands to r-1). Equality is
/// decided through the representation: two expressions are equal when their
/// module images agree exactly.
///
/// The module also provides the bent morphisms between high idempotents,
/// the recursive decomposition of identity morphisms through idempotent
/// slots, a rank-based fullness report for hom spaces, and the labeled
/// relation suite for the extended generators.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smalltl/functor.hpp"
#include "smalltl/tangles.hpp"

namespace smalltl {

/// Immutable expression tree over the extended generators. All factories
/// validate strand counts and index ranges eagerly; evaluation is deferred
/// until image() is called with a context of the same r.
class ExtMorphism {
  public:
    enum class Kind { TL, NamedF, NamedG, NamedH, ProjHalf, InjHalf, Compose, Tensor };

    /// Leaf holding an explicit linear combination of planar diagrams. The
    /// morphism must carry root coefficients matching r.
    static ExtMorphism tl(const TLMorphism& f, int r);
    static ExtMorphism identity(int n, int r);
    static ExtMorphism named_f(int m, int r);  ///< 0 <= m <= r-1 or m = 2r-1
    static ExtMorphism named_g(int m, int r);  ///< r <= m <= 2r-2
    static ExtMorphism named_h(int m, int r);  ///< r <= m <= 2r-2
    static ExtMorphism proj_half(int sign, int r);  ///< p+/p-, 2r-1 -> r-1
    static ExtMorphism inj_half(int sign, int r);   ///< i+/i-, r-1 -> 2r-1
    /// after o before, read bottom to top; bottoms and tops must chain.
    static ExtMorphism compose(const ExtMorphism& after, const ExtMorphism& before);
    /// Horizontal juxtaposition, left factor on the left strands.
    static ExtMorphism tensor(const ExtMorphism& left, const ExtMorphism& right);

    Kind kind() const;
    int bottom() const;
    int top() const;
    int r() const;

    /// Memoization table for subtree images. Keys own their nodes, so
    /// entries stay valid across expression lifetimes.
    using ImageCache = std::map<std::shared_ptr<const void>, SparseMat>;

    /// Evaluates the tree in tensor power coordinates. Subtree images are
    /// memoized per call; pass a cache to share work across evaluations.
    SparseMat image(FunctorContext& ctx) const;
    SparseMat image(FunctorContext& ctx, ImageCache& cache) const;

    /// Flattens to a single diagram sum when no splitting generator occurs.
    std::optional<TLMorphism> as_tl() const;

    /// Expression text. Composition is written "a ; b" (apply a first),
    /// tensoring "a * b" and binds tighter; leaves are p+/p-/i+/i-, f:m,
    /// g:m, h:m, id:n, or a diagram literal in Tangle notation. Only trees
    /// whose TL leaves are single unit-coefficient diagrams are printable.
    std::string to_text() const;
    static ExtMorphism parse(const std::string& text, int r);

    /// JSON tree encoding; round-trips every tree exactly, including
    /// multi-term leaves with arbitrary root coefficients.
    std::string to_json() const;
    static ExtMorphism from_json(const std::string& text, int r);

    /// Structural pieces (valid for the matching kind only).
    const TLMorphism& tl_payload() const;
    int named_index() const;
    int sign() const;
    ExtMorphism first() const;   ///< compose: after, tensor: left
    ExtMorphism second() const;  ///< compose: before, tensor: right

  private:
    struct Node;
    explicit ExtMorphism(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Exact equality of images; throws ShapeMismatch when the strand types or
/// roots differ.
bool ext_equal(const ExtMorphism& a, const ExtMorphism& b, FunctorContext& ctx);

/// Bent morphisms between the indecomposable projective idempotent objects,
/// for r <= m <= 2r-2 and sign +1/-1. build_c(m, sign) goes from m strands
/// to 3r-2-m strands by feeding i^sign into m-r+1 nested caps on the right;
/// build_d(m, sign) goes the other way using p^sign over nested cups.
ExtMorphism build_c(int m, int sign, int r);
ExtMorphism build_d(int m, int sign, int r);

/// One pair of an identity decomposition: u goes from m strands into the
/// slot object, v comes back, and the slot's idempotent sits in between.
/// sign records which splitting branch produced the pair, 0 otherwise.
struct DomEntry {
    int slot;
    int sign;
    ExtMorphism u;
    ExtMorphism v;
};

/// Decomposes id_m as the sum of v o t_n o u over the returned entries,
/// where t_n is f_n for n <= r-1 and g_n for n >= r.
std::vector<DomEntry> dominate(int m, int r);

/// Expected number of entries of dominate(m, r) in each slot 0..2r-2,
/// computed by the counting recursion alone.
std::vector<long> domination_counts(int m, int r);

/// Rank comparison between the intertwiner space Hom(X^m, X^mp) and the
/// images of diagrammatic and extended words.
struct FullnessReport {
    int m = 0;
    int mp = 0;
    int r = 0;
    long hom_dim = 0;
    long tangle_rank = 0;    ///< rank of the planar diagram images alone
    long extended_rank = 0;  ///< rank after adding extended words
    long words_tried = 0;
    bool budget_exhausted = false;
    bool full() const { return extended_rank == hom_dim; }
};

/// Evaluates planar diagram images first, then words v' o mid o u obtained
/// from dominate(m) and dominate(mp) with the connecting morphisms between
/// slots, stopping as soon as the hom dimension is reached. word_budget
/// bounds the number of extended words evaluated; 0 means unbounded. An
/// exhausted budget yields a partial report, not a failure.
FullnessReport fullness_check(int m, int mp, int r, long word_budget = 0);

/// Labeled relation checks for the extended generators: splitting
/// relations and their bent and closed variants, the images of the bent
/// morphisms, absorption, composition scalars, identity decompositions and
/// their diagram-level form below r.
std::vector<std::pair<std::string, bool>> extended_checks(int r);

}  // namespace smalltl
