#pragma once

/// Crossingless tangles and their formal linear combinations.
///
/// An (m, m') tangle is a perfect non-crossing matching of m + m' boundary
/// points. Points are numbered along the boundary circle: bottom points
/// 0 .. m-1 left to right, then top points m .. m+m'-1 right to left.

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smalltl/errors.hpp"
#include "smalltl/scalars.hpp"

namespace smalltl {

class Tangle {
  public:
    /// Pairs may be given in any order and orientation; the constructor
    /// checks that they form a non-crossing perfect matching.
    Tangle(int bottom, int top, const std::vector<std::pair<int, int>>& pairs);

    static Tangle identity(int m);
    static Tangle cup();  ///< 0 -> 2
    static Tangle cap();  ///< 2 -> 0
    /// Nested cups 0 -> 2k: arc i joins k-1-i and k+i counted from the left.
    static Tangle cup_nest(int k);
    static Tangle cap_nest(int k);  ///< mirror of cup_nest, 2k -> 0
    /// The i-th Temperley-Lieb generator on m strands (0 <= i <= m-2):
    /// cap then cup on strands i, i+1.
    static Tangle e(int m, int i);

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int points() const { return bottom_ + top_; }
    int partner(int p) const;

    /// Pairs (a, b) with a < b, sorted by a.
    std::vector<std::pair<int, int>> pairs() const;

    /// Planar reading of the tangle, positions rather than circle indices:
    /// caps join bottom positions, cups join top positions (left to right,
    /// i.e. index from the left edge), throughs join a bottom position to a
    /// top position. Through strands preserve left-to-right order.
    struct Decomposition {
        std::vector<std::pair<int, int>> caps;     ///< bottom (i, j), i < j
        std::vector<std::pair<int, int>> cups;     ///< top (i, j), i < j
        std::vector<std::pair<int, int>> through;  ///< (bottom, top)
    };
    Decomposition decompose() const;

    bool operator==(const Tangle& o) const = default;
    std::strong_ordering operator<=>(const Tangle& o) const = default;

    std::string to_string() const;  ///< "m->m':[(a,b),...]"
    static Tangle parse(const std::string& text);
    size_t hash() const;

  private:
    int bottom_ = 0, top_ = 0;
    std::vector<int> match_;  ///< involution on 0 .. bottom_+top_-1
    Tangle() = default;
};

/// Composition f after g, where g : a -> b and f : b -> c. Returns the
/// resulting tangle and the number of closed loops produced.
std::pair<Tangle, int> compose_tangles(const Tangle& f, const Tangle& g);

/// Horizontal juxtaposition, f on the left.
Tangle tensor_tangles(const Tangle& f, const Tangle& g);

/// Rotation by pi (the duality anti-automorphism on diagrams).
Tangle rotate_pi(const Tangle& t);

/// Close the k rightmost strands of t : m -> m' (k <= min(m, m')) by nested
/// arcs on the right. Returns the resulting tangle and the loop count.
std::pair<Tangle, int> partial_trace_right_tangle(const Tangle& t, int k);

/// All (m, m') tangles, in increasing canonical order. Empty if m + m' is
/// odd; otherwise the count is the Catalan number C_{(m+m')/2}.
std::vector<Tangle> enumerate_tangles(int m, int mp);

// ---------------------------------------------------------------------------
// Linear combinations.
// ---------------------------------------------------------------------------

/// Formal linear combination of (m, m') tangles over a tagged scalar ring.
/// Zero coefficients are never stored.
class TLMorphism {
  public:
    TLMorphism(int bottom, int top, RingTag tag);
    static TLMorphism zero(int bottom, int top, RingTag tag) { return {bottom, top, tag}; }
    static TLMorphism identity(int m, RingTag tag);
    static TLMorphism from_tangle(const Tangle& t, RingTag tag);
    static TLMorphism cup(RingTag tag) { return from_tangle(Tangle::cup(), tag); }
    static TLMorphism cap(RingTag tag) { return from_tangle(Tangle::cap(), tag); }
    static TLMorphism e(int m, int i, RingTag tag) { return from_tangle(Tangle::e(m, i), tag); }

    /// The loop value -[2] = -A^2 - A^-2 (resp. its specialization).
    static Scalar loop_value(RingTag tag);

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    RingTag tag() const { return tag_; }
    const std::map<Tangle, Scalar>& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Tangle& t) const;

    /// Adds c * t, dropping the term if the sum cancels.
    void add_term(const Tangle& t, const Scalar& c);

    TLMorphism operator-() const;
    TLMorphism operator+(const TLMorphism& o) const;
    TLMorphism operator-(const TLMorphism& o) const;
    TLMorphism operator*(const Scalar& c) const;
    bool operator==(const TLMorphism& o) const = default;

    /// this after o (o : a -> b, this : b -> c).
    TLMorphism compose(const TLMorphism& o) const;
    TLMorphism tensor(const TLMorphism& o) const;
    TLMorphism rotated_pi() const;
    TLMorphism partial_trace_right(int k) const;

    /// Generic -> Root(r) coefficientwise; throws PoleAtRootOfUnity if any
    /// coefficient has a pole, RingMismatch if already a root ring.
    TLMorphism specialized(int r) const;

    std::string to_string() const;

  private:
    int bottom_, top_;
    RingTag tag_;
    std::map<Tangle, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const Tangle& t);
std::ostream& operator<<(std::ostream& os, const TLMorphism& f);

}  // namespace smalltl
