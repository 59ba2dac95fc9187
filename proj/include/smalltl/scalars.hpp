#pragma once

/// Exact coefficient arithmetic.
///
/// Two rings are supported:
///  - GenericScalar: the field of rational functions in the framing variable A,
///    represented as a canonical fraction of integer Laurent polynomials.
///  - Cyc: the cyclotomic field Q[q]/Phi_r(q) for odd r >= 3, where q is a
///    primitive r-th root of unity.
/// Specialization sends A to q^{(r+1)/2}, so A^2 goes to q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "smalltl/errors.hpp"

namespace smalltl {

// ---------------------------------------------------------------------------
// Laurent polynomials over Z in the variable A.
// ---------------------------------------------------------------------------

/// Dense Laurent polynomial with mpz coefficients. Invariant: either empty
/// (zero) or both the first and last stored coefficients are nonzero.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    /// c * A^exp.
    static LaurentPoly monomial(mpz_class c, int exp = 0);
    static LaurentPoly constant(long c) { return monomial(mpz_class(c), 0); }

    bool is_zero() const { return coeffs_.empty(); }
    int low_exp() const;   ///< smallest exponent with nonzero coefficient
    int high_exp() const;  ///< largest exponent with nonzero coefficient
    int term_count() const;
    mpz_class coeff(int exp) const;  ///< coefficient of A^exp (0 if absent)
    const mpz_class& leading() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly shifted(int k) const;  ///< multiply by A^k

    bool operator==(const LaurentPoly& o) const = default;
    std::strong_ordering operator<=>(const LaurentPoly& o) const;

    /// gcd of all coefficients, as a positive integer (0 for the zero poly).
    mpz_class content() const;
    /// Exact division; throws Error if the division is not exact over Z.
    LaurentPoly divide_exact(const LaurentPoly& d) const;
    /// Primitive gcd with positive leading coefficient (ordinary poly gcd;
    /// powers of A are units and never occur in the result).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;  ///< e.g. "A^2 + A^-2"
    size_t hash() const;

    /// Iteration support: pairs (exponent, coefficient) with nonzero coeff.
    template <class Fn>
    void for_terms(Fn&& fn) const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) fn(low_ + static_cast<int>(i), coeffs_[i]);
    }

  private:
    int low_ = 0;
    std::vector<mpz_class> coeffs_;
    void trim();
    friend class GenericScalar;
};

/// Phi_r as a plain polynomial in A (lowest exponent 0, monic).
LaurentPoly cyclotomic_polynomial(int r);

// ---------------------------------------------------------------------------
// GenericScalar: canonical fractions num/den of Laurent polynomials.
// ---------------------------------------------------------------------------

/// Canonical form: den != 0; den has lowest exponent 0 and nonzero constant
/// term; polynomial gcd(num, den) = 1; gcd(content(num), content(den)) = 1;
/// den has positive leading coefficient. Zero is 0/1. Equality of values is
/// equality of representations.
class GenericScalar {
  public:
    GenericScalar() : den_(LaurentPoly::constant(1)) {}
    explicit GenericScalar(long n) : GenericScalar(LaurentPoly::constant(n)) {}
    explicit GenericScalar(LaurentPoly p)
        : num_(std::move(p)), den_(LaurentPoly::constant(1)) {}
    static GenericScalar fraction(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    GenericScalar operator-() const;
    GenericScalar operator+(const GenericScalar& o) const;
    GenericScalar operator-(const GenericScalar& o) const;
    GenericScalar operator*(const GenericScalar& o) const;
    GenericScalar operator/(const GenericScalar& o) const;
    GenericScalar inverse() const;

    bool operator==(const GenericScalar& o) const = default;
    std::strong_ordering operator<=>(const GenericScalar& o) const = default;

    std::string to_string() const;
    size_t hash() const;

  private:
    LaurentPoly num_, den_;
    void canonicalize();
};

// ---------------------------------------------------------------------------
// Cyclotomic field Q[q]/Phi_r(q).
// ---------------------------------------------------------------------------

/// Immutable field data, interned per r. Pointers returned by get() stay
/// valid for the lifetime of the process.
class CycField {
  public:
    static const CycField* get(int r);  ///< r odd, >= 3; thread safe

    int r() const { return r_; }
    int degree() const { return deg_; }
    /// Reduction of q^(deg+i), 0 <= i <= deg-2: row of length deg.
    const std::vector<mpq_class>& reduction_row(int i) const { return red_[i]; }

  private:
    explicit CycField(int r);
    int r_, deg_;
    std::vector<std::vector<mpq_class>> red_;
};

/// Element of Q[q]/Phi_r(q), stored as coefficients of 1, q, ..., q^{deg-1}.
/// A default-constructed Cyc is the zero of an unspecified field and combines
/// with elements of any field.
class Cyc {
  public:
    Cyc() = default;
    explicit Cyc(const CycField* F) : F_(F), c_(F->degree()) {}
    Cyc(const CycField* F, long n);
    Cyc(const CycField* F, const mpq_class& n);
    static Cyc q_power(const CycField* F, long e);  ///< q^e, e arbitrary

    const CycField* field() const { return F_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;   ///< lies in Q
    mpq_class rational() const; ///< value if is_rational(), else throws

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator/(const Cyc& o) const;
    Cyc inverse() const;  ///< throws Error on zero
    Cyc& operator+=(const Cyc& o);

    bool operator==(const Cyc& o) const;
    std::strong_ordering operator<=>(const Cyc& o) const;

    const mpq_class& coeff(int i) const;  ///< coefficient of q^i
    void set_coeff(int i, mpq_class v);   ///< used by codecs; no reduction

    std::string to_string() const;
    size_t hash() const;

  private:
    const CycField* F_ = nullptr;
    std::vector<mpq_class> c_;
    static const CycField* join(const Cyc& a, const Cyc& b);
};

// ---------------------------------------------------------------------------
// Ring tags and tagged scalars.
// ---------------------------------------------------------------------------

struct RingTag {
    enum class Kind : uint8_t { Generic, Root };
    Kind kind = Kind::Generic;
    int r = 0;  ///< root order; only meaningful for Kind::Root

    static RingTag generic() { return {Kind::Generic, 0}; }
    static RingTag root(int r);  ///< validates r odd >= 3
    bool is_root() const { return kind == Kind::Root; }
    bool operator==(const RingTag&) const = default;
    std::string to_string() const;
};

/// A scalar in either ring, tagged. Mixing rings raises RingMismatch.
class Scalar {
  public:
    Scalar() : tag_(RingTag::generic()) {}
    explicit Scalar(GenericScalar g) : tag_(RingTag::generic()), g_(std::move(g)) {}
    explicit Scalar(Cyc c);
    static Scalar zero(RingTag tag);
    static Scalar one(RingTag tag);
    static Scalar integer(long n, RingTag tag);

    RingTag tag() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;
    const GenericScalar& generic() const;  ///< throws RingMismatch if Root
    const Cyc& root() const;               ///< throws RingMismatch if Generic

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    std::strong_ordering operator<=>(const Scalar& o) const;
    std::string to_string() const;

  private:
    RingTag tag_;
    GenericScalar g_;
    Cyc c_;
    void check(const Scalar& o) const;
};

// ---------------------------------------------------------------------------
// Quantum integers and friends.
// ---------------------------------------------------------------------------

// Generic ring: {k} = A^{2k} - A^{-2k}, {k}' = A^{2k} + A^{-2k},
// [k] = {k}/{1} (a Laurent polynomial), [k]! = [1][2]...[k].
GenericScalar generic_brace(long k);
GenericScalar generic_brace_prime(long k);
GenericScalar generic_int(long k);
GenericScalar generic_factorial(long k);

// Root ring: the same quantities at q = A^2 a primitive r-th root of unity,
// e.g. [k] = (q^k - q^{-k})/(q - q^{-1}).
Cyc root_brace(long k, const CycField* F);
Cyc root_brace_prime(long k, const CycField* F);
Cyc root_int(long k, const CycField* F);
Cyc root_factorial(long k, const CycField* F);

// Tag-dispatched forms.
Scalar quantum_brace(long k, RingTag tag);
Scalar quantum_brace_prime(long k, RingTag tag);
Scalar quantum_int(long k, RingTag tag);
Scalar quantum_factorial(long k, RingTag tag);

/// Evaluate at A = q^{(r+1)/2}. Throws PoleAtRootOfUnity if the (canonical)
/// denominator vanishes there.
Cyc specialize(const GenericScalar& s, int r);

std::ostream& operator<<(std::ostream& os, const GenericScalar& s);
std::ostream& operator<<(std::ostream& os, const Cyc& c);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace smalltl
