#pragma once

#include <optional>
#include <utility>

#include "qmzv/qsums.hpp"
#include "qmzv/verification.hpp"

namespace qmzv {

/// Closed binomial forms for uniform and near-uniform z-values at order n:
///   all parts 1:      (1/n) C(n, r+1) (1-z)^r
///   all parts 2:      ((-1)^r / (n(r+1))) C(n+r, 2r+1) (1-z)^{2r}
///   all parts 3:      (1/(n^2(r+1))) (C(n+2r+1, 3r+2) + (-1)^r C(n+r, 3r+2)) (1-z)^{3r}
CyclotomicElement rhs_eq1(const FieldContext& ctx, unsigned r);
CyclotomicElement rhs_eq2(const FieldContext& ctx, unsigned r);
CyclotomicElement rhs_eq3(const FieldContext& ctx, unsigned r);

/// Closed forms for the symmetrized two-term sums
///   ({2}^a,3,{2}^b) + ({2}^b,3,{2}^a) and ({1}^a,2,{1}^b) + ({1}^b,2,{1}^a).
CyclotomicElement rhs_thm1(const FieldContext& ctx, unsigned a, unsigned b);
CyclotomicElement rhs_thm2(const FieldContext& ctx, unsigned a, unsigned b);

/// Families of compositions closed under cyclic rotation of the block
/// lengths d_0..d_t: blocks of 1s separated by 2s, or blocks of 2s
/// separated by 3s.
enum class CyclicBase { onetwo, twothree };

/// The composition for rotation j of the block-length vector d.
Composition build_cyclic_index(CyclicBase base, const std::vector<unsigned>& d, unsigned rotation);

/// Sum of z-values over all |d| rotations (duplicates included).
CyclotomicElement cyclic_sum(CyclicBase base, const std::vector<unsigned>& d, unsigned n);

/// Decides membership of x in (1-z)^r * Q and reports the witness: the
/// projection x (1-z)^{-r}, which is the rational constant when membership
/// holds and the non-rational residue otherwise.
struct RationalMultiple {
    bool is_member = false;
    Rational value;
    CyclotomicElement projection;
};

RationalMultiple rational_multiple_check(const CyclotomicElement& x, unsigned r);

VerificationResult check_eq1(unsigned n, unsigned r);
VerificationResult check_eq2(unsigned n, unsigned r);
VerificationResult check_eq3(unsigned n, unsigned r);
VerificationResult check_thm1(unsigned n, unsigned a, unsigned b);
VerificationResult check_thm2(unsigned n, unsigned a, unsigned b);
VerificationResult check_lemma1(unsigned n, const IndexTuple& idx, SumMode mode);
VerificationResult check_lemma2(unsigned n, unsigned k);
VerificationResult check_duality(unsigned n, const Composition& s);
VerificationResult check_theorem_a(long n, const Composition& s, const Rational& q);

/// Cyclic-sum checks.  Outside the stated range (n <= r) the result is
/// skipped.  The first family compares against its conjectured closed
/// form; the second decides rational-multiple membership and records the
/// observed constant in the note as "constant=p/q".
VerificationResult conjecture_i_check(const std::vector<unsigned>& d, unsigned n);
VerificationResult conjecture_ii_check(const std::vector<unsigned>& d, unsigned n);

/// The constant recorded by a verified conjecture_ii_check.
std::optional<Rational> conjecture_ii_constant(const VerificationResult& result);

/// Generic entry point: dispatches on the kind's parameter schema.
/// Exact-arithmetic kinds only; the limit-based corollary has its own
/// driver in limits.hpp.
VerificationResult verify(IdentityKind kind, const json& params);

} // namespace qmzv
