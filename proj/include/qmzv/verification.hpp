#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace qmzv {

using json = nlohmann::ordered_json;

/// Stable tags for the identities and conjectures the tool can check; the
/// tag fixes the parameter schema of a check.
enum class IdentityKind {
    eq1,
    eq2,
    eq3,
    thm1,
    thm2,
    lemma1,
    lemma2,
    duality,
    theorem_a,
    conj_i,
    conj_ii,
    corollary1,
};

std::string_view to_string(IdentityKind kind);
IdentityKind identity_kind_from_string(std::string_view name);

enum class CheckStatus { verified, counterexample, skipped, error };

std::string_view to_string(CheckStatus status);

/// Outcome of one identity check.  lhs/rhs hold the serialized values that
/// were compared (exact field elements, rationals, or complex numbers).
struct VerificationResult {
    IdentityKind kind = IdentityKind::eq1;
    json params;
    CheckStatus status = CheckStatus::error;
    json lhs;
    json rhs;
    std::string note;
    std::int64_t runtime_ms = 0;
};

} // namespace qmzv
