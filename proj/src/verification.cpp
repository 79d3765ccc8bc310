#include "qmzv/verification.hpp"

#include <stdexcept>

namespace qmzv {

std::string_view to_string(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::eq1: return "eq1";
        case IdentityKind::eq2: return "eq2";
        case IdentityKind::eq3: return "eq3";
        case IdentityKind::thm1: return "thm1";
        case IdentityKind::thm2: return "thm2";
        case IdentityKind::lemma1: return "lemma1";
        case IdentityKind::lemma2: return "lemma2";
        case IdentityKind::duality: return "duality";
        case IdentityKind::theorem_a: return "theoremA";
        case IdentityKind::conj_i: return "conj_i";
        case IdentityKind::conj_ii: return "conj_ii";
        case IdentityKind::corollary1: return "corollary1";
    }
    throw std::logic_error("unknown identity kind");
}

IdentityKind identity_kind_from_string(std::string_view name) {
    if (name == "eq1") return IdentityKind::eq1;
    if (name == "eq2") return IdentityKind::eq2;
    if (name == "eq3") return IdentityKind::eq3;
    if (name == "thm1") return IdentityKind::thm1;
    if (name == "thm2") return IdentityKind::thm2;
    if (name == "lemma1") return IdentityKind::lemma1;
    if (name == "lemma2") return IdentityKind::lemma2;
    if (name == "duality") return IdentityKind::duality;
    if (name == "theoremA") return IdentityKind::theorem_a;
    if (name == "conj_i") return IdentityKind::conj_i;
    if (name == "conj_ii") return IdentityKind::conj_ii;
    if (name == "corollary1") return IdentityKind::corollary1;
    throw std::invalid_argument("unknown identity kind: '" + std::string(name) + "'");
}

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::counterexample: return "counterexample";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::error: return "error";
    }
    throw std::logic_error("unknown check status");
}

} // namespace qmzv
