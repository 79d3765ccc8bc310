#pragma once

#include <complex>
#include <vector>

#include "qmzv/cyclotomic.hpp"
#include "qmzv/verification.hpp"

namespace qmzv {

/// {"n": order, "coeffs": ["p/q", ...]} with exactly degree-many entries;
/// integral coefficients print without a denominator.
json to_json(const CyclotomicElement& value);

/// Rationals ride the same schema as the order-1 degenerate case:
/// {"n": 1, "coeffs": ["p/q"]}.
json rational_to_json(const Rational& value);

json complex_to_json(const std::complex<double>& value);

json to_json(const VerificationResult& result);

json report_to_json(const std::vector<VerificationResult>& results);

/// Pretty-printed JSON document, trailing newline included.
std::string report_to_json_text(const std::vector<VerificationResult>& results);

/// One row per result: kind,params,status,lhs,rhs,note,runtime_ms with
/// RFC-style quoting for fields containing commas or quotes.
std::string report_to_csv(const std::vector<VerificationResult>& results);

/// Human-readable one-line-per-result rendering plus a status tally.
std::string report_to_text(const std::vector<VerificationResult>& results);

/// One row of the cyclic-sum constant table.
struct ConstantRow {
    unsigned t = 0;
    std::vector<unsigned> d;
    unsigned n = 0;
    unsigned r = 0;
    Rational constant;
};

/// CSV with header t,d,n,r,constant; d is semicolon-joined.
std::string constants_to_csv(const std::vector<ConstantRow>& rows);

} // namespace qmzv
