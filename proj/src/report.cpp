#include "qmzv/report.hpp"

#include <sstream>

namespace qmzv {

json to_json(const CyclotomicElement& value) {
    json coeffs = json::array();
    for (const Rational& c : value.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    return json{{"n", value.order()}, {"coeffs", std::move(coeffs)}};
}

json rational_to_json(const Rational& value) {
    return json{{"n", 1}, {"coeffs", json::array({value.to_string()})}};
}

json complex_to_json(const std::complex<double>& value) {
    return json{{"re", value.real()}, {"im", value.imag()}};
}

json to_json(const VerificationResult& result) {
    return json{
        {"kind", to_string(result.kind)},
        {"params", result.params},
        {"status", to_string(result.status)},
        {"lhs", result.lhs},
        {"rhs", result.rhs},
        {"note", result.note},
        {"runtime_ms", result.runtime_ms},
    };
}

json report_to_json(const std::vector<VerificationResult>& results) {
    json out = json::array();
    for (const VerificationResult& r : results) {
        out.push_back(to_json(r));
    }
    return out;
}

std::string report_to_json_text(const std::vector<VerificationResult>& results) {
    return report_to_json(results).dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string report_to_csv(const std::vector<VerificationResult>& results) {
    std::string out = "kind,params,status,lhs,rhs,note,runtime_ms\n";
    for (const VerificationResult& r : results) {
        out += csv_escape(std::string(to_string(r.kind)));
        out += ',';
        out += csv_escape(r.params.dump());
        out += ',';
        out += csv_escape(std::string(to_string(r.status)));
        out += ',';
        out += csv_escape(r.lhs.dump());
        out += ',';
        out += csv_escape(r.rhs.dump());
        out += ',';
        out += csv_escape(r.note);
        out += ',';
        out += std::to_string(r.runtime_ms);
        out += '\n';
    }
    return out;
}

std::string report_to_text(const std::vector<VerificationResult>& results) {
    std::ostringstream out;
    std::size_t verified = 0, counterexamples = 0, skipped = 0, errors = 0;
    for (const VerificationResult& r : results) {
        out << to_string(r.status) << "  " << to_string(r.kind) << "  " << r.params.dump();
        if (!r.note.empty()) {
            out << "  (" << r.note << ")";
        }
        out << "\n";
        switch (r.status) {
            case CheckStatus::verified: ++verified; break;
            case CheckStatus::counterexample: ++counterexamples; break;
            case CheckStatus::skipped: ++skipped; break;
            case CheckStatus::error: ++errors; break;
        }
    }
    out << results.size() << " checks: " << verified << " verified, " << counterexamples
        << " counterexamples, " << skipped << " skipped, " << errors << " errors\n";
    return out.str();
}

std::string constants_to_csv(const std::vector<ConstantRow>& rows) {
    std::string out = "t,d,n,r,constant\n";
    for (const ConstantRow& row : rows) {
        out += std::to_string(row.t);
        out += ',';
        std::string d_joined;
        for (std::size_t i = 0; i < row.d.size(); ++i) {
            if (i > 0) d_joined += ';';
            d_joined += std::to_string(row.d[i]);
        }
        out += csv_escape(d_joined);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.r);
        out += ',';
        out += csv_escape(row.constant.to_string());
        out += '\n';
    }
    return out;
}

} // namespace qmzv
