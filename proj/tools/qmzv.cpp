// Command-line front end: exact z-value computation, identity sweeps,
// cyclic-sum scans, and numeric limit estimation.
//
// Exit codes: 0 when every check verified or was skipped, 1 when at least
// one counterexample was found, 2 on usage or runtime errors (including
// checks that ended in an error status).

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qmzv/identities.hpp"
#include "qmzv/limits.hpp"
#include "qmzv/parallel.hpp"
#include "qmzv/report.hpp"
#include "qmzv/sweeps.hpp"

namespace {

using namespace qmzv;

// ---------------------------------------------------------------- output

void write_out(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + output_path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing output file: " + output_path);
    }
}

int status_exit_code(const std::vector<VerificationResult>& results) {
    bool counterexample = false;
    for (const VerificationResult& r : results) {
        if (r.status == CheckStatus::error) {
            return 2;
        }
        if (r.status == CheckStatus::counterexample) {
            counterexample = true;
        }
    }
    return counterexample ? 1 : 0;
}

int emit_report(const std::vector<VerificationResult>& results, const std::string& format,
                const std::string& output_path) {
    std::string text;
    if (format == "json") {
        text = report_to_json_text(results);
    } else if (format == "csv") {
        text = report_to_csv(results);
    } else {
        text = report_to_text(results);
    }
    write_out(text, output_path);
    return status_exit_code(results);
}

std::vector<VerificationResult> run_tasks(
    const std::vector<std::function<VerificationResult()>>& tasks, unsigned parallel) {
    const unsigned workers = resolve_parallelism(parallel);
    return parallel_map<VerificationResult>(tasks.size(), workers,
                                            [&](std::size_t i) { return tasks[i](); });
}

// --------------------------------------------------------------- compute

struct ComputeOptions {
    std::string index;
    unsigned n = 0;
    bool star = false;
    std::string format = "json";
    std::string output;
};

int run_compute(const ComputeOptions& opt) {
    const Composition s = parse_composition(opt.index);
    const CyclotomicElement value = zn(s, opt.n, opt.star ? SumMode::star : SumMode::strict);
    std::string text;
    if (opt.format == "json") {
        text = to_json(value).dump() + "\n";
    } else if (opt.format == "csv") {
        text = "i,coeff\n";
        for (std::size_t i = 0; i < value.coeffs().size(); ++i) {
            text += std::to_string(i) + "," + value.coeffs()[i].to_string() + "\n";
        }
    } else {
        text = "order " + std::to_string(opt.n) + ", coefficients on 1, z, ..., z^" +
               std::to_string(value.coeffs().size() - 1) + ":\n";
        for (std::size_t i = 0; i < value.coeffs().size(); ++i) {
            if (i > 0) text += ' ';
            text += value.coeffs()[i].to_string();
        }
        text += "\n";
    }
    write_out(text, opt.output);
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string kind;
    unsigned nmin = 2;
    std::optional<unsigned> nmax;
    std::optional<unsigned> rmax;
    std::optional<unsigned> abmax;
    std::optional<unsigned> wmax;
    unsigned count = 200;
    std::string q_list = "2,3/2,-1/2";
    std::uint64_t seed = 12345;
    unsigned parallel = 1;
    std::string format = "json";
    std::string output;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(Rational::from_string(text.substr(pos, comma - pos)));
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

int run_verify(const VerifyOptions& opt) {
    const IdentityKind kind = identity_kind_from_string(opt.kind);
    std::vector<std::function<VerificationResult()>> tasks;

    switch (kind) {
        case IdentityKind::eq1: {
            const unsigned nmax = opt.nmax.value_or(40);
            for (unsigned n = std::max(2u, opt.nmin); n <= nmax; ++n) {
                const unsigned top = std::min(opt.rmax.value_or(n - 1), n - 1);
                for (unsigned r = 0; r <= top; ++r) {
                    tasks.push_back([n, r] { return check_eq1(n, r); });
                }
            }
            break;
        }
        case IdentityKind::eq2: {
            const unsigned nmax = opt.nmax.value_or(40);
            const unsigned rmax = opt.rmax.value_or(8);
            for (unsigned n = std::max(2u, opt.nmin); n <= nmax; ++n) {
                for (unsigned r = 0; r <= rmax; ++r) {
                    tasks.push_back([n, r] { return check_eq2(n, r); });
                }
            }
            break;
        }
        case IdentityKind::eq3: {
            const unsigned nmax = opt.nmax.value_or(40);
            const unsigned rmax = opt.rmax.value_or(6);
            for (unsigned n = std::max(2u, opt.nmin); n <= nmax; ++n) {
                for (unsigned r = 0; r <= rmax; ++r) {
                    tasks.push_back([n, r] { return check_eq3(n, r); });
                }
            }
            break;
        }
        case IdentityKind::thm1:
        case IdentityKind::thm2: {
            const unsigned nmax = opt.nmax.value_or(30);
            const unsigned abmax = opt.abmax.value_or(kind == IdentityKind::thm1 ? 5 : 6);
            for (unsigned n = std::max(2u, opt.nmin); n <= nmax; ++n) {
                for (unsigned a = 0; a <= abmax; ++a) {
                    for (unsigned b = 0; a + b <= abmax; ++b) {
                        if (kind == IdentityKind::thm1) {
                            tasks.push_back([n, a, b] { return check_thm1(n, a, b); });
                        } else {
                            tasks.push_back([n, a, b] { return check_thm2(n, a, b); });
                        }
                    }
                }
            }
            break;
        }
        case IdentityKind::lemma1: {
            const auto cases = random_reversal_cases(opt.count, opt.wmax.value_or(6),
                                                     opt.nmax.value_or(25), opt.seed);
            for (const auto& [idx, n] : cases) {
                tasks.push_back([idx, n] { return check_lemma1(n, idx, SumMode::strict); });
                tasks.push_back([idx, n] { return check_lemma1(n, idx, SumMode::star); });
            }
            break;
        }
        case IdentityKind::lemma2: {
            const unsigned nmax = opt.nmax.value_or(60);
            for (unsigned n = std::max(2u, opt.nmin); n <= nmax; ++n) {
                for (unsigned k = 1; k < n; ++k) {
                    tasks.push_back([n, k] { return check_lemma2(n, k); });
                }
            }
            break;
        }
        case IdentityKind::duality: {
            const unsigned nmax = opt.nmax.value_or(20);
            const auto comps = compositions_up_to_weight(opt.wmax.value_or(5));
            for (unsigned n = std::max(2u, opt.nmin); n <= nmax; ++n) {
                for (const Composition& s : comps) {
                    tasks.push_back([n, s] { return check_duality(n, s); });
                }
            }
            break;
        }
        case IdentityKind::theorem_a: {
            const unsigned nmax = opt.nmax.value_or(12);
            const auto comps = compositions_up_to_weight(opt.wmax.value_or(5));
            const auto points = parse_rational_list(opt.q_list);
            for (const Rational& q : points) {
                for (unsigned n = std::max(1u, opt.nmin); n <= nmax; ++n) {
                    for (const Composition& s : comps) {
                        tasks.push_back([n, s, q] { return check_theorem_a(n, s, q); });
                    }
                }
            }
            break;
        }
        case IdentityKind::conj_i:
        case IdentityKind::conj_ii:
            throw std::invalid_argument("use the scan command for the cyclic-sum families");
        case IdentityKind::corollary1:
            throw std::invalid_argument("use the xi command for the limit identities");
    }

    const auto results = run_tasks(tasks, opt.parallel);
    return emit_report(results, opt.format, opt.output);
}

// ------------------------------------------------------------------ scan

struct ScanOptions {
    std::string conjecture;
    unsigned tmax = 2;
    unsigned dmax = 2;
    unsigned nmin = 2;
    unsigned nmax = 30;
    std::string constants;
    unsigned parallel = 1;
    std::string format = "json";
    std::string output;
};

int run_scan(const ScanOptions& opt) {
    const bool first_family = opt.conjecture == "i";
    if (!first_family && opt.conjecture != "ii") {
        throw std::invalid_argument("conjecture must be 'i' or 'ii'");
    }
    std::vector<std::function<VerificationResult()>> tasks;
    for (unsigned t = 0; t <= opt.tmax; ++t) {
        for (const auto& d : cyclic_orbit_representatives(t, opt.dmax)) {
            for (unsigned n = std::max(2u, opt.nmin); n <= opt.nmax; ++n) {
                if (first_family) {
                    tasks.push_back([d, n] { return conjecture_i_check(d, n); });
                } else {
                    tasks.push_back([d, n] { return conjecture_ii_check(d, n); });
                }
            }
        }
    }
    const auto results = run_tasks(tasks, opt.parallel);

    if (!first_family && !opt.constants.empty()) {
        std::vector<ConstantRow> rows;
        for (const VerificationResult& res : results) {
            const auto constant = conjecture_ii_constant(res);
            if (!constant) {
                continue;
            }
            ConstantRow row;
            row.t = res.params.at("t").get<unsigned>();
            row.d = res.params.at("d").get<std::vector<unsigned>>();
            row.n = res.params.at("n").get<unsigned>();
            row.r = res.params.at("r").get<unsigned>();
            row.constant = *constant;
            rows.push_back(std::move(row));
        }
        write_out(constants_to_csv(rows), opt.constants);
    }

    return emit_report(results, opt.format, opt.output);
}

// -------------------------------------------------------------------- xi

struct XiOptions {
    std::string index;
    bool corollary1 = false;
    unsigned a = 0;
    unsigned b = 0;
    unsigned nmax = 8192;
    double tol = 5e-3;
    std::string scheme = "richardson";
    std::string format = "json";
    std::string output;
};

int run_xi(const XiOptions& opt) {
    if (opt.corollary1) {
        const std::vector<VerificationResult> results{
            corollary1_check(opt.a, opt.b, opt.nmax, opt.tol)};
        return emit_report(results, opt.format, opt.output);
    }
    if (opt.index.empty()) {
        throw std::invalid_argument("xi needs --index or --corollary1");
    }
    const Composition s = parse_composition(opt.index);
    const XiEstimate est = xi_estimate(s, opt.nmax, limit_scheme_from_string(opt.scheme));

    std::string text;
    if (opt.format == "json") {
        json ladder = json::array();
        for (std::size_t i = 0; i < est.n_sequence.size(); ++i) {
            ladder.push_back(json{{"n", est.n_sequence[i]},
                                  {"value", complex_to_json(est.raw_values[i])}});
        }
        const json doc{{"index", s},
                       {"scheme", opt.scheme},
                       {"value", complex_to_json(est.value)},
                       {"error_estimate", est.error_estimate},
                       {"ladder", std::move(ladder)}};
        text = doc.dump(2) + "\n";
    } else if (opt.format == "csv") {
        text = "n,re,im\n";
        for (std::size_t i = 0; i < est.n_sequence.size(); ++i) {
            text += std::to_string(est.n_sequence[i]) + "," +
                    std::to_string(est.raw_values[i].real()) + "," +
                    std::to_string(est.raw_values[i].imag()) + "\n";
        }
        text += "estimate," + std::to_string(est.value.real()) + "," +
                std::to_string(est.value.imag()) + "\n";
    } else {
        text = "limit estimate for (" + format_composition(s) + "), scheme " + opt.scheme + "\n";
        for (std::size_t i = 0; i < est.n_sequence.size(); ++i) {
            text += "  n = " + std::to_string(est.n_sequence[i]) + ": " +
                    std::to_string(est.raw_values[i].real()) + " + " +
                    std::to_string(est.raw_values[i].imag()) + "i\n";
        }
        text += "value: " + std::to_string(est.value.real()) + " + " +
                std::to_string(est.value.imag()) + "i\n";
        text += "error estimate: " + std::to_string(est.error_estimate) + "\n";
    }
    write_out(text, opt.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite multiple harmonic q-series at roots of unity"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"json", "csv", "text"});

    ComputeOptions compute_opt;
    CLI::App* compute = app.add_subcommand("compute", "compute one z-value exactly");
    compute->add_option("--index", compute_opt.index, "composition, e.g. '2' or '1^3,2'")
        ->required();
    compute->add_option("--n", compute_opt.n, "order of the root of unity")->required();
    compute->add_flag("--star", compute_opt.star, "use weak inequalities in the sum");
    compute->add_option("--format", compute_opt.format)->check(format_check);
    compute->add_option("--output", compute_opt.output, "write to file instead of stdout");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "sweep an identity over parameter ranges");
    verify
        ->add_option("--kind", verify_opt.kind,
                     "eq1|eq2|eq3|thm1|thm2|lemma1|lemma2|duality|theoremA")
        ->required();
    verify->add_option("--nmin", verify_opt.nmin);
    verify->add_option("--nmax", verify_opt.nmax);
    verify->add_option("--rmax", verify_opt.rmax, "depth cap for the uniform families");
    verify->add_option("--abmax", verify_opt.abmax, "cap on a+b for the sandwich sums");
    verify->add_option("--wmax", verify_opt.wmax, "weight cap for composition sweeps");
    verify->add_option("--count", verify_opt.count, "random cases for lemma1");
    verify->add_option("--q", verify_opt.q_list, "rational points for theoremA, comma-separated");
    verify->add_option("--seed", verify_opt.seed);
    verify->add_option("--parallel", verify_opt.parallel,
                       "worker threads (QMZV_THREADS overrides)");
    verify->add_option("--format", verify_opt.format)->check(format_check);
    verify->add_option("--output", verify_opt.output);

    ScanOptions scan_opt;
    CLI::App* scan = app.add_subcommand("scan", "sweep a cyclic-sum family");
    scan->add_option("--conjecture", scan_opt.conjecture, "i or ii")->required();
    scan->add_option("--tmax", scan_opt.tmax, "max number of separators");
    scan->add_option("--dmax", scan_opt.dmax, "max block length");
    scan->add_option("--nmin", scan_opt.nmin);
    scan->add_option("--nmax", scan_opt.nmax);
    scan->add_option("--constants", scan_opt.constants,
                     "write the observed constants (family ii) to this CSV file");
    scan->add_option("--parallel", scan_opt.parallel, "worker threads (QMZV_THREADS overrides)");
    scan->add_option("--format", scan_opt.format)->check(format_check);
    scan->add_option("--output", scan_opt.output);

    XiOptions xi_opt;
    CLI::App* xi = app.add_subcommand("xi", "numeric limit of z-values along a doubling ladder");
    xi->add_option("--index", xi_opt.index, "composition for a single limit estimate");
    xi->add_flag("--corollary1", xi_opt.corollary1, "check the two limit identities instead");
    xi->add_option("--a", xi_opt.a);
    xi->add_option("--b", xi_opt.b);
    xi->add_option("--nmax", xi_opt.nmax, "largest ladder point");
    xi->add_option("--tol", xi_opt.tol, "residual tolerance for --corollary1");
    xi->add_option("--scheme", xi_opt.scheme)->check(CLI::IsMember({"richardson", "last_value"}));
    xi->add_option("--format", xi_opt.format)->check(format_check);
    xi->add_option("--output", xi_opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(compute_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (scan->parsed()) return run_scan(scan_opt);
        if (xi->parsed()) return run_xi(xi_opt);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
