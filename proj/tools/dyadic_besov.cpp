// Command-line front end for the 2-adic harmonic analysis library: exact
// p-adic arithmetic queries, Besov norms of function files, Littlewood-Paley
// decomposition, and the extremal-family engine with CSV/JSON sweep output.
//
// Exit codes: 0 ok, 2 usage or input error, 3 validation failure,
// 4 capacity exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/besov.hpp"
#include "dyadic/counterexample.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/function_io.hpp"
#include "dyadic/lcfunction.hpp"
#include "dyadic/padic.hpp"

namespace {

unsigned default_precision() {
    if (const char* env = std::getenv("DYADIC_BESOV_PRECISION")) {
        dyadic::Rational r = dyadic::parse_rational(env);
        if (r.get_den() != 1 || r < 16 || !r.get_num().fits_ulong_p()) {
            throw std::invalid_argument(
                "DYADIC_BESOV_PRECISION must be an integer >= 16");
        }
        return static_cast<unsigned>(r.get_num().get_ui());
    }
    return 64;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    const std::string lo_s = text.substr(0, colon);
    const std::string hi_s =
        colon == std::string::npos ? lo_s : text.substr(colon + 1);
    dyadic::Rational lo = dyadic::parse_rational(lo_s);
    dyadic::Rational hi = dyadic::parse_rational(hi_s);
    if (lo.get_den() != 1 || hi.get_den() != 1 || lo < 1 || hi < lo ||
        !hi.get_num().fits_uint_p()) {
        throw std::invalid_argument("bad j0 range '" + text +
                                    "' (expected lo:hi with 1 <= lo <= hi)");
    }
    return {static_cast<unsigned>(lo.get_num().get_ui()),
            static_cast<unsigned>(hi.get_num().get_ui())};
}

struct PadicArgs {
    unsigned long prime = 2;
    std::string valuation_of, norm_of, digits_of;
    unsigned count = 8;
};

int run_padic(const PadicArgs& a) {
    const int chosen = !a.valuation_of.empty() + !a.norm_of.empty() +
                       !a.digits_of.empty();
    if (chosen != 1) {
        throw std::invalid_argument(
            "choose exactly one of --valuation, --norm, --digits");
    }
    if (!a.valuation_of.empty()) {
        dyadic::Valuation v =
            dyadic::valuation(dyadic::parse_rational(a.valuation_of), a.prime);
        std::cout << (v.is_infinity() ? std::string("+inf")
                                      : std::to_string(v.value()))
                  << '\n';
    } else if (!a.norm_of.empty()) {
        std::cout << dyadic::to_string(dyadic::padic_norm(
                         dyadic::parse_rational(a.norm_of), a.prime))
                  << '\n';
    } else {
        dyadic::DigitExpansion d =
            dyadic::digits(dyadic::parse_rational(a.digits_of), a.prime, a.count);
        std::cout << "gamma=" << d.valuation << " digits=";
        for (std::size_t i = 0; i < d.digits.size(); ++i) {
            std::cout << (i ? "," : "") << d.digits[i];
        }
        std::cout << '\n';
    }
    return 0;
}

struct NormsArgs {
    std::string input, s = "0", p = "inf", q = "inf";
    bool homogeneous = false;
    unsigned precision = 0;
};

int run_norms(const NormsArgs& a) {
    dyadic::LCFunction f = dyadic::read_function_file(a.input);
    dyadic::BesovParams params{dyadic::parse_rational(a.s),
                               dyadic::LqIndex::parse(a.p),
                               dyadic::LqIndex::parse(a.q), a.homogeneous};
    dyadic::NormReport report = dyadic::besov_norm(f, params, a.precision);
    std::cout << dyadic::norm_report_to_json(report).dump(2) << '\n';
    return 0;
}

struct SweepArgs {
    std::string j0_range;
    std::string q = "inf", exponent = "0", alpha = "1";
    std::string format = "csv", output;
    unsigned precision = 0;
};

void write_rows(const std::vector<dyadic::SweepRow>& rows,
                const std::string& format, unsigned precision,
                std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            arr.push_back(dyadic::sweep_row_json(row, precision));
        }
        out << arr.dump(2) << '\n';
    } else {
        out << dyadic::sweep_csv_header() << '\n';
        for (const auto& row : rows) {
            out << dyadic::sweep_row_csv(row, precision) << '\n';
        }
    }
}

int run_sweep(const SweepArgs& a) {
    auto [lo, hi] = parse_range(a.j0_range);
    std::vector<unsigned> j0s;
    for (unsigned j0 = lo; j0 <= hi; ++j0) j0s.push_back(j0);
    dyadic::EpsilonSpec eps{dyadic::parse_rational(a.exponent), a.precision};
    std::vector<dyadic::SweepRow> rows = dyadic::sweep(
        j0s, dyadic::LqIndex::parse(a.q), eps, dyadic::parse_rational(a.alpha));
    if (a.output.empty()) {
        write_rows(rows, a.format, a.precision, std::cout);
    } else {
        std::ofstream out(a.output);
        if (!out) throw std::invalid_argument("cannot open " + a.output);
        write_rows(rows, a.format, a.precision, out);
    }
    return 0;
}

struct CounterexampleArgs {
    unsigned j0 = 1;
    std::string q = "inf", exponent = "0", alpha = "1";
    std::string format = "csv", materialize_path;
    bool cross_validate = false;
    unsigned precision = 0;
};

int run_counterexample(const CounterexampleArgs& a) {
    dyadic::CounterexampleConfig cfg{
        a.j0, dyadic::parse_rational(a.alpha), dyadic::LqIndex::parse(a.q),
        dyadic::EpsilonSpec{dyadic::parse_rational(a.exponent), a.precision}};
    cfg.validate();

    dyadic::SweepRow row{cfg, dyadic::closed_form_norms(cfg), dyadic::ratio(cfg)};

    std::optional<dyadic::LCFunction> dense;
    if (!a.materialize_path.empty()) {
        dense = dyadic::materialize(dyadic::build_blocks(cfg));
    }

    write_rows({row}, a.format, a.precision, std::cout);
    if (dense) dyadic::write_function_file(*dense, a.materialize_path);
    if (a.cross_validate) {
        dyadic::cross_validate(cfg);
        std::cout << "OK\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-adic Littlewood-Paley / Besov toolkit"};
    app.require_subcommand(1);

    unsigned precision = 0; // resolved after parsing so --help needs no env

    PadicArgs padic_args;
    CLI::App* padic = app.add_subcommand("padic", "p-adic arithmetic queries");
    padic->add_option("--prime", padic_args.prime, "prime p")->required();
    padic->add_option("--valuation", padic_args.valuation_of,
                      "print the p-adic valuation of a rational");
    padic->add_option("--norm", padic_args.norm_of,
                      "print the p-adic norm of a rational");
    padic->add_option("--digits", padic_args.digits_of,
                      "print the canonical digit expansion of a rational");
    padic->add_option("--count", padic_args.count,
                      "number of digits for --digits (default 8)");

    NormsArgs norms_args;
    CLI::App* norms =
        app.add_subcommand("norms", "Besov norm of a function file");
    norms->add_option("--input", norms_args.input, "function file (JSON)")
        ->required();
    norms->add_option("--s", norms_args.s, "smoothness (rational, default 0)");
    norms->add_option("--p", norms_args.p, "integrability index or 'inf'");
    norms->add_option("--q", norms_args.q, "summation index or 'inf'");
    norms->add_flag("--homogeneous", norms_args.homogeneous,
                    "drop the mean term");
    norms->add_option("--precision", precision, "float precision in bits (default 64; env DYADIC_BESOV_PRECISION)");

    std::string dec_in, dec_out;
    CLI::App* dec = app.add_subcommand(
        "decompose", "write the Littlewood-Paley blocks of a function file");
    dec->add_option("--input", dec_in, "function file (JSON)")->required();
    dec->add_option("--output", dec_out, "blocks file (JSON)")->required();

    std::string rec_in, rec_out;
    CLI::App* rec = app.add_subcommand(
        "reconstruct", "rebuild a function file from its blocks");
    rec->add_option("--input", rec_in, "blocks file (JSON)")->required();
    rec->add_option("--output", rec_out, "function file (JSON)")->required();

    CounterexampleArgs ce_args;
    CLI::App* ce = app.add_subcommand(
        "counterexample", "one member of the extremal family, closed form");
    ce->add_option("--j0", ce_args.j0, "base scale (j1 = 2*j0)")->required();
    ce->add_option("--q", ce_args.q, "Besov index, integer > 2 or 'inf'");
    ce->add_option("--exponent", ce_args.exponent,
                   "epsilon decay exponent (rational, default 0)");
    ce->add_option("--alpha", ce_args.alpha, "amplitude (rational, default 1)");
    ce->add_option("--format", ce_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    ce->add_option("--materialize", ce_args.materialize_path,
                   "write the dense function file (needs 2*j0+1 <= 24)");
    ce->add_flag("--cross-validate", ce_args.cross_validate,
                 "check closed forms against the dense path (2*j0+1 <= 20)");
    ce->add_option("--precision", precision, "float precision in bits (default 64; env DYADIC_BESOV_PRECISION)");

    SweepArgs sweep_args;
    CLI::App* sw = app.add_subcommand(
        "sweep", "closed-form rows over a range of base scales");
    sw->add_option("--j0", sweep_args.j0_range, "range lo:hi")->required();
    sw->add_option("--q", sweep_args.q, "Besov index, integer > 2 or 'inf'");
    sw->add_option("--exponent", sweep_args.exponent,
                   "epsilon decay exponent (rational, default 0)");
    sw->add_option("--alpha", sweep_args.alpha, "amplitude (rational, default 1)");
    sw->add_option("--format", sweep_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sw->add_option("--output", sweep_args.output,
                   "output path (default: stdout)");
    sw->add_option("--precision", precision, "float precision in bits (default 64; env DYADIC_BESOV_PRECISION)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (precision == 0) precision = default_precision();
        if (precision < 16) {
            throw std::invalid_argument("precision must be at least 16 bits");
        }
        norms_args.precision = precision;
        ce_args.precision = precision;
        sweep_args.precision = precision;

        if (*padic) return run_padic(padic_args);
        if (*norms) return run_norms(norms_args);
        if (*dec) {
            dyadic::write_blocks_file(
                dyadic::decompose(dyadic::read_function_file(dec_in)), dec_out);
            return 0;
        }
        if (*rec) {
            dyadic::write_function_file(
                dyadic::reconstruct(dyadic::read_blocks_file(rec_in)), rec_out);
            return 0;
        }
        if (*ce) return run_counterexample(ce_args);
        if (*sw) return run_sweep(sweep_args);
        return 2;
    } catch (const dyadic::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const dyadic::validation_error& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
