// Command-line interface: approximant generation, continued-fraction
// convergents, property verification, seed search, and the historical
// replication bundle, with table/csv/json output.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kochanski/approximants.hpp"
#include "kochanski/convergents.hpp"
#include "kochanski/errors.hpp"
#include "kochanski/replica.hpp"

using json = nlohmann::ordered_json;
using namespace kochanski;

namespace {

enum class Format { Table, Csv, Json };

struct Options {
    std::string alpha;
    std::string seed;
    std::size_t count = 5;
    std::string max_denominator = "1";
    Format format = Format::Table;
    bool reduced = false;
    bool rounding = false;
    unsigned max_digits = kDefaultMaxDigits;
};

std::pair<Integer, Integer> parse_seed(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
        throw kochanski::ParseError("seed must look like R0/S0, got '" + text + "'");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i != slash && !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw kochanski::ParseError("seed must be two positive integers, got '" + text + "'");
        }
    }
    Integer r(text.substr(0, slash));
    Integer s(text.substr(slash + 1));
    if (r < 1 || s < 1) {
        throw kochanski::ParseError("seed components must be positive");
    }
    return {std::move(r), std::move(s)};
}

Integer parse_positive(const std::string& text, const char* what) {
    if (text.empty()) {
        throw kochanski::ParseError(std::string("empty ") + what);
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw kochanski::ParseError(std::string("invalid ") + what + ": '" + text + "'");
        }
    }
    Integer v(text);
    if (v < 1) {
        throw kochanski::ParseError(std::string(what) + " must be >= 1");
    }
    return v;
}

RealConstant constant_from(const Options& opt) {
    RealConstant c = parse_constant(opt.alpha);
    if (c.is_rational()) {
        std::cerr << "note: " << c.spec_string()
                  << " is exactly rational; the recursion assumes an irrational target and may "
                     "terminate early\n";
    }
    return c;
}

std::string fraction_text(const Rational& r, bool reduced) {
    return reduced ? reduce(r).str() : r.str();
}

void print_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) {
                os << std::string(widths[i] - row[i].size() + 2, ' ');
            }
        }
        os << "\n";
    }
}

// ---- approximants / genitores ----

json states_to_json(const std::vector<ApproximantState>& states, bool reduced) {
    json arr = json::array();
    for (const auto& st : states) {
        json row;
        row["n"] = st.n;
        if (st.P) {
            const Rational lower = reduced ? reduce(st.lower()) : st.lower();
            row["P"] = lower.num.str();
            row["Q"] = lower.den.str();
        } else {
            row["P"] = nullptr;
            row["Q"] = nullptr;
        }
        const Rational upper = reduced ? reduce(st.upper()) : st.upper();
        row["R"] = upper.num.str();
        row["S"] = upper.den.str();
        if (st.x) {
            row["x"] = st.x->str();
        } else {
            row["x"] = nullptr;
        }
        arr.push_back(std::move(row));
    }
    return arr;
}

int cmd_approximants(const Options& opt, bool genitores_only) {
    const RealConstant alpha = constant_from(opt);
    const auto [r0, s0] = parse_seed(opt.seed);
    const auto states = generate_sequence(r0, s0, alpha, opt.count, opt.max_digits);

    switch (opt.format) {
        case Format::Table: {
            std::vector<std::vector<std::string>> rows;
            if (genitores_only) {
                rows.push_back({"n", "x"});
                for (const auto& st : states) {
                    if (st.x) rows.push_back({std::to_string(st.n), st.x->str()});
                }
            } else {
                rows.push_back({"n", "P/Q", "R/S", "x"});
                for (const auto& st : states) {
                    rows.push_back({std::to_string(st.n),
                                    st.P ? fraction_text(st.lower(), opt.reduced) : "-",
                                    fraction_text(st.upper(), opt.reduced),
                                    st.x ? st.x->str() : "-"});
                }
            }
            print_aligned(std::cout, rows);
            break;
        }
        case Format::Csv: {
            if (genitores_only) {
                std::cout << "n,x\n";
                for (const auto& st : states) {
                    if (st.x) std::cout << st.n << "," << *st.x << "\n";
                }
            } else {
                std::cout << "n,P,Q,R,S,x\n";
                for (const auto& st : states) {
                    const Rational upper = opt.reduced ? reduce(st.upper()) : st.upper();
                    std::cout << st.n << ",";
                    if (st.P) {
                        const Rational lower = opt.reduced ? reduce(st.lower()) : st.lower();
                        std::cout << lower.num << "," << lower.den;
                    } else {
                        std::cout << ",";
                    }
                    std::cout << "," << upper.num << "," << upper.den << ",";
                    if (st.x) std::cout << *st.x;
                    std::cout << "\n";
                }
            }
            break;
        }
        case Format::Json: {
            json out;
            out["alpha"] = alpha.spec_string();
            out["seed"] = {{"R0", r0.str()}, {"S0", s0.str()}};
            out["count"] = opt.count;
            if (genitores_only) {
                json xs = json::array();
                for (const auto& st : states) {
                    if (st.x) xs.push_back(st.x->str());
                }
                out["genitores"] = std::move(xs);
            } else {
                out["reduced"] = opt.reduced;
                out["states"] = states_to_json(states, opt.reduced);
            }
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---- convergents ----

int cmd_convergents(const Options& opt) {
    const RealConstant alpha = constant_from(opt);
    const ConvergentRun run = convergents(alpha, opt.count, opt.max_digits);
    if (run.terminated) {
        std::cerr << "note: expansion terminates after " << run.states.size()
                  << " convergents (rational constant)\n";
    }
    switch (opt.format) {
        case Format::Table: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"n", "a", "p/q"});
            for (const auto& st : run.states) {
                rows.push_back({std::to_string(st.n), st.a.str(), st.value().str()});
            }
            print_aligned(std::cout, rows);
            break;
        }
        case Format::Csv: {
            std::cout << "n,a,p,q\n";
            for (const auto& st : run.states) {
                std::cout << st.n << "," << st.a << "," << st.p << "," << st.q << "\n";
            }
            break;
        }
        case Format::Json: {
            json out;
            out["alpha"] = alpha.spec_string();
            out["terminated"] = run.terminated;
            json arr = json::array();
            for (const auto& st : run.states) {
                arr.push_back({{"n", st.n},
                               {"a", st.a.str()},
                               {"p", st.p.str()},
                               {"q", st.q.str()}});
            }
            out["convergents"] = std::move(arr);
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---- verify ----

int cmd_verify(const Options& opt) {
    const RealConstant alpha = constant_from(opt);
    const auto [r0, s0] = parse_seed(opt.seed);
    const auto states = generate_sequence(r0, s0, alpha, opt.count, opt.max_digits);
    const PropertyReport report = verify_properties(states, alpha, opt.max_digits);

    // Oracle cross-check for every genitor small enough to scan.
    const Integer oracle_limit = 1000000;
    std::size_t oracle_checked = 0;
    for (const auto& st : states) {
        if (st.x && *st.x <= oracle_limit) {
            const Integer expected =
                brute_force_genitor(st.R, st.S, alpha, *st.x + 10, opt.max_digits);
            if (expected != *st.x) {
                throw PropertyViolation(st.n, "genitor disagrees with brute-force oracle");
            }
            ++oracle_checked;
        }
    }

    std::vector<std::string> notes;
    for (std::size_t n = 1; n < states.size(); ++n) {
        if (states[n].x && states[n - 1].x && *states[n].x == *states[n - 1].x) {
            notes.push_back("repeated genitor: x_" + std::to_string(n - 1) + " = x_" +
                            std::to_string(n) + " = " + states[n].x->str());
        }
    }

    switch (opt.format) {
        case Format::Table: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"n", "x", "gap"});
            for (const auto& chk : report.steps) {
                rows.push_back({std::to_string(chk.n), chk.x ? chk.x->str() : "-",
                                chk.n >= 1 ? chk.gap.str() : "-"});
            }
            print_aligned(std::cout, rows);
            for (const auto& note : notes) std::cout << note << "\n";
            std::cout << "all properties verified (" << report.steps.size() << " rows, "
                      << oracle_checked << " genitores oracle-checked)\n";
            break;
        }
        case Format::Csv: {
            std::cout << "n,x,gap_num,gap_den,bounds_ok,upper_decreased,lower_increased,"
                         "gap_positive,gap_decreased,gap_bound_ok\n";
            for (const auto& chk : report.steps) {
                std::cout << chk.n << ",";
                if (chk.x) std::cout << *chk.x;
                std::cout << ",";
                if (chk.n >= 1) {
                    std::cout << chk.gap.num << "," << chk.gap.den;
                } else {
                    std::cout << ",";
                }
                std::cout << "," << chk.bounds_ok << "," << chk.upper_decreased << ","
                          << chk.lower_increased << "," << chk.gap_positive << ","
                          << chk.gap_decreased << "," << chk.gap_bound_ok << "\n";
            }
            break;
        }
        case Format::Json: {
            json out;
            out["alpha"] = alpha.spec_string();
            out["seed"] = {{"R0", r0.str()}, {"S0", s0.str()}};
            out["count"] = opt.count;
            json steps = json::array();
            for (const auto& chk : report.steps) {
                json row;
                row["n"] = chk.n;
                row["x"] = chk.x ? json(chk.x->str()) : json(nullptr);
                row["gap"] = chk.n >= 1 ? json(chk.gap.str()) : json(nullptr);
                row["bounds_ok"] = chk.bounds_ok;
                row["upper_decreased"] = chk.upper_decreased;
                row["lower_increased"] = chk.lower_increased;
                row["gap_positive"] = chk.gap_positive;
                row["gap_decreased"] = chk.gap_decreased;
                row["gap_bound_ok"] = chk.gap_bound_ok;
                steps.push_back(std::move(row));
            }
            out["steps"] = std::move(steps);
            out["notes"] = notes;
            out["oracle_checked"] = oracle_checked;
            out["all_passed"] = true;
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---- seeds ----

int cmd_seeds(const Options& opt) {
    const RealConstant alpha = constant_from(opt);
    const Integer max_s = parse_positive(opt.max_denominator, "max denominator");
    const auto seeds = search_seeds(alpha, max_s, opt.max_digits);
    switch (opt.format) {
        case Format::Table: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"R0", "S0", "genitor"});
            for (const auto& s : seeds) {
                rows.push_back({s.R0.str(), s.S0.str(), s.genitor.str()});
            }
            print_aligned(std::cout, rows);
            break;
        }
        case Format::Csv: {
            std::cout << "R0,S0,genitor\n";
            for (const auto& s : seeds) {
                std::cout << s.R0 << "," << s.S0 << "," << s.genitor << "\n";
            }
            break;
        }
        case Format::Json: {
            json out;
            out["alpha"] = alpha.spec_string();
            out["max_denominator"] = max_s.str();
            json arr = json::array();
            for (const auto& s : seeds) {
                arr.push_back(
                    {{"R0", s.R0.str()}, {"S0", s.S0.str()}, {"genitor", s.genitor.str()}});
            }
            out["seeds"] = std::move(arr);
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---- precision ledger ----

const char* convention_name(DigitConvention conv) {
    return conv == DigitConvention::Truncate ? "truncate" : "round";
}

int cmd_precision(const Options& opt) {
    const DigitConvention conv = opt.rounding ? DigitConvention::Round : DigitConvention::Truncate;
    const auto rows = precision_ledger(opt.count, conv);
    switch (opt.format) {
        case Format::Table: {
            std::cout << "least decimals of alpha certifying each genitor (convention: "
                      << convention_name(conv) << ")\n";
            std::vector<std::vector<std::string>> table;
            table.push_back({"n", "digits_required", "genitor"});
            for (const auto& row : rows) {
                table.push_back({std::to_string(row.n), std::to_string(row.digits_required),
                                 row.genitor.str()});
            }
            print_aligned(std::cout, table);
            break;
        }
        case Format::Csv: {
            std::cout << "n,digits_required,genitor,convention\n";
            for (const auto& row : rows) {
                std::cout << row.n << "," << row.digits_required << "," << row.genitor << ","
                          << convention_name(conv) << "\n";
            }
            break;
        }
        case Format::Json: {
            json out;
            out["convention"] = convention_name(conv);
            json arr = json::array();
            for (const auto& row : rows) {
                arr.push_back({{"n", row.n},
                               {"digits_required", row.digits_required},
                               {"genitor", row.genitor.str()}});
            }
            out["rows"] = std::move(arr);
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---- paper bundle ----

json table_to_json(const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json r;
        r["label"] = row.label;
        r["lower"] = row.lower.str();
        r["upper"] = row.upper.str();
        r["lower_literal"] = row.lower_is_literal;
        r["upper_literal"] = row.upper_is_literal;
        r["lower_reduced"] = row.lower_reduced ? json(row.lower_reduced->str()) : json(nullptr);
        r["upper_reduced"] = row.upper_reduced ? json(row.upper_reduced->str()) : json(nullptr);
        arr.push_back(std::move(r));
    }
    return arr;
}

int cmd_paper(const Options& opt) {
    const auto table = reproduce_table();
    const auto genitores = kochanski_oeis_sequence(11);
    const auto ledger = precision_ledger(5, DigitConvention::Truncate);
    const Interval cv = construction_value(10);
    const Rational bs = binary_sum_value();
    const auto demo = missed_convergent_demo();

    switch (opt.format) {
        case Format::Table: {
            std::cout << "approximant table (literal rows flagged *)\n";
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"row", "lower", "upper", "reduced forms"});
            for (const auto& row : table) {
                std::string annotation;
                if (row.lower_reduced) annotation += row.lower_reduced->str();
                if (row.upper_reduced) {
                    if (!annotation.empty()) annotation += " ";
                    annotation += row.upper_reduced->str();
                }
                rows.push_back({row.label, row.lower.str() + (row.lower_is_literal ? "*" : ""),
                                row.upper.str() + (row.upper_is_literal ? "*" : ""),
                                annotation.empty() ? "-" : annotation});
            }
            print_aligned(std::cout, rows);

            std::cout << "\ngenitor sequence (A191642)\n";
            for (std::size_t i = 0; i < genitores.size(); ++i) {
                std::cout << (i ? ", " : "") << genitores[i];
            }
            std::cout << "\n\nprecision ledger (convention: truncate)\n";
            std::vector<std::vector<std::string>> lrows;
            lrows.push_back({"n", "digits_required", "genitor"});
            for (const auto& row : ledger) {
                lrows.push_back({std::to_string(row.n), std::to_string(row.digits_required),
                                 row.genitor.str()});
            }
            print_aligned(std::cout, lrows);

            std::cout << "\nconstruction value (1/3)*sqrt(120 - 18*sqrt(3)) to 10 digits\n";
            std::cout << "[" << truncated_decimal_string(cv.lo, 12) << ", "
                      << truncated_decimal_string(cv.hi, 12) << "]\n";
            std::cout << "\nbinary sum of 1/32 parts\n"
                      << bs.str() << " = " << exact_decimal_string(bs) << "\n";
            std::cout << "\nmissed convergent\n"
                      << "(333*1+22)/(106*1+7) = " << demo.combined.str()
                      << (demo.identity_holds ? " = R_1/S_1" : " MISMATCH") << "\n";
            std::cout << "genitores:         ";
            for (std::size_t i = 0; i < demo.genitores.size(); ++i) {
                std::cout << (i ? ", " : "") << demo.genitores[i];
            }
            std::cout << "\npartial quotients: ";
            for (std::size_t i = 0; i < demo.partial_quotients.size(); ++i) {
                std::cout << (i ? ", " : "") << demo.partial_quotients[i];
            }
            std::cout << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "# table\nlabel,lower,upper,lower_literal,upper_literal,lower_reduced,"
                         "upper_reduced\n";
            for (const auto& row : table) {
                std::cout << row.label << "," << row.lower.str() << "," << row.upper.str() << ","
                          << row.lower_is_literal << "," << row.upper_is_literal << ","
                          << (row.lower_reduced ? row.lower_reduced->str() : "") << ","
                          << (row.upper_reduced ? row.upper_reduced->str() : "") << "\n";
            }
            std::cout << "# genitores\nindex,value\n";
            for (std::size_t i = 0; i < genitores.size(); ++i) {
                std::cout << i << "," << genitores[i] << "\n";
            }
            std::cout << "# precision_ledger\nn,digits_required,genitor,convention\n";
            for (const auto& row : ledger) {
                std::cout << row.n << "," << row.digits_required << "," << row.genitor
                          << ",truncate\n";
            }
            std::cout << "# construction_value\nlo,hi\n"
                      << cv.lo.str() << "," << cv.hi.str() << "\n";
            std::cout << "# binary_sum\nfraction,decimal\n"
                      << bs.str() << "," << exact_decimal_string(bs) << "\n";
            std::cout << "# missed_convergent\ncombined,identity_holds\n"
                      << demo.combined.str() << "," << demo.identity_holds << "\n";
            break;
        }
        case Format::Json: {
            json out;
            out["table"] = table_to_json(table);
            json xs = json::array();
            for (const auto& x : genitores) xs.push_back(x.str());
            out["genitores"] = std::move(xs);
            json lrows = json::array();
            for (const auto& row : ledger) {
                lrows.push_back({{"n", row.n},
                                 {"digits_required", row.digits_required},
                                 {"genitor", row.genitor.str()}});
            }
            out["precision_ledger"] = {{"convention", "truncate"}, {"rows", std::move(lrows)}};
            out["construction_value"] = {{"digits", 10},
                                         {"lo", cv.lo.str()},
                                         {"hi", cv.hi.str()},
                                         {"decimal_lo", truncated_decimal_string(cv.lo, 12)},
                                         {"decimal_hi", truncated_decimal_string(cv.hi, 12)}};
            out["binary_sum"] = {{"num", bs.num.str()},
                                 {"den", bs.den.str()},
                                 {"decimal", exact_decimal_string(bs)}};
            json quots = json::array();
            for (const auto& a : demo.partial_quotients) quots.push_back(a.str());
            out["missed_convergent"] = {{"combined", demo.combined.str()},
                                        {"target", demo.target.str()},
                                        {"identity_holds", demo.identity_holds},
                                        {"partial_quotients", std::move(quots)},
                                        {"sequences_differ", demo.sequences_differ}};
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Kochanski-style rational approximation"};
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, Format> format_map{
        {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format: table|csv|json")
            ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
        sub->add_option("--max-digits", opt.max_digits, "precision cap in decimal digits")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* approx = app.add_subcommand("approximants", "paired lower/upper approximants");
    approx->add_option("--alpha", opt.alpha, "constant spec")->required();
    approx->add_option("--seed", opt.seed, "starting fraction R0/S0")->required();
    approx->add_option("--count", opt.count, "number of steps")
        ->required()
        ->check(CLI::PositiveNumber);
    approx->add_flag("--reduced", opt.reduced, "display fractions in lowest terms");
    add_common(approx);

    CLI::App* genit = app.add_subcommand("genitores", "genitor column only");
    genit->add_option("--alpha", opt.alpha)->required();
    genit->add_option("--seed", opt.seed)->required();
    genit->add_option("--count", opt.count)->required()->check(CLI::PositiveNumber);
    add_common(genit);

    CLI::App* conv = app.add_subcommand("convergents", "continued-fraction convergents");
    conv->add_option("--alpha", opt.alpha)->required();
    conv->add_option("--count", opt.count)->required()->check(CLI::PositiveNumber);
    add_common(conv);

    CLI::App* verify = app.add_subcommand("verify", "verify approximant properties");
    verify->add_option("--alpha", opt.alpha)->required();
    verify->add_option("--seed", opt.seed)->required();
    verify->add_option("--count", opt.count)->required()->check(CLI::PositiveNumber);
    add_common(verify);

    CLI::App* seeds = app.add_subcommand("seeds", "search valid seeds up to a denominator bound");
    seeds->add_option("--alpha", opt.alpha)->required();
    seeds->add_option("--max-denominator", opt.max_denominator)->required();
    add_common(seeds);

    CLI::App* paper = app.add_subcommand("paper", "full historical replication bundle");
    add_common(paper);

    CLI::App* precision =
        app.add_subcommand("precision", "precision ledger for the pi/(22,7) run");
    precision->add_option("--count", opt.count, "number of genitores")->check(CLI::PositiveNumber);
    precision->add_flag("--rounding", opt.rounding, "use the rounding convention");
    add_common(precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(approx)) return cmd_approximants(opt, false);
        if (app.got_subcommand(genit)) return cmd_approximants(opt, true);
        if (app.got_subcommand(conv)) return cmd_convergents(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(seeds)) return cmd_seeds(opt);
        if (app.got_subcommand(paper)) return cmd_paper(opt);
        if (app.got_subcommand(precision)) return cmd_precision(opt);
    } catch (const kochanski::ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return 2;
    } catch (const PerfectSquareError& e) {
        std::cerr << "error: PerfectSquare: " << e.what() << "\n";
        return 2;
    } catch (const SeedNotAbove& e) {
        std::cerr << "error: SeedNotAbove: " << e.what() << "\n";
        return 3;
    } catch (const GenitorNotPositive& e) {
        std::cerr << "error: GenitorNotPositive: " << e.what() << "\n";
        return 3;
    } catch (const PropertyViolation& e) {
        std::cerr << "error: PropertyViolation: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
