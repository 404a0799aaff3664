#include "tvcc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "tvcc/bench.hpp"
#include "tvcc/catastrophic.hpp"
#include "tvcc/encoder_file.hpp"
#include "tvcc/error.hpp"
#include "tvcc/oracle.hpp"
#include "tvcc/tvece.hpp"

namespace tvcc::cli {

namespace {

struct Options {
    bool machine = false;
    bool octal = false;
    std::uint64_t seed = 1;
};

int exit_code(Verdict v) { return v == Verdict::Catastrophic ? kExitCatastrophic : kExitNonCatastrophic; }

/// Rational encoders with a unit denominator are plain polynomial encoders.
std::optional<PeriodicEncoder> polynomial_view(const AnyEncoder& e) {
    if (const auto* p = std::get_if<PeriodicEncoder>(&e)) return *p;
    const auto& r = std::get<RationalPeriodicEncoder>(e);
    if (r.is_polynomial()) return r.base();
    return std::nullopt;
}

PeriodicEncoder require_polynomial(const AnyEncoder& e, const std::string& command) {
    auto p = polynomial_view(e);
    if (!p) throw InvalidArgument(command + " needs a polynomial (feedforward) encoder; this file has a denominator");
    return *p;
}

std::string octal_suffix(const CatastrophicReport& r) {
    std::string s = " (octal f=" + r.f.to_octal();
    if (r.verdict == Verdict::Catastrophic) s += " g=" + r.g.to_octal();
    return s + ")";
}

int cmd_check(const std::string& path, const Options& opt, std::ostream& out) {
    const AnyEncoder any = read_encoder_file(path);
    const auto poly = polynomial_view(any);
    if (!poly) {
        const auto& rational = std::get<RationalPeriodicEncoder>(any);
        const OracleResult result = oracle_check(realize(rational));
        if (opt.machine) {
            out << "verdict=" << to_string(result.verdict) << "\nmethod=oracle\nperiod=" << rational.base().period()
                << "\ninputs=" << rational.base().inputs() << "\noutputs=" << rational.base().outputs()
                << "\nden=" << rational.den().to_string() << '\n';
        } else {
            out << to_string(result.verdict) << " method=oracle den=" << rational.den().to_string() << '\n';
        }
        return exit_code(result.verdict);
    }

    const CatastrophicReport r = periodic_check(*poly);
    if (opt.machine) {
        out << "verdict=" << to_string(r.verdict) << "\nmethod=minor-gcd\nperiod=" << poly->period()
            << "\ninputs=" << poly->inputs() << "\noutputs=" << poly->outputs() << "\nmemory=" << poly->memory()
            << "\ntvece_memory=" << tvece_memory_bound(poly->memory(), poly->period()) << "\nf=" << r.f.to_string()
            << "\nl=" << r.delay << "\ng=" << r.g.to_string() << '\n';
        if (opt.octal) out << "f_octal=" << r.f.to_octal() << "\ng_octal=" << r.g.to_octal() << '\n';
    } else {
        out << to_string(r.verdict) << " f=" << r.f.to_string() << " l=" << r.delay;
        if (r.verdict == Verdict::Catastrophic) out << " g=" << r.g.to_string();
        if (opt.octal) out << octal_suffix(r);
        out << '\n';
    }
    return exit_code(r.verdict);
}

int cmd_tvece(const std::string& path, const std::string& output, const Options& opt, std::ostream& out) {
    const PeriodicEncoder e = require_polynomial(read_encoder_file(path), "tvece");
    const TveceResult t = build_tvece(e);
    const std::string text = print_encoder(PeriodicEncoder(t.encoder));
    if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw Error("cannot write " + output);
        f << text;
    }
    if (opt.machine) {
        out << "source_period=" << t.source_period << "\ninputs=" << t.encoder.inputs()
            << "\noutputs=" << t.encoder.outputs() << "\nmemory=" << t.memory()
            << "\nmemory_bound=" << tvece_memory_bound(e.memory(), e.period()) << '\n';
        const PolyMatrix& g = t.encoder.transfer();
        for (std::size_t r = 0; r < g.rows(); ++r) {
            out << "row." << r << '=';
            for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c).to_string();
            out << '\n';
        }
    } else if (output.empty()) {
        out << "# equivalent time-invariant encoder of a period-" << t.source_period << " encoder, memory "
            << t.memory() << '\n'
            << text;
    } else {
        out << "wrote " << output << ": " << t.encoder.inputs() << "x" << t.encoder.outputs() << ", memory "
            << t.memory() << '\n';
    }
    return kExitNonCatastrophic;
}

int cmd_convert(const std::string& path, const std::string& output, std::size_t trials, std::size_t length,
                const Options& opt, std::ostream& out) {
    const PeriodicEncoder e = require_polynomial(read_encoder_file(path), "convert");
    const CatastrophicReport before = periodic_check(e);
    const RationalPeriodicEncoder converted = convert(e);
    const Poly divisor = inflate(before.g, e.period());
    const bool verified = verify_same_code(e, converted, trials, length, opt.seed);
    if (!verified) throw Error("converted encoder failed the same-code verification");

    const std::string text =
        converted.is_polynomial() ? print_encoder(converted.base()) : print_encoder(converted);
    if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw Error("cannot write " + output);
        f << text;
    }

    if (opt.machine) {
        out << "f=" << before.f.to_string() << "\nl=" << before.delay << "\ng=" << before.g.to_string()
            << "\ndivisor=" << divisor.to_string() << "\nden=" << converted.den().to_string()
            << "\nexact_division=" << (converted.is_polynomial() ? "true" : "false")
            << "\nverified=true\ntrials=" << trials << "\nlength=" << length << "\nseed=" << opt.seed << '\n';
        if (!output.empty()) out << "output=" << output << '\n';
        return kExitNonCatastrophic;
    }

    out << "# converted: f=" << before.f.to_string() << " l=" << before.delay << " g=" << before.g.to_string()
        << " divisor=" << divisor.to_string() << '\n';
    if (before.delay != 0)
        out << "# note: the delay factor D^" << before.delay
            << " of f is kept; dividing by it would need a non-causal advance\n";
    out << "# " << (converted.is_polynomial() ? "divisor taken out of every entry" : "shared denominator den=" + converted.den().to_string())
        << '\n';
    out << "# same-code check passed: " << trials << " trials, length " << length << ", seed " << opt.seed << '\n';
    if (output.empty())
        out << text;
    else
        out << "# wrote " << output << '\n';
    return kExitNonCatastrophic;
}

int cmd_encode(const std::string& path, const std::string& input_text, bool input_given, bool tail, bool parallel,
               const Options& opt, std::istream& in, std::ostream& out) {
    const AnyEncoder any = read_encoder_file(path);
    const RationalPeriodicEncoder e = as_rational(any);
    std::string text = input_text;
    if (!input_given) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    BitStream u = BitStream::parse(e.base().inputs(), text);
    if (tail) u.resize(u.size() + e.base().memory());

    BitStream v;
    if (e.is_polynomial())
        v = parallel ? encode_parallel(e.base(), u) : encode_serial(e.base(), u);
    else if (parallel)
        v = encode_parallel(e.base(), series_divide(u, e.den(), u.size()));
    else
        v = encode_rational(e, u, u.size());

    if (opt.machine)
        out << "epochs=" << v.size() << "\noutput=" << v.to_string() << "\nweight=" << v.weight() << '\n';
    else
        out << v.to_string() << '\n';
    return kExitNonCatastrophic;
}

int cmd_oracle(const std::string& path, const Options& opt, std::ostream& out) {
    const RationalPeriodicEncoder e = as_rational(read_encoder_file(path));
    const StateGraph g = realize(e);
    const OracleResult r = oracle_check(g);
    if (opt.machine) {
        out << "verdict=" << to_string(r.verdict) << "\nmethod=oracle\nstate_bits=" << g.state_bits()
            << "\nnodes=" << g.node_count() << "\nedges=" << g.edge_count() << "\nedges_visited=" << r.edges_visited
            << '\n';
        if (r.witness) {
            std::istringstream lines(format_witness(g, *r.witness));
            std::string line;
            for (std::size_t i = 0; std::getline(lines, line); ++i) out << "witness." << i << '=' << line << '\n';
        }
    } else {
        out << to_string(r.verdict) << " state_bits=" << g.state_bits() << " nodes=" << g.node_count()
            << " edges=" << g.edge_count() << '\n';
        if (r.witness) out << "witness cycle (phase state input -> next_state / output):\n" << format_witness(g, *r.witness);
    }
    return exit_code(r.verdict);
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int cmd_bench(std::size_t m_min, std::size_t m_max, std::size_t period, const Options& opt, std::ostream& out) {
    if (m_min < 1 || m_max < m_min) throw InvalidArgument("bench needs 1 <= m-min <= m-max");
    const auto rows = run_bench(m_min, m_max, period);

    std::vector<double> ms, ops;
    double min_ratio = INFINITY, max_ratio = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ms.push_back(static_cast<double>(rows[i].m));
        ops.push_back(static_cast<double>(rows[i].gcd_coefficient_ops));
        if (i > 0) {
            const double ratio = static_cast<double>(rows[i].oracle_edges_visited) /
                                 static_cast<double>(rows[i - 1].oracle_edges_visited);
            min_ratio = std::min(min_ratio, ratio);
            max_ratio = std::max(max_ratio, ratio);
        }
    }

    if (opt.machine) {
        for (const auto& r : rows) {
            const std::string key = "m." + std::to_string(r.m) + '.';
            out << key << "state_bits=" << r.state_bits << '\n'
                << key << "gcd_multiplications=" << r.gcd_multiplications << '\n'
                << key << "gcd_coefficient_ops=" << r.gcd_coefficient_ops << '\n'
                << key << "gcd_seconds=" << r.gcd_seconds << '\n'
                << key << "oracle_edges=" << r.oracle_edges << '\n'
                << key << "oracle_edges_visited=" << r.oracle_edges_visited << '\n'
                << key << "oracle_seconds=" << r.oracle_seconds << '\n'
                << key << "agree=" << (r.gcd_verdict == r.oracle_verdict ? "true" : "false") << '\n';
        }
    } else {
        out << std::setw(4) << "m" << std::setw(6) << "bits" << std::setw(10) << "gcd_mul" << std::setw(12)
            << "gcd_ops" << std::setw(12) << "gcd_us" << std::setw(12) << "edges" << std::setw(12) << "visited"
            << std::setw(12) << "oracle_us" << std::setw(7) << "agree" << '\n';
        for (const auto& r : rows) {
            out << std::setw(4) << r.m << std::setw(6) << r.state_bits << std::setw(10) << r.gcd_multiplications
                << std::setw(12) << r.gcd_coefficient_ops << std::setw(12) << std::fixed << std::setprecision(1)
                << r.gcd_seconds * 1e6 << std::setw(12) << r.oracle_edges << std::setw(12) << r.oracle_edges_visited
                << std::setw(12) << r.oracle_seconds * 1e6 << std::setw(7)
                << (r.gcd_verdict == r.oracle_verdict ? "yes" : "NO") << '\n';
        }
        out.unsetf(std::ios::floatfield);
    }
    if (rows.size() >= 2) {
        out << std::setprecision(4) << "gcd_loglog_slope=" << loglog_slope(ms, ops) << '\n'
            << "oracle_doubling_ratio_min=" << min_ratio << '\n'
            << "oracle_doubling_ratio_max=" << max_ratio << '\n';
    }
    return kExitNonCatastrophic;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catastrophe analysis and repair for periodically time-varying convolutional encoders", "tvcc"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--machine", opt.machine, "Emit one key=value line per field");
    app.add_flag("--octal", opt.octal, "Also show polynomials in octal generator notation");
    app.add_option("--seed", opt.seed, "Seed for randomized verification")->capture_default_str();

    std::string file;
    std::string output;

    auto* check = app.add_subcommand("check", "Decide catastrophe via the minor GCD of the equivalent encoder");
    check->add_option("file", file, "Encoder file")->required();

    auto* tvece = app.add_subcommand("tvece", "Print the equivalent time-invariant encoder");
    tvece->add_option("file", file, "Encoder file")->required();
    tvece->add_option("-o,--output", output, "Write the encoder to this file");

    std::size_t trials = 100;
    std::size_t length = 64;
    auto* conv = app.add_subcommand("convert", "Convert a catastrophic encoder into a non-catastrophic one");
    conv->add_option("file", file, "Encoder file")->required();
    conv->add_option("-o,--output", output, "Write the converted encoder to this file");
    conv->add_option("--trials", trials, "Random inputs for the same-code check")->capture_default_str();
    conv->add_option("--length", length, "Epochs per random input")->capture_default_str();

    std::string input_text;
    bool tail = false;
    bool parallel = false;
    auto* enc = app.add_subcommand("encode", "Encode input tuples (from --input or stdin)");
    enc->add_option("file", file, "Encoder file")->required();
    auto* input_opt = enc->add_option("-i,--input", input_text, "Whitespace-separated k-bit tuples");
    enc->add_flag("--tail", tail, "Append m all-zero epochs to flush the registers");
    enc->add_flag("--parallel", parallel, "Use the parallel (punctured) description");

    auto* orc = app.add_subcommand("oracle", "Decide catastrophe by state-graph cycle search");
    orc->add_option("file", file, "Encoder file")->required();

    std::size_t m_min = 2;
    std::size_t m_max = 14;
    std::size_t period = 1;
    auto* bench = app.add_subcommand("bench", "Compare minor-GCD and state-graph cost on [1+D^m, (1+D^m)(1+D)]");
    bench->add_option("--m-min", m_min)->capture_default_str();
    bench->add_option("--m-max", m_max)->capture_default_str();
    bench->add_option("--period", period)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(file, opt, out);
        if (tvece->parsed()) return cmd_tvece(file, output, opt, out);
        if (conv->parsed()) return cmd_convert(file, output, trials, length, opt, out);
        if (enc->parsed()) return cmd_encode(file, input_text, input_opt->count() > 0, tail, parallel, opt, in, out);
        if (orc->parsed()) return cmd_oracle(file, opt, out);
        if (bench->parsed()) return cmd_bench(m_min, m_max, period, opt, out);
    } catch (const NotCatastrophic& e) {
        err << "error: NotCatastrophic: " << e.what() << '\n';
        return kExitError;
    } catch (const RankDeficient& e) {
        err << "error: RankDeficient: " << e.what() << '\n';
        return kExitError;
    } catch (const ParseError& e) {
        err << "error: " << file << ": " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace tvcc::cli
