#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "rdu/campaign.hpp"
#include "rdu/decompose.hpp"
#include "rdu/oracle.hpp"
#include "rdu/parse.hpp"
#include "rdu/report.hpp"
#include "rdu/system_file.hpp"
#include "rdu/wrsd.hpp"
#include "rdu/wu.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitVerify = 4;

struct Options {
    std::string file;
    std::string polynomial;
    std::string format = "text";
    rdu::SampleSettings samples;
};

rdu::Format format_of(const Options& o) {
    return o.format == "json" ? rdu::Format::Json : rdu::Format::Text;
}

void add_common(CLI::App* cmd, Options& o, bool sampling) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    if (!sampling)
        return;
    cmd->add_option("--samples", o.samples.samples, "Number of stable sample points")->capture_default_str();
    cmd->add_option("--seed", o.samples.seed, "Sampling seed")->capture_default_str();
    cmd->add_option("--height", o.samples.height, "Bound on sample numerators and denominators")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int run_decompose(const Options& o) {
    const auto sys = rdu::read_system_file(o.file);
    const auto d = rdu::rdu_for_zd(sys.polys);
    const auto checks = rdu::verify_decomposition(sys.polys, d, o.samples.samples, o.samples.seed, o.samples.height);
    std::cout << rdu::report_decomposition(d, checks, o.samples, format_of(o));
    return 0;
}

int run_wu(const Options& o) {
    const auto sys = rdu::read_system_file(o.file);
    std::cout << rdu::report_wu(rdu::wu_decompose(sys.polys), format_of(o));
    return 0;
}

int run_nonredundant(const Options& o) {
    const auto sys = rdu::read_system_file(o.file);
    std::cout << rdu::report_nonredundant(rdu::nonredundant_wu(sys.polys), format_of(o));
    return 0;
}

int run_wrsd(const Options& o) {
    const auto sys = rdu::read_system_file(o.file);
    const rdu::Polynomial p = rdu::parse_polynomial(o.polynomial, sys.ctx);
    rdu::RegularChainZD t = [&] {
        try {
            return rdu::RegularChainZD::checked(rdu::TriangularSet(sys.polys));
        } catch (const std::invalid_argument& e) {
            throw rdu::ParseError(std::string("chain file: ") + e.what(), 1, 1);
        }
    }();
    const auto w = rdu::wrsd(t, p);
    const bool valid = rdu::is_wrsd_valid(t, p, w.H, w.G, o.samples.samples, o.samples.seed, o.samples.height);
    std::cout << rdu::report_wrsd(w, valid, o.samples, format_of(o));
    return valid ? 0 : kExitVerify;
}

int run_verify(const Options& o) {
    const auto sys = rdu::read_system_file(o.file);
    const auto d = rdu::rdu_for_zd(sys.polys);
    const auto r = rdu::verify_decomposition(sys.polys, d, o.samples.samples, o.samples.seed, o.samples.height);
    std::cout << rdu::report_verify(r, o.samples, format_of(o));
    return r.passed() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic regular decompositions and RDU varieties of parametric systems"};
    app.require_subcommand(1);
    Options o;
    std::map<CLI::App*, int (*)(const Options&)> handlers;

    auto* dec = app.add_subcommand("decompose", "Regular chains, RDU factors and sampled stability checks");
    dec->add_option("file", o.file, "System file")->required();
    add_common(dec, o, true);
    handlers[dec] = run_decompose;

    auto* wu = app.add_subcommand("wu", "Wu decomposition");
    wu->add_option("file", o.file, "System file")->required();
    add_common(wu, o, false);
    handlers[wu] = run_wu;

    auto* nr = app.add_subcommand("nonredundant", "Non-redundant Wu decomposition with RDU factors");
    nr->add_option("file", o.file, "System file")->required();
    add_common(nr, o, false);
    handlers[nr] = run_nonredundant;

    auto* wr = app.add_subcommand("wrsd", "Split a zero-dimensional regular chain by a polynomial");
    wr->add_option("chain", o.file, "Chain file (one element per line, in order)")->required();
    wr->add_option("polynomial", o.polynomial, "Splitting polynomial")->required();
    add_common(wr, o, true);
    handlers[wr] = run_wrsd;

    auto* ver = app.add_subcommand("verify", "Oracle campaign at stable sample points");
    ver->add_option("file", o.file, "System file")->required();
    add_common(ver, o, true);
    handlers[ver] = run_verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        for (const auto& [cmd, fn] : handlers)
            if (cmd->parsed())
                return fn(o);
    } catch (const rdu::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const rdu::NonGenericInput& e) {
        std::cerr << "non-generic input: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
