// Command-line front end: search for, verify, and transform regenerating
// codes stored in the line-oriented code file format.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "msr/codefile.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct SearchArgs {
    int n = 0, k = 0, p = 0, m = 1;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    std::uint64_t limit = 10;
    std::uint64_t samples = 0;
    std::string shard_spec;
    int threads = 1;
    bool general_position = false;
    std::string out_path;
};

msr::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return msr::Rational(std::stoll(text));
    return msr::Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

int run_search_command(const SearchArgs& args) {
    msr::SearchConfig config;
    config.params = msr::CodeParameters::make(args.n, args.k);
    config.field = msr::Field::make(args.p, args.m);
    config.mode = args.mode == "random" ? msr::SearchMode::random : msr::SearchMode::exhaustive;
    config.rng_seed = args.seed;
    config.limit = args.limit;
    config.max_samples = args.samples;
    config.require_general_position = args.general_position;

    if (!args.shard_spec.empty()) {
        const auto slash = args.shard_spec.find('/');
        if (slash == std::string::npos) throw msr::ConfigError("--shard expects i/N");
        const int index = std::stoi(args.shard_spec.substr(0, slash));
        const int parts = std::stoi(args.shard_spec.substr(slash + 1));
        if (index < 1 || index > parts) throw msr::ConfigError("shard index out of range");
        config = msr::shard(config, parts)[static_cast<std::size_t>(index - 1)];
    }

    const msr::SearchReport report = args.threads > 1
                                         ? msr::run_search_parallel(config, args.threads)
                                         : msr::run_search(config);

    std::cout << msr::render_report(report, args.out_path.empty());
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) throw msr::ConfigError("cannot open output file " + args.out_path);
        for (const auto& seed : report.emitted) msr::write_code(out, seed);
    }
    return kExitOk;
}

int run_verify_command(const std::string& path, bool general_position) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << '\n';
        return kExitUsage;
    }
    const auto docs = msr::parse_code_documents(in);
    bool all_ok = true;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        if (docs.size() > 1) std::cout << "document " << d + 1 << ":\n";
        const auto verdict = msr::verify(docs[d].expanded(), general_position);
        std::cout << msr::render(verdict);
        all_ok = all_ok && verdict.independent && verdict.recoverable;
    }
    return all_ok ? kExitOk : kExitVerificationFailed;
}

int run_systematic_command(const std::string& path, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << '\n';
        return kExitUsage;
    }
    const auto docs = msr::parse_code_documents(in);
    std::ofstream out(out_path);
    if (!out) throw msr::ConfigError("cannot open output file " + out_path);
    for (const auto& doc : docs) {
        const auto verdict = msr::verify(doc.expanded(), false);
        if (!verdict.independent || !verdict.recoverable) {
            std::cout << msr::render(verdict);
            return kExitVerificationFailed;
        }
        msr::FieldMatrix t;
        if (doc.is_symmetric()) {
            auto [sys, transform] = msr::to_systematic(doc.seed());
            t = transform;
            msr::write_code(out, sys);
        } else {
            auto [sys, transform] = msr::to_systematic(doc.code());
            t = transform;
            msr::write_code(out, sys);
        }
        std::cout << "T " << t.rows() << ' ' << t.cols() << '\n' << msr::to_string(t);
    }
    return kExitOk;
}

int run_rate_command(int n, int k, const std::string& m_text) {
    const auto r = msr::rates(n, k, parse_rational(m_text));
    std::cout << "n=" << r.n << '\n'
              << "k=" << r.k << '\n'
              << "M=" << r.file_size.str() << '\n'
              << "gamma_naive=" << r.gamma_naive.str() << '\n'
              << "gamma_msr=" << r.gamma_msr.str() << '\n'
              << "gamma_ia=" << r.gamma_ia.str() << '\n'
              << "subpacket=" << r.subpacket_size.str() << '\n'
              << "bound_achieved=" << (r.bound_achieved ? "yes" : "no") << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search, verify, and transform exact-repair regenerating codes"};
    app.require_subcommand(1);

    SearchArgs sargs;
    auto* search = app.add_subcommand("search", "run the code search");
    search->add_option("--n", sargs.n, "total nodes")->required();
    search->add_option("--k", sargs.k, "source nodes")->required();
    search->add_option("--p", sargs.p, "field characteristic")->required();
    search->add_option("--m", sargs.m, "field extension degree")->capture_default_str();
    search->add_option("--mode", sargs.mode, "exhaustive or random")->capture_default_str()
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--seed", sargs.seed, "RNG seed for random mode");
    search->add_option("--limit", sargs.limit, "max codes to emit, 0 = unlimited")->capture_default_str();
    search->add_option("--samples", sargs.samples, "random mode: sample budget, 0 = until limit");
    search->add_option("--shard", sargs.shard_spec, "run shard i of N, written i/N");
    search->add_option("--threads", sargs.threads, "worker threads for exhaustive runs")->capture_default_str();
    search->add_flag("--general-position", sargs.general_position,
                     "only accept codes whose storage rows are in general position");
    search->add_option("--out", sargs.out_path, "write emitted codes to this file");

    std::string verify_path;
    bool verify_gp = false;
    auto* verify = app.add_subcommand("verify", "check a code file");
    verify->add_option("path", verify_path, "code file")->required();
    verify->add_flag("--general-position", verify_gp, "also report the general-position verdict");

    std::string sys_in, sys_out;
    auto* systematic = app.add_subcommand("systematic", "convert a code to systematic form");
    systematic->add_option("path", sys_in, "code file")->required();
    systematic->add_option("out", sys_out, "output file")->required();

    int rate_n = 0, rate_k = 0;
    std::string rate_m = "1";
    auto* rate = app.add_subcommand("rate", "print repair bandwidth figures");
    rate->add_option("--n", rate_n, "total nodes")->required();
    rate->add_option("--k", rate_k, "source nodes")->required();
    rate->add_option("--M", rate_m, "file size as a rational, e.g. 3/4")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*search) return run_search_command(sargs);
        if (*verify) return run_verify_command(verify_path, verify_gp);
        if (*systematic) return run_systematic_command(sys_in, sys_out);
        if (*rate) return run_rate_command(rate_n, rate_k, rate_m);
    } catch (const msr::ParseError& e) {
        std::cerr << "parse error (line " << e.line() << "): " << e.what() << '\n';
        return kExitUsage;
    } catch (const msr::SingularError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const msr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
