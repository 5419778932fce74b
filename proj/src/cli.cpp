#include "kdesign/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "kdesign/constructions.hpp"
#include "kdesign/design_io.hpp"
#include "kdesign/errors.hpp"
#include "kdesign/exploded.hpp"
#include "kdesign/selftest.hpp"
#include "kdesign/verify.hpp"

namespace kdesign {

namespace {

struct Options {
    std::uint32_t khat = 0;
    std::uint64_t max_blocks = kDefaultMaxBlocks;
    std::string out_path;

    // params explode
    std::string v, b, r, k, lambda;
    std::uint32_t j = 0;

    // verify
    std::string path;
    std::optional<std::uint32_t> t;
    std::string stream;
    unsigned threads = 1;

    // witness
    std::uint32_t n = 0;
};

void emit_design(const Design& d, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        write_design(d, out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot write " + path);
    }
    write_design(d, file);
    if (!file.flush()) {
        throw std::invalid_argument("error writing " + path);
    }
}

void print_report(const BalanceReport& report, std::ostream& out) {
    out << to_string(report.verdict);
    if (report.params) {
        out << ' ' << to_tuple_string(*report.params);
        if (report.balanced()) {
            out << (is_symmetric(*report.params) ? " symmetric" : " non-symmetric");
        }
    }
    if (report.witness) {
        out << " witness " << describe(*report.witness);
    }
    out << '\n';
    if (report.params) {
        out << to_string(*report.params) << '\n';
    }
}

int run_verify(const Options& opt, std::ostream& out) {
    if (opt.path.empty() == opt.stream.empty()) {
        throw CLI::ValidationError("verify", "give either a design file or --stream kp|kc");
    }
    if (!opt.stream.empty()) {
        if (opt.khat == 0) {
            throw CLI::ValidationError("verify", "--stream needs --khat");
        }
        if (opt.t) {
            throw CLI::ValidationError("verify", "--t is not supported with --stream");
        }
        const DesignFamily family = opt.stream == "kp" ? DesignFamily::kp : DesignFamily::kc;
        const BalanceReport report = verify_stream(family, opt.khat, opt.threads, opt.max_blocks);
        print_report(report, out);
        return report.balanced() ? kExitOk : kExitVerifyFailed;
    }

    const Design d = read_design_file(opt.path);
    const BalanceReport report = verify_bibd(d);
    print_report(report, out);
    bool ok = report.balanced();
    if (opt.t) {
        if (!d.uniform_block_size()) {
            out << "t=" << *opt.t << " not-uniform-block-size\n";
            return kExitVerifyFailed;
        }
        const TDesignReport t = verify_t_design(d, *opt.t);
        if (t.balanced()) {
            out << "t=" << t.t << " lambda_t=" << *t.lambda_t << '\n';
        } else {
            out << "t=" << t.t << " unbalanced witness " << describe(*t.witness) << '\n';
            ok = false;
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_params_explode(const Options& opt, std::ostream& out) {
    const DesignParams p{parse_bigint(opt.v), parse_bigint(opt.b), parse_bigint(opt.r), parse_bigint(opt.k),
                         parse_bigint(opt.lambda)};
    const AdmissibilityResult check = check_admissibility(p);
    if (!check.ok()) {
        std::ostringstream os;
        os << "parameters " << to_tuple_string(p) << " are inadmissible: "
           << (*check.failure == AdmissibilityFailure::replication ? "v*r != b*k" : "r*(k-1) != lambda*(v-1)")
           << " (" << check.lhs << " != " << check.rhs << ")";
        throw std::domain_error(os.str());
    }
    out << to_string(exploded_parameters(p, opt.j)) << '\n';
    return kExitOk;
}

int run_selftest_command(std::ostream& out) {
    bool all = true;
    std::size_t passed = 0;
    const auto results = run_selftest();
    for (const SelfCheck& c : results) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) {
            out << ": " << c.detail;
        }
        out << '\n';
        all = all && c.passed;
        passed += c.passed ? 1 : 0;
    }
    out << passed << '/' << results.size() << " checks passed\n";
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block designs on complete graphs: construct, explode and verify.", "kdesign"};
    app.require_subcommand(1);
    Options opt;

    auto add_khat = [&](CLI::App* cmd) {
        cmd->add_option("--khat", opt.khat, "Block size (number of edges per block)")->required();
    };
    auto add_max_blocks = [&](CLI::App* cmd) {
        cmd->add_option("--max-blocks", opt.max_blocks, "Refuse to produce more blocks than this")
            ->capture_default_str();
    };

    CLI::App* gen = app.add_subcommand("gen", "Construct a design and write it as a design file");
    gen->require_subcommand(1);
    CLI::App* gen_kp = gen->add_subcommand("kp", "Paths with khat edges in K_{2khat-1}");
    CLI::App* gen_kc = gen->add_subcommand("kc", "Cycles on khat vertices in K_{2khat-3}");
    CLI::App* gen_k5 = gen->add_subcommand("k5", "The 30-block 3-(10,4,1) design on the edges of K_5");
    for (CLI::App* cmd : {gen_kp, gen_kc}) {
        add_khat(cmd);
        add_max_blocks(cmd);
    }
    for (CLI::App* cmd : {gen_kp, gen_kc, gen_k5}) {
        cmd->add_option("--out", opt.out_path, "Output file (default: standard output)");
    }

    CLI::App* params = app.add_subcommand("params", "Print exact design parameters");
    params->require_subcommand(1);
    CLI::App* params_kp = params->add_subcommand("kp", "Closed-form KP parameters");
    CLI::App* params_kc = params->add_subcommand("kc", "Closed-form KC parameters");
    add_khat(params_kp);
    add_khat(params_kc);
    CLI::App* params_explode = params->add_subcommand("explode", "Parameters of the j-exploded design");
    params_explode->add_option("--v", opt.v)->required();
    params_explode->add_option("--b", opt.b)->required();
    params_explode->add_option("--r", opt.r)->required();
    params_explode->add_option("--k", opt.k)->required();
    params_explode->add_option("--lambda", opt.lambda)->required();
    params_explode->add_option("--j", opt.j)->required();

    CLI::App* verify = app.add_subcommand("verify", "Check balance of a design file or a generated design");
    verify->add_option("path", opt.path, "Design file");
    verify->add_option("--t", opt.t, "Also check the t-design property for this t")->check(CLI::PositiveNumber);
    verify->add_option("--stream", opt.stream, "Verify a KP/KC design on the fly without storing it")
        ->check(CLI::IsMember({"kp", "kc"}));
    verify->add_option("--khat", opt.khat, "Block size for --stream");
    verify->add_option("--threads", opt.threads, "Worker threads for --stream")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_max_blocks(verify);

    CLI::App* explode = app.add_subcommand("explode", "Replace each block by all of its j-subsets");
    explode->add_option("path", opt.path, "Design file")->required();
    explode->add_option("--j", opt.j, "Block size of the exploded design")->required();
    explode->add_option("--out", opt.out_path, "Output file (default: standard output)");
    add_max_blocks(explode);

    CLI::App* witness = app.add_subcommand("witness", "Shared-block counts of adjacent vs nonadjacent edge pairs");
    witness->add_option("--n", opt.n, "Vertices of the complete graph")->required();
    witness->add_option("--khat", opt.khat, "Edges per path")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "Run every bundled check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_kp->parsed()) {
            emit_design(build_kp(opt.khat, opt.max_blocks), opt.out_path, out);
        } else if (gen_kc->parsed()) {
            emit_design(build_kc(opt.khat, opt.max_blocks), opt.out_path, out);
        } else if (gen_k5->parsed()) {
            emit_design(build_k5_special(), opt.out_path, out);
        } else if (params_kp->parsed()) {
            out << to_string(kp_parameters(opt.khat)) << '\n';
        } else if (params_kc->parsed()) {
            out << to_string(kc_parameters(opt.khat)) << '\n';
        } else if (params_explode->parsed()) {
            return run_params_explode(opt, out);
        } else if (verify->parsed()) {
            return run_verify(opt, out);
        } else if (explode->parsed()) {
            emit_design(explode_design(read_design_file(opt.path), opt.j, opt.max_blocks), opt.out_path, out);
        } else if (witness->parsed()) {
            const ImbalanceWitness w = imbalance_witness(opt.n, opt.khat);
            out << "lambda_adj=" << w.lambda_adj << " lambda_non=" << w.lambda_non << '\n'
                << to_string(w.sign()) << '\n';
        } else if (selftest->parsed()) {
            return run_selftest_command(out);
        }
        return kExitOk;
    } catch (const CapacityError& e) {
        err << "kdesign: capacity exceeded: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const CLI::Error& e) {
        err << "kdesign: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "kdesign: " << opt.path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "kdesign: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace kdesign
