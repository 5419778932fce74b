#include "kdesign/selftest.hpp"

#include <exception>
#include <functional>
#include <sstream>

#include "kdesign/constructions.hpp"
#include "kdesign/design_io.hpp"
#include "kdesign/exploded.hpp"
#include "kdesign/fixtures.hpp"
#include "kdesign/verify.hpp"

namespace kdesign {

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string expect_report(const BalanceReport& got, Verdict verdict, const DesignParams& params) {
    if (got.verdict != verdict) {
        return "verdict " + std::string(to_string(got.verdict));
    }
    if (!got.params || *got.params != params) {
        return "params " + (got.params ? to_tuple_string(*got.params) : std::string("none")) + ", want " +
               to_tuple_string(params);
    }
    return {};
}

std::string check_fixture(const Fixture& f) {
    const Design d = read_design(f.text);
    const BalanceReport report = verify_bibd(d);
    if (report.verdict != f.verdict) {
        return "verdict " + std::string(to_string(report.verdict));
    }
    if (read_design(write_design(d)) != d) {
        return "file round trip changed the design";
    }
    if (!report.balanced()) {
        return {};
    }
    if (f.params && *report.params != *f.params) {
        return "params " + to_tuple_string(*report.params);
    }
    if (is_symmetric(*report.params) != f.symmetric) {
        return "symmetry mismatch";
    }
    if (f.t_params) {
        const TDesignReport t = verify_t_design(d, f.t_params->t);
        if (!t.balanced() || *t.lambda_t != f.t_params->lambda_t) {
            return "t=" + std::to_string(f.t_params->t) + " check failed";
        }
    }
    return {};
}

std::string check_k5() {
    const Design d = build_k5_special();
    if (d.block_count() != 30 || d.variety_count() != 10 || d.uniform_block_size() != 4u) {
        return "expected 30 blocks of size 4 over 10 edges";
    }
    const TDesignReport t = verify_t_design(d, 3);
    if (!t.balanced() || *t.lambda_t != 1) {
        return "t=3 check failed";
    }
    return {};
}

std::string check_kp(std::uint32_t khat) {
    return expect_report(verify_bibd(build_kp(khat)), Verdict::balanced, kp_parameters(khat));
}

std::string check_kc(std::uint32_t khat) {
    const Verdict want = khat == 3 ? Verdict::complete : Verdict::balanced;
    return expect_report(verify_bibd(build_kc(khat)), want, kc_parameters(khat));
}

std::string check_witness_law(std::uint32_t n) {
    for (std::uint32_t khat = 3; khat + 1 <= n; ++khat) {
        const ImbalanceWitness w = imbalance_witness(n, khat);
        const auto pivot = static_cast<std::int64_t>(2 * khat - 1);
        const auto want = n == pivot  ? ImbalanceWitness::Sign::balanced
                          : n < pivot ? ImbalanceWitness::Sign::adjacent_fewer
                                      : ImbalanceWitness::Sign::adjacent_more;
        if (w.sign() != want) {
            std::ostringstream os;
            os << "khat=" << khat << ": lambda_adj=" << w.lambda_adj << " lambda_non=" << w.lambda_non;
            return os.str();
        }
    }
    return {};
}

}  // namespace

std::vector<SelfCheck> run_selftest() {
    std::vector<std::pair<std::string, Check>> checks;
    for (const Fixture& f : fixtures()) {
        checks.emplace_back("fixture " + std::string(f.name), [&f] { return check_fixture(f); });
    }
    checks.emplace_back("k5 fan/rectangle/triangle 3-design", check_k5);
    for (std::uint32_t khat : {2u, 3u, 4u}) {
        checks.emplace_back("kp khat=" + std::to_string(khat), [khat] { return check_kp(khat); });
    }
    for (std::uint32_t khat : {3u, 4u, 5u}) {
        checks.emplace_back("kc khat=" + std::to_string(khat), [khat] { return check_kc(khat); });
    }
    for (std::uint32_t khat : {2u, 3u, 4u}) {
        checks.emplace_back("kp equals exploded kc khat=" + std::to_string(khat), [khat] {
            return check_kp_equals_exploded_kc(khat) ? std::string{} : std::string("multisets differ");
        });
    }
    for (std::uint32_t n = 4; n <= 8; ++n) {
        checks.emplace_back("witness sign law n=" + std::to_string(n), [n] { return check_witness_law(n); });
    }

    std::vector<SelfCheck> results;
    for (const auto& [name, check] : checks) {
        try {
            const std::string problem = check();
            results.push_back({name, problem.empty(), problem});
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return results;
}

}  // namespace kdesign
