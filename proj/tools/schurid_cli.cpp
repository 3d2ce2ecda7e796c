// Command-line front end; talks to the library exclusively through the
// C API in schurid.h.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schurid.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnverified = 1;
constexpr int kExitInvalidInput = 2;

struct IdentityDeleter {
    void operator()(schurid_identity* id) const { schurid_identity_free(id); }
};
using IdentityPtr = std::unique_ptr<schurid_identity, IdentityDeleter>;

struct StringDeleter {
    void operator()(char* s) const { schurid_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check(schurid_status status) {
    if (status != SCHURID_OK) {
        std::ostringstream os;
        os << schurid_status_name(status) << ": " << schurid_last_error();
        throw CliError(os.str());
    }
}

std::vector<int> parse_lambda(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CliError("--lambda: '" + item + "' is not an integer");
        }
    }
    return out;
}

// "r:m:t,r:m:t,..."
std::vector<schurid_strip_spec> parse_strips(const std::string& text) {
    std::vector<schurid_strip_spec> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        schurid_strip_spec spec{};
        if (std::sscanf(item.c_str(), "%d:%d:%d", &spec.r, &spec.m, &spec.t) != 3) {
            throw CliError("--strips: '" + item + "' is not of the form r:m:t");
        }
        out.push_back(spec);
    }
    return out;
}

std::string render(const schurid_identity* id, const std::string& format) {
    char* raw = nullptr;
    check(schurid_identity_render(
        id, format == "latex" ? SCHURID_FORMAT_LATEX : SCHURID_FORMAT_JSON, &raw));
    StringPtr s(raw);
    return std::string(s.get());
}

// Prints the identity, optionally verifies it; returns the exit code.
int emit_identity(const schurid_identity* id, const std::string& format, bool verify,
                  int vars, int trials, std::uint64_t seed) {
    std::cout << render(id, format) << "\n";
    if (!verify) return kExitOk;
    char* raw = nullptr;
    int ok = 0;
    check(schurid_identity_verify(id, vars, trials, seed, &raw, &ok));
    StringPtr report(raw);
    if (ok) {
        std::cout << "verified\n";
        return kExitOk;
    }
    std::cout << "NOT verified: " << report.get() << "\n";
    return kExitUnverified;
}

std::string read_stdin() {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate and verify bilinear identities on Schur symmetric functions"};
    app.require_subcommand(1);

    std::string lambda_text, strips_text, format = "json", axis = "row";
    bool do_verify = false;
    int vars = 0, trials = 3, max_k = 1, size = 5;
    std::uint64_t seed = 42;
    int ga = 1, gb = 1, gm = 1, gn = 1;

    auto add_common = [&](CLI::App* cmd, bool with_strips) {
        cmd->add_option("--lambda", lambda_text, "partition, comma-separated parts")->required();
        if (with_strips) {
            cmd->add_option("--strips", strips_text, "strip specs r:m:t[,r:m:t...]")->required();
        }
        cmd->add_option("--format", format, "json|latex")
            ->check(CLI::IsMember({"json", "latex"}));
        cmd->add_flag("--verify", do_verify, "verify against the Schur oracle");
        cmd->add_option("--vars", vars, "variables for verification (0 = auto)");
        cmd->add_option("--trials", trials, "random evaluation points");
        cmd->add_option("--seed", seed, "random seed");
    };

    auto* gen = app.add_subcommand("gen", "main strip-addition identity");
    add_common(gen, true);
    auto* bar = app.add_subcommand("bar", "first row/column removed variant");
    add_common(bar, true);
    bar->add_option("--axis", axis, "row|column")->check(CLI::IsMember({"row", "column"}));
    auto* square = app.add_subcommand("square", "corner-sum identity for s_lambda^2");
    add_common(square, false);
    auto* square_nu = app.add_subcommand("square-nu",
                                         "s_lambda^2 through the auxiliary nu construction");
    add_common(square_nu, false);
    auto* fk = app.add_subcommand("fk", "two-row-window identity");
    add_common(fk, false);

    auto* gps = app.add_subcommand("gps", "alternating rectangle-family identity");
    gps->add_option("--a", ga, "a")->required();
    gps->add_option("--b", gb, "b")->required();
    gps->add_option("--m", gm, "m")->required();
    gps->add_option("--n", gn, "n")->required();
    gps->add_option("--format", format, "json|latex")->check(CLI::IsMember({"json", "latex"}));
    gps->add_flag("--verify", do_verify, "verify against the Schur oracle");
    gps->add_option("--vars", vars, "variables for verification (0 = auto)");
    gps->add_option("--trials", trials, "random evaluation points");
    gps->add_option("--seed", seed, "random seed");

    auto* conj = app.add_subcommand("conjugate", "conjugate an identity read from stdin");
    conj->add_option("--format", format, "json|latex")->check(CLI::IsMember({"json", "latex"}));

    auto* verify_cmd = app.add_subcommand("verify", "verify an identity read from stdin");
    verify_cmd->add_option("--vars", vars, "variables for verification (0 = auto)");
    verify_cmd->add_option("--trials", trials, "random evaluation points");
    verify_cmd->add_option("--seed", seed, "random seed");

    auto* enumerate = app.add_subcommand("enumerate", "all valid strip-spec lists");
    enumerate->add_option("--lambda", lambda_text, "partition")->required();
    enumerate->add_option("--max-k", max_k, "maximum number of strips");

    int selftest_trials = 200;
    auto* selftest = app.add_subcommand("plucker-selftest", "random row-exchange self-test");
    selftest->add_option("--size", size, "maximum matrix size");
    selftest->add_option("--trials", selftest_trials, "matrix pairs to test");
    selftest->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        auto lambda = parse_lambda(lambda_text);
        auto strips = parse_strips(strips_text);
        schurid_identity* raw = nullptr;

        if (gen->parsed()) {
            check(schurid_identity_main(lambda.data(), lambda.size(), strips.data(),
                                        strips.size(), &raw));
        } else if (bar->parsed()) {
            check(schurid_identity_barred(lambda.data(), lambda.size(), strips.data(),
                                          strips.size(),
                                          axis == "row" ? SCHURID_AXIS_ROW : SCHURID_AXIS_COLUMN,
                                          &raw));
        } else if (square->parsed()) {
            check(schurid_identity_square(lambda.data(), lambda.size(), &raw));
        } else if (square_nu->parsed()) {
            check(schurid_identity_square_via_nu(lambda.data(), lambda.size(), &raw));
        } else if (fk->parsed()) {
            check(schurid_identity_fulmek_kleber(lambda.data(), lambda.size(), &raw));
        } else if (gps->parsed()) {
            check(schurid_identity_gps(ga, gb, gm, gn, &raw));
        } else if (conj->parsed()) {
            schurid_identity* input = nullptr;
            check(schurid_identity_parse_json(read_stdin().c_str(), &input));
            IdentityPtr guard(input);
            check(schurid_identity_conjugate(input, &raw));
        } else if (verify_cmd->parsed()) {
            schurid_identity* input = nullptr;
            check(schurid_identity_parse_json(read_stdin().c_str(), &input));
            IdentityPtr id(input);
            char* report_raw = nullptr;
            int ok = 0;
            check(schurid_identity_verify(id.get(), vars, trials, seed, &report_raw, &ok));
            StringPtr report(report_raw);
            std::cout << report.get() << "\n";
            return ok ? kExitOk : kExitUnverified;
        } else if (enumerate->parsed()) {
            char* json_raw = nullptr;
            check(schurid_enumerate_specs(lambda.data(), lambda.size(), max_k, &json_raw));
            StringPtr json(json_raw);
            std::cout << json.get() << "\n";
            return kExitOk;
        } else if (selftest->parsed()) {
            int run = 0, failures = 0;
            check(schurid_plucker_selftest(size, selftest_trials, seed, &run, &failures));
            std::cout << "{\"trials\": " << run << ", \"failures\": " << failures << "}\n";
            return failures == 0 ? kExitOk : kExitUnverified;
        }

        IdentityPtr id(raw);
        return emit_identity(id.get(), format, do_verify, vars, trials, seed);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
