// Acceptance suite: one pass/fail line per criterion, all checks exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "identity_gen.hpp"
#include "oracle.hpp"
#include "plucker.hpp"
#include "test_util.hpp"

using namespace schurid;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    const std::string cmd = std::string(SCHURID_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

bool verifies(const Identity& id, int vars = 0, int trials = 3) {
    if (vars == 0) vars = default_verify_vars(id);
    return verify_identity(id, vars, trials, 42).verified;
}

struct Check {
    std::string why;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) { ok = false; why = what; }
    }
};

// 1. First worked example: generated, both bar variants, verified at m=4, <1s.
void criterion1(Check& c) {
    auto gen = run_cli("gen --lambda 2,1,1 --strips 2:1:1 --format latex --verify --vars 4");
    c.expect(gen.exit_code == 0, "cli gen exit " + std::to_string(gen.exit_code));
    c.expect(contains(gen.output, "s_{(2,1,1)}s_{(1)} = s_{(2,2,1)} + s_{(2)}s_{(1,1,1)}"),
             "unexpected rendering: " + gen.output);
    c.expect(contains(gen.output, "verified"), "cli did not report verification");

    Identity row = barred_identity(P({2, 1, 1}), {{2, 1, 1}}, Axis::row);
    c.expect(row == Identity({Term(1, P({1, 1}), P({1}))},
                             {Term(1, P({2, 1}), P({})), Term(1, P({1, 1, 1}), P({}))}),
             "row-bar variant mismatch");
    Identity col = barred_identity(P({2, 1, 1}), {{2, 1, 1}}, Axis::column);
    c.expect(col == Identity({Term(1, P({1}), P({1}))},
                             {Term(1, P({1, 1}), P({})), Term(1, P({2}), P({}))}),
             "column-bar variant mismatch");
    c.expect(verifies(row, 4) && verifies(col, 4), "bar variants do not verify at m=4");
}

// 2. Second worked example, same shape, <1s.
void criterion2(Check& c) {
    auto gen = run_cli("gen --lambda 4,2,1 --strips 2:2:1 --format latex --verify --vars 4");
    c.expect(gen.exit_code == 0, "cli gen exit " + std::to_string(gen.exit_code));
    c.expect(contains(gen.output,
                      "s_{(4,2,1)}s_{(2,2)} = s_{(4,3,3)}s_{(1)} + s_{(4,2)}s_{(2,2,1)}"),
             "unexpected rendering: " + gen.output);

    Identity row = barred_identity(P({4, 2, 1}), {{2, 2, 1}}, Axis::row);
    c.expect(row == Identity({Term(1, P({2, 1}), P({2, 2}))},
                             {Term(1, P({3, 3}), P({1})), Term(1, P({2}), P({2, 2, 1}))}),
             "row-bar variant mismatch");
    Identity col = barred_identity(P({4, 2, 1}), {{2, 2, 1}}, Axis::column);
    c.expect(col == Identity({Term(1, P({3, 1}), P({2, 2}))},
                             {Term(1, P({3, 2, 2}), P({1})), Term(1, P({4, 2}), P({1, 1}))}),
             "column-bar variant mismatch");
    c.expect(verifies(row, 4) && verifies(col, 4), "bar variants do not verify at m=4");
}

// 3. The (3,2,1) square: the known 4-term expansion, verified at m=5.
void criterion3(Check& c) {
    Identity sq = square_identity(P({3, 2, 1}));
    Identity expected({Term(1, P({3, 2, 1}), P({3, 2, 1}))},
                      {Term(1, P({4, 3, 2}), P({2, 1})), Term(1, P({4, 3}), P({2, 1, 1, 1})),
                       Term(1, P({4, 1}), P({2, 2, 2, 1})),
                       Term(1, P({3, 3, 2, 1}), P({2, 1}))});
    c.expect(sq == expected, "square expansion mismatch");
    c.expect(verifies(sq, 5), "square does not verify at m=5");
}

// 4. Rectangle squares split into the two-term pattern for m,n <= 4, <30s.
void criterion4(Check& c) {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> rect(static_cast<std::size_t>(n), m);
            Identity id = square_identity(Partition(rect));
            std::vector<int> tall(static_cast<std::size_t>(n + 1), m);
            std::vector<int> short_(static_cast<std::size_t>(n - 1), m);
            std::vector<int> wide(static_cast<std::size_t>(n), m + 1);
            std::vector<int> narrow(static_cast<std::size_t>(n), m - 1);
            Identity expected({Term(1, Partition(rect), Partition(rect))},
                              {Term(1, Partition(short_), Partition(tall)),
                               Term(1, Partition(wide), Partition(narrow))});
            std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            c.expect(id == expected, "rectangle pattern mismatch at " + tag);
            c.expect(verifies(id), "rectangle square does not verify at " + tag);
        }
    }
}

// 5. Exhaustive sweep |lambda| <= 10, k <= 2: main and conjugate verify, <5min.
void criterion5(Check& c) {
    for (const auto& p : testutil::all_partitions_up_to(10)) {
        for (const auto& specs : enumerate_specs(p, 2)) {
            Identity id = main_identity(p, specs);
            if (!verifies(id)) {
                c.expect(false, "main identity fails for " + p.to_string());
                return;
            }
            if (!verifies(conjugate_identity(id))) {
                c.expect(false, "conjugate identity fails for " + p.to_string());
                return;
            }
        }
    }
}

// 6. Proof-path equivalences for |lambda| <= 8; k+1 terms, all coefficient +1.
void criterion6(Check& c) {
    for (const auto& p : testutil::all_partitions_up_to(8)) {
        if (!p.empty() && square_identity_via_nu(p) != square_identity(p)) {
            c.expect(false, "square via nu differs for " + p.to_string());
            return;
        }
        const int n = static_cast<int>(p.height());
        for (const auto& specs : enumerate_specs(p, 3)) {
            Identity derived = derive_main_identity(p, specs, n + 1);
            if (derived != main_identity(p, specs)) {
                c.expect(false, "derivation differs for " + p.to_string());
                return;
            }
            c.expect(derived.rhs().size() == specs.size() + 1,
                     "term count is not k+1 for " + p.to_string());
            for (const auto& t : derived.rhs()) {
                c.expect(t.coeff == 1, "coefficient differs from +1 for " + p.to_string());
            }
            if (!c.ok) return;
        }
    }
}

// 7. Row-exchange self-test: 200 seeded pairs, sizes 2..5, zero failures, <30s.
void criterion7(Check& c) {
    auto rep = plucker_selftest(5, 200, 2024);
    c.expect(rep.trials == 200, "trial count " + std::to_string(rep.trials));
    c.expect(rep.failures == 0, std::to_string(rep.failures) + " failures");
}

// 8. Oracle concordance at (1,...,m) for |lambda| <= 6, plus the h/e swap.
void criterion8(Check& c) {
    for (const auto& p : testutil::all_partitions_up_to(6)) {
        const int h = static_cast<int>(p.height());
        for (int m : {std::max(h, 1), h + 1, 4}) {
            if (h > m) continue;
            EvalPoint point;
            for (int i = 1; i <= m; ++i) point.coords.emplace_back(i);
            const Rational ref = schur_eval_bialternant(p, point);
            const std::string tag = p.to_string() + " at m=" + std::to_string(m);
            c.expect(schur_eval_jacobi_trudi(p, point, BasisKind::h, std::max(h, 1)) == ref,
                     "h-determinant differs for " + tag);
            c.expect(schur_eval_jacobi_trudi(p, point, BasisKind::e,
                                             std::max(p.part(1), 1)) == ref,
                     "e-determinant differs for " + tag);
            c.expect(jt_determinant(BasisKind::e, p, point, std::max(h, 1)) ==
                         schur_eval_jacobi_trudi(conjugate(p), point, BasisKind::h,
                                                 std::max(p.part(1), 1)),
                     "h/e swap does not give the conjugate for " + tag);
            Rational ssyt = 0;
            for (const auto& [expo, count] : schur_expand_ssyt(p, m)) {
                Rational mono = count;
                for (int i = 0; i < m; ++i) {
                    for (int e = 0; e < expo[static_cast<std::size_t>(i)]; ++e) {
                        mono *= point.coords[static_cast<std::size_t>(i)];
                    }
                }
                ssyt += mono;
            }
            c.expect(ssyt == ref, "tableau expansion differs for " + tag);
            if (!c.ok) return;
        }
    }
}

// 9. Two-row-window identities verify for 2 <= height <= 4, |lambda| <= 10.
void criterion9(Check& c) {
    for (const auto& p : testutil::all_partitions_up_to(10)) {
        if (p.height() < 2 || p.height() > 4) continue;
        if (!verifies(fulmek_kleber_identity(p))) {
            c.expect(false, "identity fails for " + p.to_string());
            return;
        }
    }
}

// 10. Rectangle-bracket family verifies for all 1<=a<=m<=3, 1<=b<=n<=3.
void criterion10(Check& c) {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            for (int a = 1; a <= m; ++a) {
                for (int b = 1; b <= n; ++b) {
                    if (!verifies(gps_identity(a, b, m, n))) {
                        c.expect(false, "fails at a=" + std::to_string(a) + " b=" +
                                            std::to_string(b) + " m=" + std::to_string(m) +
                                            " n=" + std::to_string(n));
                        return;
                    }
                }
            }
        }
    }
}

} // namespace

int main() {
    struct Entry {
        int number;
        std::string label;
        double limit_seconds;
        std::function<void(Check&)> run;
    };
    const std::vector<Entry> entries = {
        {1, "first worked example via the CLI, bar variants, m=4", 1.0, criterion1},
        {2, "second worked example via the CLI, bar variants, m=4", 1.0, criterion2},
        {3, "(3,2,1) square expansion, m=5", 10.0, criterion3},
        {4, "rectangle squares, m,n <= 4", 30.0, criterion4},
        {5, "exhaustive sweep |lambda| <= 10, k <= 2, with conjugates", 300.0, criterion5},
        {6, "proof-path equivalences, |lambda| <= 8", 120.0, criterion6},
        {7, "row-exchange self-test, 200 pairs, sizes 2..5", 30.0, criterion7},
        {8, "oracle concordance, |lambda| <= 6", 60.0, criterion8},
        {9, "two-row-window family, heights 2..4, |lambda| <= 10", 60.0, criterion9},
        {10, "rectangle-bracket family, a<=m<=3, b<=n<=3", 60.0, criterion10},
    };

    int failed = 0;
    for (const auto& e : entries) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(secs < e.limit_seconds, "runtime limit exceeded");
        std::ostringstream line;
        line << (c.ok ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.label
             << " [" << secs << " s, limit " << e.limit_seconds << " s]";
        if (!c.ok) line << " -- " << c.why;
        std::cout << line.str() << "\n";
        if (!c.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
