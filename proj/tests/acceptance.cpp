// Runs the default suite once and prints one PASS/FAIL line per acceptance
// criterion. Each criterion names the grid it needs; every point of that
// grid must be present in the default run with the expected status.

#include "dlab/cli.hpp"
#include "dlab/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace dlab;
using enum ClaimId;

namespace {

using Key = std::pair<ClaimId, Params>;

struct Index {
    std::map<Key, Status> status;

    explicit Index(const std::vector<Report>& reports) {
        for (const auto& r : reports) status[{r.claim, r.params}] = r.status;
    }

    // Every point of `claims` over `bounds` was run and passed. Returns the
    // number checked, or -1 with a description of the first gap.
    long covered(const std::vector<ClaimId>& claims, const SuiteBounds& bounds, std::string& problem) const {
        long n = 0;
        for (const auto& [c, p] : enumerate_points(claims, bounds)) {
            auto it = status.find({c, p});
            if (it == status.end() || it->second != Status::kPass) {
                Report r{c, p, it == status.end() ? Status::kSkipped : it->second, {}, {}};
                problem = cli::format_text(r, false) + (it == status.end() ? " [missing]" : "");
                return -1;
            }
            ++n;
        }
        return n;
    }
};

struct Line {
    bool ok;
    std::string detail;
};

SuiteBounds nm(int n, int m) {
    SuiteBounds b;
    b.n_max = n;
    b.m_max = m;
    return b;
}

Line grid(const Index& idx, const std::vector<ClaimId>& claims, const SuiteBounds& b, const std::string& what) {
    std::string problem;
    const long n = idx.covered(claims, b, problem);
    if (n < 0) return {false, what + ": " + problem};
    return {true, what + ": " + std::to_string(n) + " points pass"};
}

Line all_of(std::initializer_list<Line> parts) {
    Line out{true, ""};
    for (const auto& l : parts) {
        out.ok = out.ok && l.ok;
        out.detail += (out.detail.empty() ? "" : "; ") + l.detail;
    }
    return out;
}

Line lift_samples(const std::vector<Report>& reports) {
    std::map<std::int64_t, std::pair<long, long>> per_prime;  // p -> (pass, total)
    for (const auto& r : reports) {
        if (r.claim != THM51) continue;
        auto& [pass, total] = per_prime[param_int(r.params, "p")];
        ++total;
        pass += r.status == Status::kPass;
    }
    auto at = [&](std::int64_t p) { return per_prime.count(p) ? per_prime[p] : std::pair<long, long>{0, 0}; };
    const bool ok = at(3).first == 81 && at(3).second == 81 && at(5).first >= 100 && at(5).first == at(5).second &&
                    at(7).first >= 100 && at(7).first == at(7).second;
    std::ostringstream s;
    s << "THM51 p=3 " << at(3).first << "/81 residues, p=5 " << at(5).first << "/" << at(5).second << ", p=7 "
      << at(7).first << "/" << at(7).second;
    return {ok, s.str()};
}

Line golden(const std::vector<Report>& reports, const std::string& path) {
    std::ostringstream got;
    for (const auto& r : reports) got << cli::format_jsonl(r, false) << '\n';
    std::ifstream f(path, std::ios::binary);
    if (!f) return {false, "golden file " + path + " not readable"};
    std::ostringstream want;
    want << f.rdbuf();
    const int code = cli::exit_status(reports);
    if (code != 0) return {false, "default suite exit status " + std::to_string(code)};
    if (got.str() != want.str()) {
        // Locate the first differing line for the report.
        std::istringstream a(got.str()), b(want.str());
        std::string la, lb;
        long line = 0;
        while (true) {
            ++line;
            const bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
            if (!ha || !hb || la != lb) break;
        }
        return {false, "jsonl differs from golden file at line " + std::to_string(line)};
    }
    return {true, "exit 0, " + std::to_string(reports.size()) + " jsonl records identical to golden file"};
}

} // namespace

int main(int argc, char** argv) {
    const std::string golden_path = argc > 1 ? argv[1] : DLAB_GOLDEN_FILE;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    const auto start = std::chrono::steady_clock::now();
    std::vector<ClaimId> every;
    for (const auto& c : claim_catalog()) every.push_back(c.id);
    const auto reports = run_suite(every, {}, jobs);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Index idx(reports);

    SuiteBounds primes13;
    primes13.primes = std::vector<int>{3, 5, 7, 11, 13};
    SuiteBounds sunfinal;
    sunfinal.primes = std::vector<int>{5, 7, 11, 13};
    SuiteBounds conj = nm(5, 5);
    conj.primes = std::vector<int>{3, 5};
    conj.r_max = 2;
    SuiteBounds thm11 = nm(8, 3);
    thm11.x_min = -12;
    thm11.x_max = 12;

    const std::vector<std::pair<std::string, Line>> lines = {
        {"AC1 d_n^2 single-sum identity", grid(idx, {EQ_DNSQUARE}, nm(25, 1), "EQ_DNSQUARE n<=25")},
        {"AC2 s_n^2 double-sum identity",
         all_of({grid(idx, {EQ_SNSQUARE}, nm(12, 1), "EQ_SNSQUARE n<=12"),
                 grid(idx, {EQ_DOUBLESUM}, nm(12, 1), "EQ_DOUBLESUM n<=12, r<=2n")})},
        {"AC3 recurrences",
         grid(idx, {REC_ZEIL1, REC_ZEIL_SQUARES, REC_DSQUARE, REC_ORDER2, REC_ORDER3}, nm(12, 1),
              "REC_ZEIL1, REC_ZEIL_SQUARES, REC_DSQUARE, REC_ORDER2, REC_ORDER3 n<=12")},
        {"AC4 integrality of the six sums",
         all_of({grid(idx, {THM11_ALL}, thm11, "THM11_ALL n<=8, m<=3, x in [-12,12]"),
                 grid(idx, {THM11_POLY}, nm(6, 2), "THM11_POLY n<=6, m<=2")})},
        {"AC5 q-quotients and exponent profiles",
         all_of({grid(idx, {THM12}, nm(10, 10), "THM12 n,m<=10"),
                 grid(idx, {THM21_A, THM21_B}, nm(10, 10), "THM21_A/B n,m<=10"),
                 grid(idx, {THM21_PROFILE_A, THM21_PROFILE_B}, nm(8, 8), "THM21_PROFILE_A/B n,m<=8")})},
        {"AC6 congruences",
         all_of({grid(idx, {BINOM_CONG, CONG_SUN1, CONG_SUN2}, primes13, "CONG_SUN1/2 all residues mod p^2, p<=13"),
                 lift_samples(reports), grid(idx, {CONJ_SUNFINAL}, sunfinal, "CONJ_SUNFINAL p in {5,7,11,13} x4")})},
        {"AC7 Schmidt divisibility", grid(idx, {LEM34}, nm(8, 3), "LEM34 eps=+-1, m<=3, n<=8")},
        {"AC8 conjecture scans",
         grid(idx, {CONJ_Q_SUN1, CONJ_Q_T11, CONJ_MIXED_DS}, conj,
              "CONJ_Q_SUN1, CONJ_Q_T11, CONJ_MIXED_DS conjecture-consistent, p in {3,5}, n,m<=5, r<=2")},
        {"AC9 default suite golden file", golden(reports, golden_path)},
    };

    bool all = true;
    for (const auto& [name, line] : lines) {
        std::cout << (line.ok ? "PASS " : "FAIL ") << name << " -- " << line.detail << '\n';
        all = all && line.ok;
    }
    std::printf("default suite: %zu reports in %.2f s\n", reports.size(), seconds);
    return all ? 0 : 1;
}
