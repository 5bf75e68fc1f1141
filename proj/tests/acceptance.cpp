// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runtime per criterion is printed alongside.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "nzeta/invariants.hpp"
#include "nzeta/ranklow.hpp"
#include "nzeta/report.hpp"

using namespace nzeta;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report_line(int idx, bool ok, const std::string& what, double secs, double budget) {
    bool in_budget = secs < budget;
    if (!ok || !in_budget) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n",
                ok && in_budget ? "PASS" : "FAIL", idx, what.c_str(), secs, budget);
}

Rational rat(const char* s) { return Rational::from_string(s); }

Catalog demo() { return parse_catalog(builtin_catalog_json()); }

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1. Exact rank-2 bundle of the supersingular elliptic curve, three beta routes.
void criterion1() {
    Timer t;
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    ZetaBundle b = bundle(e0, 2);
    bool ok = b.numerator == Poly{Rational(3), Rational(3), Rational(12)} &&
              b.alpha == std::vector<Rational>{Rational(3)} && b.beta0 == Rational(6);
    Rational via_residue = b.zhat.residue_simple(Rational(1));
    Rational via_mass = beta_zagier(e0, 2, 0);
    Rational via_numerator = b.numerator.eval(Rational(1)) / (b.Q - Rational(1));
    ok = ok && via_residue == Rational(6) && via_mass == Rational(6) &&
         via_numerator == Rational(6);
    report_line(1, ok, "rank-2 bundle of E0, three beta routes agree exactly", t.seconds(), 1);
}

// 2. Exact rank-3 bundle of E0.
void criterion2() {
    Timer t;
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    ZetaBundle b = bundle(e0, 3);
    bool ok = b.numerator == Poly{Rational(6), Rational(12), Rational(48)} &&
              b.alpha == std::vector<Rational>{Rational(6)} && b.beta0 == rat("66/7") &&
              beta_zagier(e0, 3, 0) == rat("66/7");
    report_line(2, ok, "rank-3 bundle of E0", t.seconds(), 1);
}

// 3. RH verdicts for ranks 1..3 of E0 at 128 bits, tolerance 1e-9.
void criterion3() {
    Timer t;
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    bool ok = true;
    double expect[4] = {0.0, std::sqrt(2.0), 2.0, std::sqrt(8.0)};
    for (int n = 1; n <= 3; ++n) {
        RhVerdict v = rh_verdict(bundle(e0, n), e0.q, 1e-9, 128);
        ok = ok && v.holds && v.max_rel_deviation.to_double() < 1e-9;
        for (const auto& m : v.moduli)
            ok = ok && std::abs(m.to_double() - expect[n]) < 1e-9;
    }
    report_line(3, ok, "RH verdicts ranks 1-3 of E0 (|w| = sqrt2, 2, sqrt8)", t.seconds(), 1);
}

// 4. Counting identity, ranks 2..5, on E0 and the enumerated genus-2 curve.
void criterion4() {
    Timer t;
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    Curve c5 = curve_from_point_counts("C5", 2, 2, {3, 5});  // N2 = 5 enumerated
    bool ok = true;
    for (const Curve& c : {e0, c5})
        for (int n = 2; n <= 5; ++n) ok = ok && counting_miracle_check(c, n);
    report_line(4, ok, "counting identity exact for 2 <= n <= 5 on E0 and C5", t.seconds(), 10);
}

// 5. Cancellation + functional equation for catalog and synthetic curves.
void criterion5() {
    Timer t;
    std::vector<Curve> curves = demo().curves;
    Rng rng(0x5eedULL);
    for (long q : {2L, 3L, 4L}) {
        long amax = static_cast<long>(std::sqrt(4.0 * q));
        while (amax * amax > 4 * q) --amax;
        for (int g : {1, 2, 3}) {
            for (int i = 0; i < 20; ++i) {
                std::vector<long> traces;
                for (int j = 0; j < g; ++j) traces.push_back(rng.range(-amax, amax));
                std::ostringstream name;
                name << "synth_q" << q << "_g" << g << "_" << i;
                curves.push_back(synth_curve(name.str(), q, g, traces));
            }
        }
    }
    bool ok = true;
    for (const Curve& c : curves) {
        for (int n = 1; n <= 5; ++n) {
            RatFunc z = sl_n_zeta(c, n);
            Rational Q = pow_int(c.q, n);
            if (!verify_cancellation(z, n, c.q, c.g)) ok = false;
            if (z.invert_substitute(Q) != z) ok = false;
        }
    }
    std::ostringstream what;
    what << "cancellation and functional equation, " << curves.size()
         << " curves x ranks 1..5";
    report_line(5, ok, what.str(), t.seconds(), 60);
}

// 6. Rank-3 pipeline on every catalog curve.
void criterion6() {
    Timer t;
    bool identities = true, third = true, full = true;
    std::ostringstream detail;
    for (const Curve& c : demo().curves) {
        bool cid = true;
        Rank3Parts parts;
        try {
            parts = rank3_parts(c);  // verifies sum + FE identities exactly
        } catch (const StructureViolation&) {
            cid = false;
        }
        identities = identities && cid;
        if (!cid) {
            detail << "    " << c.name << ": identities BROKEN\n";
            third = full = false;
            continue;
        }

        CircleVerdict tl = rh_third_line(parts, c, 1e-9, 128);
        third = third && tl.holds;

        ZetaBundle b = bundle(c, 3);
        RhVerdict v = rh_verdict(b, c.q, 1e-9, 128);
        bool half_plane = true;
        BigFloat bound = BigFloat::of(1L, v.precision_bits) /
                             BigFloat::of(b.Q, v.precision_bits).sqrt() +
                         BigFloat::of(1e-9, v.precision_bits);
        for (const auto& r : v.roots_T)
            if (r.abs() > bound) half_plane = false;
        full = full && v.holds && half_plane;

        detail << "    " << c.name << ": identities=" << (cid ? "exact" : "BROKEN")
               << " third_line=" << (tl.holds ? "holds" : "fails")
               << " (|c0/cd| = " << (parts.z_ge2.num().coeff(0) /
                                     parts.z_ge2.num().leading()).abs().str()
               << ", on-circle product would be " << pow_int(c.q, -parts.z_ge2.num().degree()).str()
               << ") rank3_rh=" << (v.holds ? "holds" : "fails") << "\n";
    }
    bool ok = identities && third && full;
    report_line(6, ok, "rank-3 pipeline (parts identities, one-third-line verdict, full RH)",
                t.seconds(), 30);
    std::fputs(detail.str().c_str(), stdout);
    if (identities && full && !third)
        std::fputs(
            "    note: the one-third-line property fails on every curve, and the exact\n"
            "    |constant/leading| witness above rules it out independently of root\n"
            "    finding: were all upper-half numerator roots of modulus 1/q, that ratio\n"
            "    would equal q^(-deg). The split identities and the full rank-3 verdict\n"
            "    do hold; the implementation reports the computed truth.\n",
            stdout);
}

// 7. Inequality properties: comparison scan, gap grid, ratio predicates, bounds.
void criterion7() {
    Timer t;
    bool ok = true;

    for (double q : {2.0, 3.0}) {
        YoshidaScan scan = yoshida_scan(q, 10000, 0xfeedULL);
        ok = ok && scan.violations == 0 && scan.unexpected_eq == 0;
    }

    int grid = 0;
    for (int i = 0; i < 32 && ok; ++i) {
        double q = 1.0 + std::pow(10.0, -3.0 + 5.0 * i / 31.0);
        for (int j = 0; j < 32; ++j) {
            double x = j == 0 ? 0.0 : std::pow(10.0, -4.0 + 5.0 * j / 31.0);
            double v = yoshida_gap(q, x);
            if (v < 0.0 || (x > 0.0 && !(v > 0.0))) ok = false;
            ++grid;
        }
    }

    Catalog cat = demo();
    for (const Curve& c : cat.curves) {
        for (int a = 1; a <= 3; ++a) {
            PredicateReport rep = check_reflected_zeta_ratio(c, 3, a, 1000, 1);
            ok = ok && rep.pass();
        }
        for (int a = 1; a <= 2; ++a) {
            PredicateReport rep = check_adjacent_zeta_ratio(c, 3, a, 1000, 1);
            ok = ok && rep.pass();
        }
    }

    for (const Curve& c : cat.curves)
        for (int n = 1; n <= 3; ++n) {
            for (const auto& row : check_rough_bounds(c, n))
                ok = ok && row.verdict != Verdict::Fail;
            ok = ok && check_beta_product_bounds(c, n).verdict != Verdict::Fail;
            ok = ok && check_beta_ratio_bounds(c, n).verdict != Verdict::Fail;
        }

    report_line(7, ok,
                "inequality properties (2x10^4 comparison samples, 1024-point gap grid, "
                "10^3/side ratio predicates, certified bounds)",
                t.seconds(), 60);
}

// 8. Determinism: two consecutive report runs are byte-identical.
void criterion8() {
    Timer t;
    std::string out1 = "acceptance_report_1.json";
    std::string out2 = "acceptance_report_2.json";
    std::string base = std::string(NZETA_CLI_PATH) + " report --catalog " +
                       std::string(NZETA_DATA_DIR) + "/demo_catalog.json --ranks 1..3" +
                       " --samples 200 --emit both";
    int rc1 = std::system((base + " --out " + out1).c_str());
    int rc2 = std::system((base + " --out " + out2).c_str());
    bool ok = rc1 == 0 && rc2 == 0;
    if (ok) {
        std::string a = slurp(out1), b = slurp(out2);
        std::string ac = slurp(out1 + ".csv"), bc = slurp(out2 + ".csv");
        ok = !a.empty() && a == b && !ac.empty() && ac == bc;
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove((out1 + ".csv").c_str());
    std::remove((out2 + ".csv").c_str());
    report_line(8, ok, "two report runs are byte-identical (json + csv)", t.seconds(), 600);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
