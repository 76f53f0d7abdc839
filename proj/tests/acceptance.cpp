// Acceptance driver: one pass/fail line per criterion, exact rational
// equality throughout, default sweep m,r in {1,2}, n in 1..m+1, polynomial
// degree <= 2, seed 42. Exit code = number of failed criteria.

#include "homni/randomgen.hpp"
#include "homni/text.hpp"
#include "homni/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace homni;

namespace {

int failures = 0;

void report(int criterion, const std::string& title, bool pass,
            const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

void report_suite(int criterion, const std::string& title, const SuiteResult& s) {
    std::string detail = std::to_string(s.checks.size()) + " checks";
    if (!s.passed()) {
        for (const auto& c : s.checks)
            if (!c.pass) {
                detail = "first failure: " + c.name;
                break;
            }
    }
    report(criterion, title, s.passed(), detail);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool cli_determinism() {
#ifdef HOMNI_CLI_PATH
    const std::string cli = HOMNI_CLI_PATH;
    const std::string a = "acceptance_report_a.json";
    const std::string b = "acceptance_report_b.json";
    const std::string base = cli + " verify --seed 42 --out ";
    if (std::system((base + a).c_str()) != 0) return false;
    if (std::system((base + b).c_str()) != 0) return false;
    const std::string ra = read_file(a);
    const std::string rb = read_file(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    return !ra.empty() && ra == rb;
#else
    return false;
#endif
}

bool grammar_fuzz(int instances) {
    Rng rng(42);
    const std::vector<ChartConfig> charts{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (int t = 0; t < instances; ++t) {
        const ChartConfig chart = charts[static_cast<std::size_t>(t) % charts.size()];
        const int n = rng.uniform(0, chart.m + 1);
        switch (t % 7) {
            case 0: {
                Poly p = random_poly(chart.m, 2, rng);
                if (parse_poly(to_text(p), chart.m) != p) return false;
                break;
            }
            case 1: {
                EForm a = random_eform(chart, rng.uniform(0, chart.m), 2, rng);
                if (parse_eform(to_text(a), chart, a.degree()) != a) return false;
                break;
            }
            case 2: {
                JForm mu = random_jform(chart, n, 2, rng);
                if (parse_jform(to_text(mu), chart) != mu) return false;
                break;
            }
            case 3: {
                GenForm g = random_genform(chart, rng.uniform(1, frame_size(chart)), 2, rng);
                if (parse_genform(to_text(g), chart) != g) return false;
                break;
            }
            case 4: {
                Derivation d = random_derivation(chart, 2, rng);
                if (parse_derivation(to_text(d), chart) != d) return false;
                break;
            }
            case 5: {
                OmniSection e = random_omni(chart, std::max(1, n), 2, rng);
                if (parse_omni(to_text(e), chart) != e) return false;
                break;
            }
            case 6: {
                auto p = random_point(chart.m, rng);
                if (parse_point(to_text(p), chart.m) != p) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    VerifyOptions opt;  // seed 42, 50 trials, degree <= 2, full sweep

    report_suite(1, "Cartan calculus on jet-valued forms", suite_cartan(opt));
    report_suite(2, "Leibniz-algebra structure of the Dorfman bracket", suite_leibniz(opt));
    report_suite(3, "contracting homotopy is the identity", suite_homotopy(opt));
    report_suite(4, "fast calculus agrees with the generic oracle", suite_oracles(opt));
    report_suite(5, "graphs of closed forms are exactly the involutive ones",
                 suite_graph(opt));
    report_suite(6, "twisted bracket Jacobiator is the contracted twist differential",
                 suite_twist(opt));
    report_suite(7, "isotropic graphs over the jet summand have the computed dimensions",
                 suite_rigidity(opt));
    report_suite(8, "top-degree bracket closure is the fiberwise Jacobi identity",
                 suite_volume_lie(opt));
    report_suite(9, "jet-form membership accepts embeddings and rejects perturbations",
                 suite_membership(opt));
    report_suite(10, "multicontact kernel and quotient form are mutually inverse",
                 suite_multicontact(opt));
    report_suite(11, "trivial-line formulas match the general engine",
                 suite_trivial_line(opt));

    const bool det = cli_determinism();
    const bool fuzz = grammar_fuzz(100);
    report(12, "CLI report is deterministic and the grammar round-trips", det && fuzz,
           det ? (fuzz ? "byte-identical reports, 100 roundtrips"
                       : "grammar roundtrip failed")
               : "reports differ or CLI failed");

    return failures;
}
