#include "CLI11.hpp"
#include "json.hpp"

#include "homni/multicontact.hpp"
#include "homni/text.hpp"
#include "homni/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace homni;

namespace {

struct Options {
    int m = 1;
    int r = 1;
    int n = -1;
    int deg = 0;
    std::uint64_t seed = 42;
    int trials = 50;
    int max_deg = 2;
    bool pretty = false;
    std::string out;
    std::string in;
    std::vector<std::string> inputs;
    std::vector<std::string> points;

    bool m_given = false;
    bool r_given = false;
    bool n_given = false;

    ChartConfig chart() const { return {m, r}; }
};

void add_common(CLI::App* cmd, Options& o, int arity, const std::string& operand_help) {
    cmd->add_option("--m", o.m, "chart dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--r", o.r, "bundle rank")->check(CLI::PositiveNumber);
    cmd->add_option("--n", o.n, "form degree (used as a hint for bare zeros)");
    cmd->add_option("--seed", o.seed, "PRNG seed");
    cmd->add_option("--trials", o.trials, "random trials per identity")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-deg", o.max_deg, "max total degree of random polynomials")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--pretty", o.pretty, "indent the JSON report");
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
    cmd->add_option("--in", o.in, "read operands from a file, one per line");
    if (arity != 0) cmd->add_option("input", o.inputs, operand_help);
}

std::vector<std::string> operands(const Options& o, std::size_t arity) {
    std::vector<std::string> args = o.inputs;
    if (!o.in.empty()) {
        std::ifstream f(o.in);
        if (!f) throw std::runtime_error("cannot open input file: " + o.in);
        std::string line;
        while (std::getline(f, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) args.push_back(line);
    }
    if (args.size() != arity)
        throw std::runtime_error("expected " + std::to_string(arity) + " operand(s), got " +
                                 std::to_string(args.size()));
    return args;
}

int emit(const json& report, const Options& o, int code) {
    const std::string text = report.dump(o.pretty ? 2 : -1) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot open output file: " + o.out);
        f << text;
    }
    return code;
}

json check_json(const CheckResult& res) {
    json j;
    j["ok"] = res.ok;
    if (!res.witness.empty()) j["witness"] = res.witness;
    return j;
}

json suites_json(const std::vector<SuiteResult>& suites) {
    json arr = json::array();
    for (const auto& s : suites) {
        json js;
        js["name"] = s.name;
        js["passed"] = s.passed();
        json checks = json::array();
        for (const auto& c : s.checks) {
            json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            checks.push_back(std::move(jc));
        }
        js["checks"] = std::move(checks);
        arr.push_back(std::move(js));
    }
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of the higher omni-Lie algebroid of a vector bundle "
                 "over a rational coordinate chart"};
    app.require_subcommand(1);

    Options o;
    std::string command;

    struct Cmd {
        const char* name;
        const char* help;
        int arity;
        const char* operand_help;
    };
    const std::vector<Cmd> cmds{
        {"d", "differential of a jet-valued form", 1, "jform(...)"},
        {"wedge", "module product of a scalar form with a jet-valued form", 2,
         "scalar form, then jform(...)"},
        {"iota", "contraction of a jet-valued form with a derivation", 2,
         "der(...), then jform(...)"},
        {"lie", "Lie derivative of a jet-valued form along a derivation", 2,
         "der(...), then jform(...)"},
        {"dorfman", "higher Dorfman bracket of two sections", 2, "two omni(...)"},
        {"pair", "symmetric pairing of two sections", 2, "two omni(...)"},
        {"twist", "Dorfman bracket deformed by a twist form", 3,
         "jform(...) twist, then two omni(...)"},
        {"jacobiator", "left Leibniz defect of the bracket (optionally twisted)", -3,
         "three omni(...), optionally preceded by a jform(...) twist"},
        {"member", "decide membership of a generic form in the jet-form subbundle", 1,
         "genform(...)"},
        {"isotropic", "isotropy of the graph of the flat map of a jet form", 1,
         "jform(...) of degree n+1"},
        {"involutive", "involutivity of the graph of the flat map of a jet form", 1,
         "jform(...) of degree n+1"},
        {"dirac-from-form", "Dirac-Jacobi graph attached to a bundle-valued form", 1,
         "E-valued form"},
        {"rigidity", "dimension of isotropic graphs over the jet summand", 0, ""},
        {"jacobi", "Jacobi identity and bracket closure of a volume-Lie structure", 1,
         "zstruct(...)"},
        {"multicontact", "corank test of a bundle-valued form at rational points", 1,
         "E-valued form (rank 1)"},
        {"verify", "run the seeded verification suites", 0, ""},
    };
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, o, c.arity, c.operand_help);
        if (std::string(c.name) == "rigidity")
            sub->add_option("--deg", o.deg, "max total degree of the map coefficients")
                ->check(CLI::NonNegativeNumber);
        if (std::string(c.name) == "multicontact")
            sub->add_option("--at", o.points, "evaluation point, comma-separated rationals")
                ->required()
                ->allow_extra_args(false);
        sub->callback([&command, c] { command = c.name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    for (const CLI::App* sub : app.get_subcommands()) {
        o.m_given = sub->count("--m") > 0;
        o.r_given = sub->count("--r") > 0;
        o.n_given = sub->count("--n") > 0;
    }

    try {
        const ChartConfig chart = o.chart();
        json rep;
        rep["command"] = command;
        rep["m"] = o.m;
        rep["r"] = o.r;

        if (command == "d") {
            auto a = operands(o, 1);
            rep["result"] = to_text(jd(parse_jform(a[0], chart)));
            return emit(rep, o, 0);
        }
        if (command == "wedge") {
            auto a = operands(o, 2);
            ScalarForm w = parse_scalar_form(a[0], o.m);
            rep["result"] = to_text(jwedge(w, parse_jform(a[1], chart)));
            return emit(rep, o, 0);
        }
        if (command == "iota" || command == "lie") {
            auto a = operands(o, 2);
            Derivation d = parse_derivation(a[0], chart);
            JForm mu = parse_jform(a[1], chart);
            rep["result"] = to_text(command == "iota" ? jiota(d, mu) : jlie(d, mu));
            return emit(rep, o, 0);
        }
        if (command == "dorfman" || command == "pair") {
            auto a = operands(o, 2);
            OmniSection e1 = parse_omni(a[0], chart);
            OmniSection e2 = parse_omni(a[1], chart);
            if (command == "dorfman")
                rep["result"] = to_text(dorfman(e1, e2));
            else
                rep["result"] = to_text(plus_pairing(e1, e2));
            return emit(rep, o, 0);
        }
        if (command == "twist") {
            auto a = operands(o, 3);
            JForm omega = parse_jform(a[0], chart);
            rep["result"] =
                to_text(twisted_dorfman(omega, parse_omni(a[1], chart), parse_omni(a[2], chart)));
            return emit(rep, o, 0);
        }
        if (command == "jacobiator") {
            std::vector<std::string> a = o.inputs;
            if (a.size() != 3 && a.size() != 4)
                throw std::runtime_error("expected 3 sections or a twist plus 3 sections");
            OmniSection out = a.size() == 3
                                  ? jacobiator(parse_omni(a[0], chart), parse_omni(a[1], chart),
                                               parse_omni(a[2], chart))
                                  : jacobiator_twisted(
                                        parse_jform(a[0], chart), parse_omni(a[1], chart),
                                        parse_omni(a[2], chart), parse_omni(a[3], chart));
            rep["result"] = to_text(out);
            return emit(rep, o, 0);
        }
        if (command == "member") {
            auto a = operands(o, 1);
            auto res = membership_check(parse_genform(a[0], chart));
            rep["member"] = res.ok;
            if (res.ok)
                rep["lambda"] = to_text(res.lambda);
            else
                rep["witness"] = res.witness;
            return emit(rep, o, res.ok ? 0 : 1);
        }
        if (command == "isotropic" || command == "involutive") {
            auto a = operands(o, 1);
            BMapD b = bmap_from_form(parse_jform(a[0], chart));
            CheckResult iso = isotropy_check_D(b);
            rep["isotropic"] = check_json(iso);
            bool ok = iso.ok;
            if (command == "involutive") {
                CheckResult inv = involutivity_check_D(b);
                rep["involutive"] = check_json(inv);
                ok = ok && inv.ok;
            }
            return emit(rep, o, ok ? 0 : 1);
        }
        if (command == "dirac-from-form") {
            auto a = operands(o, 1);
            BMapD b = dirac_from_eform(parse_eform(a[0], chart, o.n));
            json vals = json::array();
            for (int i = 1; i <= frame_size(chart); ++i) vals.push_back(to_text(b.value(i)));
            rep["graph_values"] = std::move(vals);
            rep["isotropic"] = check_json(isotropy_check_D(b));
            rep["involutive"] = check_json(involutivity_check_D(b));
            return emit(rep, o, 0);
        }
        if (command == "rigidity") {
            if (!o.n_given) throw std::runtime_error("rigidity needs --n");
            rep["n"] = o.n;
            rep["coeff_deg"] = o.deg;
            rep["solution_dim"] = rigidity_solve(chart, o.n, o.deg);
            return emit(rep, o, 0);
        }
        if (command == "jacobi") {
            auto a = operands(o, 1);
            ZStructure z = parse_zstruct(a[0], chart);
            CheckResult jac = jacobi_check(z);
            CheckResult inv = involutivity_check_J(z, o.m + 1);
            rep["jacobi"] = check_json(jac);
            rep["bracket_closed"] = check_json(inv);
            return emit(rep, o, jac.ok && inv.ok ? 0 : 1);
        }
        if (command == "multicontact") {
            auto a = operands(o, 1);
            EForm nu = parse_eform(a[0], chart, o.n);
            json pts = json::array();
            bool all = true;
            for (const auto& text : o.points) {
                auto p = parse_point(text, o.m);
                const int corank =
                    o.m - static_cast<int>(kernel_at_point(nu, p).size());
                const bool ok = corank == nu.degree();
                all = all && ok;
                json jp;
                jp["point"] = to_text(p);
                jp["corank"] = corank;
                jp["multicontact"] = ok;
                pts.push_back(std::move(jp));
            }
            rep["degree"] = nu.degree();
            rep["points"] = std::move(pts);
            return emit(rep, o, all ? 0 : 1);
        }
        if (command == "verify") {
            VerifyOptions vo;
            vo.seed = o.seed;
            vo.trials = o.trials;
            vo.max_deg = o.max_deg;
            if (o.m_given || o.r_given) vo.charts = {chart};
            if (o.n_given) vo.ns = {o.n};
            auto suites = run_verify(vo);
            bool all = true;
            for (const auto& s : suites) all = all && s.passed();
            rep["seed"] = vo.seed;
            rep["trials"] = vo.trials;
            rep["max_deg"] = vo.max_deg;
            rep["prng"] = "mt19937_64";
            rep["suites"] = suites_json(suites);
            rep["passed"] = all;
            return emit(rep, o, all ? 0 : 1);
        }
        throw std::runtime_error("unknown command");
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
