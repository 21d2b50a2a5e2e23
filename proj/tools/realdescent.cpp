#include "realdescent/parser.hpp"
#include "realdescent/report.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace realdescent;

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSymmetry = 2,
    kResource = 3,
    kCertificate = 4,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write output file '" + path + "'");
    out << content;
}

GbLimits resolve_limits(std::optional<std::uint64_t> cli_budget) {
    GbLimits limits;
    if (const char* env = std::getenv("REALDESCENT_BUDGET")) {
        std::string value(env);
        std::size_t used = 0;
        unsigned long long parsed = 0;
        try {
            parsed = std::stoull(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || parsed == 0)
            throw Error("invalid REALDESCENT_BUDGET value '" + value + "'");
        limits.max_pairs = parsed;
    }
    if (cli_budget)
        limits.max_pairs = *cli_budget;
    return limits;
}

MonomialOrder order_by_name(const std::string& name) {
    return name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

struct RunConfig {
    std::string input;
    std::string output;
    std::string order;   // empty = keep the file's choice
    std::string format = "text";
    bool no_verify = false;
    bool radical = false;
    bool timings = false;
    std::optional<std::uint64_t> budget;
    std::string keep; // project only
};

DescentProblem load_problem(const RunConfig& cfg) {
    DescentProblem problem = parse_problem(read_file(cfg.input));
    DescentOptions opt = problem.options();
    if (!cfg.order.empty())
        opt.order = order_by_name(cfg.order);
    opt.limits = resolve_limits(cfg.budget);
    opt.verify = !cfg.no_verify;
    opt.radical = cfg.radical;
    problem.set_options(opt);
    return problem;
}

void print_basis(std::ostream& out, const std::vector<Polynomial>& basis) {
    if (basis.empty()) {
        out << "0\n";
        return;
    }
    for (const auto& g : basis)
        out << g.to_string() << "\n";
}

int cmd_descend(const RunConfig& cfg) {
    DescentProblem problem = load_problem(cfg);
    StageTimings stage_times;
    StageTimings* timings = cfg.timings ? &stage_times : nullptr;
    DescentReport report = run_descent(problem, timings);
    std::string rendered = cfg.format == "json"
                               ? render_json(report, timings)
                               : render_text(report, timings);
    write_output(cfg.output, rendered);
    return all_pass(report.certificates) ? kOk : kCertificate;
}

int cmd_check(const RunConfig& cfg) {
    DescentProblem problem = load_problem(cfg);
    std::vector<Certificate> certs = validate_symmetry(problem);
    std::ostringstream out;
    for (const auto& c : certs) {
        out << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.pass && !c.witness.empty())
            out << ": " << c.witness;
        out << "\n";
    }
    write_output(cfg.output, out.str());
    return all_pass(certs) ? kOk : kSymmetry;
}

int cmd_gb(const RunConfig& cfg) {
    DescentProblem problem = load_problem(cfg);
    auto basis = problem.ideal().groebner(problem.options().order,
                                          problem.options().limits);
    std::ostringstream out;
    print_basis(out, *basis);
    write_output(cfg.output, out.str());
    return kOk;
}

std::vector<std::string> split_keep(const std::string& keep) {
    std::vector<std::string> names;
    std::string current;
    std::istringstream in(keep);
    while (std::getline(in, current, ',')) {
        std::size_t first = current.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        std::size_t last = current.find_last_not_of(" \t");
        names.push_back(current.substr(first, last - first + 1));
    }
    return names;
}

int cmd_project(const RunConfig& cfg) {
    std::vector<std::string> keep = split_keep(cfg.keep);
    if (keep.empty())
        throw Error("project requires a non-empty --keep list");
    DescentProblem problem = load_problem(cfg);

    std::vector<Certificate> certs = validate_symmetry(problem);
    if (!all_pass(certs)) {
        for (const auto& c : certs)
            if (!c.pass)
                throw SymmetryError("symmetry validation failed (" + c.name +
                                    "): " + c.witness);
    }

    const GbLimits& limits = problem.options().limits;
    Ideal z_over_q = symmetrize_Z(compute_Z(problem), limits);
    Ideal projected = project_Z(z_over_q, keep, limits);

    auto basis = projected.groebner(problem.options().order, limits);
    std::ostringstream out;
    print_basis(out, *basis);
    write_output(cfg.output, out.str());
    std::cerr << "note: the projected model is not certified; no "
                 "saturation or degree checks are performed\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact real descent of complex affine varieties"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", cfg.input, "problem description file")
            ->required();
        sub->add_option("--output", cfg.output,
                        "write the report to this path instead of stdout");
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", cfg.order,
                        "monomial order for reported bases")
            ->check(CLI::IsMember({"grevlex", "lex"}));
    };

    CLI::App* descend =
        app.add_subcommand("descend", "run the full descent pipeline");
    add_common(descend);
    add_order(descend);
    descend->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    descend->add_flag("--no-verify", cfg.no_verify,
                      "skip the post-computation certificates");
    descend->add_flag("--radical", cfg.radical,
                      "use radical membership for certificate checks");
    descend->add_flag("--timings", cfg.timings,
                      "include wall-clock stage timings in the report");
    descend->add_option("--budget", cfg.budget,
                        "maximum number of S-pairs per basis computation");

    CLI::App* check =
        app.add_subcommand("check", "validate the symmetry conditions");
    add_common(check);

    CLI::App* gb = app.add_subcommand("gb", "print the reduced Groebner "
                                            "basis of the ideal section");
    add_common(gb);
    add_order(gb);

    CLI::App* project = app.add_subcommand(
        "project", "project the descended model onto a variable subset");
    add_common(project);
    project
        ->add_option("--keep", cfg.keep,
                     "comma-separated t-variables to keep")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (descend->parsed())
            return cmd_descend(cfg);
        if (check->parsed())
            return cmd_check(cfg);
        if (gb->parsed())
            return cmd_gb(cfg);
        return cmd_project(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const SymmetryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSymmetry;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
