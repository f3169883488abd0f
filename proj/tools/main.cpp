#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mink/bounds.hpp"
#include "mink/cyclofield.hpp"

int main(int argc, char** argv) {
    using namespace mink::cli;

    CLI::App app{"Divisibility bounds for endomorphism fields of abelian varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown"}))
        ->capture_default_str();

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "Closed-form divisibility bounds");
    bound->add_option("kind", bound_args.kind, "silverberg | endofield | sp | minkowski")
        ->required();
    bound->add_option("--g", bound_args.g, "Abelian variety dimension");
    bound->add_option("--n", bound_args.n, "Matrix rank (minkowski)");
    bound->add_option("--field", bound_args.field, "Coefficient field")->capture_default_str();
    bound->add_option("--p", bound_args.p, "Report only the exponent of this prime");

    EmpiricalArgs emp_args;
    CLI::App* emp = app.add_subcommand("empirical", "Empirical exponents from finite group orders");
    emp->add_option("--group", emp_args.group, "gl | sl | sp | gu")->capture_default_str();
    emp->add_option("--rank", emp_args.rank, "Group rank")->capture_default_str();
    emp->add_option("--field", emp_args.field, "Coefficient field")->capture_default_str();
    emp->add_option("--p", emp_args.p, "Single prime to estimate");
    emp->add_option("--p-max", emp_args.p_max, "Assemble bound over all primes <= p-max");
    emp->add_option("--budget", emp_args.budget, "Number of residue primes to sample")
        ->capture_default_str();
    emp->add_option("--window", emp_args.window, "Stability window length")
        ->capture_default_str();
    emp->add_option("--cache", emp_args.cache_path, "JSON cache file for sweep results");

    VerifyArgs ver_args;
    CLI::App* ver = app.add_subcommand("verify", "Machine checks of the comparison claims");
    ver->add_option("claim", ver_args.claim,
                    "double | imprimitive1 | imprimitive2 | imprimitive3 | imprimitive-p2 | "
                    "table | empirical")
        ->required();
    ver->add_option("--n-max", ver_args.n_max, "Rank sweep limit (0 = claim default)");
    ver->add_option("--d-max", ver_args.d_max, "Degree sweep limit (0 = claim default)");
    ver->add_option("--g-max", ver_args.g_max, "Dimension sweep limit (0 = claim default)");
    ver->add_option("--p-max", ver_args.p_max, "Prime sweep limit (0 = claim default)");
    ver->add_option("--budget", ver_args.budget, "Sampling budget (empirical claim)")
        ->capture_default_str();
    ver->add_option("--window", ver_args.window, "Stability window (empirical claim)")
        ->capture_default_str();

    GroupArgs grp_args;
    CLI::App* grp = app.add_subcommand("group", "Finite matrix group utilities");
    grp->add_option("action", grp_args.action, "order | witness")->required();
    grp->add_option("--gens", grp_args.gens, "Generator matrices, e.g. '0,-1;1,0'");
    grp->add_option("--witness", grp_args.witness, "cp-wr-sk:p:k | c4-wr-sk:k");
    grp->add_option("--cap", grp_args.cap, "Closure enumeration cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        CommandOutput out;
        if (bound->parsed())
            out = cmd_bound(bound_args);
        else if (emp->parsed())
            out = cmd_empirical(emp_args);
        else if (ver->parsed())
            out = cmd_verify(ver_args);
        else
            out = cmd_group(grp_args);
        std::cout << render(out, format);
        return out.exit_code;
    } catch (const mink::NoClosedFormError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoClosedForm;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
