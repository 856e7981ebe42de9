// Command-line front end. Talks to the workbench exclusively through the
// shared library's C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finalg/finalg.h"

namespace {

int fail_with(char* err, int status) {
    if (err) {
        std::cerr << "error: " << err << "\n";
        finalg_string_free(err);
    }
    return status;
}

// FILE arguments accept '-' for stdin.
bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        out = buf.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct AlgebraHandle {
    finalg_algebra* ptr = nullptr;
    ~AlgebraHandle() { finalg_algebra_free(ptr); }
};

int load_algebra(const std::string& path, AlgebraHandle& handle) {
    std::string text;
    if (!read_input(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return FINALG_ERR_USAGE;
    }
    char* err = nullptr;
    finalg_status st = finalg_algebra_parse(text.c_str(), &handle.ptr, &err);
    if (st != FINALG_OK) return fail_with(err, st);
    return FINALG_OK;
}

int emit_report(finalg_status st, char* json, char* err) {
    if (st != FINALG_OK) return fail_with(err, st);
    std::cout << json << "\n";
    finalg_string_free(json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "finalg: finite universal-algebra workbench\n"
        "\n"
        "Algebra files:\n"
        "  algebra <name>\n"
        "  size <k>\n"
        "  op <name> <arity>\n"
        "  <k^arity entries, row-major, first argument most significant>\n"
        "  '#' starts a comment; FILE arguments accept '-' for stdin.\n"
        "Partitions use block syntax over element indices: --theta \"0,1|2\".\n"
        "Reports are JSON on stdout.\n"
        "\n"
        "Exit codes: 0 verdict computed (even a negative one), 1 usage or\n"
        "parse error, 2 resource guard, 3 precondition failure.\n"
        "\n"
        "Environment: FINALG_MAX_GENERATED raises the closure element guard.\n"};
    app.require_subcommand(1);

    std::string file, genfile, theta, mode;
    int n = 1, arity = 3, m = 2;
    bool count_only = false;

    auto* cmd_info = app.add_subcommand("info", "size, signature, idempotency, simplicity");
    cmd_info->add_option("FILE", file)->required();

    auto* cmd_con = app.add_subcommand("con", "congruence lattice data");
    cmd_con->add_option("FILE", file)->required();
    bool con_coatoms = false, con_atoms = false, con_sdmeet = false;
    cmd_con->add_flag("--coatoms", con_coatoms, "list the coatoms");
    cmd_con->add_flag("--atoms", con_atoms, "list the atoms");
    cmd_con->add_flag("--sdmeet", con_sdmeet, "search a meet-semidistributivity failure");

    auto* cmd_abelian = app.add_subcommand("abelian", "term-condition (abelianness) verdict");
    cmd_abelian->add_option("FILE", file)->required();

    auto* cmd_strong = app.add_subcommand("strongly-abelian",
                                          "strong term condition for a congruence");
    cmd_strong->add_option("FILE", file)->required();
    cmd_strong->add_option("--theta", theta, "congruence, block syntax")->required();

    auto* cmd_obstruction = app.add_subcommand(
        "obstruction", "the affine-obstruction construction and its five checks");
    cmd_obstruction->add_option("FILE", file)->required();
    cmd_obstruction->add_option("--theta", theta)->required();
    cmd_obstruction->add_option("--arity", arity, "term arity bound for the independence check");

    auto* cmd_free = app.add_subcommand("free", "the n-generated free algebra of a variety");
    cmd_free->add_option("FILE", file, "generator algebra")->required();
    cmd_free->add_option("--n", n, "rank")->required();

    auto* cmd_member = app.add_subcommand("member", "membership in the variety of a generator");
    cmd_member->add_option("FILE", file, "candidate member")->required();
    cmd_member->add_option("GENFILE", genfile, "generator algebra")->required();

    auto* cmd_is_free = app.add_subcommand("is-free", "freeness and rank inside a variety");
    cmd_is_free->add_option("FILE", file, "candidate member")->required();
    cmd_is_free->add_option("GENFILE", genfile, "generator algebra")->required();

    auto* cmd_spectrum = app.add_subcommand("spectrum", "G-spectrum by quotient enumeration");
    cmd_spectrum->add_option("GENFILE", file, "generator algebra")->required();
    cmd_spectrum->add_option("--n", n, "rank")->required();

    auto* cmd_clone = app.add_subcommand("clone", "the n-ary term operations of an algebra");
    cmd_clone->add_option("GENFILE", file)->required();
    cmd_clone->add_option("--n", n, "arity")->required();
    cmd_clone->add_flag("--count-only", count_only, "omit the tables and terms");

    auto* cmd_build = app.add_subcommand(
        "build",
        "catalog builders: set K | pointed_set K | vector_space P | affine_space P |\n"
        "semilattice K | matrix_power D <spec> | semiprojection M projection|shifted <spec>");
    std::vector<std::string> build_tokens;
    std::string out_path;
    cmd_build->add_option("KIND", build_tokens, "spec tokens")->required()->expected(-1);
    cmd_build->add_option("-o,--output", out_path, "write the algebra file here");

    auto* cmd_classify = app.add_subcommand("classify", "sets / pointed sets / vector space / "
                                                        "affine space / unclassified");
    cmd_classify->add_option("FILE", file)->required();
    cmd_classify->add_option("--arity", arity, "clone-equality arity bound");

    auto* verify = app.add_subcommand("verify", "lemma and theorem drivers");
    verify->require_subcommand(1);
    auto* v_nonaffine = verify->add_subcommand("nonaffine", "the S = A(theta)/Delta lemma suite");
    v_nonaffine->add_option("FILE", file)->required();
    v_nonaffine->add_option("--theta", theta)->required();
    v_nonaffine->add_option("--arity", arity);
    auto* v_3coatoms = verify->add_subcommand("3coatoms", "free algebras over a constant: "
                                                          "F(0) singleton, F(1) simple, >=3 coatoms");
    v_3coatoms->add_option("GENFILE", file)->required();
    v_3coatoms->add_option("--m", m, "rank of the free algebra")->required();
    auto* v_freely = verify->add_subcommand(
        "freely", "every nonzero element freely generates a copy of F(1)");
    v_freely->add_option("GENFILE", file)->required();
    v_freely->add_option("FILE", genfile, "member algebra")->required();
    auto* v_scaffold = verify->add_subcommand(
        "abelian-scaffold", "Sg{(0,x),(x,0)} in F(1)^2: eta1 principal, coatoms, SD-meet failure");
    v_scaffold->add_option("GENFILE", file)->required();
    auto* v_injective =
        verify->add_subcommand("injective", "nonconstant unary polynomials are injective");
    v_injective->add_option("FILE", file)->required();
    auto* v_smallfree = verify->add_subcommand(
        "smallfree", "semiprojection expansions: small algebras free, an (n+1)-generated one not");
    v_smallfree->add_option("N", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return FINALG_ERR_USAGE;
    }

    char* json = nullptr;
    char* err = nullptr;
    auto report = [&](finalg_status st) { return emit_report(st, json, err); };

    if (*cmd_build) {
        std::string spec;
        for (const auto& tok : build_tokens) {
            if (!spec.empty()) spec += ' ';
            spec += tok;
        }
        AlgebraHandle alg;
        finalg_status st = finalg_algebra_build(spec.c_str(), &alg.ptr, &err);
        if (st != FINALG_OK) return fail_with(err, st);
        char* text = finalg_algebra_print(alg.ptr);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                finalg_string_free(text);
                return FINALG_ERR_USAGE;
            }
            out << text;
        } else {
            std::cout << text;
        }
        finalg_string_free(text);
        return 0;
    }
    if (*v_smallfree) {
        return report(finalg_verify_smallfree(n, &json, &err));
    }

    AlgebraHandle first;
    if (int st = load_algebra(file, first); st != FINALG_OK) return st;

    if (*cmd_info) return report(finalg_cmd_info(first.ptr, &json, &err));
    if (*cmd_con) {
        if (con_coatoms + con_atoms + con_sdmeet > 1) {
            std::cerr << "error: choose at most one of --coatoms, --atoms, --sdmeet\n";
            return FINALG_ERR_USAGE;
        }
        mode = con_coatoms ? "coatoms" : con_atoms ? "atoms" : con_sdmeet ? "sdmeet" : "";
        return report(finalg_cmd_con(first.ptr, mode.c_str(), &json, &err));
    }
    if (*cmd_abelian) return report(finalg_cmd_abelian(first.ptr, &json, &err));
    if (*cmd_strong)
        return report(finalg_cmd_strongly_abelian(first.ptr, theta.c_str(), &json, &err));
    if (*cmd_obstruction)
        return report(finalg_cmd_obstruction(first.ptr, theta.c_str(), arity, &json, &err));
    if (*cmd_free) return report(finalg_cmd_free(first.ptr, n, &json, &err));
    if (*cmd_spectrum)
        return report(finalg_cmd_spectrum(first.ptr, n, &json, &err));
    if (*cmd_clone)
        return report(finalg_cmd_clone(first.ptr, n, count_only ? 1 : 0, &json, &err));
    if (*cmd_classify)
        return report(finalg_cmd_classify(first.ptr, arity, &json, &err));
    if (*v_nonaffine)
        return report(finalg_verify_nonaffine(first.ptr, theta.c_str(), arity, &json, &err));
    if (*v_3coatoms)
        return report(finalg_verify_3coatoms(first.ptr, m, &json, &err));
    if (*v_scaffold)
        return report(finalg_verify_abelian_scaffold(first.ptr, &json, &err));
    if (*v_injective)
        return report(finalg_verify_injective(first.ptr, &json, &err));

    AlgebraHandle second;
    if (int st = load_algebra(genfile, second); st != FINALG_OK) return st;

    if (*cmd_member)
        return report(finalg_cmd_member(first.ptr, second.ptr, &json, &err));
    if (*cmd_is_free)
        return report(finalg_cmd_is_free(first.ptr, second.ptr, &json, &err));
    if (*v_freely)
        return report(finalg_verify_freely(first.ptr, second.ptr, &json, &err));

    std::cerr << "error: no subcommand handled\n";
    return FINALG_ERR_USAGE;
}
