// qimm: command-line front end.
//
// Exit codes: 0 success (or all checks passed), 1 file could not be read or
// written, 2 usage or validation error, 3 verification ran but a check failed.

#include "qimm/io.hpp"
#include "qimm/qimm.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qimm;

enum Exit { Ok = 0, IoFailure = 1, Usage = 2, ChecksFailed = 3 };

QSymElement build_element(const std::string& basis, const std::string& index) {
    if (basis == "qs") return quasischur(parse_composition(index));
    const Partition lambda = parse_partition(index);
    if (basis == "m") return monomial_sym(lambda);
    if (basis == "p") return power_sym(lambda);
    if (basis == "e") return elementary_sym(lambda);
    if (basis == "h") return homogeneous_sym(lambda);
    if (basis == "s") return schur_sym(lambda);
    throw std::invalid_argument("unknown basis '" + basis + "'");
}

PowerSumKind parse_variant(const std::string& v) {
    if (v == "psi") return PowerSumKind::Psi;
    if (v == "phi") return PowerSumKind::Phi;
    throw std::invalid_argument("unknown variant '" + v + "'");
}

void write_json(const std::optional<std::string>& path, const json& j) {
    if (!path) return;
    std::ofstream out(*path);
    if (!out) throw IoError("cannot write '" + *path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("error writing '" + *path + "'");
}

int print_scalar(const Rational& v, const std::optional<std::string>& json_path) {
    std::cout << to_string(v) << '\n';
    write_json(json_path, {{"value", to_string(v)}});
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quasisymmetric functions, immanants and quasi-immanants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_path_arg;
    int max_n = 0;
    std::string variant = "psi";
    app.add_option("--json", json_path_arg, "Also write a JSON copy of the result to this path");
    app.add_option("--max-n", max_n, "Largest n checked by verify")->check(CLI::PositiveNumber);
    app.add_option("--variant", variant, "Power-sum variant for qimm")->check(CLI::IsMember({"psi", "phi"}));

    std::string basis, index, target = "M", matrix_path, scope = "all";
    int toeplitz_n = 0;
    const auto basis_check = CLI::IsMember({"m", "p", "e", "h", "s", "qs"});

    auto* expand = app.add_subcommand("expand", "Expand a basis element into M, Psi or Phi coordinates");
    expand->add_option("basis", basis, "m, p, e, h, s or qs")->required()->check(basis_check);
    expand->add_option("index", index, "Partition or composition, e.g. 2,1 or 2,1^3")->required();
    expand->add_option("--target", target, "Output basis")->check(CLI::IsMember({"M", "Psi", "Phi"}));

    auto* qimm_cmd = app.add_subcommand("qimm", "Quasi-immanant of a matrix");
    qimm_cmd->add_option("matrix", matrix_path, "Matrix file (.json or CSV)")->required();
    qimm_cmd->add_option("basis", basis, "m, p, e, h, s or qs")->required()->check(basis_check);
    qimm_cmd->add_option("index", index, "Partition or composition")->required();

    auto* imm_cmd = app.add_subcommand("imm", "Immanant for a partition");
    imm_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
    imm_cmd->add_option("lambda", index, "Partition")->required();

    auto* d2_cmd = app.add_subcommand("d2", "Second immanant");
    auto* det_cmd = app.add_subcommand("det", "Determinant");
    auto* perm_cmd = app.add_subcommand("perm", "Permanent");
    for (auto* sub : {d2_cmd, det_cmd, perm_cmd}) sub->add_option("matrix", matrix_path, "Matrix file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification checks");
    verify_cmd->add_option("scope", scope, "examples, hook-rule, toeplitz or all")
        ->check(CLI::IsMember({"examples", "hook-rule", "toeplitz", "all"}));

    auto* toeplitz_cmd = app.add_subcommand("toeplitz", "Print the n x n tridiagonal 0/1 Toeplitz matrix as JSON");
    toeplitz_cmd->add_option("n", toeplitz_n, "Dimension")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    const std::optional<std::string> json_path =
        json_path_arg.empty() ? std::nullopt : std::optional<std::string>(json_path_arg);

    try {
        if (*expand) {
            const QSymElement q = to_coords(build_element(basis, index), parse_basis(target));
            std::cout << to_string(q) << '\n';
            write_json(json_path, to_json(q));
            return Ok;
        }
        if (*toeplitz_cmd) {
            const json j = to_json(toeplitz_tridiagonal(toeplitz_n));
            std::cout << j.dump() << '\n';
            write_json(json_path, j);
            return Ok;
        }
        if (*verify_cmd) {
            Report report;
            if (scope == "examples" || scope == "all") report.append(reproduce_examples(max_n ? max_n : 8));
            if (scope == "toeplitz") report.append(verify_toeplitz(max_n ? max_n : 8));
            if (scope == "hook-rule" || scope == "all")
                for (int n = 3; n <= (max_n ? max_n : 6); ++n) report.append(verify_hook_rule(n));
            std::cout << render(report);
            write_json(json_path, to_json(report));
            return report.all_pass() ? Ok : ChecksFailed;
        }

        const SquareMatrix a = read_matrix(matrix_path);
        if (*qimm_cmd) return print_scalar(qimm::qimm(a, build_element(basis, index), parse_variant(variant)), json_path);
        if (*imm_cmd) return print_scalar(immanant(a, parse_partition(index)), json_path);
        if (*d2_cmd) return print_scalar(second_immanant(a), json_path);
        if (*det_cmd) return print_scalar(determinant(a), json_path);
        if (*perm_cmd) return print_scalar(permanent(a), json_path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return IoFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}
