#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sv/errors.hpp"
#include "sv/job.hpp"

namespace {

// Shared mutable state the subcommand callbacks write into.
struct CliState {
    sv::JobSpec spec;
    std::string field;
    bool ran = false;
};

void apply_field(sv::JobSpec& spec, const std::string& field) {
    if (field.empty()) return;
    if (field == "q") {
        spec.use_rational = true;
        return;
    }
    if (field == "fp") {
        spec.use_rational = false;
        return;
    }
    if (field.rfind("fp:", 0) == 0) {
        std::string digits = field.substr(3);
        if (digits.empty()) throw sv::UsageError("--field fp: needs a modulus");
        unsigned long long p = 0;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw sv::UsageError("--field fp:<p> needs a decimal modulus");
            unsigned long long next = p * 10 + static_cast<unsigned long long>(c - '0');
            if (next < p) throw sv::UsageError("--field modulus is out of range");
            p = next;
        }
        spec.use_rational = false;
        spec.prime = p;
        return;
    }
    throw sv::UsageError("--field must be q, fp, or fp:<prime>");
}

void add_common_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--field", st.field, "coefficient field: q, fp, or fp:<prime>");
    cmd->add_option("--seed", st.spec.seed, "random seed");
    cmd->add_flag("--json", st.spec.json, "emit the JSON payload instead of the table");
    cmd->add_option("--budget", st.spec.budget,
                    "Groebner budget (max S-pairs and max basis size)");
}

void add_input_file(CLI::App* cmd, CliState& st) {
    cmd->add_option("input", st.spec.input_path, "ideal file")->required();
}

void finish(CLI::App* cmd, CliState& st, sv::Command which) {
    cmd->callback([&st, which]() {
        st.spec.cmd = which;
        st.ran = true;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection cycle degrees, Segre classes, and local multiplicities"};
    app.require_subcommand(1);

    CliState st;

    CLI::App* sv_cmd = app.add_subcommand("sv", "intersection cycle degrees of an ideal");
    add_input_file(sv_cmd, st);
    add_common_flags(sv_cmd, st);
    sv_cmd->add_option("--trials", st.spec.trials, "independent runs that must agree");
    sv_cmd->add_option("--twist", st.spec.twist, "equalize generators to this degree");
    finish(sv_cmd, st, sv::Command::sv);

    CLI::App* segre_cmd = app.add_subcommand("segre", "Segre class degrees of an ideal");
    add_input_file(segre_cmd, st);
    add_common_flags(segre_cmd, st);
    segre_cmd->add_option("--trials", st.spec.trials, "independent runs that must agree");
    segre_cmd->add_option("--twist", st.spec.twist, "equalize generators to this degree");
    finish(segre_cmd, st, sv::Command::segre);

    CLI::App* mass_cmd =
        app.add_subcommand("mass-check", "verify the degree balance of a cycle run");
    add_input_file(mass_cmd, st);
    add_common_flags(mass_cmd, st);
    mass_cmd->add_option("--trials", st.spec.trials, "independent runs that must agree");
    mass_cmd->add_option("--twist", st.spec.twist, "equalize generators to this degree");
    finish(mass_cmd, st, sv::Command::mass_check);

    CLI::App* gysin_cmd =
        app.add_subcommand("gysin", "Gysin image of a class under a split embedding");
    gysin_cmd->add_option("--twists", st.spec.twists, "bundle twists d_1,...,d_k")
        ->delimiter(',');
    gysin_cmd->add_option("--n", st.spec.ambient_n, "ambient projective dimension");
    gysin_cmd->add_option("--gamma-power", st.spec.gamma_power, "gamma = H^p (default p=0)");
    gysin_cmd->add_option("--gamma-coeffs", st.spec.gamma_coeffs,
                          "gamma coefficients c_0,...,c_n")
        ->delimiter(',');
    gysin_cmd->add_flag("--json", st.spec.json, "emit the JSON payload instead of the table");
    finish(gysin_cmd, st, sv::Command::gysin);

    CLI::App* mult_cmd =
        app.add_subcommand("mult", "local multiplicity at the origin");
    add_input_file(mult_cmd, st);
    add_common_flags(mult_cmd, st);
    mult_cmd->add_option("--dim", st.spec.dim_k, "expected local dimension at the origin")
        ->required();
    mult_cmd->add_option("--chart", st.spec.chart,
                         "restrict to the affine chart where this variable is 1");
    finish(mult_cmd, st, sv::Command::mult);

    CLI::App* sn_cmd =
        app.add_subcommand("segre-numbers", "local Segre numbers at the origin");
    add_input_file(sn_cmd, st);
    add_common_flags(sn_cmd, st);
    sn_cmd->add_option("--trials", st.spec.trials, "independent runs that must agree");
    sn_cmd->add_option("--chart", st.spec.chart,
                       "restrict to the affine chart where this variable is 1");
    finish(sn_cmd, st, sv::Command::segre_numbers);

    CLI::App* gata_cmd = app.add_subcommand(
        "check-gata1", "compare cycle-derived Segre classes with the split closed form");
    add_input_file(gata_cmd, st);
    add_common_flags(gata_cmd, st);
    gata_cmd->add_option("--trials", st.spec.trials, "independent runs that must agree");
    gata_cmd->add_option("--twist", st.spec.twist, "equalize generators to this degree");
    gata_cmd->add_option("--twists", st.spec.twists,
                         "closed-form twists (default: generator degrees)")
        ->delimiter(',');
    finish(gata_cmd, st, sv::Command::check_gata1);

    CLI::App* rt_cmd = app.add_subcommand(
        "check-roundtrip", "verify the cycle/Segre transforms invert each other");
    rt_cmd->add_option("input", st.spec.input_path, "ideal file (omit for random vectors)");
    add_common_flags(rt_cmd, st);
    rt_cmd->add_option("--trials", st.spec.trials, "independent runs that must agree");
    rt_cmd->add_option("--twist", st.spec.twist, "equalize generators to this degree");
    rt_cmd->add_option("--count", st.spec.count, "random vectors to test (file-free mode)");
    rt_cmd->add_option("--n", st.spec.ambient_n, "ambient dimension (file-free mode)");
    finish(rt_cmd, st, sv::Command::check_roundtrip);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 5;
    }
    if (!st.ran) return 5;

    try {
        apply_field(st.spec, st.field);
    } catch (const sv::Error& e) {
        std::fprintf(stderr, "error: usage: %s\n", e.what());
        return e.exit_code();
    }

    sv::JobResult result = sv::run_job(st.spec);
    if (st.spec.json)
        std::printf("%s\n", result.payload.dump(2).c_str());
    else
        std::fputs(result.table.c_str(), stdout);
    return result.exit_code;
}
