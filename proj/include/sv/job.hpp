#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sv {

enum class Command {
    sv,
    segre,
    mass_check,
    gysin,
    mult,
    segre_numbers,
    check_gata1,
    check_roundtrip,
};

// A fully resolved command invocation.  The CLI front end fills one of these
// from flags; tests construct them directly.
struct JobSpec {
    Command cmd = Command::sv;
    std::string input_path;  // empty for the file-free commands

    // field selection: unset = take the input file's field line (or the
    // default prime field); set = override
    std::optional<bool> use_rational;
    std::optional<unsigned long long> prime;

    unsigned long long seed = 1;
    int trials = 1;
    std::optional<int> twist;
    bool json = false;
    std::optional<long long> budget;

    std::vector<int> twists;               // gysin / check-gata1
    std::optional<int> gamma_power;        // gysin: gamma = H^p
    std::vector<long long> gamma_coeffs;   // gysin: explicit c_0..c_n
    std::optional<std::string> chart;      // dehomogenization variable
    std::optional<int> dim_k;              // mult: expected dimension
    int count = 100;                       // check-roundtrip random mode
    int ambient_n = 3;                     // ambient for file-free commands
};

struct JobResult {
    int exit_code = 0;
    nlohmann::json payload;  // machine-readable contract surface
    std::string table;       // human-readable, no stability promise
};

// Parsed structural content of an .ideal file (field still undispatched).
struct InputFile {
    std::vector<std::string> names;
    bool rational = false;
    unsigned long long prime = 0;  // 0 = unspecified
    std::vector<std::pair<int, std::string>> gens;  // (line number, text)
};

InputFile read_ideal_file(const std::string& path);

// Executes the job; all structured errors are converted into an error payload
// with the matching exit code rather than thrown.
JobResult run_job(const JobSpec& spec);

const char* command_name(Command c);

} // namespace sv
