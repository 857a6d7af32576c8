#include "sv/job.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sv/chern.hpp"
#include "sv/fp.hpp"
#include "sv/mult.hpp"
#include "sv/parse.hpp"
#include "sv/rational.hpp"
#include "sv/sv.hpp"

namespace sv {

const char* command_name(Command c) {
    switch (c) {
        case Command::sv: return "sv";
        case Command::segre: return "segre";
        case Command::mass_check: return "mass-check";
        case Command::gysin: return "gysin";
        case Command::mult: return "mult";
        case Command::segre_numbers: return "segre-numbers";
        case Command::check_gata1: return "check-gata1";
        case Command::check_roundtrip: return "check-roundtrip";
    }
    return "?";
}

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// input files

void trim(std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    s = s.substr(a, b - a);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_names(const std::string& text, int line_no) {
    std::vector<std::string> names;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        trim(cur);
        if (!is_identifier(cur))
            throw ParseError("'" + cur + "' is not a valid variable name", line_no, 1);
        names.push_back(cur);
    }
    if (names.empty())
        throw ParseError("the ring line names no variables", line_no, 1);
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw ParseError("duplicate variable '" + names[i] + "'", line_no, 1);
    return names;
}

unsigned long long parse_modulus(const std::string& text, int line_no) {
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("'" + text + "' is not a decimal modulus", line_no, 1);
    mpz_class p;
    if (p.set_str(text, 10) != 0 || !p.fits_ulong_p())
        throw ParseError("modulus '" + text + "' is out of range", line_no, 1);
    unsigned long long v = p.get_ui();
    if (!Fp::is_valid_modulus(v))
        throw ParseError("'" + text + "' is not a usable prime modulus", line_no, 1);
    return v;
}

} // namespace

InputFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");

    InputFile out;
    std::string raw;
    int line_no = 0;
    bool saw_field = false;
    // 0 = expecting the ring line, 1 = expecting field/gens, 2 = generator body
    int stage = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        trim(line);
        if (line.empty()) continue;

        std::istringstream ss(line);
        std::string head;
        ss >> head;
        std::string rest;
        std::getline(ss, rest);
        trim(rest);

        if (stage == 0) {
            if (head != "ring")
                throw ParseError("expected a 'ring' line before '" + head + "'", line_no, 1);
            out.names = split_names(rest, line_no);
            stage = 1;
            continue;
        }
        if (stage == 1 && head == "field") {
            if (saw_field)
                throw ParseError("second 'field' line", line_no, 1);
            saw_field = true;
            std::istringstream fs(rest);
            std::string kind;
            fs >> kind;
            std::string arg;
            fs >> arg;
            if (kind == "q") {
                if (!arg.empty())
                    throw ParseError("'field q' takes no modulus", line_no, 1);
                out.rational = true;
            } else if (kind == "fp") {
                out.prime = arg.empty() ? Fp::default_prime : parse_modulus(arg, line_no);
            } else {
                throw ParseError("unknown field '" + kind + "'", line_no, 1);
            }
            continue;
        }
        if (stage == 1) {
            if (head != "gens")
                throw ParseError("expected 'field' or 'gens', got '" + head + "'", line_no, 1);
            if (!rest.empty())
                throw ParseError("'gens' takes no arguments", line_no, 1);
            stage = 2;
            continue;
        }
        out.gens.emplace_back(line_no, line);
    }
    if (stage < 2)
        throw ParseError(stage == 0 ? "missing 'ring' line" : "missing 'gens' section",
                         line_no + 1, 1);
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// payload helpers

json rational_json(const Rational& r) {
    if (r.is_integer()) {
        mpz_class num(r.raw().get_num());
        if (num.fits_slong_p()) return json(static_cast<long long>(num.get_si()));
    }
    return json(r.str());
}

json class_coeffs_json(const CohomClass& c, int from = 0) {
    json arr = json::array();
    for (int k = from; k <= c.n(); ++k) arr.push_back(rational_json(c[k]));
    return arr;
}

std::string join_ll(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

std::string join_int(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

class Table {
public:
    void row(const std::string& key, const std::string& value) {
        text_ += key + ": " + value + "\n";
    }
    void row(const std::string& key, long long value) {
        row(key, std::to_string(value));
    }
    std::string str() const { return text_; }

private:
    std::string text_;
};

json trace_json(const SVResult& r) {
    json arr = json::array();
    for (const auto& [dim, deg] : r.out_trace) arr.push_back(json::array({dim, deg}));
    return arr;
}

std::string trace_str(const SVResult& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.out_trace.size(); ++i) {
        if (i) os << ' ';
        os << '(' << r.out_trace[i].first << ',' << r.out_trace[i].second << ')';
    }
    return os.str();
}

json sv_payload(const SVResult& r, Command cmd, const std::string& field) {
    MassCheck mc = sv_mass_check(r);
    return json{
        {"command", command_name(cmd)},
        {"field", field},
        {"n", r.n},
        {"twist", r.d},
        {"mu_dim", r.mu_dim},
        {"v_degrees", r.v},
        {"residual_degree", r.residual},
        {"out_trace", trace_json(r)},
        {"mass_check", {{"lhs", mc.lhs}, {"rhs", mc.rhs}, {"ok", mc.ok}}},
        {"seed", r.seed},
        {"retries", r.retries},
    };
}

void sv_table(Table& t, const SVResult& r, Command cmd, const std::string& field) {
    MassCheck mc = sv_mass_check(r);
    t.row("command", command_name(cmd));
    t.row("field", field);
    t.row("n", r.n);
    t.row("twist", r.d);
    t.row("mu_dim", r.mu_dim);
    t.row("v_degrees", join_ll(r.v));
    t.row("residual_degree", r.residual);
    t.row("out_trace", trace_str(r));
    t.row("mass_check", std::to_string(mc.lhs) + " = " + std::to_string(mc.rhs) +
                            (mc.ok ? " ok" : " MISMATCH"));
    t.row("seed", static_cast<long long>(r.seed));
    t.row("retries", r.retries);
}

// ---------------------------------------------------------------------------
// typed execution

template <class K>
struct TypedInput {
    RingPtr<K> ring;
    Ideal<K> ideal;
    std::string field;
};

template <class K>
TypedInput<K> build_input(const InputFile& file, const JobSpec& spec, const K& one) {
    auto ring = make_ring<K>(file.names, MonomialOrder::grevlex(), one);
    std::vector<Polynomial<K>> gens;
    gens.reserve(file.gens.size());
    for (const auto& [line_no, text] : file.gens)
        gens.push_back(parse_polynomial<K>(ring, text, line_no));
    Budget budget;
    if (spec.budget) {
        if (*spec.budget <= 0) throw UsageError("budget must be positive");
        budget.max_pairs = *spec.budget;
        budget.max_basis = *spec.budget;
    }
    return {ring, Ideal<K>(ring, std::move(gens), budget), one.field_name()};
}

// Restriction to the affine chart where one variable equals 1: that variable
// is substituted away and the ring shrinks by one.
template <class K>
Ideal<K> restrict_to_chart(const Ideal<K>& I, const std::string& chart) {
    const RingPtr<K>& ring = I.ring();
    int idx = -1;
    for (int i = 0; i < ring->nvars(); ++i)
        if (ring->name(i) == chart) idx = i;
    if (idx < 0)
        throw UsageError("chart variable '" + chart + "' is not in the ring");
    if (ring->nvars() < 2)
        throw UsageError("cannot restrict a one-variable ring to a chart");

    std::vector<std::string> names;
    for (int i = 0; i < ring->nvars(); ++i)
        if (i != idx) names.push_back(ring->name(i));
    auto affine = make_ring<K>(names, ring->order(), ring->one());

    std::vector<Polynomial<K>> gens;
    for (const Polynomial<K>& g : I.gens()) {
        std::vector<Term<K>> terms;
        for (const Term<K>& t : g.terms()) {
            std::vector<int> e;
            e.reserve(t.mono.e.size() - 1);
            for (int i = 0; i < ring->nvars(); ++i)
                if (i != idx) e.push_back(t.mono.e[static_cast<std::size_t>(i)]);
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        Polynomial<K> mapped = Polynomial<K>::from_terms(affine, std::move(terms));
        if (!mapped.is_zero()) gens.push_back(std::move(mapped));
    }
    return Ideal<K>(affine, std::move(gens), I.budget());
}

template <class K>
SVResult run_sv(const Ideal<K>& J, const JobSpec& spec) {
    if (spec.trials < 1) throw UsageError("trials must be at least 1");
    if (spec.trials == 1) return sv_single(J, spec.seed, spec.twist);
    return sv_repeat(J, spec.trials, spec.seed, spec.twist);
}

template <class K>
JobResult cmd_sv(const TypedInput<K>& in, const JobSpec& spec) {
    SVResult r = run_sv(in.ideal, spec);
    MassCheck mc = sv_mass_check(r);
    JobResult out;
    out.payload = sv_payload(r, spec.cmd, in.field);
    Table t;
    sv_table(t, r, spec.cmd, in.field);
    out.table = t.str();
    out.exit_code = mc.ok ? 0 : 2;
    return out;
}

template <class K>
JobResult cmd_segre(const TypedInput<K>& in, const JobSpec& spec) {
    SVResult r = run_sv(in.ideal, spec);
    CohomClass S = segre_from_sv(r);
    // deg(out_0) carries the outside cycle; the Segre classes of the zero
    // scheme live in codimensions kappa..n.
    int kappa = r.z_dim < 0 ? r.n : r.n - r.z_dim;
    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"field", in.field},
        {"n", r.n},
        {"twist", r.d},
        {"kappa", kappa},
        {"segre_degrees", class_coeffs_json(S, kappa)},
        {"sv_degrees", r.v},
        {"seed", r.seed},
        {"retries", r.retries},
    };
    std::ostringstream sd;
    for (int k = kappa; k <= S.n(); ++k) {
        if (k > kappa) sd << ' ';
        sd << S[k].str();
    }
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("field", in.field);
    t.row("n", r.n);
    t.row("twist", r.d);
    t.row("kappa", kappa);
    t.row("segre_degrees", sd.str());
    t.row("sv_degrees", join_ll(r.v));
    t.row("seed", static_cast<long long>(r.seed));
    t.row("retries", r.retries);
    out.table = t.str();
    out.exit_code = 0;
    return out;
}

template <class K>
JobResult cmd_check_gata1(const TypedInput<K>& in, const JobSpec& spec) {
    std::vector<int> twists = spec.twists;
    if (twists.empty())
        for (const Polynomial<K>& g : in.ideal.gens()) twists.push_back(g.total_degree());
    if (twists.empty()) throw UsageError("the ideal has no generators");

    SVResult r = run_sv(in.ideal, spec);
    CohomClass from_cycles = segre_from_sv(r);
    CohomClass closed_form = segre_regular_embedding(twists, r.n);
    bool equal = from_cycles == closed_form;

    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"field", in.field},
        {"n", r.n},
        {"twist", r.d},
        {"twists", twists},
        {"segre_from_cycles", class_coeffs_json(from_cycles)},
        {"segre_closed_form", class_coeffs_json(closed_form)},
        {"equal", equal},
        {"seed", r.seed},
        {"retries", r.retries},
    };
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("field", in.field);
    t.row("n", r.n);
    t.row("twist", r.d);
    t.row("twists", join_int(twists));
    t.row("segre_from_cycles", from_cycles.str());
    t.row("segre_closed_form", closed_form.str());
    t.row("check-gata1", equal ? "equal" : "unequal");
    t.row("seed", static_cast<long long>(r.seed));
    t.row("retries", r.retries);
    out.table = t.str();
    out.exit_code = equal ? 0 : 2;
    return out;
}

template <class K>
JobResult cmd_check_roundtrip_file(const TypedInput<K>& in, const JobSpec& spec) {
    SVResult r = run_sv(in.ideal, spec);
    CohomClass S = segre_from_sv(r);
    std::vector<Rational> back = sv_from_segre(S, r.d, r.mu_dim);
    bool ok = back.size() == r.v.size();
    if (ok)
        for (std::size_t i = 0; i < back.size(); ++i)
            if (back[i] != Rational(r.v[i])) ok = false;

    json back_json = json::array();
    for (const Rational& x : back) back_json.push_back(rational_json(x));
    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"field", in.field},
        {"n", r.n},
        {"twist", r.d},
        {"v_degrees", r.v},
        {"roundtrip", back_json},
        {"ok", ok},
        {"seed", r.seed},
        {"retries", r.retries},
    };
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("field", in.field);
    t.row("n", r.n);
    t.row("twist", r.d);
    t.row("v_degrees", join_ll(r.v));
    t.row("check-roundtrip", ok ? "ok" : "failed");
    t.row("seed", static_cast<long long>(r.seed));
    t.row("retries", r.retries);
    out.table = t.str();
    out.exit_code = ok ? 0 : 2;
    return out;
}

template <class K>
JobResult cmd_mult(const TypedInput<K>& in, const JobSpec& spec) {
    if (!spec.dim_k) throw UsageError("mult requires --dim (expected local dimension)");
    Ideal<K> I = spec.chart ? restrict_to_chart(in.ideal, *spec.chart) : in.ideal;
    RandomSource rng(spec.seed);
    int retries = 0;
    long long m = mult_at_origin(I, *spec.dim_k, rng, &retries);
    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"field", in.field},
        {"n", I.ring()->nvars()},
        {"dim", *spec.dim_k},
        {"mult", m},
        {"seed", spec.seed},
        {"retries", retries},
    };
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("field", in.field);
    t.row("n", I.ring()->nvars());
    t.row("dim", *spec.dim_k);
    t.row("mult", m);
    t.row("seed", static_cast<long long>(spec.seed));
    t.row("retries", retries);
    out.table = t.str();
    out.exit_code = 0;
    return out;
}

template <class K>
JobResult cmd_segre_numbers(const TypedInput<K>& in, const JobSpec& spec) {
    if (spec.trials < 1) throw UsageError("trials must be at least 1");
    Ideal<K> I = spec.chart ? restrict_to_chart(in.ideal, *spec.chart) : in.ideal;

    RandomSource rng(spec.seed);
    SegreNumbers s = segre_numbers(I, rng);
    for (int i = 1; i < spec.trials; ++i) {
        RandomSource other(RandomSource(spec.seed).derived(static_cast<unsigned long long>(i)));
        SegreNumbers again = segre_numbers(I, other);
        if (again.kappa != s.kappa || again.e != s.e)
            throw GenericityError("trial " + std::to_string(i) +
                                  " disagrees with trial 0 on the Segre numbers");
        s.retries += again.retries;
    }
    s.seed = spec.seed;

    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"field", in.field},
        {"n", s.n},
        {"kappa", s.kappa},
        {"e", s.e},
        {"zeros_below_kappa_ok", s.zeros_below_kappa_ok},
        {"seed", s.seed},
        {"retries", s.retries},
    };
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("field", in.field);
    t.row("n", s.n);
    t.row("kappa", s.kappa);
    t.row("e", join_ll(s.e));
    t.row("zeros_below_kappa_ok", s.zeros_below_kappa_ok ? "true" : "false");
    t.row("seed", static_cast<long long>(s.seed));
    t.row("retries", s.retries);
    out.table = t.str();
    out.exit_code = s.zeros_below_kappa_ok ? 0 : 2;
    return out;
}

template <class K>
JobResult run_typed(const JobSpec& spec, const InputFile& file, const K& one) {
    TypedInput<K> in = build_input(file, spec, one);
    switch (spec.cmd) {
        case Command::sv:
        case Command::mass_check: return cmd_sv(in, spec);
        case Command::segre: return cmd_segre(in, spec);
        case Command::check_gata1: return cmd_check_gata1(in, spec);
        case Command::check_roundtrip: return cmd_check_roundtrip_file(in, spec);
        case Command::mult: return cmd_mult(in, spec);
        case Command::segre_numbers: return cmd_segre_numbers(in, spec);
        case Command::gysin: break;
    }
    throw UsageError("command does not take an input file");
}

// ---------------------------------------------------------------------------
// file-free commands

JobResult cmd_gysin(const JobSpec& spec) {
    int n = spec.ambient_n;
    if (n < 1) throw UsageError("ambient dimension must be at least 1");
    if (spec.twists.empty())
        throw UsageError("gysin requires --twists with at least one entry");

    CohomClass gamma = CohomClass::one(n);
    if (!spec.gamma_coeffs.empty()) {
        if (static_cast<int>(spec.gamma_coeffs.size()) != n + 1)
            throw UsageError("--gamma-coeffs needs exactly n+1 entries");
        std::vector<Rational> coeffs;
        coeffs.reserve(spec.gamma_coeffs.size());
        for (long long c : spec.gamma_coeffs) coeffs.emplace_back(c);
        gamma = CohomClass::from_coeffs(n, std::move(coeffs));
    } else if (spec.gamma_power) {
        if (*spec.gamma_power < 0 || *spec.gamma_power > n)
            throw UsageError("--gamma-power must lie in 0..n");
        gamma = CohomClass::h_power(n, *spec.gamma_power, Rational(1));
    }

    CohomClass image = gysin_map(gamma, spec.twists, n);
    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"n", n},
        {"twists", spec.twists},
        {"gamma", class_coeffs_json(gamma)},
        {"gysin", class_coeffs_json(image)},
    };
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("n", n);
    t.row("twists", join_int(spec.twists));
    t.row("gamma", gamma.str());
    t.row("gysin", image.str());
    out.table = t.str();
    out.exit_code = 0;
    return out;
}

JobResult cmd_check_roundtrip_random(const JobSpec& spec) {
    int n = spec.ambient_n;
    if (n < 1) throw UsageError("ambient dimension must be at least 1");
    if (spec.count < 1) throw UsageError("--count must be at least 1");

    RandomSource rng(spec.seed);
    int failures = 0;
    for (int i = 0; i < spec.count; ++i) {
        int d = 1 + i % 3;
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            long long num = rng.range(-1000000, 1000000);
            long long den = 1 + static_cast<long long>(rng.below(1000));
            v.emplace_back(num, den);
        }
        CohomClass S = segre_from_sv(v, d, n);
        if (sv_from_segre(S, d, n) != v) ++failures;
    }
    bool ok = failures == 0;

    JobResult out;
    out.payload = json{
        {"command", command_name(spec.cmd)},
        {"mode", "random"},
        {"n", n},
        {"count", spec.count},
        {"failures", failures},
        {"ok", ok},
        {"seed", spec.seed},
    };
    Table t;
    t.row("command", command_name(spec.cmd));
    t.row("mode", "random");
    t.row("n", n);
    t.row("count", spec.count);
    t.row("failures", failures);
    t.row("check-roundtrip", ok ? "ok" : "failed");
    t.row("seed", static_cast<long long>(spec.seed));
    out.table = t.str();
    out.exit_code = ok ? 0 : 2;
    return out;
}

const char* error_kind(int exit_code) {
    switch (exit_code) {
        case 2: return "check-failed";
        case 3: return "genericity";
        case 4: return "budget";
        case 5: return "usage";
    }
    return "internal";
}

} // namespace

JobResult run_job(const JobSpec& spec) {
    try {
        if (spec.cmd == Command::gysin) {
            if (!spec.input_path.empty())
                throw UsageError("gysin does not take an input file");
            return cmd_gysin(spec);
        }
        if (spec.cmd == Command::check_roundtrip && spec.input_path.empty())
            return cmd_check_roundtrip_random(spec);
        if (spec.input_path.empty())
            throw UsageError("this command requires an input file");

        InputFile file = read_ideal_file(spec.input_path);
        bool rational = spec.use_rational.value_or(file.rational);
        if (rational) return run_typed<Rational>(spec, file, Rational(1));

        unsigned long long p = spec.prime   ? *spec.prime
                               : file.prime ? file.prime
                                            : Fp::default_prime;
        if (!Fp::is_valid_modulus(p))
            throw UsageError("'" + std::to_string(p) + "' is not a usable prime modulus");
        return run_typed<Fp>(spec, file, Fp(1, p));
    } catch (const Error& e) {
        JobResult out;
        out.exit_code = e.exit_code();
        out.payload = json{{"error",
                            {{"kind", error_kind(e.exit_code())},
                             {"exit_code", e.exit_code()},
                             {"message", e.what()}}}};
        out.table = std::string("error: ") + error_kind(e.exit_code()) + ": " + e.what() + "\n";
        return out;
    } catch (const std::exception& e) {
        JobResult out;
        out.exit_code = 1;
        out.payload = json{{"error",
                            {{"kind", "internal"}, {"exit_code", 1}, {"message", e.what()}}}};
        out.table = std::string("error: internal: ") + e.what() + "\n";
        return out;
    }
}

} // namespace sv
