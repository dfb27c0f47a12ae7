// Command line front end: spectra, scattering coefficients, wavefunction
// sampling, energy sweeps, the verification battery, and the piecewise
// ansatz table, serialized as JSON or CSV with deterministic bytes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "diracwell/errors.hpp"
#include "diracwell/matching.hpp"
#include "diracwell/observables.hpp"
#include "diracwell/regime.hpp"
#include "diracwell/spectrum.hpp"
#include "diracwell/sweep.hpp"
#include "diracwell/verify.hpp"
#include "diracwell/well.hpp"
#include "serialize.hpp"

namespace {

using namespace diracwell;
using cli::JsonWriter;
using cli::csv_row;
using cli::fmt_double;

struct Common {
    double m = 1.0;
    double V = 5.0;
    double a = 1.0;
    std::string units = "m";
    std::string output = "-";
    std::string format;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format,
                const std::vector<std::string>& formats) {
    cmd->add_option("--m", c.m, "particle mass (raw units)")
        ->capture_default_str();
    cmd->add_option("--V", c.V, "well depth; the potential inside is -V (raw units)")
        ->capture_default_str();
    cmd->add_option("--a", c.a, "well width (raw units)")->capture_default_str();
    cmd->add_option("--units", c.units,
                    "unit convention for energies read and written: 'm' treats "
                    "them as multiples of the mass, 'raw' passes them through")
        ->check(CLI::IsMember({"m", "raw"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", c.output, "output path; '-' writes to stdout")
        ->capture_default_str();
    c.format = default_format;
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
}

WellParams make_params(const Common& c) { return WellParams{c.m, c.V, c.a}; }

double energy_in(const Common& c, double e) {
    return c.units == "m" ? e * c.m : e;
}
double energy_out(const Common& c, double e) {
    return c.units == "m" ? e / c.m : e;
}
std::string energy_column(const Common& c) {
    return c.units == "m" ? "E_over_m" : "E";
}

void write_head(JsonWriter& w, const Common& c, const char* command) {
    w.key("schema_version");
    w.value(1);
    w.key("command");
    w.value(command);
    w.key("params");
    w.begin_object();
    w.key("m");
    w.value(c.m);
    w.key("V");
    w.value(c.V);
    w.key("a");
    w.value(c.a);
    w.end_object();
    w.key("units");
    w.value(c.units);
}

void write_complex(JsonWriter& w, const Complex& z) {
    w.begin_object();
    w.key("re");
    w.value(z.real());
    w.key("im");
    w.value(z.imag());
    w.end_object();
}

int emit(const Common& c, const std::string& text) {
    if (c.output == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n",
                     c.output.c_str());
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

// Shared edge gate for the single-energy commands. Returns 0 to proceed
// normally, 1 to proceed on an allowed boundary energy (the caller
// dispatches by |E| itself), 2 to abort.
int edge_gate(double E, const WellParams& p, bool allow_edge) {
    const EnergyRegime reg = classify(E, p);
    if (reg.zone != Zone::Edge) return 0;
    if (allow_edge) return 1;
    std::fprintf(stderr,
                 "error: E = %s sits on the zone boundary %s; rerun with "
                 "--allow-edge to solve there anyway\n",
                 fmt_double(E).c_str(), fmt_double(reg.edge_value).c_str());
    return 2;
}

// Dispatch for boundary energies that are kinematically regular (E = 0,
// E = -V). The truly singular ones (|E| = m, |E + V| = m) still throw
// EdgeEnergyError from kinematics and abort with exit 2.
SolutionSet solve_on_boundary(double E, const WellParams& p) {
    if (std::fabs(E) > p.m) return solve_left_incidence(E, p);
    return solve_regime(E, p);
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumOpts {
    Common c;
    bool klein_only = false;
    bool conventional_only = false;
    bool nonrel_check = false;
};

void write_state_fields(JsonWriter& w, const Common& c, const BoundState& st,
                        bool nonrel, const WellParams& p) {
    const char* branch = st.branch == Branch::KleinKa     ? "klein_ka"
                         : st.branch == Branch::KleinPa   ? "klein_pa"
                                                          : "conventional";
    w.key("branch");
    w.value(branch);
    w.key("n");
    w.value(st.n);
    w.key("E");
    w.value(energy_out(c, st.E));
    w.key("parity_sign");
    w.value(st.parity_sign);
    w.key("wall_relation");
    w.value(st.wall_relation() == WallRelation::Sigma3 ? "sigma3" : "identity");
    w.key("selected_by");
    w.value(st.selected_by());
    w.key("edge");
    w.value(st.edge);
    w.key("coincident");
    w.value(st.coincident);
    w.key("k");
    w.value(st.k);
    w.key("p");
    w.value(st.p);
    if (nonrel) {
        const NonrelComparison cmp = nonrelativistic_limit(st, p);
        w.key("binding");
        w.value(energy_out(c, cmp.binding));
        w.key("nonrel_binding");
        w.value(energy_out(c, cmp.nonrel_binding));
        w.key("rel_error");
        w.value(cmp.rel_error);
    }
}

int run_spectrum(const SpectrumOpts& o) {
    const WellParams p = make_params(o.c);
    std::vector<BoundState> states;
    if (!o.conventional_only) {
        if (p.has_klein_zone()) {
            const auto ks = klein_spectrum(p);
            states.insert(states.end(), ks.begin(), ks.end());
        } else if (o.klein_only) {
            std::fprintf(stderr, "error: no Klein zone (V <= 2m)\n");
            return 2;
        }
    }
    if (!o.klein_only) {
        const auto cs = conventional_spectrum(p);
        states.insert(states.end(), cs.begin(), cs.end());
    }

    if (o.c.format == "csv") {
        std::string out;
        std::vector<std::string> header = {"branch",        "n",
                                           energy_column(o.c), "parity_sign",
                                           "wall_relation", "selected_by",
                                           "edge",          "coincident",
                                           "k",             "p"};
        if (o.nonrel_check) {
            header.insert(header.end(), {"binding", "nonrel_binding", "rel_error"});
        }
        out += csv_row(header);
        for (const auto& st : states) {
            const char* branch = st.branch == Branch::KleinKa   ? "klein_ka"
                                 : st.branch == Branch::KleinPa ? "klein_pa"
                                                                : "conventional";
            std::vector<std::string> row = {
                branch,
                std::to_string(st.n),
                fmt_double(energy_out(o.c, st.E)),
                std::to_string(st.parity_sign),
                st.wall_relation() == WallRelation::Sigma3 ? "sigma3" : "identity",
                st.selected_by(),
                st.edge ? "true" : "false",
                st.coincident ? "true" : "false",
                fmt_double(st.k),
                fmt_double(st.p)};
            if (o.nonrel_check) {
                const NonrelComparison cmp = nonrelativistic_limit(st, p);
                row.push_back(fmt_double(energy_out(o.c, cmp.binding)));
                row.push_back(fmt_double(energy_out(o.c, cmp.nonrel_binding)));
                row.push_back(fmt_double(cmp.rel_error));
            }
            out += csv_row(row);
        }
        return emit(o.c, out);
    }

    JsonWriter w;
    w.begin_object();
    write_head(w, o.c, "spectrum");
    w.key("has_klein_zone");
    w.value(p.has_klein_zone());
    w.key("n_states");
    w.value(static_cast<int>(states.size()));
    w.key("states");
    w.begin_array();
    for (const auto& st : states) {
        w.begin_object();
        write_state_fields(w, o.c, st, o.nonrel_check, p);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return emit(o.c, w.take());
}

// --- scatter ----------------------------------------------------------------

struct ScatterOpts {
    Common c;
    double E = 0.0;
    bool allow_edge = false;
};

int run_scatter(const ScatterOpts& o) {
    const WellParams p = make_params(o.c);
    const double E = energy_in(o.c, o.E);
    const int gate = edge_gate(E, p, o.allow_edge);
    if (gate == 2) return 2;
    const SolutionSet sol = solve_left_incidence(E, p);
    const double R2 = std::norm(sol.coefficients.at("R"));
    const double T2 = std::norm(sol.coefficients.at("T"));

    JsonWriter w;
    w.begin_object();
    write_head(w, o.c, "scatter");
    w.key("E");
    w.value(energy_out(o.c, E));
    w.key("regime");
    w.value(sol.regime.name());
    w.key("R2");
    w.value(R2);
    w.key("T2");
    w.value(T2);
    w.key("sum");
    w.value(R2 + T2);
    w.key("coefficients");
    w.begin_object();
    for (const auto& [name, z] : sol.coefficients) {
        w.key(name);
        write_complex(w, z);
    }
    w.end_object();
    w.end_object();
    return emit(o.c, w.take());
}

// --- wavefunction -----------------------------------------------------------

struct WavefunctionOpts {
    Common c;
    double E = 0.0;
    double L = -1.0;  // < 0: default 2a resolved after parsing
    int points = 1001;
    bool allow_edge = false;
};

int run_wavefunction(const WavefunctionOpts& o) {
    const WellParams p = make_params(o.c);
    const double E = energy_in(o.c, o.E);
    const double L = o.L < 0.0 ? 2.0 * p.a : o.L;
    const int gate = edge_gate(E, p, o.allow_edge);
    if (gate == 2) return 2;
    const SolutionSet sol =
        gate == 1 ? solve_on_boundary(E, p) : full_solution(E, p);

    const double lo = -L;
    const double hi = p.a + L;
    const int n = o.points;

    if (o.c.format == "csv") {
        std::string out;
        out += csv_row({"x", "re_psi_plus", "im_psi_plus", "re_psi_minus",
                        "im_psi_minus", "density", "current"});
        for (int i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
            const Spinor psi = sol.wave(x);
            out += csv_row({fmt_double(x), fmt_double(psi.upper.real()),
                            fmt_double(psi.upper.imag()),
                            fmt_double(psi.lower.real()),
                            fmt_double(psi.lower.imag()),
                            fmt_double(density(psi)), fmt_double(current(psi))});
        }
        return emit(o.c, out);
    }

    JsonWriter w;
    w.begin_object();
    write_head(w, o.c, "wavefunction");
    w.key("E");
    w.value(energy_out(o.c, E));
    w.key("regime");
    w.value(sol.regime.name());
    w.key("ansatz");
    w.value(ansatz_string(sol));
    w.key("L");
    w.value(L);
    w.key("n_points");
    w.value(n);
    w.key("samples");
    w.begin_array();
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const Spinor psi = sol.wave(x);
        w.begin_object();
        w.key("x");
        w.value(x);
        w.key("psi_plus");
        write_complex(w, psi.upper);
        w.key("psi_minus");
        write_complex(w, psi.lower);
        w.key("density");
        w.value(density(psi));
        w.key("current");
        w.value(current(psi));
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return emit(o.c, w.take());
}

// --- sweep ------------------------------------------------------------------

struct SweepOpts {
    Common c;
    double Emin = 0.0;
    double Emax = 0.0;
    int points = 201;
};

int run_sweep(const SweepOpts& o) {
    const WellParams p = make_params(o.c);
    const SweepResult res =
        sweep(p, energy_in(o.c, o.Emin), energy_in(o.c, o.Emax), o.points);

    if (o.c.format == "csv") {
        std::string out;
        out += csv_row({energy_column(o.c), "row", "regime", "nudged", "R2", "T2",
                        "klein_condition", "determinant_surrogate"});
        for (const auto& pt : res.points) {
            auto cell = [](double v) {
                return std::isfinite(v) ? fmt_double(v) : std::string();
            };
            out += csv_row({fmt_double(energy_out(o.c, pt.E)),
                            std::to_string(pt.row_index), pt.regime,
                            pt.nudged ? "true" : "false", cell(pt.R2),
                            cell(pt.T2), cell(pt.klein_condition_value),
                            cell(pt.determinant_surrogate)});
        }
        return emit(o.c, out);
    }

    JsonWriter w;
    w.begin_object();
    write_head(w, o.c, "sweep");
    w.key("E_min");
    w.value(energy_out(o.c, res.E_min));
    w.key("E_max");
    w.value(energy_out(o.c, res.E_max));
    w.key("n_points");
    w.value(res.n_points);
    w.key("n_nudged");
    w.value(res.n_nudged);
    w.key("n_dropped");
    w.value(res.n_dropped);
    w.key("points");
    w.begin_array();
    for (const auto& pt : res.points) {
        w.begin_object();
        w.key("E");
        w.value(energy_out(o.c, pt.E));
        w.key("row");
        w.value(pt.row_index);
        w.key("regime");
        w.value(pt.regime);
        w.key("nudged");
        w.value(pt.nudged);
        if (std::isfinite(pt.R2)) {
            w.key("R2");
            w.value(pt.R2);
        }
        if (std::isfinite(pt.T2)) {
            w.key("T2");
            w.value(pt.T2);
        }
        if (std::isfinite(pt.klein_condition_value)) {
            w.key("klein_condition");
            w.value(pt.klein_condition_value);
        }
        if (std::isfinite(pt.determinant_surrogate)) {
            w.key("determinant_surrogate");
            w.value(pt.determinant_surrogate);
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return emit(o.c, w.take());
}

// --- verify -----------------------------------------------------------------

struct VerifyCmdOpts {
    Common c;
    VerifyOptions v;
};

int run_verify(const VerifyCmdOpts& o) {
    const WellParams p = make_params(o.c);
    const VerificationReport rep = run_verification(p, o.v);
    int n_passed = 0;
    for (const auto& ch : rep.checks) n_passed += ch.passed ? 1 : 0;

    if (o.c.format == "json") {
        JsonWriter w;
        w.begin_object();
        write_head(w, o.c, "verify");
        w.key("options");
        w.begin_object();
        w.key("tol_scale");
        w.value(o.v.tol_scale);
        w.key("perturb_beta");
        w.value(o.v.perturb_beta);
        w.key("row");
        w.value(o.v.row);
        w.key("samples");
        w.value(o.v.samples);
        w.key("seed");
        w.value(static_cast<unsigned long long>(o.v.seed));
        w.end_object();
        w.key("checks");
        w.begin_array();
        for (const auto& ch : rep.checks) {
            w.begin_object();
            w.key("name");
            w.value(ch.name);
            w.key("passed");
            w.value(ch.passed);
            w.key("worst");
            w.value(ch.worst);
            w.key("tolerance");
            w.value(ch.tolerance);
            w.key("detail");
            w.value(ch.detail);
            w.end_object();
        }
        w.end_array();
        w.key("n_passed");
        w.value(n_passed);
        w.key("n_checks");
        w.value(static_cast<int>(rep.checks.size()));
        w.key("all_passed");
        w.value(rep.all_passed);
        w.end_object();
        const int rc = emit(o.c, w.take());
        if (rc != 0) return rc;
        return rep.all_passed ? 0 : 1;
    }

    std::string out;
    char line[512];
    std::snprintf(line, sizeof(line), "well: m=%s V=%s a=%s\n",
                  fmt_double(p.m).c_str(), fmt_double(p.V).c_str(),
                  fmt_double(p.a).c_str());
    out += line;
    for (const auto& ch : rep.checks) {
        std::snprintf(line, sizeof(line), "[%s] %-42s worst=%-11.4g tol=%-9.3g %s\n",
                      ch.passed ? "PASS" : "FAIL", ch.name.c_str(), ch.worst,
                      ch.tolerance, ch.detail.c_str());
        out += line;
    }
    std::snprintf(line, sizeof(line), "verification: %d/%d checks passed\n",
                  n_passed, static_cast<int>(rep.checks.size()));
    out += line;
    const int rc = emit(o.c, out);
    if (rc != 0) return rc;
    return rep.all_passed ? 0 : 1;
}

// --- table ------------------------------------------------------------------

struct TableOpts {
    Common c;
    double E = 0.0;
    bool allow_edge = false;
};

int run_table(const TableOpts& o) {
    const WellParams p = make_params(o.c);
    const double E = energy_in(o.c, o.E);
    const int gate = edge_gate(E, p, o.allow_edge);
    if (gate == 2) return 2;
    const SolutionSet sol =
        gate == 1 ? solve_on_boundary(E, p) : full_solution(E, p);

    JsonWriter w;
    w.begin_object();
    write_head(w, o.c, "table");
    w.key("E");
    w.value(energy_out(o.c, E));
    w.key("row");
    w.value(sol.regime.row_index());
    w.key("regime");
    w.value(sol.regime.name());
    w.key("is_bound_state");
    w.value(sol.is_bound_state);
    w.key("ansatz");
    w.value(ansatz_string(sol));
    w.key("coefficients");
    w.begin_object();
    for (const auto& [name, z] : sol.coefficients) {
        w.key(name);
        write_complex(w, z);
    }
    w.end_object();
    w.end_object();
    return emit(o.c, w.take());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "square-well Dirac solver: bound spectra, scattering, wavefunctions, "
        "energy sweeps, and a self-verification battery"};
    app.require_subcommand(1);

    int rc = 0;

    SpectrumOpts sp;
    auto* sp_cmd = app.add_subcommand(
        "spectrum", "bound-state spectra (trapped-zone branches and conventional)");
    add_common(sp_cmd, sp.c, "json", {"json", "csv"});
    sp_cmd->add_flag("--klein-only", sp.klein_only,
                     "emit only the trapped-zone branches (requires V > 2m)");
    sp_cmd->add_flag("--conventional-only", sp.conventional_only,
                     "emit only the conventional |E| < m states");
    sp_cmd->add_flag("--nonrel-check", sp.nonrel_check,
                     "add the particle-in-a-box comparison columns");
    sp_cmd->callback([&] { rc = run_spectrum(sp); });

    ScatterOpts sc;
    auto* sc_cmd = app.add_subcommand(
        "scatter", "left-incidence reflection and transmission at one energy");
    add_common(sc_cmd, sc.c, "json", {"json"});
    sc_cmd->add_option("-E,--E", sc.E, "energy (see --units)")->required();
    sc_cmd->add_flag("--allow-edge", sc.allow_edge,
                     "proceed on kinematically regular zone boundaries");
    sc_cmd->callback([&] { rc = run_scatter(sc); });

    WavefunctionOpts wf;
    auto* wf_cmd = app.add_subcommand(
        "wavefunction", "sample the spinor wavefunction over [-L, a+L]");
    add_common(wf_cmd, wf.c, "csv", {"json", "csv"});
    wf_cmd->add_option("-E,--E", wf.E, "energy (see --units)")->required();
    wf_cmd->add_option("--L", wf.L,
                       "sampling margin beyond each wall (raw length; default 2a)");
    wf_cmd->add_option("-n,--points", wf.points, "number of samples")
        ->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    wf_cmd->add_flag("--allow-edge", wf.allow_edge,
                     "proceed on kinematically regular zone boundaries");
    wf_cmd->callback([&] { rc = run_wavefunction(wf); });

    SweepOpts sw;
    auto* sw_cmd = app.add_subcommand(
        "sweep", "scan scattering and bound-state figures over an energy grid");
    add_common(sw_cmd, sw.c, "json", {"json", "csv"});
    sw_cmd->add_option("--Emin", sw.Emin, "grid start (see --units)")->required();
    sw_cmd->add_option("--Emax", sw.Emax, "grid end (see --units)")->required();
    sw_cmd->add_option("-n,--points", sw.points, "grid size")
        ->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    sw_cmd->callback([&] { rc = run_sweep(sw); });

    VerifyCmdOpts vf;
    if (const char* env = std::getenv("DIRACWELL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) {
            vf.v.tol_scale = v;
        } else {
            std::fprintf(stderr,
                         "warning: ignoring non-numeric DIRACWELL_TOL='%s'\n", env);
        }
    }
    auto* vf_cmd = app.add_subcommand(
        "verify", "run the property battery; exit 1 if any check fails");
    add_common(vf_cmd, vf.c, "text", {"text", "json"});
    vf_cmd->add_option("--tol-scale", vf.v.tol_scale,
                       "multiply every check threshold (DIRACWELL_TOL sets the default)")
        ->capture_default_str();
    vf_cmd->add_option("--perturb-beta", vf.v.perturb_beta,
                       "fault injection: distort the far wall's component ratio")
        ->capture_default_str();
    vf_cmd->add_option("--row", vf.v.row,
                       "restrict to one zone row's ODE oracle check (0 = full battery)")
        ->check(CLI::Range(0, 7))
        ->capture_default_str();
    vf_cmd->add_option("--samples", vf.v.samples, "energies per row in the ODE check")
        ->check(CLI::Range(1, 100))
        ->capture_default_str();
    vf_cmd->add_option("--seed", vf.v.seed, "seed for the randomized checks")
        ->capture_default_str();
    vf_cmd->callback([&] { rc = run_verify(vf); });

    TableOpts tb;
    auto* tb_cmd = app.add_subcommand(
        "table", "show the piecewise ansatz and coefficients used at one energy");
    add_common(tb_cmd, tb.c, "json", {"json"});
    tb_cmd->add_option("-E,--E", tb.E, "energy (see --units)")->required();
    tb_cmd->add_flag("--allow-edge", tb.allow_edge,
                     "proceed on kinematically regular zone boundaries");
    tb_cmd->callback([&] { rc = run_table(tb); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
