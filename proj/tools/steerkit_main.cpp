// steerkit command line: parameter sweeps and reports over the steering
// toolkit, emitted as JSON lines or CSV for diffing and golden-file tests.
//
// Exit codes: 0 success, 2 invalid arguments or ranges, 3 numerical failure
// or an internal-bound violation (monogamy rows that exceed the averaged
// bound are reported and the run exits 3).
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "steerkit/criteria.hpp"
#include "steerkit/errors.hpp"
#include "steerkit/keyrate.hpp"
#include "steerkit/measure.hpp"
#include "steerkit/optimizer.hpp"
#include "steerkit/rng.hpp"
#include "steerkit/statezoo.hpp"
#include "steerkit/steering.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace steerkit;

enum class Format { Json, Csv };

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Collects stdout bytes so --out can write the identical content to a file.
class Output {
 public:
    void line(const std::string& s) {
        buffer_ += s;
        buffer_ += '\n';
        std::fputs(s.c_str(), stdout);
        std::fputc('\n', stdout);
    }

    bool write_file(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) return false;
        f.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
        return static_cast<bool>(f);
    }

 private:
    std::string buffer_;
};

// One table with a fixed column list. JSON mode prints one object per line;
// CSV mode prints a header row followed by %.10g-formatted values. Nulls
// render as JSON null and CSV "nan".
class TableWriter {
 public:
    TableWriter(Output& out, Format format, std::vector<std::string> fields)
        : out_(out), format_(format), fields_(std::move(fields)) {
        if (format_ == Format::Csv) {
            std::string header;
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i) header += ',';
                header += fields_[i];
            }
            out_.line(header);
        }
    }

    void row(const json& obj) {
        if (format_ == Format::Json) {
            json ordered;
            for (const std::string& f : fields_) ordered[f] = obj.at(f);
            out_.line(ordered.dump());
            return;
        }
        std::string line;
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            if (i) line += ',';
            const json& v = obj.at(fields_[i]);
            if (v.is_null())
                line += "nan";
            else if (v.is_boolean())
                line += v.get<bool>() ? "true" : "false";
            else if (v.is_number_integer())
                line += std::to_string(v.get<long long>());
            else if (v.is_number())
                line += format_number(v.get<double>());
            else
                line += v.get<std::string>();
        }
        out_.line(line);
    }

 private:
    Output& out_;
    Format format_;
    std::vector<std::string> fields_;
};

Direction parse_axis(const std::string& s) {
    if (s == "z") return Direction::z_axis();
    if (s == "x") return Direction::x_axis();
    if (s == "y") return Direction::y_axis();
    double theta = 0.0, phi = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &theta, &phi) == 2) return {theta, phi};
    throw CLI::ValidationError("axis", "expected x, y, z or theta,phi in radians: " + s);
}

struct GlobalOpts {
    Format format = Format::Json;
    double tolerance = VERDICT_SLACK;
    std::string out_path;
};

const std::vector<std::string> kSweepFields = {"param_name", "param_value", "functional",
                                               "bound_I",    "bound_II",    "chsh",
                                               "verdict_I",  "verdict_II"};

json sweep_row(const std::string& name, double value, std::optional<double> functional, double chsh,
               double tol) {
    json r;
    r["param_name"] = name;
    r["param_value"] = value;
    if (functional) {
        r["functional"] = *functional;
        r["bound_I"] = scenario1_bound();
        r["bound_II"] = scenario2_bound();
        r["chsh"] = chsh;
        r["verdict_I"] = *functional > scenario1_bound() + tol;
        r["verdict_II"] = *functional > scenario2_bound() + tol;
    } else {
        r["functional"] = nullptr;
        r["bound_I"] = scenario1_bound();
        r["bound_II"] = scenario2_bound();
        r["chsh"] = chsh;
        r["verdict_I"] = nullptr;
        r["verdict_II"] = nullptr;
    }
    return r;
}

// Inclusive evenly spaced grid; a single step degenerates to the left edge.
std::vector<double> grid(double lo, double hi, int steps) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < steps; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    return g;
}

int cmd_fur(const GlobalOpts& g, Output& out, const std::string& p_str, const std::string& q_str,
            int win_bit) {
    const Direction p = parse_axis(p_str);
    const Direction q = parse_axis(q_str);
    const Outcome win = win_bit == 0 ? Outcome::Up : Outcome::Down;

    const FurGameMax analytic = fur_game_max(p, q, win);
    const OptResult found = maximize_over_directions(
        [&](const std::vector<Direction>& dirs) {
            return fur_game_value(bloch_to_state(dirs[0].unit()), p, q, win);
        },
        1);
    const BlochVector best = found.best_directions.at(0).unit();

    TableWriter table(out, g.format,
                      {"p_axis", "q_axis", "win", "analytic_max", "optimized_max", "abs_diff",
                       "bloch_x", "bloch_y", "bloch_z", "evaluations"});
    json r;
    r["p_axis"] = p_str;
    r["q_axis"] = q_str;
    r["win"] = win_bit;
    r["analytic_max"] = analytic.value;
    r["optimized_max"] = found.best_value;
    r["abs_diff"] = std::fabs(analytic.value - found.best_value);
    r["bloch_x"] = best.x;
    r["bloch_y"] = best.y;
    r["bloch_z"] = best.z;
    r["evaluations"] = static_cast<long long>(found.evaluations);
    table.row(r);
    return 0;
}

int cmd_werner(const GlobalOpts& g, Output& out, double p_min, double p_max, int steps) {
    if (!(0.0 <= p_min && p_min <= p_max && p_max <= 1.0) || steps < 1) {
        std::cerr << "werner: need 0 <= p-min <= p-max <= 1 and steps >= 1\n";
        return 2;
    }
    const SteeringSetting setting(Direction::z_axis(), Direction::x_axis(), Direction::z_axis(),
                                  Direction::x_axis(), Outcome::Up, Outcome::Up);
    TableWriter table(out, g.format, kSweepFields);
    for (double p : grid(p_min, p_max, steps)) {
        const DensityMatrix rho = werner(p);
        const double functional = steering_functional(rho, setting);
        table.row(sweep_row("p", p, functional, chsh_max(rho), g.tolerance));
    }
    return 0;
}

int cmd_pure(const GlobalOpts& g, Output& out, double a_min, double a_max, int steps,
             const std::string& mode) {
    if (!(0.0 <= a_min && a_min <= a_max && a_max <= 1.0) || steps < 1) {
        std::cerr << "pure: need 0 <= alpha-min <= alpha-max <= 1 and steps >= 1\n";
        return 2;
    }
    const Direction z = Direction::z_axis();
    const Direction x = Direction::x_axis();
    TableWriter table(out, g.format, kSweepFields);
    for (double alpha : grid(a_min, a_max, steps)) {
        const DensityMatrix rho = pure_alpha(alpha).to_density();
        const double chsh = chsh_max(rho);
        std::optional<double> functional;
        if (mode == "samebasis") {
            try {
                functional =
                    steering_functional(rho, SteeringSetting(z, x, z, x, Outcome::Up, Outcome::Up));
            } catch (const DegenerateConditionError&) {
                std::cerr << "pure: alpha=" << format_number(alpha)
                          << ": conditioning marginal vanishes, functional omitted\n";
            }
        } else {
            // Separable endpoints: the conditioning axes degenerate, so the
            // row carries the caveat instead of an optimizer artifact.
            if (alpha > 1e-12 && alpha < 1.0 - 1e-12) {
                functional = steering_functional_max(rho, z, x, Outcome::Up, Outcome::Up).value;
            } else {
                std::cerr << "pure: alpha=" << format_number(alpha)
                          << ": product state, optimal-mode functional omitted\n";
            }
        }
        table.row(sweep_row("alpha", alpha, functional, chsh, g.tolerance));
    }
    return 0;
}

int cmd_monogamy(const GlobalOpts& g, Output& out, const std::string& family, double alpha,
                 int trials, std::optional<std::uint64_t> seed, std::optional<bool> optimize_opt) {
    if (trials < 1) {
        std::cerr << "monogamy: trials must be >= 1\n";
        return 2;
    }
    const bool random_family = family == "random";
    if (random_family && !seed) {
        std::cerr << "monogamy: --family random requires --seed\n";
        return 2;
    }
    const bool optimize = optimize_opt.value_or(random_family);

    const Direction z = Direction::z_axis();
    const Direction x = Direction::x_axis();
    TableWriter table(out, g.format, {"trial", "t_ab", "t_bc", "average", "satisfied"});

    int violations = 0;
    double max_average = -1.0;
    for (int trial = 0; trial < trials; ++trial) {
        DensityMatrix rho = [&] {
            if (family == "ghz") return tripartite_family(TripartiteKind::Ghz);
            if (family == "w") return tripartite_family(TripartiteKind::W);
            if (family == "product")
                return tripartite_family(TripartiteKind::ProductExtension, {}, alpha);
            return tripartite_family(TripartiteKind::RandomPure,
                                     Rng::mix(*seed, static_cast<std::uint64_t>(trial)));
        }();

        TPair t;
        if (optimize) {
            t = optimize_t_pair(rho, z, x, Outcome::Up, Outcome::Up, Outcome::Up).value;
        } else {
            t = t_pair(rho, TripartiteSetting(z, x, z, x, z, x, Outcome::Up, Outcome::Up,
                                              Outcome::Up));
        }
        const double average = 0.5 * (t.t_ab + t.t_bc);
        const bool satisfied = average <= scenario1_bound() + g.tolerance;
        if (!satisfied) ++violations;
        max_average = std::max(max_average, average);

        json r;
        r["trial"] = trial;
        r["t_ab"] = t.t_ab;
        r["t_bc"] = t.t_bc;
        r["average"] = average;
        r["satisfied"] = satisfied;
        table.row(r);
    }

    if (g.format == Format::Json) {
        json s;
        s["trials"] = trials;
        s["violations"] = violations;
        s["max_average"] = max_average;
        out.line(s.dump());
    } else {
        std::cerr << "monogamy: trials " << trials << ", violations " << violations
                  << ", max average " << format_number(max_average) << "\n";
    }
    return violations > 0 ? 3 : 0;
}

void keyrate_reference_note() {
    std::cerr << "keyrate: published reference values at maximum violation are 0.5 (log ratio) "
                 "and 0.47 (linear); the linear formula itself evaluates to ~0.495 there, so "
                 "both the computed and the reference value are reported\n";
}

int cmd_keyrate_k(const GlobalOpts& g, Output& out, double k) {
    if (!(k >= 0.0 && k < fur_max_value())) {
        std::cerr << "keyrate: --k must lie in [0, " << format_number(fur_max_value()) << ")\n";
        return 2;
    }
    const KeyRateBounds b = key_rate_bounds(k);
    TableWriter table(out, g.format,
                      {"k", "rate_logratio_bits", "rate_linear_bits", "ref_logratio_bits",
                       "ref_linear_bits"});
    json r;
    r["k"] = k;
    r["rate_logratio_bits"] = b.logratio_bits;
    r["rate_linear_bits"] = b.linear_bits;
    r["ref_logratio_bits"] = 0.5;
    r["ref_linear_bits"] = 0.47;
    table.row(r);
    keyrate_reference_note();
    return 0;
}

int cmd_keyrate_family(const GlobalOpts& g, Output& out, const std::string& family, double alpha,
                       std::optional<std::uint64_t> seed, bool worst_case) {
    if (family == "random" && !seed) {
        std::cerr << "keyrate: --family random requires --seed\n";
        return 2;
    }
    const Direction z = Direction::z_axis();
    const Direction x = Direction::x_axis();
    DensityMatrix rho = [&] {
        if (family == "ghz") return tripartite_family(TripartiteKind::Ghz);
        if (family == "w") return tripartite_family(TripartiteKind::W);
        if (family == "product")
            return tripartite_family(TripartiteKind::ProductExtension, {}, alpha);
        return tripartite_family(TripartiteKind::RandomPure, *seed);
    }();

    TripartiteSetting setting(z, x, z, x, z, x, Outcome::Up, Outcome::Up, Outcome::Up);
    if (worst_case) {
        const WorstCaseCharlie wc = worst_case_charlie(rho, setting);
        setting = TripartiteSetting(z, x, z, x, wc.charlie_s, wc.charlie_t, Outcome::Up,
                                    Outcome::Up, Outcome::Up);
    }
    const KeyRateReport rep = key_rate_report(rho, setting);

    TableWriter table(out, g.format,
                      {"family", "worst_case", "t_ab", "t_bc", "k", "i_ba", "i_bc",
                       "rate_exact_bits", "rate_logratio_bits", "rate_linear_bits",
                       "ref_logratio_bits", "ref_linear_bits"});
    json r;
    r["family"] = family;
    r["worst_case"] = worst_case;
    r["t_ab"] = rep.t_ab;
    r["t_bc"] = rep.t_bc;
    r["k"] = rep.k_violation;
    r["i_ba"] = rep.i_ba;
    r["i_bc"] = rep.i_bc;
    r["rate_exact_bits"] = rep.rate_exact_bits;
    if (std::isnan(rep.rate_logratio_bits)) {
        r["rate_logratio_bits"] = nullptr;
        r["rate_linear_bits"] = nullptr;
    } else {
        r["rate_logratio_bits"] = rep.rate_logratio_bits;
        r["rate_linear_bits"] = rep.rate_linear_bound_bits;
    }
    r["ref_logratio_bits"] = 0.5;
    r["ref_linear_bits"] = 0.47;
    table.row(r);
    keyrate_reference_note();
    return 0;
}

int cmd_saunders(const GlobalOpts& g, Output& out, int n) {
    if (n != 2 && n != 3) {
        std::cerr << "saunders: only 2 or 3 settings are supported\n";
        return 2;
    }
    std::vector<Direction> dirs = {Direction::z_axis(), Direction::x_axis()};
    if (n == 3) dirs.push_back(Direction::y_axis());
    const double c_n = saunders_bound(MeasurementSet(dirs));

    TableWriter table(out, g.format, {"n", "c_n", "werner_threshold"});
    json r;
    r["n"] = n;
    r["c_n"] = c_n;
    r["werner_threshold"] = c_n;
    table.row(r);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steering-inequality sweeps and key-rate reports"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    std::string format_str = "json";
    app.add_option("--format", format_str, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--tolerance", g.tolerance, "Verdict slack added to each bound")
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Also write stdout bytes to this file");

    // fur
    auto* fur = app.add_subcommand("fur", "Fine-grained game maximum: analytic vs optimizer");
    std::string fur_p = "z", fur_q = "x";
    int fur_win = 0;
    fur->add_option("--p", fur_p, "First observable axis (x, y, z or theta,phi)")
        ->capture_default_str();
    fur->add_option("--q", fur_q, "Second observable axis")->capture_default_str();
    fur->add_option("--win", fur_win, "Winning outcome bit (0 = up, 1 = down)")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();

    // werner
    auto* wer = app.add_subcommand("werner", "Werner-family sweep: functional, bounds, CHSH");
    double wp_min = 0.0, wp_max = 1.0;
    int wer_steps = 101;
    wer->add_option("--p-min", wp_min, "Lower mixing parameter")->capture_default_str();
    wer->add_option("--p-max", wp_max, "Upper mixing parameter")->capture_default_str();
    wer->add_option("--steps", wer_steps, "Grid points (inclusive endpoints)")
        ->capture_default_str();

    // pure
    auto* pure = app.add_subcommand("pure", "Schmidt-family sweep over alpha");
    double pa_min = 0.0, pa_max = 1.0;
    int pure_steps = 101;
    std::string pure_mode = "samebasis";
    pure->add_option("--alpha-min", pa_min, "Lower Schmidt weight")->capture_default_str();
    pure->add_option("--alpha-max", pa_max, "Upper Schmidt weight")->capture_default_str();
    pure->add_option("--steps", pure_steps, "Grid points (inclusive endpoints)")
        ->capture_default_str();
    pure->add_option("--mode", pure_mode,
                     "samebasis: Alice copies Bob's axes; optimal: optimizer over her axes")
        ->check(CLI::IsMember({"samebasis", "optimal"}))
        ->capture_default_str();

    // monogamy
    auto* mono = app.add_subcommand("monogamy", "Two-steerer average against the shared bound");
    std::string mono_family;
    double mono_alpha = 0.5;
    int mono_trials = 1;
    std::optional<std::uint64_t> mono_seed;
    std::optional<bool> mono_optimize;
    mono->add_option("--family", mono_family, "ghz, w, product or random")
        ->required()
        ->check(CLI::IsMember({"ghz", "w", "product", "random"}));
    mono->add_option("--alpha", mono_alpha, "Schmidt weight for the product family")
        ->capture_default_str();
    mono->add_option("--trials", mono_trials, "Rows to emit")->capture_default_str();
    mono->add_option("--seed", mono_seed, "Master seed (required for random)");
    mono->add_flag("--optimize,!--fixed", mono_optimize,
                   "Optimize Alice/Charlie axes (default: on for random, off otherwise)");

    // keyrate
    auto* key = app.add_subcommand("keyrate", "Violation-strength and exact key-rate report");
    std::optional<double> key_k;
    std::string key_family;
    double key_alpha = 0.5;
    std::optional<std::uint64_t> key_seed;
    bool key_worst = false;
    key->add_option("--k", key_k, "Violation strength; bounds-only report");
    key->add_option("--family", key_family, "ghz, w, product or random: full state report")
        ->check(CLI::IsMember({"ghz", "w", "product", "random"}));
    key->add_option("--alpha", key_alpha, "Schmidt weight for the product family")
        ->capture_default_str();
    key->add_option("--seed", key_seed, "Seed (required for random)");
    key->add_flag("--worst-case", key_worst, "Grid-optimize the third party's axes against the key");

    // saunders
    auto* sau = app.add_subcommand("saunders", "Linear-criterion bound C_n and Werner threshold");
    int sau_n = 2;
    sau->add_option("--n", sau_n, "Number of measurement settings (2 or 3)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g.format = format_str == "csv" ? Format::Csv : Format::Json;

    Output out;
    int rc = 0;
    try {
        if (app.got_subcommand(fur)) {
            rc = cmd_fur(g, out, fur_p, fur_q, fur_win);
        } else if (app.got_subcommand(wer)) {
            rc = cmd_werner(g, out, wp_min, wp_max, wer_steps);
        } else if (app.got_subcommand(pure)) {
            rc = cmd_pure(g, out, pa_min, pa_max, pure_steps, pure_mode);
        } else if (app.got_subcommand(mono)) {
            rc = cmd_monogamy(g, out, mono_family, mono_alpha, mono_trials, mono_seed,
                              mono_optimize);
        } else if (app.got_subcommand(key)) {
            if (key_k.has_value() == !key_family.empty()) {
                std::cerr << "keyrate: pass exactly one of --k or --family\n";
                rc = 2;
            } else if (key_k) {
                rc = cmd_keyrate_k(g, out, *key_k);
            } else {
                rc = cmd_keyrate_family(g, out, key_family, key_alpha, key_seed, key_worst);
            }
        } else if (app.got_subcommand(sau)) {
            rc = cmd_saunders(g, out, sau_n);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    if (rc == 0 || rc == 3) {
        if (!g.out_path.empty() && !out.write_file(g.out_path)) {
            std::cerr << "failed to write " << g.out_path << "\n";
            return 2;
        }
    }
    return rc;
}
