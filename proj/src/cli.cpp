#include "qent/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qent/errors.hpp"
#include "qent/io.hpp"
#include "qent/locc.hpp"
#include "qent/measures.hpp"
#include "qent/nonlocality.hpp"
#include "qent/report.hpp"
#include "qent/separability.hpp"
#include "qent/tensor.hpp"
#include "qent/zoo.hpp"

namespace qent {

namespace {

[[noreturn]] void usage_error(const std::string& msg) {
    throw QentError(ErrorCode::usage, msg);
}

std::string join_args(int argc, const char* const* argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& csv) {
    std::vector<std::size_t> out;
    for (const std::string& tok : split(csv, ',')) {
        try {
            out.push_back(std::stoul(tok));
        } catch (const std::exception&) {
            usage_error("bad index '" + tok + "'");
        }
    }
    return out;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    for (const std::string& tok : split(csv, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            usage_error("bad number '" + tok + "'");
        }
    }
    return out;
}

// 6 numbers per site: two axes, normalized here for convenience
BellSettings settings_from_flat(const std::vector<double>& v) {
    if (v.empty() || v.size() % 6 != 0)
        usage_error("--settings needs 6 numbers per site (two axes)");
    BellSettings s;
    for (std::size_t i = 0; i < v.size(); i += 6) {
        std::array<Vec3, 2> axes{};
        for (std::size_t a = 0; a < 2; ++a) {
            double n = 0.0;
            for (std::size_t c = 0; c < 3; ++c) {
                axes[a][c] = v[i + 3 * a + c];
                n += axes[a][c] * axes[a][c];
            }
            if (n <= 0.0) usage_error("zero-length measurement axis");
            n = std::sqrt(n);
            for (double& c : axes[a]) c /= n;
        }
        s.site.push_back(axes);
    }
    s.validate();
    return s;
}

// F psi- + (1 - F)(I - P_psi-)/3
CMat psim_isotropic(double f) {
    require(f >= 0.0 && f <= 1.0, "fidelity outside [0,1]");
    CMat p = dyad(make_bell(0).psi);
    CMat rest = CMat::identity(4);
    rest -= p;
    rest *= cplx((1.0 - f) / 3.0);
    p *= cplx(f);
    p += rest;
    return p;
}

void emit(const ordered_json& doc, const std::string& human, bool json,
          const std::string& outPath) {
    if (json)
        std::cout << render_report(doc);
    else
        std::cout << human;
    if (!outPath.empty()) write_file(outPath, render_report(doc));
}

std::string num12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string partition_str(const std::vector<std::size_t>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

// ---- gen ----------------------------------------------------------------

struct GenOpts {
    std::string family, out, dims, lk;
    std::size_t d = 2, n = 3, k = 0, rank = 0, terms = 4;
    std::uint64_t seed = 1;
    double p = NAN, f = NAN, a = NAN, l0p = NAN, l0m = NAN;
    bool json = false;
};

State build_recipe(const GenOpts& o) {
    auto need = [](double v, const char* flag) {
        if (std::isnan(v)) usage_error(std::string("this family requires ") + flag);
        return v;
    };
    auto need_dims = [&]() {
        if (o.dims.empty()) usage_error("this family requires --dims");
        Dims d;
        for (std::size_t v : parse_indices(o.dims)) d.push_back(v);
        return d;
    };
    if (o.family == "bell") return make_bell(o.k);
    if (o.family == "maxent") return make_maxent(o.d);
    if (o.family == "ghz") return make_ghz(o.n, o.d);
    if (o.family == "w") return make_w(o.n);
    if (o.family == "werner") return make_werner(o.d, need(o.p, "--p"));
    if (o.family == "isotropic") return make_isotropic(o.d, need(o.f, "--f"));
    if (o.family == "smolin") return make_smolin();
    if (o.family == "chessboard") return make_chessboard(need(o.a, "--a"));
    if (o.family == "dur") {
        std::vector<double> lk = parse_doubles(o.lk);
        return make_dur_cirac(o.n, need(o.l0p, "--l0p"), need(o.l0m, "--l0m"), lk);
    }
    if (o.family == "upb-shift") return make_upb_shift_state();
    if (o.family == "aharonov") return make_aharonov();
    if (o.family == "avn-hyper") return make_avn_hyper();
    if (o.family == "random-pure") return make_random_pure(need_dims(), o.seed);
    if (o.family == "random-density") {
        Dims dims = need_dims();
        std::size_t rank = o.rank ? o.rank : dims_product(dims);
        return make_random_density(dims, rank, o.seed);
    }
    if (o.family == "random-separable")
        return make_random_separable(need_dims(), o.terms, o.seed);
    usage_error("unknown family '" + o.family + "'");
}

void cmd_gen(const GenOpts& o, const std::string& command) {
    if (o.out.empty()) usage_error("gen requires --out");
    State s = build_recipe(o);
    std::string text = format_state(s);
    write_file(o.out, text);
    ordered_json doc = report_header(command, text);
    doc["family"] = o.family;
    doc["kind"] = s.is_pure() ? "pure" : "density";
    doc["dims"] = s.dims;
    doc["out"] = o.out;
    std::string human = "wrote " + std::string(s.is_pure() ? "pure" : "density") +
                        " state (dim " + std::to_string(s.dim()) + ") to " + o.out + "\n";
    emit(doc, human, o.json, "");
}

// ---- analyze / measure --------------------------------------------------

void cmd_analyze(const std::string& in, const std::string& criteria,
                 const std::string& partitions, bool json, const std::string& outPath,
                 const std::string& command) {
    std::string text = read_file(in);
    State s = parse_state_text(text, in);
    std::vector<std::vector<std::size_t>> parts;
    for (const std::string& p : split(partitions, ';')) parts.push_back(parse_indices(p));
    BatteryResult br = battery(s, parts, split(criteria, ','));
    ordered_json doc = report_header(command, text);
    doc["battery"] = to_json(br);
    std::string human = "verdict: " + verdict_name(br.verdict) + "\n";
    for (const CriterionReport& r : br.reports)
        human += "  " + r.criterion + " [" + partition_str(r.partition) + "] " +
                 verdict_name(r.verdict) + " evidence=" + num12(r.evidence) +
                 " threshold=" + num12(r.threshold) +
                 (r.note.empty() ? "" : " (" + r.note + ")") + "\n";
    emit(doc, human, json, outPath);
}

void cmd_measure(const std::string& in, const std::string& measures,
                 const std::string& splitStr, bool json, const std::string& outPath,
                 const std::string& command) {
    if (measures.empty()) usage_error("measure requires --measures");
    std::string text = read_file(in);
    State s = parse_state_text(text, in);
    std::vector<MeasureValue> vals = run_measures(split(measures, ','), s, parse_indices(splitStr));
    ordered_json doc = report_header(command, text);
    doc["split"] = parse_indices(splitStr);
    doc["measures"] = ordered_json::array();
    std::string human;
    for (const MeasureValue& v : vals) {
        doc["measures"].push_back(to_json(v));
        human += v.measure + " = " + num12(v.value) + (v.exact ? "" : " (lower bound)") + "\n";
    }
    emit(doc, human, json, outPath);
}

// ---- bell ---------------------------------------------------------------

BellSettings default_pair_settings() {
    const double r = 1.0 / std::sqrt(2.0);
    BellSettings s;
    s.site.push_back({Vec3{1, 0, 0}, Vec3{0, 0, 1}});
    s.site.push_back({Vec3{r, 0, r}, Vec3{r, 0, -r}});
    return s;
}

void cmd_bell(const std::string& in, const std::string& test, const std::string& settingsCsv,
              bool json, const std::string& outPath, const std::string& command) {
    std::string text = read_file(in);
    State s = parse_state_text(text, in);
    ordered_json doc = report_header(command, text);
    std::string human;
    if (test == "chsh") {
        ChshAnalysis a = chsh_analyze(s.density());
        doc["chsh"] = to_json(a);
        human = "M = " + num12(a.M) + "  B = " + num12(a.B) +
                "  max CHSH = " + num12(a.max_value) + " (local bound 2)\n";
        if (!settingsCsv.empty()) {
            BellSettings bs = settings_from_flat(parse_doubles(settingsCsv));
            double v = bell_chsh_value(s.density(), bs);
            doc["value_at_settings"] = json_number(v);
            human += "value at given settings = " + num12(v) + "\n";
        }
    } else if (test == "wwzb") {
        if (settingsCsv.empty()) usage_error("wwzb requires --settings (6 numbers per site)");
        BellSettings bs = settings_from_flat(parse_doubles(settingsCsv));
        if (bs.site.size() != s.parties())
            usage_error("settings cover " + std::to_string(bs.site.size()) + " sites but the state has " +
                        std::to_string(s.parties()));
        WwzbResult w = wwzb_check(correlation_table(s.density(), bs), bs.site.size());
        doc["wwzb"] = to_json(w);
        human = "lhs = " + num12(w.lhs) + "  bound = " + num12(w.bound) +
                (w.pass ? "  (no violation)\n" : "  VIOLATED\n");
    } else if (test == "avn") {
        double v = ghz_avn_value(s);
        doc["avn"] = ordered_json{{"value", json_number(v)},
                                  {"lhv_bound", json_number(7.0)},
                                  {"quantum_max", json_number(9.0)}};
        human = "operator value = " + num12(v) + " (LHV bound 7, quantum max 9)\n";
    } else if (test == "toner") {
        BellSettings ab, ac;
        if (settingsCsv.empty()) {
            ab = default_pair_settings();
            ac = default_pair_settings();
        } else {
            std::vector<double> v = parse_doubles(settingsCsv);
            if (v.size() != 24) usage_error("toner takes 24 numbers: AB then AC settings");
            ab = settings_from_flat({v.begin(), v.begin() + 12});
            ac = settings_from_flat({v.begin() + 12, v.end()});
        }
        TonerResult t = toner_monogamy(s.density(), ab, ac);
        doc["toner"] = to_json(t);
        human = "|chsh AB| = " + num12(t.vAB) + "  |chsh AC| = " + num12(t.vAC) +
                "  sum = " + num12(t.sum) + " (bound 4)\n";
    } else {
        usage_error("unknown bell test '" + test + "' (chsh|wwzb|avn|toner)");
    }
    emit(doc, human, json, outPath);
}

// ---- distill / sim ------------------------------------------------------

void cmd_distill(const std::string& in, double f0, double target, std::size_t maxRounds,
                 bool exact, bool json, const std::string& outPath,
                 const std::string& command) {
    std::string text;
    if (!in.empty()) {
        if (!std::isnan(f0)) usage_error("give either --in or --f0, not both");
        text = read_file(in);
        State s = parse_state_text(text, in);
        f0 = singlet_fraction(s.density());
    } else if (std::isnan(f0)) {
        usage_error("distill requires --in or --f0");
    }
    DistillationTrace tr = distill_recurrence(f0, target, maxRounds, exact);
    ordered_json doc = report_header(command, text.empty() ? "f0=" + num12(f0) : text);
    doc["f0"] = json_number(f0);
    doc["target"] = json_number(target);
    doc["exact_circuit"] = exact;
    doc["distillation"] = to_json(tr);
    std::string human = "F0 = " + num12(f0) + ", target " + num12(target) + ": " +
                        (tr.reachedTarget ? "reached" : "NOT reached") + " after " +
                        std::to_string(tr.rounds.size()) + " rounds, yield estimate " +
                        num12(tr.finalYieldEstimate) + "\n";
    for (const DistillationRound& r : tr.rounds)
        human += "  F -> " + num12(r.F) + "  p = " + num12(r.pSuccess) +
                 "  surviving = " + num12(r.survivingFraction) + "\n";
    emit(doc, human, json, outPath);
}

void cmd_sim(const std::string& protocol, const std::string& resourcePath, double fidelity,
             std::size_t samples, std::uint64_t seed, bool json, const std::string& outPath,
             const std::string& command) {
    ordered_json doc;
    std::string human;
    if (protocol == "teleport") {
        std::string text;
        CMat res;
        if (!resourcePath.empty()) {
            text = read_file(resourcePath);
            res = parse_state_text(text, resourcePath).density();
        } else {
            res = psim_isotropic(fidelity);
            text = "fidelity=" + num12(fidelity);
        }
        TeleportationReport rep = simulate_teleportation(res, samples, seed);
        doc = report_header(command, text);
        doc["teleportation"] = to_json(rep);
        human = "resource psi- fraction = " + num12(rep.resourceFraction) +
                "\nanalytic fidelity = " + num12(rep.analyticFidelity) +
                "  axial = " + num12(rep.axialAverage) + "  haar(" +
                std::to_string(rep.haarSamples) + ") = " + num12(rep.haarAverage) +
                " (classical bound 2/3)\n";
    } else if (protocol == "densecode") {
        DenseCodingReport rep = simulate_dense_coding();
        doc = report_header(command, protocol);
        doc["dense_coding"] = to_json(rep);
        human = "bits per pair = " + num12(rep.bits) +
                ", max cross overlap = " + num12(rep.maxCrossOverlap) + "\n";
    } else if (protocol == "swap") {
        SwappingReport rep = simulate_swapping();
        doc = report_header(command, protocol);
        doc["swapping"] = to_json(rep);
        human = "outcome probabilities:";
        for (double p : rep.outcomeProbabilities) human += " " + num12(p);
        human += "\ncorrected fidelities:";
        for (double f : rep.correctedFidelity) human += " " + num12(f);
        human += "\n";
    } else {
        usage_error("unknown protocol '" + protocol + "' (teleport|densecode|swap)");
    }
    emit(doc, human, json, outPath);
}

// ---- selftest -----------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult selftest_soundness(std::uint64_t seed) {
    const Dims families[4] = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    const int n = 1200;
    std::vector<int> bad(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const Dims& dims = families[i % 4];
        State s = make_random_separable(dims, 1 + (i % 6), seed + 1000 + i);
        if (battery(s).verdict == Verdict::ENTANGLED) bad[i] = 1;
    }
    int total = 0;
    for (int b : bad) total += b;
    return {"soundness-battery", total == 0,
            std::to_string(total) + " false ENTANGLED in " + std::to_string(n) +
                " separable states"};
}

CheckResult selftest_monogamy(std::uint64_t seed) {
    const int n = 1500;
    std::vector<double> slack(n, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        State s = make_random_pure({2, 2, 2}, seed + 50000 + i);
        double cabc = concurrence_pure(s, {0});
        CMat rab = partial_trace(s.density(), {2, 2, 2}, {0, 1});
        CMat rac = partial_trace(s.density(), {2, 2, 2}, {0, 2});
        double cab = concurrence_2q(rab), cac = concurrence_2q(rac);
        slack[i] = cabc * cabc - cab * cab - cac * cac;
    }
    double worst = 1.0;
    for (double v : slack) worst = std::min(worst, v);
    return {"monogamy-sweep", worst >= -1e-8, "min CKW slack " + num12(worst)};
}

CheckResult selftest_recurrence() {
    double dev = 0.0;
    for (double F = 0.55; F <= 0.951; F += 0.05) {
        RecurrenceStep step = recurrence_step_exact(make_isotropic(2, F).rho);
        dev = std::max(dev, std::abs(step.fidelity - recurrence_map(F)));
        dev = std::max(dev, std::abs(step.pSuccess - recurrence_success_probability(F)));
    }
    return {"recurrence-oracle", dev < 1e-10, "max deviation " + num12(dev)};
}

int cmd_selftest(std::uint64_t seed, bool json, const std::string& outPath,
                 const std::string& command) {
    std::vector<CheckResult> checks = {selftest_soundness(seed), selftest_monogamy(seed),
                                       selftest_recurrence()};
    bool all = true;
    ordered_json doc = report_header(command, "seed=" + std::to_string(seed));
    doc["checks"] = ordered_json::array();
    std::string human;
    for (const CheckResult& c : checks) {
        all = all && c.pass;
        ordered_json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        doc["checks"].push_back(j);
        human += c.name + ": " + (c.pass ? "pass" : "FAIL") + " (" + c.detail + ")\n";
    }
    doc["pass"] = all;
    human += all ? "selftest: all checks passed\n" : "selftest: FAILURES present\n";
    emit(doc, human, json, outPath);
    return all ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    const std::string command = join_args(argc, argv);
    int rc = 0;

    CLI::App app{"exact density-matrix entanglement toolkit"};
    app.require_subcommand(1);

    // gen
    GenOpts g;
    CLI::App* gen = app.add_subcommand("gen", "generate a state file");
    gen->add_option("family", g.family,
                    "bell|maxent|ghz|w|werner|isotropic|smolin|chessboard|dur|"
                    "upb-shift|aharonov|avn-hyper|random-pure|random-density|random-separable")
        ->required();
    gen->add_option("--out", g.out, "output path (QSTATE 1)");
    gen->add_option("--d", g.d, "local dimension");
    gen->add_option("--n", g.n, "party count");
    gen->add_option("--k", g.k, "bell index 0..3");
    gen->add_option("--p", g.p, "werner mixing weight");
    gen->add_option("--f", g.f, "isotropic fidelity");
    gen->add_option("--a", g.a, "chessboard parameter");
    gen->add_option("--l0p", g.l0p, "dur weight lambda0+");
    gen->add_option("--l0m", g.l0m, "dur weight lambda0-");
    gen->add_option("--lk", g.lk, "dur weights, comma list");
    gen->add_option("--dims", g.dims, "factor dims, comma list");
    gen->add_option("--rank", g.rank, "density rank (0 = full)");
    gen->add_option("--terms", g.terms, "separable mixture terms");
    gen->add_option("--seed", g.seed, "rng seed");
    gen->add_flag("--json", g.json, "emit the JSON report");
    gen->callback([&] { cmd_gen(g, command); });

    // analyze
    std::string aIn, aCrit, aParts, aOut;
    bool aJson = false;
    CLI::App* an = app.add_subcommand("analyze", "run separability criteria");
    an->add_option("--in", aIn, "input state file")->required();
    an->add_option("--criteria", aCrit, "comma list (default: all applicable)");
    an->add_option("--partitions", aParts, "semicolon list of comma cuts, e.g. 0;0,1");
    an->add_option("--out", aOut, "write the JSON report here");
    an->add_flag("--json", aJson, "print JSON instead of text");
    an->callback([&] { cmd_analyze(aIn, aCrit, aParts, aJson, aOut, command); });

    // measure
    std::string mIn, mMeas, mSplit = "0", mOut;
    bool mJson = false;
    CLI::App* me = app.add_subcommand("measure", "evaluate entanglement measures");
    me->add_option("--in", mIn, "input state file")->required();
    me->add_option("--measures", mMeas, "comma list of measure tokens");
    me->add_option("--split", mSplit, "A-side subsystem indices (default 0)");
    me->add_option("--out", mOut, "write the JSON report here");
    me->add_flag("--json", mJson, "print JSON instead of text");
    me->callback([&] { cmd_measure(mIn, mMeas, mSplit, mJson, mOut, command); });

    // bell
    std::string bIn, bTest = "chsh", bSettings, bOut;
    bool bJson = false;
    CLI::App* be = app.add_subcommand("bell", "Bell-inequality tests");
    be->add_option("--in", bIn, "input state file")->required();
    be->add_option("--test", bTest, "chsh|wwzb|avn|toner");
    be->add_option("--settings", bSettings, "flat comma list of axis components");
    be->add_option("--out", bOut, "write the JSON report here");
    be->add_flag("--json", bJson, "print JSON instead of text");
    be->callback([&] { cmd_bell(bIn, bTest, bSettings, bJson, bOut, command); });

    // distill
    std::string dIn, dOut;
    double dF0 = NAN, dTarget = 0.99;
    std::size_t dRounds = 64;
    bool dExact = false, dJson = false;
    CLI::App* di = app.add_subcommand("distill", "recurrence distillation trace");
    di->add_option("--in", dIn, "two-qubit state file (F0 = singlet fraction)");
    di->add_option("--f0", dF0, "starting fidelity (alternative to --in)");
    di->add_option("--target", dTarget, "target fidelity");
    di->add_option("--max-rounds", dRounds, "round cap");
    di->add_flag("--exact", dExact, "run the exact two-copy circuit each round");
    di->add_option("--out", dOut, "write the JSON report here");
    di->add_flag("--json", dJson, "print JSON instead of text");
    di->callback([&] { cmd_distill(dIn, dF0, dTarget, dRounds, dExact, dJson, dOut, command); });

    // sim
    std::string sProto, sResource, sOut;
    double sFid = 1.0;
    std::size_t sSamples = 2000;
    std::uint64_t sSeed = 1;
    bool sJson = false;
    CLI::App* si = app.add_subcommand("sim", "protocol simulations");
    si->add_option("--protocol", sProto, "teleport|densecode|swap")->required();
    si->add_option("--resource", sResource, "teleport resource state file");
    si->add_option("--fidelity", sFid, "psi- fraction of the default resource");
    si->add_option("--samples", sSamples, "haar sample count");
    si->add_option("--seed", sSeed, "rng seed");
    si->add_option("--out", sOut, "write the JSON report here");
    si->add_flag("--json", sJson, "print JSON instead of text");
    si->callback([&] {
        cmd_sim(sProto, sResource, sFid, sSamples, sSeed, sJson, sOut, command);
    });

    // selftest
    std::uint64_t tSeed = 7;
    std::string tOut;
    bool tJson = false;
    CLI::App* st = app.add_subcommand("selftest", "invariant suite; nonzero exit on failure");
    st->add_option("--seed", tSeed, "rng seed");
    st->add_option("--out", tOut, "write the JSON report here");
    st->add_flag("--json", tJson, "print JSON instead of text");
    st->callback([&] { rc = cmd_selftest(tSeed, tJson, tOut, command); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const QentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return rc;
}

}  // namespace qent
