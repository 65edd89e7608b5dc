#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <disclab/errors.hpp>
#include <disclab/io.hpp>
#include <disclab/obstacle.hpp>
#include <disclab/oracle.hpp>
#include <disclab/parallel.hpp>
#include <disclab/seqspace.hpp>
#include <disclab/wizard.hpp>

#include "manifest.hpp"
#include "report.hpp"

namespace disclab::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Args {
    int level = 14;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    size_t walks = 1000000;
    int N = 256;
    std::string out;

    std::string weight, measure, b, G, F, f, g, h, profile, grid, at, z, of;
    double r = 0.95;
    std::string levels = "4..14";
    std::string window;
    double cmin = 0.05;
    double floor = 0.0;
    std::string kind = "h2";
    double p = 1.0;
    size_t samples = 1000;
    size_t checkSamples = 4096;
    int D = 32;
    double eps = 0.5;
    std::string ts, z0;
};

struct Context {
    Args& a;
    RunManifest manifest;
    Clock::time_point start;

    Json loadJson(const std::string& path) {
        need(path);
        auto j = io::readJsonFile(path);
        record(path);
        return j;
    }
    void record(const std::string& path) { manifest.inputs.push_back({path, sha256File(path)}); }
    void need(const std::string& path) const {
        if (path.empty()) throw inputError("MissingInput", "required input file not given");
    }
    Weight weight() { return io::weightFromJson(loadJson(a.weight)); }
    CircleMeasure measure() { return io::measureFromJson(loadJson(a.measure)); }
    BSymbol bsym() { return io::bSymbolFromJson(loadJson(a.b)); }
    RadialWeight radial() { return io::radialFromJson(loadJson(a.G)); }
    TaylorSeries coeffs(const std::string& path) {
        need(path);
        auto s = io::readCoefficientsCsv(path);
        record(path);
        return s;
    }
    std::vector<Complex> points(const std::string& path) {
        need(path);
        auto z = io::readPointsCsv(path);
        record(path);
        return z;
    }
    std::vector<double> reals(const std::string& path) {
        need(path);
        auto x = io::readRealsCsv(path);
        record(path);
        return x;
    }

    void stamp() { manifest.wallTime = std::chrono::duration<double>(Clock::now() - start).count(); }

    void write(const std::string& text) {
        if (a.out.empty()) std::cout << text;
        else io::writeTextFile(a.out, text);
    }
    void emitJson(const Json& result) {
        stamp();
        Json doc = {{"schema_version", io::kSchemaVersion}, {"manifest", manifest.toJson()}, {"result", result}};
        write(doc.dump(2) + "\n");
    }
    // body starts with its header line
    void emitCsv(const std::string& body, const std::vector<std::string>& notes = {}) {
        stamp();
        std::string text = "# schema_version: " + std::to_string(io::kSchemaVersion) + "\n";
        text += "# manifest: " + manifest.toJson().dump() + "\n";
        for (const auto& n : notes) text += "# " + n + "\n";
        write(text + body);
    }
};

int verdictCode(Verdict v) { return v == Verdict::Inconclusive ? 3 : 0; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

double toDouble(const std::string& s) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw inputError("BadFlag", "not a number: '" + s + "'");
    }
}

std::pair<long, long> parseRange(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw inputError("BadFlag", "expected lo..hi, got '" + s + "'");
    return {std::lround(toDouble(s.substr(0, pos))), std::lround(toDouble(s.substr(pos + 2)))};
}

std::vector<int> parseLevels(const std::string& s) {
    std::vector<int> out;
    if (s.find("..") != std::string::npos) {
        auto [lo, hi] = parseRange(s);
        if (lo > hi || lo < 0) throw inputError("BadFlag", "bad level range '" + s + "'");
        for (long l = lo; l <= hi; ++l) out.push_back(static_cast<int>(l));
    } else {
        for (const auto& t : split(s, ',')) out.push_back(static_cast<int>(std::lround(toDouble(t))));
    }
    if (out.empty()) throw inputError("BadFlag", "no levels given");
    return out;
}

Complex parseComplex(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw inputError("BadFlag", "expected re,im, got '" + s + "'");
    return {toDouble(parts[0]), toDouble(parts[1])};
}

std::string pointsCsv(const std::vector<Complex>& zs, const std::vector<Complex>& vals) {
    std::string out = "re_z,im_z,re,im\n";
    for (size_t i = 0; i < zs.size(); ++i)
        out += io::formatDouble(zs[i].real()) + "," + io::formatDouble(zs[i].imag()) + "," +
               io::formatDouble(vals[i].real()) + "," + io::formatDouble(vals[i].imag()) + "\n";
    return out;
}

// ---------------------------------------------------------------- commands

int cmdCore(Context& c) {
    auto w = c.weight();
    LogIntegralOptions opt;
    opt.tol = c.a.tol;
    auto core = coreSet(w, c.a.level, opt);
    auto res = residualSet(w, core);
    Json r = toJson(core);
    r["residual"] = toJson(res);
    c.emitJson(r);
    return core.inconclusive.empty() ? 0 : 3;
}

int cmdMoments(Context& c) {
    auto G = c.radial();
    if (c.a.N < 0) throw inputError("BadFlag", "--N must be nonnegative");
    std::vector<double> err;
    auto M = momentsOfG(G, static_cast<size_t>(c.a.N), &err);
    std::string body = "n,M_n,log_inv_M_n,rel_error\n";
    for (size_t n = 0; n < M.size(); ++n)
        body += std::to_string(n) + "," + io::formatDouble(M[n]) + "," + io::formatDouble(M.logInv(n)) + "," +
                io::formatDouble(err[n]) + "\n";
    c.emitCsv(body, {"G: " + G.describe()});
    return 0;
}

int cmdLegendre(Context& c, const std::string& mode) {
    auto k = io::envelopeFromJson(c.loadJson(c.a.f));
    auto xs = c.reals(c.a.grid);
    std::vector<EnvelopeValue> v;
    std::vector<double> errs(xs.size(), 0.0);
    if (mode == "lower") v = lowerEnvelope(k, xs);
    else if (mode == "upper") v = upperEnvelope(k, xs);
    else {
        v = lowerEnvelope(conjugateOf(k), xs);
        for (size_t i = 0; i < xs.size(); ++i) errs[i] = v[i].unbounded ? INFINITY : std::fabs(v[i].value - k(xs[i]));
    }
    std::string body = "x,value,errbound\n";
    for (size_t i = 0; i < xs.size(); ++i)
        body += io::formatDouble(xs[i]) + "," + (v[i].unbounded ? std::string("inf") : io::formatDouble(v[i].value)) +
                "," + io::formatDouble(errs[i]) + "\n";
    c.emitCsv(body, {"mode: " + mode, "f: " + k.describe()});
    return 0;
}

int cmdTransform(Context& c, const std::string& kind) {
    auto zs = c.points(c.a.at);
    std::vector<Complex> vals;
    if (kind == "outer") {
        auto phi = LogModulus::logOf(c.weight());
        for (auto z : zs) vals.push_back(outerFromLogModulus(phi, z));
    } else {
        auto nu = c.measure();
        for (auto z : zs) {
            if (kind == "cauchy") vals.push_back(cauchyTransform(nu, z));
            else if (kind == "poisson") vals.push_back(poissonIntegral(nu, z));
            else if (kind == "herglotz") vals.push_back(herglotzIntegral(nu, z));
            else if (kind == "inner") vals.push_back(singularInner(nu, z));
            else vals.push_back(clarkToB(nu, z));
        }
    }
    c.emitCsv(pointsCsv(zs, vals), {"transform: " + kind});
    return 0;
}

int cmdTaylor(Context& c) {
    auto pos = c.a.of.find(':');
    if (pos == std::string::npos) throw inputError("BadFlag", "--of expects kind:arg");
    std::string kind = c.a.of.substr(0, pos), arg = c.a.of.substr(pos + 1);
    TaylorSeries s;
    if (kind == "exp-sqrt") {
        double C = toDouble(arg);
        std::vector<Complex> co;
        for (int n = 0; n <= c.a.N; ++n) co.push_back(std::exp(-C * std::sqrt(static_cast<double>(n))));
        s = TaylorSeries(std::move(co));
    } else if (kind == "cauchy") {
        s = cauchyCoefficients(io::measureFromJson(c.loadJson(arg)), c.a.N);
    } else {
        std::function<Complex(Complex)> fn;
        if (kind == "inner") {
            auto nu = io::measureFromJson(c.loadJson(arg));
            fn = [nu](Complex z) { return singularInner(nu, z); };
        } else if (kind == "clark") {
            auto nu = io::measureFromJson(c.loadJson(arg));
            fn = [nu](Complex z) { return clarkToB(nu, z); };
        } else if (kind == "outer") {
            auto phi = LogModulus::logOf(io::weightFromJson(c.loadJson(arg)));
            fn = [phi](Complex z) { return outerFromLogModulus(phi, z); };
        } else if (kind == "b") {
            auto b = io::bSymbolFromJson(c.loadJson(arg));
            fn = [b](Complex z) { return b(z); };
        } else {
            throw inputError("BadFlag", "unknown --of kind '" + kind + "'");
        }
        s = taylorOf(fn, c.a.N, c.a.r);
    }
    c.emitCsv(io::coefficientsCsv(s), {"condition_estimate: " + io::formatDouble(s.conditionEstimate)});
    return 0;
}

int cmdSeqspace(Context& c, const std::string& op) {
    if (op == "pair") {
        auto v = pairing(c.coeffs(c.a.f), c.coeffs(c.a.g));
        c.emitJson({{"pairing", io::toJson(v)}});
        return 0;
    }
    if (op == "toeplitz") {
        auto h = c.coeffs(c.a.h), f = c.coeffs(c.a.f);
        auto t = toeplitzCoanalytic(h, f, static_cast<size_t>(c.a.N));
        c.emitCsv(io::coefficientsCsv(t.series), {"truncation_bound: " + io::formatDouble(t.truncationBound)});
        return 0;
    }
    if (op == "rsd") {
        auto f = c.coeffs(c.a.f);
        RsdOptions opt;
        opt.cMin = c.a.cmin;
        opt.noiseFloor = c.a.floor;
        if (!c.a.window.empty()) {
            auto [lo, hi] = parseRange(c.a.window);
            if (lo < 0 || hi < lo) throw inputError("BadFlag", "bad --window");
            opt.window = IndexRange{static_cast<size_t>(lo), static_cast<size_t>(hi)};
        }
        auto v = rsdClassify(f, opt);
        c.emitJson(toJson(v));
        return v.verdict == RsdVerdict::Kind::Inconclusive ? 3 : 0;
    }
    auto G = c.radial();
    if (op == "norm") {
        auto f = c.coeffs(c.a.f);
        auto M = momentsOfG(G, f.degree());
        double v;
        if (c.a.kind == "h2") v = h2Norm(M, f);
        else if (c.a.kind == "h2star") v = h2StarNorm(M, f);
        else if (c.a.kind == "h1star") v = h1StarNorm(M, f);
        else throw inputError("BadFlag", "--kind must be h2, h2star or h1star");
        c.emitJson({{"kind", c.a.kind}, {"value", v}});
        return 0;
    }
    if (op == "identity") {
        auto f = c.coeffs(c.a.f);
        c.emitJson({{"relative_error", normIdentityCheck(G, f)}});
        return 0;
    }
    auto M = momentsOfG(G, static_cast<size_t>(c.a.N));
    auto rep = embeddingCheck(M, c.a.p, c.a.samples, c.a.seed);
    c.emitJson(toJson(rep));
    return rep.supported ? 0 : 3;
}

int cmdOracle(Context& c, const std::string& op) {
    if (op == "hb-exist" || op == "hb-dense") {
        auto b = c.bsym();
        auto r = op == "hb-exist" ? hbExistence(b, c.a.level) : hbDensity(b, c.a.level, c.a.tol);
        c.emitJson(toJson(r));
        return verdictCode(r.verdict);
    }
    auto nu = c.measure();
    if (op == "thmC") {
        auto r = theoremCCheck(nu, c.a.N, c.a.level, c.a.tol);
        c.emitJson(toJson(r));
        return r.status == TheoremCReport::Status::Inconclusive ? 3 : 0;
    }
    auto w = c.weight();
    if (op == "classify") {
        std::vector<Complex> zeros;
        if (!c.a.b.empty()) zeros = c.bsym().zeros;
        auto r = classifyInvariantSubspace(zeros, nu, w, c.a.level);
        c.emitJson(toJson(r));
        return 0;
    }
    auto v = op == "cyclic" ? isCyclic(nu, w, c.a.level, c.a.tol) : hasPermanence(nu, w, c.a.level, c.a.tol);
    c.emitJson(toJson(v));
    return verdictCode(v.verdict);
}

int cmdObstacle(Context& c) {
    auto nu = c.measure();
    auto w = c.weight();
    auto levels = parseLevels(c.a.levels);
    auto core = coreSet(w, c.a.level);
    std::vector<ObstacleFunction> seq;
    Json lv = Json::array();
    for (int L : levels) {
        seq.push_back(buildObstacleSequence(nu, w, L, core, c.a.tol));
        lv.push_back(toJson(seq.back(), c.a.checkSamples));
    }
    Json ws = Json::array();
    for (const auto& r : weakStarError(seq, nu, c.a.D)) ws.push_back(toJson(r));
    c.emitJson({{"levels", lv}, {"weak_star", ws}, {"weak_star_D", c.a.D}, {"core", toJson(core)}});
    return 0;
}

int cmdWitness(Context& c) {
    auto nu = c.measure();
    auto w = c.weight();
    auto zs = c.points(c.a.z);
    auto rows = cyclicWitness(nu, w, parseLevels(c.a.levels), zs, c.a.level);
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(toJson(r));
    c.emitJson({{"rows", j}});
    return 0;
}

int cmdHatBuild(Context& c) {
    auto F = io::majorantFromJson(c.loadJson(c.a.F));
    auto W = buildProfile(F, c.a.eps);
    auto hb = hatBoundaryIntegralBound(W, F);
    Json r = toJson(W, hb);
    r["F"] = io::toJson(F);
    c.emitJson(r);
    return 0;
}

int cmdHatVerify(Context& c) {
    Json j = c.loadJson(c.a.profile);
    const Json& body = j.contains("result") ? j["result"] : j;
    Profile p = io::profileFromJson(body);
    double a = body.value("a", 0.0), b = body.value("b", 2.0);
    HatDomain D(p, a, b);
    Complex z0;
    if (c.a.z0.empty()) {
        double mid = 0.5 * (a + b);
        z0 = {mid, 0.5 * D.upper(mid)};
    } else {
        z0 = parseComplex(c.a.z0);
    }
    std::vector<double> ts;
    if (c.a.ts.empty()) {
        for (double s : {0.25, 0.5, 0.75, 0.9}) ts.push_back(a + s * (z0.real() - a));
    } else {
        for (const auto& t : split(c.a.ts, ',')) ts.push_back(toDouble(t));
    }
    WalkOptions opt;
    opt.walks = c.a.walks;
    opt.seed = c.a.seed;
    auto T = verifyBtBound(p, a, b, ts, z0, opt);
    std::string csv = "t,estimate,std_error,bound,full_width_bound,pass\n";
    for (const auto& r : T.rows)
        csv += io::formatDouble(r.t) + "," + io::formatDouble(r.estimate) + "," + io::formatDouble(r.stdError) + "," +
               io::formatDouble(r.bound) + "," + io::formatDouble(r.fullWidthBound) + "," + (r.pass ? "1" : "0") + "\n";
    c.emitCsv(csv, {"z0: " + io::formatDouble(z0.real()) + "," + io::formatDouble(z0.imag()),
                    "walks: " + std::to_string(T.walks) + ", non-converged: " + std::to_string(T.nonConverged),
                    "step rule: " + T.stepRule, std::string("all pass: ") + (T.allPass ? "yes" : "no")});
    return 0;
}

int cmdDemo(Context& c) {
    auto w = Weight::expDist(ClosedSet::point(0.0));
    double tol = 1e-8;
    auto at0 = isCyclic(CircleMeasure::dirac(0.0), w, c.a.level, tol);
    auto atPi = isCyclic(CircleMeasure::dirac(kPi), w, c.a.level, tol);
    bool ok = at0.verdict == Verdict::Yes && atPi.verdict == Verdict::No;
    c.emitJson({{"weight", io::toJson(w)},
                {"level", c.a.level},
                {"tol", tol},
                {"cyclic_at_0", toString(at0.verdict)},
                {"cyclic_at_pi", toString(atPi.verdict)},
                {"expected", {{"cyclic_at_0", "yes"}, {"cyclic_at_pi", "no"}}},
                {"reproduced", ok}});
    if (at0.verdict == Verdict::Inconclusive || atPi.verdict == Verdict::Inconclusive) return 3;
    return ok ? 0 : 4;
}

// ---------------------------------------------------------------- wiring

struct Leaf {
    CLI::App* app;
    std::string name;
    std::function<int(Context&)> run;
};

void collectFlags(const CLI::App* app, std::map<std::string, std::string>& flags) {
    for (const CLI::Option* o : app->get_options()) {
        if (o->count() == 0 || o->get_name() == "--help") continue;
        std::string v;
        for (const auto& r : o->results()) v += (v.empty() ? "" : ",") + r;
        flags[o->get_name()] = v;
    }
}

int fail(const std::string& code, const std::string& what, int exit) {
    Json e = {{"schema_version", io::kSchemaVersion}, {"error", code}, {"message", what}, {"exit_code", exit}};
    std::cerr << e.dump() << "\n";
    return exit;
}

} // namespace

int run(int argc, char** argv) {
    auto start = Clock::now();
    Args a;
    CLI::App app{"disclab: cyclicity, core sets and sequence spaces on the unit circle"};
    app.set_version_flag("--version", DISCLAB_VERSION);
    app.require_subcommand(1);
    std::vector<Leaf> leaves;

    auto common = [&](CLI::App* s) {
        s->add_option("--out", a.out, "Output file (stdout if omitted)");
        return s;
    };
    auto levelTol = [&](CLI::App* s) {
        s->add_option("--level", a.level, "Dyadic resolution K")->check(CLI::Range(1, 40));
        s->add_option("--tol", a.tol, "Tolerance")->check(CLI::PositiveNumber);
    };

    auto* core = common(app.add_subcommand("core", "core(w) and res(w) at resolution K"));
    core->add_option("--weight", a.weight, "Weight JSON")->required();
    levelTol(core);
    leaves.push_back({core, "core", cmdCore});

    auto* mom = common(app.add_subcommand("moments", "Moments M_n = 2 P_G(2n+1)"));
    mom->add_option("--G", a.G, "Radial weight JSON")->required();
    mom->add_option("--N", a.N, "Largest index");
    leaves.push_back({mom, "moments", cmdMoments});

    const std::map<std::string, std::string> help = {
        {"lower", "m_*(x) = inf_y m(y) + x y on a grid"},
        {"upper", "k^*(x) = sup_y k(y) - x y on a grid"},
        {"invert", "(k^*)_* against k on a grid"},
        {"cauchy", "int dnu(x) / (1 - conj(x) z)"},
        {"poisson", "Poisson integral of nu"},
        {"herglotz", "int (x + z)/(x - z) dnu(x)"},
        {"inner", "singular inner function S_nu"},
        {"outer", "outer function with modulus w on the circle"},
        {"clark", "b from its Clark measure"},
        {"norm", "weighted l2 norms of f"},
        {"pair", "sum f_n conj(g_n)"},
        {"toeplitz", "coanalytic Toeplitz operator applied to f"},
        {"rsd", "rapid spectral decay verdict"},
        {"identity", "area integral against the moment sum"},
        {"embed", "embedding inequality on random sequences"},
        {"cyclic", "is S_nu cyclic for w"},
        {"permanence", "does nu give permanence for w"},
        {"classify", "invariant subspace parameters"},
        {"hb-exist", "b has a zero in the disk or core(Delta_b) is nonempty"},
        {"hb-dense", "core(Delta_b) carries Delta_b and the singular measure"},
        {"thmC", "rsd coefficients versus core carrier"},
        {"build", "profile for a majorant F"},
        {"verify", "walk-on-spheres check of the harmonic-measure bound"},
    };

    auto* leg = app.add_subcommand("legendre", "Legendre envelopes");
    leg->require_subcommand(1);
    for (const char* m : {"lower", "upper", "invert"}) {
        auto* s = common(leg->add_subcommand(m, help.at(m)));
        s->add_option("--f", a.f, "Envelope function JSON")->required();
        s->add_option("--grid", a.grid, "CSV of x values")->required();
        std::string mode = m;
        leaves.push_back({s, std::string("legendre ") + m, [mode](Context& c) { return cmdLegendre(c, mode); }});
    }

    auto* tr = app.add_subcommand("transform", "Cauchy, Poisson, Herglotz, inner, outer and Clark transforms");
    tr->require_subcommand(1);
    for (const char* k : {"cauchy", "poisson", "herglotz", "inner", "outer", "clark"}) {
        auto* s = common(tr->add_subcommand(k, help.at(k)));
        std::string kind = k;
        if (kind == "outer") s->add_option("--weight", a.weight, "Weight JSON (log-modulus log w)")->required();
        else s->add_option("--measure", a.measure, "Measure JSON")->required();
        s->add_option("--at", a.at, "CSV of disk points (re, im)")->required();
        leaves.push_back({s, "transform " + kind, [kind](Context& c) { return cmdTransform(c, kind); }});
    }

    auto* tay = common(app.add_subcommand("taylor", "Taylor coefficients"));
    tay->add_option("--of", a.of, "cauchy|inner|clark:nu.json, outer:w.json, b:b.json or exp-sqrt:C")->required();
    tay->add_option("--N", a.N, "Degree");
    tay->add_option("--r", a.r, "Sampling radius")->check(CLI::Range(0.0, 1.0));
    leaves.push_back({tay, "taylor", cmdTaylor});

    auto* seq = app.add_subcommand("seqspace", "Weighted sequence spaces");
    seq->require_subcommand(1);
    for (const char* op : {"norm", "pair", "toeplitz", "rsd", "identity", "embed"}) {
        auto* s = common(seq->add_subcommand(op, help.at(op)));
        std::string o = op;
        if (o == "norm" || o == "identity" || o == "embed") s->add_option("--G", a.G, "Radial weight JSON")->required();
        if (o != "embed") s->add_option("--f", a.f, "Coefficient CSV (n, re, im)")->required();
        if (o == "pair") s->add_option("--g", a.g, "Coefficient CSV")->required();
        if (o == "toeplitz") {
            s->add_option("--symbol", a.h, "Symbol coefficient CSV")->required();
            s->add_option("--N", a.N, "Output degree");
        }
        if (o == "norm") s->add_option("--kind", a.kind, "h2, h2star or h1star");
        if (o == "rsd") {
            s->add_option("--window", a.window, "Index window lo..hi");
            s->add_option("--cmin", a.cmin, "Smallest decay constant called rsd");
            s->add_option("--floor", a.floor, "Extra noise floor");
        }
        if (o == "embed") {
            s->add_option("--N", a.N, "Largest index");
            s->add_option("--p", a.p, "Exponent p");
            s->add_option("--samples", a.samples, "Random sequences");
            s->add_option("--seed", a.seed, "Seed");
        }
        leaves.push_back({s, "seqspace " + o, [o](Context& c) { return cmdSeqspace(c, o); }});
    }

    auto* orc = app.add_subcommand("oracle", "Cyclicity and de Branges-Rovnyak oracles");
    orc->require_subcommand(1);
    for (const char* op : {"cyclic", "permanence", "classify", "hb-exist", "hb-dense", "thmC"}) {
        auto* s = common(orc->add_subcommand(op, help.at(op)));
        std::string o = op;
        levelTol(s);
        if (o == "hb-exist" || o == "hb-dense") {
            s->add_option("--b", a.b, "b symbol JSON")->required();
        } else {
            s->add_option("--measure", a.measure, "Measure JSON")->required();
            if (o == "thmC") s->add_option("--N", a.N, "Number of Cauchy coefficients");
            else s->add_option("--weight", a.weight, "Weight JSON")->required();
            if (o == "classify") s->add_option("--b", a.b, "b symbol JSON supplying zeros");
        }
        leaves.push_back({s, "oracle " + o, [o](Context& c) { return cmdOracle(c, o); }});
    }

    auto* obs = common(app.add_subcommand("obstacle", "Obstacle sequence f_n"));
    obs->add_option("--measure", a.measure, "Measure JSON")->required();
    obs->add_option("--weight", a.weight, "Weight JSON")->required();
    obs->add_option("--levels", a.levels, "Levels lo..hi or a comma list");
    obs->add_option("--level", a.level, "Core resolution K")->check(CLI::Range(1, 40));
    obs->add_option("--tol", a.tol, "Cell mass tolerance")->check(CLI::PositiveNumber);
    obs->add_option("--D", a.D, "Largest Fourier index for the weak-star table");
    obs->add_option("--samples", a.checkSamples, "Obstacle check samples");
    leaves.push_back({obs, "obstacle", cmdObstacle});

    auto* wit = common(app.add_subcommand("witness", "Cyclicity witness h_n S_nu -> 1"));
    wit->add_option("--measure", a.measure, "Measure JSON")->required();
    wit->add_option("--weight", a.weight, "Weight JSON")->required();
    wit->add_option("--z", a.z, "CSV of disk points (re, im)")->required();
    wit->add_option("--levels", a.levels, "Levels lo..hi or a comma list");
    wit->add_option("--level", a.level, "Core resolution K")->check(CLI::Range(1, 40));
    leaves.push_back({wit, "witness", cmdWitness});

    auto* hat = app.add_subcommand("hat", "Wizard-hat profile and harmonic-measure check");
    hat->require_subcommand(1);
    auto* hb = common(hat->add_subcommand("build", help.at("build")));
    hb->add_option("--F", a.F, "Majorant JSON")->required();
    hb->add_option("--eps", a.eps, "Bound for sum gamma_n");
    leaves.push_back({hb, "hat build", cmdHatBuild});
    auto* hv = common(hat->add_subcommand("verify", help.at("verify")));
    hv->add_option("--profile", a.profile, "Profile JSON (hat build output or a bare profile)")->required();
    hv->add_option("--walks", a.walks, "Number of walks");
    hv->add_option("--seed", a.seed, "Master seed");
    hv->add_option("--t", a.ts, "Comma list of t values");
    hv->add_option("--z0", a.z0, "Start point re,im");
    leaves.push_back({hv, "hat verify", cmdHatVerify});

    auto* demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    auto* ex = common(demo->add_subcommand("example-1-5", "exp(-1/dist(x, 1)): cyclic at angle 0, not at pi"));
    ex->add_option("--level", a.level, "Dyadic resolution K")->check(CLI::Range(1, 40));
    leaves.push_back({ex, "demo example-1-5", cmdDemo});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const auto& leaf : leaves) {
        if (!leaf.app->parsed()) continue;
        Context ctx{a, {}, start};
        for (int i = 0; i < argc; ++i) ctx.manifest.argv.push_back(argv[i]);
        ctx.manifest.command = leaf.name;
        for (const CLI::App* p = leaf.app; p; p = p->get_parent()) collectFlags(p, ctx.manifest.flags);
        ctx.manifest.seed = a.seed;
        ctx.manifest.version = DISCLAB_VERSION;
        ctx.manifest.workers = workerCount();
        try {
            return leaf.run(ctx);
        } catch (const Error& e) {
            return fail(e.code(), e.what(), exitCodeFor(e.errorClass()));
        } catch (const io::Json::exception& e) {
            return fail("SchemaError", e.what(), 2);
        } catch (const std::exception& e) {
            return fail("InternalError", e.what(), 4);
        }
    }
    return fail("NoCommand", "no subcommand selected", 2);
}

} // namespace disclab::cli
