#include "disclab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "disclab/errors.hpp"

namespace disclab::io {

namespace {

Error schema(const std::string& what) { return inputError("SchemaError", what); }

void checkVersion(const Json& j) {
    if (!j.is_object()) throw schema("expected a JSON object");
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        throw schema("unsupported schema_version " + j["schema_version"].dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw schema(std::string("missing field '") + key + "'");
    return j[key];
}

double num(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number()) throw schema(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

double numOr(const Json& j, const char* key, double fallback) {
    return j.is_object() && j.contains(key) ? num(j, key) : fallback;
}

std::vector<double> numbers(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw schema(std::string("field '") + key + "' must be an array");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw schema(std::string("field '") + key + "' must hold numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

const Json& params(const Json& j) {
    static const Json empty = Json::object();
    return j.contains("params") ? j["params"] : empty;
}

std::string family(const Json& j) {
    const Json& f = field(j, "family");
    if (!f.is_string()) throw schema("family must be a string");
    return f.get<std::string>();
}

Json arcJson(const Arc& a) { return {{"start", a.start}, {"length", a.length}}; }

Arc arcFromJson(const Json& j) { return Arc(num(j, "start"), num(j, "length")); }

Weight presetFromJson(const Json& j) {
    std::string f = family(j);
    const Json& p = params(j);
    if (f == "constant") return Weight::constant(num(p, "c"));
    if (f == "power") return Weight::power(num(p, "a"), num(p, "gamma"));
    if (f == "expdist") return Weight::expDist(closedSetFromJson(field(p, "set")), numOr(p, "s", 1.0), numOr(p, "gamma", 1.0));
    if (f == "indicator") return Weight::indicator(closedSetFromJson(field(p, "set")));
    throw schema("unknown weight family '" + f + "'");
}

Json factorJson(const Weight::Factor& f) {
    switch (f.type) {
    case Weight::Factor::Type::Constant: return {{"family", "constant"}, {"params", {{"c", f.c}}}};
    case Weight::Factor::Type::Power: return {{"family", "power"}, {"params", {{"a", f.a}, {"gamma", f.gamma}}}};
    case Weight::Factor::Type::ExpDist:
        return {{"family", "expdist"}, {"params", {{"s", f.s}, {"gamma", f.gamma}, {"set", toJson(f.set)}}}};
    case Weight::Factor::Type::Indicator: return {{"family", "indicator"}, {"params", {{"set", toJson(f.set)}}}};
    }
    return {};
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

// Splits on commas; returns false if any cell is not a number.
bool parseRow(const std::string& line, std::vector<double>& out) {
    out.clear();
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::string t = trim(cell);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) return false;
        out.push_back(v);
    }
    return !out.empty();
}

std::vector<std::vector<double>> readCsv(const std::string& path, size_t minCols) {
    std::ifstream in(path);
    if (!in) throw inputError("MissingFile", "cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    size_t lineNo = 0;
    bool header = false;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++lineNo;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        if (!parseRow(line, row)) {
            if (rows.empty() && !header) {
                header = true;
                continue;
            }
            throw schema(path + ":" + std::to_string(lineNo) + ": not a numeric row");
        }
        if (row.size() < minCols)
            throw schema(path + ":" + std::to_string(lineNo) + ": expected " + std::to_string(minCols) + " columns");
        rows.push_back(row);
    }
    return rows;
}

} // namespace

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw inputError("MissingFile", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw schema(path + ": " + e.what());
    }
}

void writeTextFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw inputError("UnwritableOutput", "cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- sets

ClosedSet closedSetFromJson(const Json& j) {
    if (!j.is_object()) throw schema("closed set must be an object");
    ClosedSet E;
    if (j.contains("points"))
        for (double t : numbers(j, "points")) E.arcs.push_back(Arc(t, 0.0, true));
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) throw schema("arcs must be an array");
        for (const auto& a : j["arcs"]) E.arcs.push_back(Arc(num(a, "start"), num(a, "length"), true));
    }
    if (j.contains("cantor")) {
        const Json& c = j["cantor"];
        E.cantor = FatCantor(numOr(c, "start", 0.0), numOr(c, "length", kTwoPi),
                             static_cast<int>(numOr(c, "depth", 24)));
    }
    if (E.arcs.empty() && !E.cantor) throw schema("closed set is empty");
    return E;
}

Json toJson(const ClosedSet& E) {
    Json j = Json::object();
    Json pts = Json::array(), arcs = Json::array();
    for (const auto& a : E.arcs) {
        if (a.length == 0.0) pts.push_back(a.start);
        else arcs.push_back(arcJson(a));
    }
    if (!pts.empty()) j["points"] = pts;
    if (!arcs.empty()) j["arcs"] = arcs;
    if (E.cantor)
        j["cantor"] = {{"start", E.cantor->start()}, {"length", E.cantor->length()}, {"depth", E.cantor->depth()}};
    return j;
}

ArcSet arcSetFromJson(const Json& j) {
    if (!j.is_array()) throw schema("arc set must be an array of arcs");
    std::vector<Arc> arcs;
    for (const auto& a : j) arcs.push_back(arcFromJson(a));
    return ArcSet(arcs);
}

Json toJson(const ArcSet& s) {
    Json j = Json::array();
    for (const auto& a : s.arcs()) j.push_back(arcJson(a));
    return j;
}

// ---------------------------------------------------------------- weights

Weight weightFromJson(const Json& j) {
    checkVersion(j);
    std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "preset";
    if (kind == "grid") {
        std::vector<double> sing = j.contains("singular_points") ? numbers(j, "singular_points") : std::vector<double>{};
        return Weight::grid(numbers(j, "samples"), sing, numOr(j, "floor", 0.0));
    }
    if (kind != "preset") throw schema("weight kind must be preset or grid");
    if (j.contains("factors")) {
        if (!j["factors"].is_array() || j["factors"].empty()) throw schema("factors must be a nonempty array");
        Weight w = presetFromJson(j["factors"][0]);
        for (size_t i = 1; i < j["factors"].size(); ++i) w = w * presetFromJson(j["factors"][i]);
        return w;
    }
    return presetFromJson(j);
}

Json toJson(const Weight& w) {
    Json j = {{"schema_version", kSchemaVersion}};
    if (w.kind() == Weight::Kind::Grid) {
        j["kind"] = "grid";
        j["samples"] = w.samples();
        j["singular_points"] = w.singularPoints();
        j["floor"] = w.floor();
        return j;
    }
    j["kind"] = "preset";
    if (w.factors().size() == 1) {
        Json f = factorJson(w.factors()[0]);
        j["family"] = f["family"];
        j["params"] = f["params"];
    } else {
        j["factors"] = Json::array();
        for (const auto& f : w.factors()) j["factors"].push_back(factorJson(f));
    }
    return j;
}

// ---------------------------------------------------------------- measures

Json toJson(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complexFromJson(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw schema("complex numbers are [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

CircleMeasure measureFromJson(const Json& j) {
    checkVersion(j);
    CircleMeasure nu;
    bool any = false;
    if (j.contains("atoms")) {
        if (!j["atoms"].is_array()) throw schema("atoms must be an array");
        std::vector<Atom> atoms;
        for (const auto& a : j["atoms"]) atoms.push_back({num(a, "angle"), numOr(a, "mass", 1.0)});
        nu = nu + CircleMeasure::fromAtoms(atoms);
        any = true;
    }
    if (j.contains("density")) {
        const Json& d = j["density"];
        if (d.contains("grid")) {
            std::vector<Complex> g;
            for (const auto& z : d["grid"]) g.push_back(complexFromJson(z));
            nu = nu + CircleMeasure::fromGrid(std::move(g));
        } else {
            nu = nu + CircleMeasure::fromDensity(weightFromJson(field(d, "modulus")),
                                                 static_cast<int>(numOr(d, "phase", 0)));
        }
        any = true;
    }
    if (j.contains("cantor")) {
        Json list = j["cantor"].is_array() ? j["cantor"] : Json::array({j["cantor"]});
        for (const auto& c : list) {
            SelfSimilar s;
            s.ratio = numOr(c, "ratio", 1.0 / 3.0);
            s.arity = static_cast<int>(numOr(c, "arity", 2));
            if (c.contains("base")) s.base = arcFromJson(c["base"]);
            s.mass = numOr(c, "mass", 1.0);
            if (c.contains("window")) s.window = arcSetFromJson(c["window"]);
            nu = nu + CircleMeasure::selfSimilar(s);
        }
        any = true;
    }
    if (!any && !(j.contains("zero") && j["zero"] == true)) throw schema("measure needs atoms, density or cantor");
    return nu;
}

Json toJson(const CircleMeasure& nu) {
    Json j = {{"schema_version", kSchemaVersion}};
    if (!nu.atoms().empty()) {
        j["atoms"] = Json::array();
        for (const auto& a : nu.atoms()) j["atoms"].push_back({{"angle", a.angle}, {"mass", a.mass}});
    }
    if (const auto& d = nu.density()) {
        if (d->isGrid()) {
            Json g = Json::array();
            for (auto z : d->grid) g.push_back(toJson(z));
            j["density"] = {{"grid", g}};
        } else {
            j["density"] = {{"modulus", toJson(*d->modulus)}, {"phase", d->phase}};
        }
    }
    if (!nu.selfSimilarParts().empty()) {
        j["cantor"] = Json::array();
        for (const auto& s : nu.selfSimilarParts()) {
            Json c = {{"ratio", s.ratio}, {"arity", s.arity}, {"base", arcJson(s.base)}, {"mass", s.mass}};
            if (s.window) c["window"] = toJson(*s.window);
            j["cantor"].push_back(c);
        }
    }
    if (nu.isZero() && !j.contains("atoms") && !j.contains("density") && !j.contains("cantor")) j["zero"] = true;
    return j;
}

// ---------------------------------------------------------------- radial, envelopes, majorants

EnvelopeFunction envelopeFromJson(const Json& j) {
    checkVersion(j);
    std::string f = family(j);
    const Json& p = params(j);
    if (f == "powerInv") return EnvelopeFunction::powerInv(num(p, "c"), num(p, "beta"));
    if (f == "sqrtScale") return EnvelopeFunction::sqrtScale(num(p, "d"));
    if (f == "constant") return EnvelopeFunction::constant(num(p, "m0"));
    if (f == "piecewiseLinear") {
        std::string shape = p.value("shape", "decreasing-convex");
        std::string tail = p.value("tail", "linear");
        EnvelopeFunction::Shape s;
        if (shape == "decreasing-convex") s = EnvelopeFunction::Shape::DecreasingConvex;
        else if (shape == "increasing-concave") s = EnvelopeFunction::Shape::IncreasingConcave;
        else throw schema("shape must be decreasing-convex or increasing-concave");
        if (tail != "linear" && tail != "sqrt") throw schema("tail must be linear or sqrt");
        return EnvelopeFunction::piecewiseLinear(numbers(p, "x"), numbers(p, "y"), s,
                                                 tail == "sqrt" ? EnvelopeFunction::Tail::Sqrt
                                                                : EnvelopeFunction::Tail::Linear);
    }
    throw schema("unknown envelope family '" + f + "'");
}

Json toJson(const EnvelopeFunction& k) {
    Json j = {{"schema_version", kSchemaVersion}};
    switch (k.kind()) {
    case EnvelopeFunction::Kind::PowerInv:
        j["family"] = "powerInv";
        j["params"] = {{"c", k.c()}, {"beta", k.beta()}};
        break;
    case EnvelopeFunction::Kind::SqrtScale:
        j["family"] = "sqrtScale";
        j["params"] = {{"d", k.c()}};
        break;
    case EnvelopeFunction::Kind::Constant:
        j["family"] = "constant";
        j["params"] = {{"m0", k.c()}};
        break;
    case EnvelopeFunction::Kind::PiecewiseLinear:
    case EnvelopeFunction::Kind::Conjugate:
        j["family"] = k.kind() == EnvelopeFunction::Kind::Conjugate ? "conjugate" : "piecewiseLinear";
        j["params"] = {{"x", k.xs()},
                       {"y", k.ys()},
                       {"shape", k.shape() == EnvelopeFunction::Shape::DecreasingConvex ? "decreasing-convex"
                                                                                        : "increasing-concave"},
                       {"tail", k.tail() == EnvelopeFunction::Tail::Sqrt ? "sqrt" : "linear"}};
        break;
    }
    return j;
}

RadialWeight radialFromJson(const Json& j) {
    checkVersion(j);
    std::string f = family(j);
    const Json& p = params(j);
    if (f == "t1") return RadialWeight::t1(num(p, "beta"), num(p, "c"));
    if (f == "t2") return RadialWeight::t2(num(p, "alpha"), num(p, "c"));
    if (f == "linear") return RadialWeight::linear();
    if (f == "tabulated") return RadialWeight::tabulated(numbers(p, "t"), numbers(p, "G"));
    if (f == "conjugate") return RadialWeight::conjugate(envelopeFromJson(field(p, "envelope")));
    throw schema("unknown radial weight family '" + f + "'");
}

Json toJson(const RadialWeight& G) {
    Json j = {{"schema_version", kSchemaVersion}};
    switch (G.kind()) {
    case RadialWeight::Kind::T1:
        j["family"] = "t1";
        j["params"] = {{"beta", G.beta()}, {"c", G.c()}};
        break;
    case RadialWeight::Kind::T2:
        j["family"] = "t2";
        j["params"] = {{"alpha", G.alpha()}, {"c", G.c()}};
        break;
    case RadialWeight::Kind::Linear:
        j["family"] = "linear";
        j["params"] = Json::object();
        break;
    case RadialWeight::Kind::Tabulated: {
        std::vector<double> Gs;
        for (double li : G.logInvs()) Gs.push_back(std::exp(-li));
        j["family"] = "tabulated";
        j["params"] = {{"t", G.ts()}, {"G", Gs}};
        break;
    }
    case RadialWeight::Kind::Conjugate:
        j["family"] = "conjugate";
        j["params"] = {{"envelope", toJson(*G.envelope())}};
        break;
    }
    return j;
}

Majorant majorantFromJson(const Json& j) {
    checkVersion(j);
    std::string f = family(j);
    const Json& p = params(j);
    if (f == "inversePower") return Majorant::inversePower(numOr(p, "q", 1.0), numOr(p, "scale", 1.0), numOr(p, "d", 1.0));
    if (f == "constant") return Majorant::constant(num(p, "value"), numOr(p, "d", 1.0));
    if (f == "fromG") return majorantFromG(radialFromJson(field(p, "G")));
    throw schema("unknown majorant family '" + f + "'");
}

Json toJson(const Majorant& F) {
    Json j = {{"schema_version", kSchemaVersion}};
    switch (F.kind()) {
    case Majorant::Kind::InversePower:
        j["family"] = "inversePower";
        j["params"] = {{"q", F.q()}, {"scale", F.scale()}, {"d", F.d()}};
        break;
    case Majorant::Kind::Constant:
        j["family"] = "constant";
        j["params"] = {{"value", F.scale()}, {"d", F.d()}};
        break;
    case Majorant::Kind::FromG:
        j["family"] = "fromG";
        j["params"] = {{"G", toJson(*F.G())}};
        break;
    }
    return j;
}

// ---------------------------------------------------------------- symbols, profiles

BSymbol bSymbolFromJson(const Json& j) {
    checkVersion(j);
    BSymbol b;
    if (j.contains("zeros"))
        for (const auto& z : j["zeros"]) b.zeros.push_back(complexFromJson(z));
    if (j.contains("singular")) b.singular = measureFromJson(j["singular"]);
    if (j.contains("delta")) b.delta = weightFromJson(j["delta"]);
    if (j.contains("unimodular")) b.unimodular = arcSetFromJson(j["unimodular"]);
    b.validate();
    return b;
}

Json toJson(const BSymbol& b) {
    Json j = {{"schema_version", kSchemaVersion}};
    j["zeros"] = Json::array();
    for (auto z : b.zeros) j["zeros"].push_back(toJson(z));
    if (!b.singular.isZero()) j["singular"] = toJson(b.singular);
    j["delta"] = toJson(b.delta);
    j["unimodular"] = toJson(b.unimodular);
    return j;
}

Profile profileFromJson(const Json& j) {
    checkVersion(j);
    const Json& p = j.contains("profile") ? j["profile"] : j;
    std::string kind = p.value("kind", "power");
    if (kind == "power") return Profile::power(numOr(p, "q", 2.0), numOr(p, "scale", 1.0));
    if (kind == "knots") return Profile::knots(numbers(p, "t"), numbers(p, "p"));
    throw schema("profile kind must be power or knots");
}

Json toJson(const Profile& p) {
    Json j = {{"schema_version", kSchemaVersion}};
    if (p.kind() == Profile::Kind::Power) {
        j["kind"] = "power";
        j["q"] = p.q();
        j["scale"] = p.scale();
    } else {
        j["kind"] = "knots";
        j["t"] = p.ts();
        j["p"] = p.ps();
    }
    return j;
}

// ---------------------------------------------------------------- CSV

std::string formatDouble(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
}

TaylorSeries readCoefficientsCsv(const std::string& path) {
    auto rows = readCsv(path, 3);
    std::vector<Complex> c;
    for (const auto& r : rows) {
        if (r[0] < 0 || r[0] != std::floor(r[0])) throw schema(path + ": index n must be a nonnegative integer");
        size_t n = static_cast<size_t>(r[0]);
        if (n >= c.size()) c.resize(n + 1);
        c[n] = {r[1], r[2]};
    }
    if (c.empty()) throw schema(path + ": no coefficients");
    return TaylorSeries(std::move(c));
}

std::string coefficientsCsv(const TaylorSeries& f) {
    std::string out = "n,re,im\n";
    for (size_t n = 0; n < f.size(); ++n)
        out += std::to_string(n) + "," + formatDouble(f.coeffs[n].real()) + "," + formatDouble(f.coeffs[n].imag()) + "\n";
    return out;
}

std::vector<Complex> readPointsCsv(const std::string& path) {
    std::vector<Complex> z;
    for (const auto& r : readCsv(path, 1)) z.push_back({r[0], r.size() > 1 ? r[1] : 0.0});
    return z;
}

std::vector<double> readRealsCsv(const std::string& path) {
    std::vector<double> x;
    for (const auto& r : readCsv(path, 1)) x.push_back(r[0]);
    return x;
}

} // namespace disclab::io
