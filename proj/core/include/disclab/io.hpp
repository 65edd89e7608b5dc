#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "disclab/legendre.hpp"
#include "disclab/measure.hpp"
#include "disclab/moments.hpp"
#include "disclab/profile.hpp"
#include "disclab/radial.hpp"
#include "disclab/series.hpp"
#include "disclab/transforms.hpp"
#include "disclab/weight.hpp"

namespace disclab::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Every reader throws inputError("SchemaError", ...) on malformed input and accepts a
// missing schema_version; a different version is rejected.
Json readJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

// {"kind":"preset","family":"constant|power|expdist|indicator","params":{...}}
// {"kind":"preset","factors":[<preset>, ...]}
// {"kind":"grid","samples":[...],"singular_points":[...],"floor":0}
Weight weightFromJson(const Json& j);
Json toJson(const Weight& w);

// {"points":[...]} / {"arcs":[{"start","length"}]} / {"cantor":{"start","length","depth"}}
ClosedSet closedSetFromJson(const Json& j);
Json toJson(const ClosedSet& E);

ArcSet arcSetFromJson(const Json& j);
Json toJson(const ArcSet& s);

// {"atoms":[{"angle","mass"}],"density":{"modulus":<weight>,"phase":k}|{"grid":[[re,im],...]},
//  "cantor":{"ratio","arity","base":{"start","length"},"mass"} or a list of those}
CircleMeasure measureFromJson(const Json& j);
Json toJson(const CircleMeasure& nu);

// {"family":"t1","params":{"beta","c"}} / t2 {"alpha","c"} / linear /
// tabulated {"t":[...],"G":[...]} / conjugate {"envelope":<envelope>}
RadialWeight radialFromJson(const Json& j);
Json toJson(const RadialWeight& G);

// {"family":"powerInv","params":{"c","beta"}} / sqrtScale {"d"} / constant {"m0"} /
// piecewiseLinear {"x","y","shape":"decreasing-convex|increasing-concave","tail":"linear|sqrt"}
EnvelopeFunction envelopeFromJson(const Json& j);
Json toJson(const EnvelopeFunction& k);

// {"family":"inversePower","params":{"q","scale","d"}} / constant {"value","d"} / fromG {"G":<G>}
Majorant majorantFromJson(const Json& j);
Json toJson(const Majorant& F);

// {"zeros":[[re,im],...],"singular":<measure>,"delta":<weight>,"unimodular":[arcs]}
BSymbol bSymbolFromJson(const Json& j);
Json toJson(const BSymbol& b);

// {"kind":"power","q","scale"} / {"kind":"knots","t":[...],"p":[...]}
Profile profileFromJson(const Json& j);
Json toJson(const Profile& p);

Json toJson(Complex z);
Complex complexFromJson(const Json& j);

// Rows (n, re, im); an optional header line is skipped, missing indices are zero.
TaylorSeries readCoefficientsCsv(const std::string& path);
std::string coefficientsCsv(const TaylorSeries& f);

// Rows (re, im) of disk points.
std::vector<Complex> readPointsCsv(const std::string& path);
// One real number per row (first column).
std::vector<double> readRealsCsv(const std::string& path);

// Shortest round-trip representation.
std::string formatDouble(double x);

} // namespace disclab::io
