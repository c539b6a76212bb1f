#ifndef CYCLAB_SERIALIZE_HPP
#define CYCLAB_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "cyclab/approximants.hpp"
#include "cyclab/corona.hpp"
#include "cyclab/growth.hpp"
#include "cyclab/outerlab.hpp"
#include "cyclab/poly.hpp"
#include "cyclab/rat.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

using json = nlohmann::json;

/// Polynomials serialize as arrays of [re, im] pairs, lowest degree first;
/// rationals as {"num": [...], "den": [...]}.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const std::string& path);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& path);

json atoms_to_json(const MeasureAtoms& atoms);
MeasureAtoms atoms_from_json(const json& j, const std::string& path);

/// {"kind": ..., "params": {...}, "quadrature": {...}}; H(b) spaces carry the
/// symbol b and the mate is recomputed on parse.
json space_to_json(const SpaceSpec& space);
SpaceSpec space_from_json(const json& j, const std::string& path);

json gram_to_json(const GramMatrix& gram);
json cyclicity_to_json(const CyclicityReport& report);
json bpe_to_json(const BpeReport& report);
json growth_to_json(const GrowthReport& report);
json exponent_fit_to_json(const ExponentFit& fit);
json mate_to_json(const RationalMate& mate, int c_preview = 16);

/// Row-major CSV with "re,im" cells ('.' decimal, locale-free).
std::string gram_to_csv(const GramMatrix& gram);
/// Two-column CSV (n, value).
std::string sequence_to_csv(const std::string& col0, const std::string& col1,
                            const std::vector<int>& ns, const std::vector<double>& values);
/// Three-column CSV (n, value, bound).
std::string growth_to_csv(const GrowthReport& report);
std::string sweep_to_csv(const ExponentFit& fit);

/// Locale-independent shortest-roundtrip double formatting.
std::string format_double(double v);

}  // namespace cyclab

#endif
