#pragma once

// JSON encodings used by the command-line front-end.
//
//   lattice     {"rank": n, "gram": [[...]]} or a catalog name "U:m", "E8-", "K3"
//   sublattice  {"ambient": <lattice>, "basis": [[...]]}; a bare lattice means
//               the whole lattice
//   period      {"re": ["p/q", ...], "im": [...]}
//   involution  {"lattice": <lattice>, "matrix": [[...]]}
//   census      {"n": N, "nprime": N', "fibers": [{"kodaira": "I1",
//               "fixed": true, "real": "figure_eight"}, ...]}
//   split       {"lattice": <sublattice T>, "e": [...], "eprime": [...], "m": m}
//
// Rationals are written as strings "p/q" in lowest terms with q > 0 ("p"
// when q = 1); integers as JSON numbers when they fit in 64 bits.

#include <json.hpp>

#include "k3mirror/census.hpp"
#include "k3mirror/hyperkahler.hpp"
#include "k3mirror/involution.hpp"
#include "k3mirror/leray.hpp"
#include "k3mirror/mirror_map.hpp"

namespace k3mirror::json_io {

using json = nlohmann::json;

/// Inline JSON (text starting with '{', '[' or '"'), a path to a JSON file, or
/// otherwise the text itself as a JSON string.
json load(std::string const& text);

Integer integer_from(json const& j);
Rational rational_from(json const& j);
json to_json(Integer const& z);
json to_json(Rational const& q);
json to_json(ComplexRational const& z);
json to_json(LatticeVector const& v);
json to_json(RationalVector const& v);
json to_json(IntMatrix const& m);

LatticeVector lattice_vector_from(json const& j);
RationalVector rational_vector_from(json const& j);
IntMatrix int_matrix_from(json const& j);

/// Comma separated list "1,0,-2" or a JSON array.
LatticeVector parse_lattice_vector(std::string const& text);
RationalVector parse_rational_vector(std::string const& text);

IntegerLattice lattice_from(json const& j);
json to_json(IntegerLattice const& l);

Sublattice sublattice_from(json const& j);
json to_json(Sublattice const& s);

PeriodVector period_from(json const& j, Sublattice const& lattice);
json to_json(PeriodVector const& p);
json to_json(TubePoint const& p);

LatticeInvolution involution_from(json const& j);
json to_json(LatticeInvolution const& rho);

FiberCensus census_from(json const& j);
json to_json(FiberCensus const& c);

/// Re-validates the pair and rebuilds the split.
MirrorSplit split_from(json const& j);
json to_json(MirrorSplit const& s);

json to_json(SpectralTable const& t);
json to_json(TensorPeriod const& t);
json to_json(RotationTable const& t);

} // namespace k3mirror::json_io
