#pragma once

// JSON forms of complexes, subdivisions, Coxeter diagrams, polynomials and
// truncated series.
//
//   Complex      {"vertices": [..], "facets": [[..], ..]}
//   Subdivision  {"complex": <Complex>, "index_set": [..], "sigma": {vertex: [..]}}
//   Diagram      {"vertices": [..], "edges": [[u, v, m], ..]}   (m defaults to 3)
//   Polynomial   [[i, j, "c"], ..] sorted by (i, j); univariate [[i, "c"], ..]

#include "gammatri/coxgamma.hpp"
#include "gammatri/serieslab.hpp"
#include "gammatri/subdivision.hpp"

#include <json.hpp>

#include <string>

namespace gammatri {

using Json = nlohmann::json;

/// Parses a file, prefixing any error with the path.
Json read_json_file(const std::string& path);

Complex complex_from_json(const Json& j);
Json complex_to_json(const Complex& c);

/// Structural checks plus validate_ball_property.
Subdivision subdivision_from_json(const Json& j);
Json subdivision_to_json(const Subdivision& s);

CoxeterDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const CoxeterDiagram& d);

Json poly_to_json(const IntPoly1& p);
Json poly_to_json(const IntPoly2& p);
IntPoly1 poly1_from_json(const Json& j);
IntPoly2 poly2_from_json(const Json& j);

/// {"degree": d, "coefficients": <Polynomial>}
Json gamma_triangle_to_json(const GammaTriangle& g);

/// {"order": N, "coefficients": [<Polynomial> for t^0 .. t^{N-1}]}
Json series_to_json(const IntSeries& s);

Json report_to_json(const Report& r);

}  // namespace gammatri
