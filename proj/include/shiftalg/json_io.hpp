#pragma once

// JSON (and a little CSV) encodings of the library types, plus file helpers.
// Every reader throws Error(Io) when the document is malformed or its
// content fails the target type's validation.

#include <string>

#include <json.hpp>

#include "shiftalg/algebra.hpp"
#include "shiftalg/contour.hpp"
#include "shiftalg/field.hpp"
#include "shiftalg/functions.hpp"
#include "shiftalg/matrix.hpp"
#include "shiftalg/signal.hpp"
#include "shiftalg/structure.hpp"

namespace shiftalg {

using Json = nlohmann::ordered_json;

// {"x": .., "y": .., "eps": -1|0|1}
Json to_json(const Binarion& a);
Binarion binarion_from_json(const Json& j);

// {"rho": .., "theta": ..}
Json to_json(const HyperbolicForm& h);
HyperbolicForm hyperbolic_from_json(const Json& j);

// {"m": [[m11, m12], [m21, m22]]}
Json to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

// Membership flags, det, and the most specific tag.
Json to_json(const Region& r);

// {"kind": "periodic2"|"antiperiodic2", "n": N, "samples": [...]}
Json to_json(const SampledSignal& s);
SampledSignal signal_from_json(const Json& j);

/// Rows "t,value" in order of increasing t; an optional non-numeric header
/// line is skipped. The sample count is the row count.
SampledSignal signal_from_csv(const std::string& text, SignalKind kind);

/// {"xmin","xmax","ymin","ymax","nx","ny","u":[...],"v":[...]} with u, v
/// flattened row by row (index j*nx + i). Optional "eps" overrides `sig`.
FieldGrid grid_from_json(const Json& j, Signature sig = Signature::Split);
Json to_json(const FieldGrid& g);

// {"closed": bool, "segments": [{"type": "circle"|"line"|"path", ...}]}
Json to_json(const Contour& c);
Contour contour_from_json(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace shiftalg
