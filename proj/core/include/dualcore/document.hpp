#pragma once

#include <json.hpp>
#include <string>

#include "dualcore/dualitylab.hpp"
#include "dualcore/quiver.hpp"
#include "dualcore/sheafbridge.hpp"

namespace dualcore::doc {

// Self-describing documents: top-level "kind" in {rep, pencil, bundle, poly,
// report, config}, "version": 1, all rationals as exact "p/q" strings.
// ordered_json keeps emission byte-stable.
using json = nlohmann::ordered_json;

json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const json& j);

json rep_to_json(const quiver::Rep& r);
quiver::Rep rep_from_json(const json& j);

json pencil_to_json(const sheaf::Pencil& w);
sheaf::Pencil pencil_from_json(const json& j);

json bundle_to_json(const sheaf::BundleRep& v);
sheaf::BundleRep bundle_from_json(const json& j);

json poly_to_json(const sheaf::HomogPoly& p);
sheaf::HomogPoly poly_from_json(const json& j);

json config_to_json(const lab::ExperimentConfig& c, const std::string& experiment);
lab::ExperimentConfig config_from_json(const json& j, std::string* experiment = nullptr);

json pairing_report_to_json(const lab::PairingReport& r);
json strata_report_to_json(const lab::StrataReport& r);

// Parses any document text; validates "kind" and "version". Throws parse_error.
json parse_document(const std::string& text);
json load_document(const std::string& path);

// Canonical emission (2-space indent, trailing newline): identical values
// produce byte-identical text.
std::string emit(const json& j);

// Reads a rep-like document ("rep", "pencil" or "bundle") as a plain Rep.
quiver::Rep any_rep_from_json(const json& j);

} // namespace dualcore::doc
