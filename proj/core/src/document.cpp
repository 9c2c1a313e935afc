#include "dualcore/document.hpp"

#include <fstream>
#include <sstream>

#include "dualcore/errors.hpp"

namespace dualcore::doc {

namespace {

void expect(bool cond, const std::string& what) {
    if (!cond) throw parse_error(what);
}

Rational rat_field(const json& j) {
    expect(j.is_string(), "expected rational string");
    return parse_rational(j.get<std::string>());
}

void check_header(const json& j, const std::string& kind) {
    expect(j.is_object(), "document must be an object");
    expect(j.contains("kind") && j["kind"] == kind,
           "document kind mismatch (expected '" + kind + "')");
    expect(j.contains("version") && j["version"] == 1, "unsupported document version");
}

json triple_to_json(const std::array<RMatrix, 3>& t) {
    return json::array({matrix_to_json(t[0]), matrix_to_json(t[1]), matrix_to_json(t[2])});
}

std::array<RMatrix, 3> triple_from_json(const json& j) {
    expect(j.is_array() && j.size() == 3, "expected exactly 3 matrices");
    return {matrix_from_json(j[0]), matrix_from_json(j[1]), matrix_from_json(j[2])};
}

} // namespace

json matrix_to_json(const RMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

RMatrix matrix_from_json(const json& j) {
    expect(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
           "matrix document needs rows/cols/entries");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const json& e = j["entries"];
    expect(e.is_array() && e.size() == rows, "matrix entries row count mismatch");
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        expect(e[i].is_array() && e[i].size() == cols, "matrix entries column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_field(e[i][c]);
    }
    return m;
}

json rep_to_json(const quiver::Rep& r) {
    json out;
    out["kind"] = "rep";
    out["version"] = 1;
    out["q"] = r.q;
    out["dim"] = json::array({r.dim.a1, r.dim.a2});
    json mats = json::array();
    for (const auto& m : r.mats) mats.push_back(matrix_to_json(m));
    out["mats"] = std::move(mats);
    return out;
}

quiver::Rep rep_from_json(const json& j) {
    check_header(j, "rep");
    expect(j.contains("q") && j.contains("dim") && j.contains("mats"),
           "rep document needs q/dim/mats");
    const int q = j["q"].get<int>();
    expect(j["dim"].is_array() && j["dim"].size() == 2, "rep dim must be [a1, a2]");
    quiver::DimVec dim{j["dim"][0].get<long>(), j["dim"][1].get<long>()};
    std::vector<RMatrix> mats;
    for (const auto& m : j["mats"]) mats.push_back(matrix_from_json(m));
    try {
        return quiver::Rep(q, dim, std::move(mats));
    } catch (const contract_error& e) {
        throw parse_error(std::string("invalid rep document: ") + e.what());
    }
}

json pencil_to_json(const sheaf::Pencil& w) {
    json out;
    out["kind"] = "pencil";
    out["version"] = 1;
    out["d"] = w.d;
    out["mats"] = triple_to_json(w.triple);
    return out;
}

sheaf::Pencil pencil_from_json(const json& j) {
    check_header(j, "pencil");
    expect(j.contains("d") && j.contains("mats"), "pencil document needs d/mats");
    try {
        return sheaf::Pencil(j["d"].get<int>(), triple_from_json(j["mats"]));
    } catch (const contract_error& e) {
        throw parse_error(std::string("invalid pencil document: ") + e.what());
    }
}

json bundle_to_json(const sheaf::BundleRep& v) {
    json out;
    out["kind"] = "bundle";
    out["version"] = 1;
    out["n"] = v.n;
    out["mats"] = triple_to_json(v.triple);
    return out;
}

sheaf::BundleRep bundle_from_json(const json& j) {
    check_header(j, "bundle");
    expect(j.contains("n") && j.contains("mats"), "bundle document needs n/mats");
    try {
        return sheaf::BundleRep(j["n"].get<int>(), triple_from_json(j["mats"]));
    } catch (const contract_error& e) {
        throw parse_error(std::string("invalid bundle document: ") + e.what());
    }
}

json poly_to_json(const sheaf::HomogPoly& p) {
    json out;
    out["kind"] = "poly";
    out["version"] = 1;
    out["degree"] = p.degree;
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(rat_to_string(c));
    out["coeffs"] = std::move(coeffs);
    return out;
}

sheaf::HomogPoly poly_from_json(const json& j) {
    check_header(j, "poly");
    expect(j.contains("degree") && j.contains("coeffs"), "poly document needs degree/coeffs");
    sheaf::HomogPoly p;
    p.degree = j["degree"].get<int>();
    expect(p.degree >= 0, "poly degree must be nonnegative");
    for (const auto& c : j["coeffs"]) p.coeffs.push_back(rat_field(c));
    expect(p.coeffs.size() ==
               static_cast<std::size_t>((p.degree + 1) * (p.degree + 2) / 2),
           "poly coefficient count mismatch");
    return p;
}

json config_to_json(const lab::ExperimentConfig& c, const std::string& experiment) {
    json out;
    out["kind"] = "config";
    out["version"] = 1;
    out["experiment"] = experiment;
    out["seed"] = c.seed;
    out["r"] = c.r;
    out["d"] = c.d;
    out["n"] = c.n;
    out["samples_V"] = c.samples_V;
    out["samples_W"] = c.samples_W;
    out["entry_bound"] = c.entry_bound;
    out["schedule"] = c.schedule;
    return out;
}

lab::ExperimentConfig config_from_json(const json& j, std::string* experiment) {
    check_header(j, "config");
    lab::ExperimentConfig c;
    if (experiment) {
        expect(j.contains("experiment") && j["experiment"].is_string(),
               "config document needs an 'experiment' field");
        *experiment = j["experiment"].get<std::string>();
    }
    expect(j.contains("seed"), "config document needs a seed");
    c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("r")) c.r = j["r"].get<int>();
    if (j.contains("d")) c.d = j["d"].get<int>();
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("samples_V")) c.samples_V = j["samples_V"].get<int>();
    if (j.contains("samples_W")) c.samples_W = j["samples_W"].get<int>();
    if (j.contains("entry_bound")) c.entry_bound = j["entry_bound"].get<long>();
    if (j.contains("schedule")) c.schedule = j["schedule"].get<std::vector<int>>();
    try {
        c.validate();
    } catch (const contract_error& e) {
        throw parse_error(std::string("invalid config document: ") + e.what());
    }
    return c;
}

json pairing_report_to_json(const lab::PairingReport& r) {
    json out;
    out["kind"] = "report";
    out["version"] = 1;
    out["experiment"] = r.experiment;
    out["config"] = config_to_json(r.config, r.experiment);
    out["matrix_rank"] = r.matrix_rank;
    json sat = json::array();
    for (const auto& s : r.saturation) sat.push_back(json::array({s.size, s.rank}));
    out["saturation"] = std::move(sat);
    out["zero_cells"] = r.zero_cells;
    out["oracle_disagreements"] = r.oracle_disagreements;
    out["resamples"] = r.resamples;
    out["pairs_checked"] = r.pairs_checked;
    return out;
}

json strata_report_to_json(const lab::StrataReport& r) {
    json out;
    out["kind"] = "report";
    out["version"] = 1;
    out["experiment"] = "strata";
    out["n"] = r.n;
    out["seed"] = r.seed;
    out["samples"] = r.samples;
    json counts = json::object();
    for (const auto& [idx, count] : r.counts) counts[std::to_string(idx)] = count;
    out["counts"] = std::move(counts);
    json witnesses = json::object();
    for (const auto& [idx, rep] : r.witnesses)
        witnesses[std::to_string(idx)] = rep_to_json(rep);
    out["witnesses"] = std::move(witnesses);
    out["residual_violations"] = r.residual_violations;
    return out;
}

json parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed document: ") + e.what());
    }
    expect(j.is_object() && j.contains("kind") && j["kind"].is_string(),
           "document needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    expect(kind == "rep" || kind == "pencil" || kind == "bundle" || kind == "poly" ||
               kind == "report" || kind == "config",
           "unknown document kind '" + kind + "'");
    expect(j.contains("version") && j["version"] == 1, "unsupported document version");
    return j;
}

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

quiver::Rep any_rep_from_json(const json& j) {
    expect(j.is_object() && j.contains("kind"), "document needs a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "rep") return rep_from_json(j);
    if (kind == "pencil") return sheaf::to_rep(pencil_from_json(j));
    if (kind == "bundle") return sheaf::to_rep(bundle_from_json(j));
    throw parse_error("expected a rep-like document, got kind '" + kind + "'");
}

} // namespace dualcore::doc
