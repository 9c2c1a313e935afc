#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualcore/document.hpp"
#include "dualcore/dualitylab.hpp"
#include "dualcore/errors.hpp"
#include "dualcore/quiver.hpp"
#include "dualcore/sheafbridge.hpp"

using namespace dualcore;
using doc::json;
using quiver::DimVec;
using quiver::Rep;

TEST_CASE("matrix round-trip keeps exact rationals") {
    RMatrix m(2, 3);
    m(0, 0) = Rational(1, 3);
    m(0, 2) = Rational(-7, 2);
    m(1, 1) = Rational(4);
    const json j = doc::matrix_to_json(m);
    CHECK(doc::matrix_from_json(j) == m);
    // Entries serialize as exact strings.
    CHECK(j["entries"][0][0].get<std::string>() == "1/3");
    CHECK(j["entries"][0][2].get<std::string>() == "-7/2");
    CHECK(j["entries"][1][1].get<std::string>() == "4");
}

TEST_CASE("rep round-trip") {
    const Rep r = quiver::random_rep(3, DimVec{2, 3}, 97, 3);
    const json j = doc::rep_to_json(r);
    CHECK(j["kind"] == "rep");
    CHECK(j["version"] == 1);
    CHECK(doc::rep_from_json(j) == r);
}

TEST_CASE("pencil and bundle round-trips") {
    const sheaf::Pencil lam = sheaf::lambda3();
    CHECK(doc::pencil_from_json(doc::pencil_to_json(lam)) == lam);

    const Rep scal(3, DimVec{1, 1},
                   {RMatrix{{Rational(2)}}, RMatrix{{Rational(-1)}},
                    RMatrix{{Rational(3)}}});
    const sheaf::BundleRep b = sheaf::bundle_from_rep(quiver::reflect(scal));
    CHECK(doc::bundle_from_json(doc::bundle_to_json(b)) == b);
}

TEST_CASE("poly round-trip") {
    const sheaf::HomogPoly p = sheaf::support_curve(sheaf::Pencil(
        1, {RMatrix{{Rational(1, 2)}}, RMatrix{{Rational(0)}}, RMatrix{{Rational(-3)}}}));
    const json j = doc::poly_to_json(p);
    CHECK(j["kind"] == "poly");
    const sheaf::HomogPoly q = doc::poly_from_json(j);
    CHECK(q.degree == p.degree);
    CHECK(q.coeffs == p.coeffs);
}

TEST_CASE("config round-trip") {
    lab::ExperimentConfig c;
    c.seed = 987654321;
    c.r = 2;
    c.d = 3;
    c.n = 1;
    c.samples_V = 5;
    c.samples_W = 4;
    c.entry_bound = 2;
    c.schedule = {1, 2, 4};
    const json j = doc::config_to_json(c, "pairing");
    CHECK(j["kind"] == "config");
    std::string exp;
    CHECK(doc::config_from_json(j, &exp) == c);
    CHECK(exp == "pairing");
}

TEST_CASE("any_rep_from_json accepts rep, pencil and bundle kinds") {
    const sheaf::Pencil lam = sheaf::lambda3();
    const Rep as_rep = sheaf::to_rep(lam);
    CHECK(doc::any_rep_from_json(doc::pencil_to_json(lam)) == as_rep);
    CHECK(doc::any_rep_from_json(doc::rep_to_json(as_rep)) == as_rep);
    const sheaf::BundleRep b =
        sheaf::bundle_from_rep(quiver::reflect(quiver::random_rep(3, DimVec{1, 1}, 3, 2)));
    CHECK(doc::any_rep_from_json(doc::bundle_to_json(b)) == sheaf::to_rep(b));
}

TEST_CASE("parse_document validation") {
    CHECK_THROWS_AS(doc::parse_document("not json at all {"), parse_error);
    CHECK_THROWS_AS(doc::parse_document("{\"version\": 1}"), parse_error);
    CHECK_THROWS_AS(doc::parse_document("{\"kind\": \"rep\", \"version\": 2}"),
                    parse_error);
    CHECK_THROWS_AS(doc::parse_document("{\"kind\": \"mystery\", \"version\": 1}"),
                    parse_error);
    const json ok = doc::parse_document(doc::emit(doc::rep_to_json(
        quiver::random_rep(3, DimVec{1, 1}, 5, 2))));
    CHECK(ok["kind"] == "rep");
}

TEST_CASE("rational parsing in documents") {
    json j = doc::matrix_to_json(RMatrix::identity(1));
    j["entries"][0][0] = "2/4";
    CHECK(doc::matrix_from_json(j)(0, 0) == Rational(1, 2));
    j["entries"][0][0] = "1/0";
    CHECK_THROWS_AS(doc::matrix_from_json(j), parse_error);
    j["entries"][0][0] = "abc";
    CHECK_THROWS_AS(doc::matrix_from_json(j), parse_error);
}

TEST_CASE("emission is canonical") {
    const Rep r = quiver::random_rep(3, DimVec{2, 2}, 11, 3);
    const std::string s1 = doc::emit(doc::rep_to_json(r));
    const std::string s2 = doc::emit(doc::rep_to_json(doc::rep_from_json(
        doc::parse_document(s1))));
    CHECK(s1 == s2);
    CHECK(s1.back() == '\n');
}
