#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "probhopf/classdata.hpp"
#include "probhopf/fusion.hpp"
#include "probhopf/group.hpp"
#include "probhopf/probgroup.hpp"

using namespace probhopf;

namespace {

// substring matcher for exception messages
template <class E, class F>
void check_throws_containing(F&& fn, const std::string& needle) {
    try {
        fn();
        FAIL_CHECK("expected an exception containing '" << needle << "'");
    } catch (const E& e) {
        std::string msg = e.what();
        CAPTURE(msg);
        CHECK(msg.find(needle) != std::string::npos);
    }
}

}  // namespace

TEST_CASE("probability group text format") {
    SUBCASE("exact round-trip is bit-identical") {
        ProbabilityGroup A = testutil::char_probgroup_s3();
        std::string text = A.serialize_string();
        CHECK(text.rfind("probgroup v1", 0) == 0);
        CHECK(ProbabilityGroup::parse_string(text) == A);
    }
    SUBCASE("float round-trip is bit-identical") {
        ProbabilityGroup F = testutil::irrational_float_table();
        ProbabilityGroup G = ProbabilityGroup::parse_string(F.serialize_string());
        CHECK(G == F);   // %.17g respects double round-tripping
        CHECK_FALSE(G.exact());
    }
    SUBCASE("comments, blank lines, and fraction/decimal mixing") {
        const char* text = R"(# hand-written
probgroup v1
elements 2   # a pair
unit 1

name 1 e
name 2 a
inverse 1 1
inverse 2 2
p 1 1 1 1
p 1 2 2 1
p 2 1 2 1
p 2 2 1 0.5
p 2 2 2 1/2
)";
        ProbabilityGroup A = ProbabilityGroup::parse_string(text);
        CHECK_FALSE(A.exact());   // one decimal token forces float mode
        CHECK(A.p(1, 1, 0) == 0.5);
        CHECK(A.p(1, 1, 1) == 0.5);
        CHECK(A.name(1) == "a");
        CHECK(A.check_axioms().ok());
    }
    SUBCASE("all-fraction input stays exact") {
        const char* text =
            "probgroup v1\nelements 1\nunit 1\ninverse 1 1\np 1 1 1 1\n";
        CHECK(ProbabilityGroup::parse_string(text).exact());
    }
    SUBCASE("parse failures") {
        check_throws_containing<std::runtime_error>(
            [] { ProbabilityGroup::parse_string(""); }, "empty input");
        check_throws_containing<std::runtime_error>(
            [] { ProbabilityGroup::parse_string("probgroup v2\n"); },
            "expected header 'probgroup v1'");
        check_throws_containing<std::runtime_error>(
            [] { ProbabilityGroup::parse_string("probgroup v1\nunit 1\n"); },
            "'unit' before 'elements'");
        check_throws_containing<std::runtime_error>(
            [] {
                ProbabilityGroup::parse_string(
                    "probgroup v1\nelements 2\nunit 3\n");
            },
            "unit index out of range");
        check_throws_containing<std::runtime_error>(
            [] {
                ProbabilityGroup::parse_string(
                    "probgroup v1\nelements 1\nunit 1\ninverse 1 1\n"
                    "p 1 1 1 1\np 1 1 1 1\n");
            },
            "duplicate p triple");
        check_throws_containing<std::runtime_error>(
            [] {
                ProbabilityGroup::parse_string(
                    "probgroup v1\nelements 2\nunit 1\ninverse 1 1\n");
            },
            "missing inverse for element 2");
        check_throws_containing<std::runtime_error>(
            [] {
                ProbabilityGroup::parse_string(
                    "probgroup v1\nelements 1\nunit 1\ninverse 1 1\np 1 1 1 -1/2\n");
            },
            "bad value");
        check_throws_containing<std::runtime_error>(
            [] {
                ProbabilityGroup::parse_string(
                    "probgroup v1\nelements 1\nunit 1\ninverse 1 1\nbogus 1\n");
            },
            "unknown keyword 'bogus'");
    }
}

TEST_CASE("fusion ring text format") {
    SUBCASE("round-trip for character and group rings") {
        for (const char* key : {"Z4", "S3", "Q8"}) {
            FusionRing R = fusion_from_characters(class_data(FiniteGroup::builtin(key)));
            CHECK(FusionRing::parse_string(R.serialize_string()) == R);
            FusionRing Gr = fusion_from_group_table(FiniteGroup::builtin(key));
            CHECK(FusionRing::parse_string(Gr.serialize_string()) == Gr);
        }
    }
    SUBCASE("serialized header and sparsity") {
        FusionRing R = fusion_from_characters(class_data(FiniteGroup::builtin("S3")));
        std::string text = R.serialize_string();
        CHECK(text.rfind("fusionring v1", 0) == 0);
        CHECK(text.find("rank 3") != std::string::npos);
        CHECK(text.find("unit 1") != std::string::npos);
        CHECK(text.find("N 1 1 1 1") != std::string::npos);
        CHECK(text.find("N 2 2 1 1") != std::string::npos);
        CHECK(text.find("N 2 2 2 ") == std::string::npos);  // zero entries stay implicit
    }
    SUBCASE("omitted entries default to zero, which validation then reports") {
        const char* text = R"(fusionring v1
rank 2
unit 1
name 2 tau
dual 2 2
N 2 2 1 1
N 2 2 2 1
)";
        FusionRing R = FusionRing::parse_string(text);
        CHECK(R.name(1) == "tau");
        CHECK(R.N(1, 1, 0) == 1);
        CHECK(R.N(0, 0, 0) == 0);          // unit rows were not given
        auto rep = R.validate();
        CHECK_FALSE(rep.ok());
        CHECK(rep.first_failure().find("unit") != std::string::npos);

        // with the unit products written out, the same ring validates
        const char* full = R"(fusionring v1
rank 2
unit 1
name 2 tau
dual 2 2
N 1 1 1 1
N 1 2 2 1
N 2 1 2 1
N 2 2 1 1
N 2 2 2 1
)";
        CHECK(FusionRing::parse_string(full).validate().ok());
    }
    SUBCASE("parse failures") {
        check_throws_containing<std::runtime_error>(
            [] { FusionRing::parse_string("fusionring v1\nrank 2\nunit 2\n"); },
            "unit must be index 1");
        check_throws_containing<std::runtime_error>(
            [] { FusionRing::parse_string("probgroup v1\n"); },
            "expected header 'fusionring v1'");
        check_throws_containing<std::runtime_error>(
            [] {
                FusionRing::parse_string("fusionring v1\nrank 2\nN 2 2 1 1\n");
            },
            "");
        check_throws_containing<std::runtime_error>(
            [] {
                FusionRing::parse_string(
                    "fusionring v1\nrank 2\nunit 1\ndual 2 2\nN 2 2 3 1\n");
            },
            "");
    }
}

TEST_CASE("group text format") {
    SUBCASE("round-trip preserves the table and element names") {
        for (const auto& key : FiniteGroup::builtin_keys()) {
            CAPTURE(key);
            FiniteGroup G = FiniteGroup::builtin(key);
            FiniteGroup H = FiniteGroup::parse_string(G.serialize_string());
            REQUIRE(H.order() == G.order());
            for (int a = 0; a < G.order(); ++a) {
                CHECK(H.element_name(a) == G.element_name(a));
                for (int b = 0; b < G.order(); ++b) CHECK(H.mul(a, b) == G.mul(a, b));
            }
        }
    }
    SUBCASE("hand-written table with default names") {
        const char* text = "group v1\norder 2\n1 2\n2 1\n";
        FiniteGroup G = FiniteGroup::parse_string(text);
        CHECK(G.order() == 2);
        CHECK(G.element_name(0) == "g1");
        CHECK(G.element_name(1) == "g2");
        CHECK(G.mul(1, 1) == 0);
    }
    SUBCASE("parse failures") {
        check_throws_containing<std::runtime_error>(
            [] { FiniteGroup::parse_string("group v2\n"); },
            "expected header 'group v1'");
        check_throws_containing<std::runtime_error>(
            [] { FiniteGroup::parse_string("group v1\norder 2\n1 2\n"); }, "");
        check_throws_containing<std::runtime_error>(
            [] { FiniteGroup::parse_string("group v1\norder 2\n1 3\n2 1\n"); }, "");
        // structurally invalid tables surface as domain errors
        CHECK_THROWS_AS(
            FiniteGroup::parse_string("group v1\norder 2\n2 1\n1 2\n"),
            std::domain_error);
    }
}

TEST_CASE("quotient output re-parses as a valid probability group") {
    ProbabilityGroup A = testutil::char_probgroup_s3();
    ProbabilityGroup Q = ProbabilityGroup::parse_string(A.serialize_string());
    CHECK(Q == A);
    // names containing brackets survive the round trip
    ProbabilityGroup B = testutil::class_probgroup_s3();
    CHECK(ProbabilityGroup::parse_string(B.serialize_string()) == B);
}
