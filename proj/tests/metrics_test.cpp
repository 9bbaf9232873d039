#include <doctest.h>

#include "nur4/metrics.hpp"
#include "support/oracles.hpp"

using namespace nur4;

namespace {

Code code_n1_full() {
    return Code::from_words(
        1, {EWord::from_string("0"), EWord::from_string("a"),
            EWord::from_string("b"), EWord::from_string("c")});
}

}  // namespace

TEST_CASE("min distance worked examples") {
    Code c1 = build_code(GeneratorSpec::parse("n=2 k0=1 k1=0 U=1"));
    CHECK(min_distance(c1) == 2);

    Code c2 = build_code(GeneratorSpec::parse("n=3 k0=1 k1=1 T=1 U=1 V=1"));
    CHECK(min_distance(c2) == 1);  // contains c00 = ccc + 0cc

    Code c3 = build_code(GeneratorSpec::parse("n=2 k0=0 k1=1 V=1"));
    CHECK(min_distance(c3) == 2);

    Code zero = build_code(GeneratorSpec::parse("n=2 k0=0 k1=0"));
    CHECK(zero.size() == 1);
    CHECK_THROWS_AS(min_distance(zero), TooFewCodewords);
}

TEST_CASE("min nonzero weight equals the pairwise scan, all codes n <= 3") {
    for (int n = 2; n <= 3; ++n)
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k0 + k1 < n; ++k1) {
                if (k0 == 0 && k1 == 0) continue;
                TypeEnumerator en(n, k0, k1);
                en.for_each(0, en.size(), [&](const GeneratorSpec& spec) {
                    Code code = build_code(spec);
                    CHECK(min_distance(code) ==
                          oracle::pairwise_min_distance(code));
                });
            }
}

TEST_CASE("weight enumerator worked examples") {
    WeightEnumerator we =
        weight_enumerator(build_code(GeneratorSpec::parse("n=2 k0=1 k1=0 U=1")));
    CHECK(we.coeff == std::vector<uint64_t>{1, 0, 3});
    CHECK(we.str() == "1+3z^2");

    WeightEnumerator we2 =
        weight_enumerator(build_code(GeneratorSpec::parse("n=2 k0=0 k1=1 V=1")));
    CHECK(we2.coeff == std::vector<uint64_t>{1, 0, 1});
    CHECK(we2.str() == "1+z^2");

    WeightEnumerator we3 = weight_enumerator(code_n1_full());
    CHECK(we3.coeff == std::vector<uint64_t>{1, 3});
    CHECK(we3.str() == "1+3z");
}

TEST_CASE("complete weight enumerator worked examples") {
    CompleteWeightEnumerator cwe = complete_weight_enumerator(
        build_code(GeneratorSpec::parse("n=2 k0=1 k1=0 U=1")));
    REQUIRE(cwe.terms.size() == 4);
    CHECK(cwe.str() == "X0^2+Xa^2+Xb^2+Xc^2");
    for (const CweTerm& t : cwe.terms) CHECK(t.count == 1);

    CompleteWeightEnumerator cwe2 = complete_weight_enumerator(code_n1_full());
    CHECK(cwe2.str() == "X0+Xa+Xb+Xc");
}

TEST_CASE("cwe invariants across whole types") {
    for (int n = 2; n <= 4; ++n)
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k0 + k1 < n; ++k1) {
                TypeEnumerator en(n, k0, k1);
                en.for_each(0, en.size(), [&](const GeneratorSpec& spec) {
                    Code code = build_code(spec);
                    CompleteWeightEnumerator cwe =
                        complete_weight_enumerator(code);
                    uint64_t total = 0;
                    for (const CweTerm& t : cwe.terms) {
                        CHECK(t.n0 + t.na + t.nb + t.nc == n);  // homogeneous
                        total += t.count;
                    }
                    CHECK(total == code.size());
                    // specialization X0 -> 1, Xa,Xb,Xc -> z
                    CHECK(cwe.specialize() == weight_enumerator(code));
                    uint64_t we_total = 0;
                    for (uint64_t a : weight_enumerator(code).coeff)
                        we_total += a;
                    CHECK(we_total == code.size());
                });
            }
}

TEST_CASE("residue and torsion codes") {
    Code aabbcc = build_code(GeneratorSpec::parse("n=2 k0=1 k1=0 U=1"));
    Code cc = build_code(GeneratorSpec::parse("n=2 k0=0 k1=1 V=1"));

    BinaryCode res1 = residue_code(aabbcc);
    CHECK(res1.words == std::vector<uint32_t>{0b00, 0b11});
    CHECK(binary_dimension(res1) == 1);

    BinaryCode res2 = residue_code(cc);
    CHECK(res2.words == std::vector<uint32_t>{0b00});
    CHECK(binary_dimension(res2) == 0);

    BinaryCode tor1 = torsion_code(cc);
    CHECK(tor1.words == std::vector<uint32_t>{0b00, 0b11});
    CHECK(binary_dimension(tor1) == 1);

    CHECK(torsion_code(aabbcc).words == std::vector<uint32_t>{0b00, 0b11});
    CHECK(torsion_code(code_n1_full()).words == std::vector<uint32_t>{0, 1});
}

TEST_CASE("residue/torsion dimensions match the type, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k0 + k1 < n; ++k1) {
                TypeEnumerator en(n, k0, k1);
                en.for_each(0, en.size(), [&](const GeneratorSpec& spec) {
                    Code code = build_code(spec);
                    BinaryCode res = residue_code(code);
                    BinaryCode tor = torsion_code(code);
                    CHECK(binary_dimension(res) == k0);
                    CHECK(binary_dimension(tor) == k0 + k1);
                    for (uint32_t w : res.words) CHECK(tor.contains(w));
                });
            }
}

TEST_CASE("binary_dimension error paths") {
    CHECK(binary_dimension(BinaryCode{2, {0}}) == 0);
    CHECK(binary_dimension(BinaryCode{2, {0b00, 0b11}}) == 1);
    CHECK(binary_dimension(BinaryCode{2, {0b00, 0b01, 0b10, 0b11}}) == 2);
    CHECK_THROWS_AS(binary_dimension(BinaryCode{2, {0b00, 0b01, 0b10}}),
                    NotLinear);
    CHECK_THROWS_AS(binary_dimension(BinaryCode{3, {0b000, 0b001, 0b010, 0b100}}),
                    NotLinear);
    CHECK_THROWS_AS(binary_dimension(BinaryCode{2, {}}), NotLinear);
}
