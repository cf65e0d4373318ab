#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/normalform.hpp"

using namespace qh;

namespace {

ParamBinding sample_for(const CaseSpec& c, std::uint64_t seed) {
    Sampler s(seed);
    const Family& fam = c.fam == FamilyKind::D5   ? family_d5()
                        : c.fam == FamilyKind::E6 ? family_e6()
                                                  : family_e7();
    return s.sample(fam);
}

void check_case(const std::string& id, std::uint64_t seed) {
    const CaseSpec* c = find_case(id);
    REQUIRE(c != nullptr);
    ParamBinding b = sample_for(*c, seed);
    VerifyResult r = verify_case(*c, &b);
    INFO(id << ": " << r.fail_kind << " " << r.detail);
    CHECK(r.ok);
}

}  // namespace

TEST_CASE("registry") {
    CHECK(all_cases().size() == 42);
    int d5 = 0, e6 = 0, e7 = 0;
    for (auto& c : all_cases()) {
        if (c.fam == FamilyKind::D5) ++d5;
        if (c.fam == FamilyKind::E6) ++e6;
        if (c.fam == FamilyKind::E7) ++e7;
    }
    CHECK(d5 == 12);
    CHECK(e6 == 14);
    CHECK(e7 == 16);
    CHECK(find_case("d5:P5") != nullptr);
    CHECK(find_case("nope") == nullptr);
}

TEST_CASE("d5:P5 specialized") { check_case("d5:P5", 11); }
TEST_CASE("d5:P7 specialized") { check_case("d5:P7", 12); }
TEST_CASE("d5:P1 specialized") { check_case("d5:P1", 13); }
TEST_CASE("d5:P3 specialized") { check_case("d5:P3", 14); }
TEST_CASE("d5:f=k1/nu7 specialized") { check_case("d5:f=k1/nu7", 15); }
TEST_CASE("d5:f=nu3 specialized") { check_case("d5:f=nu3", 16); }
TEST_CASE("d5 swapped partners") {
    check_case("d5:P6", 21);
    check_case("d5:P2", 22);
    check_case("d5:f=nu4", 23);
}

TEST_CASE("e6 base cases specialized") {
    check_case("e6:P5", 31);
    check_case("e6:P7", 32);
    check_case("e6:P1", 33);
    check_case("e6:f=k1/nu7", 34);
    check_case("e6:f=nu1", 35);
}

TEST_CASE("e7 base cases specialized") {
    check_case("e7:P1", 41);
    check_case("e7:P5", 42);
    check_case("e7:f=nu1", 43);
    check_case("e7:f=k1/nu5", 44);
}

TEST_CASE("d5:P5 symbolic") {
    const CaseSpec* c = find_case("d5:P5");
    VerifyResult r = verify_case(*c, nullptr);
    INFO(r.fail_kind << " " << r.detail);
    CHECK(r.ok);
}
