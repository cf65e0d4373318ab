#ifndef QH_NORMALFORM_HPP
#define QH_NORMALFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qh/blowup.hpp"
#include "qh/lax.hpp"

namespace qh {

// Which normal form a case reduces to
enum class NormalKind { Deg2, Deg3, Deg4 };
enum class FamilyKind { D5, E6, E7 };

// Claimed correspondence at square-root level.  `h` and `l` hold the local
// exponent parameters (2, 3 or 4 of each); `hratio` is the distinguished
// ratio parameter (h3 for degree 2, h4 for degree 3; unused for degree 4).
struct HeunClaims {
    std::vector<RatFn> h, l;
    RatFn hratio;
    // full accessory expression, when the source displays one
    std::optional<RatFn> E;
    // partial claim: E minus this expression must be independent of the
    // accessory variable and z (used when only the accessory-dependent part
    // is displayed)
    std::optional<RatFn> E_accessory_part;
    Var accessory = 0;
};

struct GaugeStep {
    enum Kind { Rational, Pochhammer } kind;
    RatFn param;  // r(z) or alpha
};

struct CaseSpec {
    std::string id;
    FamilyKind fam = FamilyKind::D5;
    NormalKind kind = NormalKind::Deg2;
    bool is_chart = true;
    Chart chart;      // when is_chart
    RatFn f_value;    // when !is_chart: substitute f = f_value, g stays free
    std::vector<GaugeStep> gauges;
    HeunClaims claims;
};

const std::vector<CaseSpec>& all_cases();
const CaseSpec* find_case(const std::string& id);

// swap two square-root-level variables (e.g. m5 <-> m6) in every
// expression of the case; used to generate exchange partners
CaseSpec swap_case(const CaseSpec& c, const std::string& id, Var a, Var b);

// the normal form built from the claims, with E a fresh symbolic variable
// unless the claims carry a full expression
ThreeTermEq normal_form(const CaseSpec& c);

// run the pipeline: L1 -> chart/substitution -> restriction -> gauges ->
// clear_and_primitive.  A non-null binding specializes the parameters.
ThreeTermEq derive_case(const CaseSpec& c, const ParamBinding* b);

struct VerifyResult {
    bool ok = false;
    std::string fail_kind;     // Error kind on failure
    std::string detail;
    RatFn power_witness;       // solved power-gauge ratio Q
    RatFn E_derived;           // accessory expression extracted from the slot
    std::string accessory;     // accessory variable name
};

VerifyResult verify_case(const CaseSpec& c, const ParamBinding* b);

}  // namespace qh

#endif
