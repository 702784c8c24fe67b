#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/loci.hpp"

namespace poncelet {

struct SubCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool at_most = true;  // pass iff value <= threshold, else value > threshold
    bool pass = false;
};

struct ClaimReport {
    std::string claim_id;
    std::string title;
    bool conjecture = false;  // reported as numerical evidence, never fails a run
    std::optional<FamilyConfig> params;
    bool pass = false;
    double metric = 0.0;     // value of the first sub-check
    double tolerance = 0.0;  // its threshold
    std::string expected;
    std::string observed;
    std::vector<SubCheck> checks;
    std::vector<std::string> notes;
    std::vector<std::vector<std::string>> table;

    SubCheck& require_at_most(std::string name, double value, double threshold);
    SubCheck& require_above(std::string name, double value, double threshold);
    void finish();
};

struct VerifyInputs {
    BicentricParams bic{1.0, 0.2, 0.3, std::nullopt};
    BicentricParams bic3{1.0, 0.15, 0.25, 0.4};
    ConfocalParams conf{2.0, 1.0, 0.5, std::nullopt};
    ConfocalParams conf3{2.0, 1.0, 0.3, 0.5};
    TangentBranch branch{};
    int samples = 512;
    LocusTolerances tol{};
};

// Closed-form pieces shared by the checks.
struct BicIIX1Circle {
    Point center;
    double radius = 0.0;
    double excenter_radius = 0.0;
};
BicIIX1Circle bicII_x1_circle(const BicentricParams& p);

struct ExcentralEllipse {
    double a = 0.0;
    double b = 0.0;
};
ExcentralEllipse confII_excentral_ellipse(const ConfocalParams& p);

double max_circle_deviation(const std::vector<Point>& pts, Point center, double radius);
double max_ellipse_deviation(const std::vector<Point>& pts, double a, double b);

// Representative parameters used for Tables 1 and 2.
FamilyConfig default_family(FamilyKind kind, const VerifyInputs& in = {});

ClaimReport check_bicII_x1_circle(const BicentricParams& p, const VerifyInputs& in = {});
ClaimReport check_bicII_excenter_circle(const BicentricParams& p, const VerifyInputs& in = {});
ClaimReport check_x2_sextic(const BicentricParams& p, const VerifyInputs& in = {});
ClaimReport check_confII_excenter_ellipse(const ConfocalParams& p, const VerifyInputs& in = {});
ClaimReport check_confII_x1_conic_only_at_critical(double a, double b, const VerifyInputs& in = {});
ClaimReport check_x2_homothety_half_n4(double a, double b, const VerifyInputs& in = {});
ClaimReport check_n4_excentral(double a, double b, const VerifyInputs& in = {});
ClaimReport check_n6_excentral(double a, double b, const VerifyInputs& in = {});
ClaimReport check_bicII_envelope(const BicentricParams& p, const VerifyInputs& in = {});
ClaimReport check_confII_envelope(const ConfocalParams& p, const VerifyInputs& in = {});
ClaimReport check_bicI_conserved(double R, double r, const VerifyInputs& in = {});
ClaimReport check_confI_conserved(double a, double b, const VerifyInputs& in = {});
ClaimReport check_convexity_quintic(double a, double b, const VerifyInputs& in = {});
ClaimReport check_four_branches(const BicentricParams& p, const VerifyInputs& in = {});
ClaimReport check_conjecture_bicII_stationary(const std::vector<int>& center_ids, const VerifyInputs& in = {});
ClaimReport check_conjectures_bicIII(const BicentricParams& p, const VerifyInputs& in = {});
ClaimReport check_table1(const VerifyInputs& in = {});
ClaimReport summary_table(const VerifyInputs& in = {});

// Table 1 columns and the reference rows.
const std::vector<int>& table1_centers();
char verdict_letter(const CurveFit& fit);

struct ClaimInfo {
    std::string id;
    std::string title;
    bool conjecture = false;
    std::function<ClaimReport(const VerifyInputs&)> run;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(std::string_view id);
std::vector<ClaimReport> run_claims(const std::vector<std::string>& ids, const VerifyInputs& in = {});
std::vector<ClaimReport> run_all(const VerifyInputs& in = {});

}  // namespace poncelet
