#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "pmikit/dates.hpp"
#include "pmikit/errors.hpp"

namespace pmikit {

// The three anatomical regions of the decomposition scoring schema.
enum class BodyRegion { Head, Torso, Limbs };

enum class Sex { Female, Male };

enum class Season { Winter, Spring, Summer, Fall };

enum class AgeGroup { Younger, Middle, Older };

// CDC BMI categories.
enum class BmiGroup { Underweight, Healthy, Overweight, Obese };

inline constexpr int kMinRegionScore = 1;
inline constexpr int kMaxRegionScore = 6;
inline constexpr int kMinTds = 3;
inline constexpr int kMaxTds = 18;
inline constexpr double kStudyMaxPmiDays = 365.0;

// --- enum names -------------------------------------------------------------

inline std::string to_string(BodyRegion r) {
    switch (r) {
        case BodyRegion::Head: return "head";
        case BodyRegion::Torso: return "torso";
        case BodyRegion::Limbs: return "limbs";
    }
    return "?";
}

inline std::string to_string(Sex s) {
    return s == Sex::Male ? "male" : "female";
}

inline std::string to_string(Season s) {
    switch (s) {
        case Season::Winter: return "winter";
        case Season::Spring: return "spring";
        case Season::Summer: return "summer";
        case Season::Fall: return "fall";
    }
    return "?";
}

inline std::string to_string(AgeGroup g) {
    switch (g) {
        case AgeGroup::Younger: return "younger";
        case AgeGroup::Middle: return "middle";
        case AgeGroup::Older: return "older";
    }
    return "?";
}

inline std::string to_string(BmiGroup g) {
    switch (g) {
        case BmiGroup::Underweight: return "underweight";
        case BmiGroup::Healthy: return "healthy";
        case BmiGroup::Overweight: return "overweight";
        case BmiGroup::Obese: return "obese";
    }
    return "?";
}

inline Sex parse_sex(std::string_view text) {
    if (text == "female" || text == "Female" || text == "F" || text == "f") return Sex::Female;
    if (text == "male" || text == "Male" || text == "M" || text == "m") return Sex::Male;
    throw ParseError("unknown sex value '" + std::string(text) + "' (expected female or male)");
}

inline BodyRegion parse_region(std::string_view text) {
    if (text == "head") return BodyRegion::Head;
    if (text == "torso") return BodyRegion::Torso;
    if (text == "limbs") return BodyRegion::Limbs;
    throw ParseError("unknown body region '" + std::string(text) + "'");
}

// --- core records -----------------------------------------------------------

// Per-region decomposition scores, each staged 1 (no visible changes) to
// 6 (complete skeletonization).
struct RegionScores {
    int head = 1;
    int torso = 1;
    int limbs = 1;

    void validate() const {
        auto check = [](int score, const char* name) {
            if (score < kMinRegionScore || score > kMaxRegionScore) {
                throw DomainError(std::string(name) + "_score must be in [1,6], got " +
                                  std::to_string(score));
            }
        };
        check(head, "head");
        check(torso, "torso");
        check(limbs, "limbs");
    }
};

struct Demographics {
    Sex sex = Sex::Female;
    int age_years = 0;
    double weight_lb = 0.0;  // pounds
    double height_in = 0.0;  // inches

    void validate() const {
        if (age_years < 0 || age_years > 130) {
            throw DomainError("age must be in [0,130], got " + std::to_string(age_years));
        }
        if (!(weight_lb > 0.0) || !std::isfinite(weight_lb)) {
            throw DomainError("weight_lb must be positive and finite");
        }
        if (!(height_in > 0.0) || !std::isfinite(height_in)) {
            throw DomainError("height_in must be positive and finite");
        }
    }
};

// One donor case. pmi_days is stored as a real so fractional-day knowledge of
// the time of death fits the schema; it must agree with the date span to
// within one day.
struct SubjectRecord {
    std::string subject_id;
    Demographics demographics;
    RegionScores region_scores;
    Date date_of_death{};
    Date date_of_discovery{};
    double pmi_days = 0.0;
    std::optional<double> add_celsius_days;

    void validate() const {
        demographics.validate();
        region_scores.validate();
        if (date_of_discovery < date_of_death) {
            throw DomainError("subject " + subject_id + ": date_of_discovery " +
                              format_date(date_of_discovery) + " precedes date_of_death " +
                              format_date(date_of_death));
        }
        if (!(pmi_days > 0.0) || !std::isfinite(pmi_days)) {
            throw DomainError("subject " + subject_id + ": pmi_days must be positive");
        }
        double span = double(days_between(date_of_death, date_of_discovery));
        if (std::abs(pmi_days - span) > 1.0) {
            throw DomainError("subject " + subject_id + ": pmi_days " +
                              std::to_string(pmi_days) + " disagrees with the " +
                              std::to_string(long(span)) + "-day death-to-discovery span");
        }
        if (add_celsius_days && (!(*add_celsius_days > 0.0) || !std::isfinite(*add_celsius_days))) {
            throw DomainError("subject " + subject_id + ": add_celsius_days must be positive");
        }
    }

    // Study cohorts are restricted to PMIs under one year.
    bool is_study_compatible() const { return pmi_days < kStudyMaxPmiDays; }
};

struct CohortDescriptor {
    AgeGroup age_group = AgeGroup::Younger;
    BmiGroup bmi_group = BmiGroup::Healthy;
};

// --- operations -------------------------------------------------------------

// CDC imperial BMI: 703 * lb / in^2.
inline double compute_bmi(double weight_lb, double height_in) {
    if (!(weight_lb > 0.0) || !std::isfinite(weight_lb)) {
        throw DomainError("compute_bmi: weight_lb must be positive and finite");
    }
    if (!(height_in > 0.0) || !std::isfinite(height_in)) {
        throw DomainError("compute_bmi: height_in must be positive and finite");
    }
    return 703.0 * weight_lb / (height_in * height_in);
}

// Age groups: < 49 younger, [49, 72) middle, >= 72 older.
inline AgeGroup classify_age(int age_years) {
    if (age_years < 0 || age_years > 130) {
        throw DomainError("classify_age: age must be in [0,130], got " +
                          std::to_string(age_years));
    }
    if (age_years < 49) return AgeGroup::Younger;
    if (age_years < 72) return AgeGroup::Middle;
    return AgeGroup::Older;
}

// CDC groups, intervals closed on the left: [0,18.5) underweight,
// [18.5,25) healthy, [25,30) overweight, [30,inf) obese.
inline BmiGroup classify_bmi(double bmi) {
    if (!(bmi > 0.0) || !std::isfinite(bmi)) {
        throw DomainError("classify_bmi: bmi must be positive and finite");
    }
    if (bmi < 18.5) return BmiGroup::Underweight;
    if (bmi < 25.0) return BmiGroup::Healthy;
    if (bmi < 30.0) return BmiGroup::Overweight;
    return BmiGroup::Obese;
}

// Meteorological seasons for the Northern Hemisphere: Dec-Feb winter,
// Mar-May spring, Jun-Aug summer, Sep-Nov fall. Whole months, so daily
// weather joins stay month-aligned.
inline Season season_of(Date date) {
    switch (month_of(date)) {
        case 12:
        case 1:
        case 2: return Season::Winter;
        case 3:
        case 4:
        case 5: return Season::Spring;
        case 6:
        case 7:
        case 8: return Season::Summer;
        default: return Season::Fall;
    }
}

inline CohortDescriptor describe_cohort(const Demographics& demo) {
    return CohortDescriptor{classify_age(demo.age_years),
                            classify_bmi(compute_bmi(demo.weight_lb, demo.height_in))};
}

}  // namespace pmikit
