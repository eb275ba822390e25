#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmikit/domain.hpp"
#include "pmikit/errors.hpp"

namespace pmikit {

// One decomposition stage: a score and the observable phenomena that define it.
struct ScoringStage {
    int score = 0;
    std::vector<std::string> phenomena;
};

// Machine-readable scoring schema: three regions, each staged 1..6. Loaded
// from JSON so corrected or alternative scoring systems can be swapped in
// without recompiling.
class ScoringSchema {
public:
    ScoringSchema(std::vector<ScoringStage> head, std::vector<ScoringStage> torso,
                  std::vector<ScoringStage> limbs)
        : stages_{std::move(head), std::move(torso), std::move(limbs)} {
        for (std::size_t r = 0; r < stages_.size(); ++r) {
            validate_region(static_cast<BodyRegion>(r), stages_[r]);
        }
    }

    const std::vector<ScoringStage>& stages(BodyRegion region) const {
        return stages_[static_cast<std::size_t>(region)];
    }

    // Phenomenon descriptions for one region/score, in schema order.
    const std::vector<std::string>& describe(BodyRegion region, int score) const {
        if (score < kMinRegionScore || score > kMaxRegionScore) {
            throw DomainError("stage score must be in [1,6], got " + std::to_string(score));
        }
        return stages(region)[std::size_t(score - 1)].phenomena;
    }

    nlohmann::json to_json() const {
        nlohmann::json regions = nlohmann::json::array();
        for (std::size_t r = 0; r < stages_.size(); ++r) {
            nlohmann::json stages = nlohmann::json::array();
            for (const auto& stage : stages_[r]) {
                stages.push_back({{"score", stage.score}, {"phenomena", stage.phenomena}});
            }
            regions.push_back(
                {{"region", to_string(static_cast<BodyRegion>(r))}, {"stages", stages}});
        }
        return nlohmann::json{{"regions", regions}};
    }

    static ScoringSchema from_json(const nlohmann::json& doc);
    static ScoringSchema bundled_default();

private:
    static void validate_region(BodyRegion region, const std::vector<ScoringStage>& stages) {
        std::array<bool, std::size_t(kMaxRegionScore)> seen{};
        for (const auto& stage : stages) {
            if (stage.score < kMinRegionScore || stage.score > kMaxRegionScore) {
                throw SchemaError("region " + to_string(region) + ": score " +
                                  std::to_string(stage.score) + " outside [1,6]");
            }
            if (seen[std::size_t(stage.score - 1)]) {
                throw SchemaError("region " + to_string(region) + ": duplicate stage " +
                                  std::to_string(stage.score));
            }
            seen[std::size_t(stage.score - 1)] = true;
            if (stage.phenomena.empty()) {
                throw SchemaError("region " + to_string(region) + ", stage " +
                                  std::to_string(stage.score) + ": no phenomenon descriptions");
            }
            for (const auto& p : stage.phenomena) {
                if (p.empty()) {
                    throw SchemaError("region " + to_string(region) + ", stage " +
                                      std::to_string(stage.score) + ": empty description");
                }
            }
        }
        for (int s = kMinRegionScore; s <= kMaxRegionScore; ++s) {
            if (!seen[std::size_t(s - 1)]) {
                throw SchemaError("region " + to_string(region) + ": missing stage " +
                                  std::to_string(s));
            }
        }
    }

    // Indexed by BodyRegion; each inner vector is sorted by score after
    // construction (validate_region guarantees exactly scores 1..6).
    std::array<std::vector<ScoringStage>, 3> stages_;
};

inline ScoringSchema ScoringSchema::from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("regions") || !doc["regions"].is_array()) {
        throw SchemaError("schema document must have a top-level 'regions' array");
    }
    std::array<std::vector<ScoringStage>, 3> stages;
    std::array<bool, 3> found{};
    for (const auto& region_doc : doc["regions"]) {
        BodyRegion region = parse_region(region_doc.value("region", ""));
        auto idx = std::size_t(region);
        if (found[idx]) {
            throw SchemaError("region " + to_string(region) + " appears twice");
        }
        found[idx] = true;
        if (!region_doc.contains("stages") || !region_doc["stages"].is_array()) {
            throw SchemaError("region " + to_string(region) + ": missing 'stages' array");
        }
        std::vector<ScoringStage> parsed;
        for (const auto& stage_doc : region_doc["stages"]) {
            ScoringStage stage;
            stage.score = stage_doc.value("score", 0);
            for (const auto& p : stage_doc.value("phenomena", std::vector<std::string>{})) {
                stage.phenomena.push_back(p);
            }
            parsed.push_back(std::move(stage));
        }
        std::sort(parsed.begin(), parsed.end(),
                  [](const ScoringStage& a, const ScoringStage& b) { return a.score < b.score; });
        stages[idx] = std::move(parsed);
    }
    for (std::size_t r = 0; r < 3; ++r) {
        if (!found[r]) {
            throw SchemaError("region " + to_string(static_cast<BodyRegion>(r)) +
                              " missing from schema document");
        }
    }
    return ScoringSchema(std::move(stages[0]), std::move(stages[1]), std::move(stages[2]));
}

// The scoring method staged per Gelderman et al.: head/neck, torso, and limbs
// each scored 1..6 from the phenomena below.
inline ScoringSchema ScoringSchema::bundled_default() {
    std::vector<ScoringStage> head = {
        {1, {"No visible changes"}},
        {2,
         {"Livor mortis, rigour mortis and vibices", "Eyes: cloudy and/or tache noir",
          "Discoloration: brownish shades particularly at the edges. Drying of nose, ears and "
          "lips"}},
        {3,
         {"Grey to green discoloration",
          "Bloating of neck and face is present and/or skin blisters, skin slippage and/or "
          "marbling",
          "Purging of decompositional fluids out of ears, nose and mouth and/or brown to black "
          "discoloration"}},
        {4,
         {"Caving in of the flesh and tissues of eyes and throat. Skin having a leathery "
          "appearance",
          "Partial skeletonization, joints still together"}},
        {5, {"Gross skeletonization, some joints disarticulated"}},
        {6, {"Complete skeletonization"}},
    };
    std::vector<ScoringStage> torso = {
        {1, {"No visible changes"}},
        {2, {"Livor mortis, rigour mortis and vibices"}},
        {3,
         {"Grey to green discoloration",
          "Bloating with green discoloration and/or skin blisters, skin slippage and/or marbling",
          "Rectal purging of decompositional fluids",
          "Post-bloating: release of abdominal gasses with discoloration changing from green to "
          "black"}},
        {4,
         {"Decomposition of tissue producing sagging of flesh. Caving in of the abdominal cavity",
          "Skin having a leathery appearance", "Partial skeletonization, joints still together"}},
        {5, {"Gross skeletonization, some joints disarticulated"}},
        {6, {"Complete skeletonization"}},
    };
    std::vector<ScoringStage> limbs = {
        {1, {"No visible changes"}},
        {2,
         {"Livor mortis, rigour mortis and vibices",
          "Discoloration: brownish shades particularly at the edges. Drying of fingers and toes"}},
        {3,
         {"Skin blisters and/or skin slippage and/or marbling", "Grey to green discoloration",
          "Brown to black discoloration"}},
        {4,
         {"Skin having a leathery appearance",
          "Partial skeletonization, joints and tendons still together"}},
        {5, {"Gross skeletonization, some joints disarticulated"}},
        {6, {"Complete skeletonization"}},
    };
    return ScoringSchema(std::move(head), std::move(torso), std::move(limbs));
}

inline ScoringSchema load_schema(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("schema document is not valid JSON: ") + e.what());
    }
    return ScoringSchema::from_json(doc);
}

inline ScoringSchema load_schema_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open schema file '" + path + "'");
    return load_schema(in);
}

// Total decomposition score: the three region scores summed, so TDS in [3,18].
inline int compute_tds(const RegionScores& scores) {
    scores.validate();
    return scores.head + scores.torso + scores.limbs;
}

inline const std::vector<std::string>& describe_stage(const ScoringSchema& schema,
                                                      BodyRegion region, int score) {
    return schema.describe(region, score);
}

struct TdsRecord {
    std::string subject_id;
    int tds = kMinTds;

    void validate() const {
        if (tds < kMinTds || tds > kMaxTds) {
            throw DomainError("subject " + subject_id + ": TDS must be in [3,18], got " +
                              std::to_string(tds));
        }
    }
};

}  // namespace pmikit
