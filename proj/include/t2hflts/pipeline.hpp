#pragma once

#include <string>
#include <variant>
#include <vector>

#include "t2hflts/aggregation.hpp"
#include "t2hflts/envelope.hpp"
#include "t2hflts/linguistic.hpp"
#include "t2hflts/ranking.hpp"

namespace t2h {

// Criterion weight as given in the survey: a crisp number or a phrase
// resolved against the LTS (a bare label or a full expression).
using WeightSpec = std::variant<double, std::string>;

struct Survey {
    std::vector<std::string> dmr_ids;
    std::vector<double> dmr_weights;
    std::vector<std::string> criteria_ids;
    std::vector<WeightSpec> criteria_weights;
    std::vector<std::string> alternative_ids;
    // responses[dmr][criterion][alternative], raw phrases
    std::vector<std::vector<std::vector<std::string>>> responses;
};

struct LtsDocument {
    std::string name;
    LinguisticTermSet lts;
    EnvelopeConfig envelope;  // file values merged over library defaults
};

struct PipelineConfig {
    EnvelopeConfig envelope;
    std::size_t ladder_levels = 101;
};

struct RunResult {
    std::vector<std::string> dmr_ids;
    std::vector<std::string> criteria_ids;
    std::vector<std::string> alternative_ids;
    std::vector<std::vector<double>> centroids;  // [dmr][alternative] midpoints
    RankMatrix rank_matrix;
    std::vector<std::vector<bool>> rank_ties;  // aligned with rank_matrix rows
    ScoreTable scores;
    FinalRanking final;
    int bypass_count = 0;
    int envelope_count = 0;
    std::vector<std::vector<SampledFOU>> aggregates;  // [dmr][alternative]
};

LtsDocument load_lts(const std::string& path);
LtsDocument parse_lts(const std::string& json_text);

Survey load_survey(const std::string& path, const LinguisticTermSet& lts);
Survey parse_survey(const std::string& json_text, const LinguisticTermSet& lts,
                    const std::string& base_dir = ".");

// Responses from a delimited table: header row names the alternatives, then
// one block of criterion rows per DMR, in survey order.
void load_responses_csv(const std::string& path, Survey& survey);
void parse_responses_csv(const std::string& csv_text, Survey& survey);

RunResult run(const Survey& survey, const LinguisticTermSet& lts,
              const PipelineConfig& cfg);

enum class EmitFormat { Json, Table, Geometry };

std::string emit(const RunResult& result, EmitFormat format);
// inverse of emit(Json) for everything except the sampled FOUs
RunResult parse_result(const std::string& json_text);

std::string geometry_csv(const SampledFOU& fou, const std::string& tag = "");

}  // namespace t2h
