#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "t2hflts/errors.hpp"
#include "t2hflts/pipeline.hpp"

using namespace t2h;

namespace {

const std::string kRoot = std::string(T2H_SOURCE_DIR);

const LtsDocument& shipped() {
    static const LtsDocument doc = load_lts(kRoot + "/data/lts_default.json");
    return doc;
}

Survey tiny_survey() {
    Survey s;
    s.dmr_ids = {"D1"};
    s.dmr_weights = {1.0};
    s.criteria_ids = {"C1", "C2"};
    s.criteria_weights = {WeightSpec{0.5}, WeightSpec{0.5}};
    s.alternative_ids = {"A1", "A2"};
    return s;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("shipped configuration loads with its envelope parameters") {
    const LtsDocument& doc = shipped();
    CHECK(doc.name == "calibrated-5");
    CHECK(doc.lts.g() == 4);
    CHECK(doc.envelope.alpha == doctest::Approx(0.5417).epsilon(1e-12));
    CHECK(doc.envelope.shoulder_alpha == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(doc.envelope.grid_n == 1001);
    CHECK(doc.envelope.shoulder_policy == ShoulderPolicy::Clamp);
}

TEST_CASE("configuration documents are validated on load") {
    CHECK_THROWS_WITH_AS(load_lts(kRoot + "/tests/corpus/lts_bad_version.json"),
                         doctest::Contains("unsupported schema_version 2"), ValidationError);
    CHECK_THROWS_WITH_AS(load_lts(kRoot + "/tests/corpus/lts_dup_label.json"),
                         doctest::Contains("duplicate term label 'A'"), ValidationError);
    CHECK_THROWS_WITH_AS(load_lts(kRoot + "/tests/corpus/lts_not_nested.json"),
                         doctest::Contains("term 'L': FOU not nested"), ValidationError);
    CHECK_THROWS_WITH_AS(load_lts(kRoot + "/tests/corpus/lts_bad_policy.json"),
                         doctest::Contains("shoulder_policy must be 'clamp' or 'plain'"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(load_lts(kRoot + "/tests/corpus/does_not_exist.json"),
                         doctest::Contains("cannot open"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_lts("{not json"), doctest::Contains("not valid JSON"),
                         ValidationError);
}

TEST_CASE("survey documents are validated with cell coordinates") {
    const auto& lts = shipped().lts;
    CHECK_THROWS_WITH_AS(load_survey(kRoot + "/tests/corpus/survey_bad_weights.json", lts),
                         doctest::Contains("DMR weights sum to 0.9"), ValidationError);

    try {
        load_survey(kRoot + "/tests/corpus/survey_unknown_phrase.json", lts);
        FAIL("expected a phrase error");
    } catch (const ValidationError& err) {
        const std::string what = err.what();
        CHECK(what.find("DMR 'D1'") != std::string::npos);
        CHECK(what.find("criterion 'C1'") != std::string::npos);
        CHECK(what.find("alternative 'A2'") != std::string::npos);
        CHECK(what.find("unknown term label 'blue'") != std::string::npos);
    }

    CHECK_THROWS_WITH_AS(load_survey(kRoot + "/tests/corpus/survey_both_forms.json", lts),
                         doctest::Contains("exactly one of 'responses' or 'responses_csv'"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(load_survey(kRoot + "/tests/corpus/survey_no_responses.json", lts),
                         doctest::Contains("exactly one of 'responses' or 'responses_csv'"),
                         ValidationError);
}

TEST_CASE("delimited response tables") {
    Survey s = tiny_survey();
    parse_responses_csv("criterion,A1,A2\nC1,G,P\nC2,M,less than P\n", s);
    REQUIRE(s.responses.size() == 1);
    CHECK(s.responses[0][1][1] == "less than P");

    Survey bad_header = tiny_survey();
    CHECK_THROWS_WITH_AS(parse_responses_csv("criterion,A1,AX\nC1,G,P\nC2,M,M\n", bad_header),
                         doctest::Contains("header column 3 is 'AX'"), ValidationError);

    Survey bad_label = tiny_survey();
    CHECK_THROWS_WITH_AS(parse_responses_csv("criterion,A1,A2\nC1,G,P\nCX,M,M\n", bad_label),
                         doctest::Contains("label 'CX' does not match criterion 'C2'"),
                         ValidationError);

    Survey short_file = tiny_survey();
    CHECK_THROWS_WITH_AS(parse_responses_csv("criterion,A1,A2\nC1,G,P\n", short_file),
                         doctest::Contains("expected 2 data rows"), ValidationError);

    Survey empty = tiny_survey();
    CHECK_THROWS_WITH_AS(parse_responses_csv("\n  \n", empty), doctest::Contains("empty file"),
                         ValidationError);
}

TEST_CASE("sidecar table and inline responses agree") {
    const auto& lts = shipped().lts;
    const Survey a = load_survey(kRoot + "/data/example1_survey.json", lts);
    const Survey b = load_survey(kRoot + "/data/example1_survey_csv.json", lts);
    CHECK(a.dmr_ids == b.dmr_ids);
    CHECK(a.responses == b.responses);
}

TEST_CASE("full run over the four-DMR survey") {
    const LtsDocument& doc = shipped();
    const Survey survey = load_survey(kRoot + "/data/example1_survey.json", doc.lts);
    PipelineConfig cfg;
    cfg.envelope = doc.envelope;

    const RunResult r = run(survey, doc.lts, cfg);
    CHECK(r.bypass_count == 37);
    CHECK(r.envelope_count == 43);
    CHECK(r.rank_matrix.rows.size() == 4);
    CHECK(r.scores.entries.size() == 5);
    r.rank_matrix.validate(5);

    // per-DMR centroid orderings really sort the stored centroids
    for (std::size_t d = 0; d < r.rank_matrix.rows.size(); ++d)
        for (std::size_t k = 1; k < r.rank_matrix.rows[d].size(); ++k) {
            const double prev = r.centroids[d][std::size_t(r.rank_matrix.rows[d][k - 1])];
            const double cur = r.centroids[d][std::size_t(r.rank_matrix.rows[d][k])];
            CHECK(prev >= cur - 1e-9);
        }

    // byte-identical reruns
    const RunResult again = run(survey, doc.lts, cfg);
    CHECK(emit(r, EmitFormat::Json) == emit(again, EmitFormat::Json));

    // emit -> parse -> emit round-trips
    const std::string text = emit(r, EmitFormat::Json);
    CHECK(emit(parse_result(text), EmitFormat::Json) == text);

    // table: one header plus one line per alternative
    const std::string table = emit(r, EmitFormat::Table);
    CHECK(std::count(table.begin(), table.end(), '\n') == 6);
    for (const auto& id : r.alternative_ids) CHECK(table.find(id) != std::string::npos);

    // geometry: header plus one line per (dmr, alternative, grid sample)
    const std::string geo = emit(r, EmitFormat::Geometry);
    CHECK(std::count(geo.begin(), geo.end(), '\n') == 1 + 4 * 5 * 1001);
    CHECK(geo.rfind("dmr,alternative,x,lower,upper\n", 0) == 0);
}

TEST_CASE("a single decision maker fixes the final order") {
    const LtsDocument& doc = shipped();
    const Survey survey = load_survey(kRoot + "/data/example2_survey.json", doc.lts);
    PipelineConfig cfg;
    cfg.envelope = doc.envelope;

    const RunResult r = run(survey, doc.lts, cfg);
    REQUIRE(r.rank_matrix.rows.size() == 1);
    CHECK(r.final.order == r.rank_matrix.rows[0]);
    // with one DMR each alternative scores exactly its rank priority
    for (std::size_t k = 0; k < r.final.order.size(); ++k)
        CHECK(r.final.scores[k] == doctest::Approx(double(5 - k)).epsilon(1e-12));
}

TEST_CASE("geometry csv formats with and without a tag") {
    const LtsDocument& doc = shipped();
    const Representation rep =
        represent_response(CLE{CLE::Shape::Between, 2, 4}, doc.lts, doc.envelope);
    const SampledFOU fou = sample(rep, 11);

    const std::string bare = geometry_csv(fou);
    CHECK(bare.rfind("x,lower,upper\n", 0) == 0);
    CHECK(std::count(bare.begin(), bare.end(), '\n') == 12);

    const std::string tagged = geometry_csv(fou, "M..VG");
    CHECK(tagged.rfind("tag,x,lower,upper\n", 0) == 0);
    CHECK(tagged.find("\nM..VG,") != std::string::npos);

    // lower never exceeds upper in the emitted samples
    std::istringstream is(bare);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double lo = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        const double hi = std::stod(line.substr(c2 + 1));
        CHECK(lo <= hi + 1e-9);
    }
}

TEST_CASE("incomplete response tensors are rejected at run time") {
    const LtsDocument& doc = shipped();
    Survey s = tiny_survey();
    s.responses = {{{"G", "P"}}};  // one criterion row instead of two
    PipelineConfig cfg;
    cfg.envelope = doc.envelope;
    CHECK_THROWS_WITH_AS(run(s, doc.lts, cfg), doctest::Contains("incomplete for DMR 'D1'"),
                         ValidationError);
}

}  // TEST_SUITE
