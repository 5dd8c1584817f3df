#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "t2hflts/baselines.hpp"
#include "t2hflts/entropy.hpp"
#include "t2hflts/envelope.hpp"
#include "t2hflts/errors.hpp"
#include "t2hflts/pipeline.hpp"

namespace {

using nlohmann::json;

std::string lts_path_or_throw(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("T2H_LTS"); env && *env) return env;
    throw t2h::ValidationError("no term set given: pass --lts or set T2H_LTS");
}

json knots(const t2h::Trapezoid& t) { return json::array({t.a, t.b, t.c, t.d}); }

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw t2h::ValidationError("cannot write '" + out_path + "'");
    out << text;
}

// Nine-parameter view of a criterion weight: crisp numbers become a point
// interval, phrases go through the envelope construction.
t2h::NineParamIT2 weight_nine_param(const t2h::WeightSpec& spec,
                                    const t2h::LinguisticTermSet& lts,
                                    const t2h::EnvelopeConfig& env) {
    if (const double* crisp = std::get_if<double>(&spec)) {
        t2h::Band4 b{{*crisp, *crisp, *crisp, *crisp}, 1.0, 1.0};
        return {b, b};
    }
    const t2h::CLE cle = t2h::parse_cle(std::get<std::string>(spec), lts);
    return t2h::to_nine_param(t2h::represent_response(cle, lts, env));
}

// Collective [alternative][criterion] matrix: every response is mapped to
// nine-parameter form and the DMR axis is collapsed by weighted sum.
std::vector<std::vector<t2h::NineParamIT2>> collective_matrix(
    const t2h::Survey& survey, const t2h::LinguisticTermSet& lts,
    const t2h::EnvelopeConfig& env) {
    const std::size_t p = survey.dmr_ids.size();
    const std::size_t n = survey.criteria_ids.size();
    const std::size_t m = survey.alternative_ids.size();
    std::vector<std::vector<std::vector<t2h::NineParamIT2>>> tensor(
        p, std::vector<std::vector<t2h::NineParamIT2>>(m));
    for (std::size_t d = 0; d < p; ++d)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t a = 0; a < m; ++a) {
                const t2h::CLE cle = t2h::parse_cle(survey.responses[d][c][a], lts);
                tensor[d][a].push_back(
                    t2h::to_nine_param(t2h::represent_response(cle, lts, env)));
            }
    return t2h::wlq_collect(tensor, survey.dmr_weights);
}

json ranking_json(const std::vector<std::string>& ids, const std::vector<double>& values,
                  bool descending = true) {
    std::vector<std::size_t> order(ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (std::fabs(values[a] - values[b]) <= 1e-9) return a < b;
        return descending ? values[a] > values[b] : values[a] < values[b];
    });
    json rows = json::array();
    double prev = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        rows.push_back(json{{"alternative", ids[order[k]]},
                            {"value", values[order[k]]},
                            {"tied_with_previous",
                             k > 0 && std::fabs(values[order[k]] - prev) <= 1e-9}});
        prev = values[order[k]];
    }
    return rows;
}

int run_parse(const std::string& phrase, const std::string& lts_flag) {
    const auto doc = t2h::load_lts(lts_path_or_throw(lts_flag));
    const t2h::CLE cle = t2h::parse_cle(phrase, doc.lts);
    const t2h::T2HFLTS h = t2h::transform(cle, doc.lts.g());
    json out;
    out["schema_version"] = 1;
    out["phrase"] = phrase;
    out["canonical"] = t2h::render(cle, doc.lts);
    switch (cle.shape) {
        case t2h::CLE::Shape::Single: out["shape"] = "single"; break;
        case t2h::CLE::Shape::LessThan: out["shape"] = "less_than"; break;
        case t2h::CLE::Shape::MoreThan: out["shape"] = "more_than"; break;
        case t2h::CLE::Shape::Between: out["shape"] = "between"; break;
    }
    json labels = json::array();
    for (int i : h.indices()) labels.push_back(doc.lts.term(i).label);
    out["indices"] = h.indices();
    out["labels"] = std::move(labels);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_envelope(const std::string& phrase, const std::string& lts_flag, bool geometry) {
    const auto doc = t2h::load_lts(lts_path_or_throw(lts_flag));
    const t2h::CLE cle = t2h::parse_cle(phrase, doc.lts);
    const t2h::Representation rep = t2h::represent_response(cle, doc.lts, doc.envelope);
    if (geometry) {
        std::cout << t2h::geometry_csv(t2h::sample(rep, doc.envelope.grid_n),
                                       t2h::render(cle, doc.lts));
        return 0;
    }
    json out;
    out["schema_version"] = 1;
    out["phrase"] = t2h::render(cle, doc.lts);
    if (const auto* term = std::get_if<t2h::IT2TrFN>(&rep)) {
        out["kind"] = "term";
        out["umf"] = knots(term->umf);
        out["lmf"] = knots(term->lmf);
        out["lmf_height"] = term->lmf.h;
    } else {
        const auto& env = std::get<t2h::T2Envelope>(rep);
        out["kind"] = "envelope";
        out["umf"] = knots(env.umf);
        out["lmf_before_deduction"] = knots(env.lmf_t1);
        out["lmf_height_before_deduction"] = env.lmf_t1.h;
        out["entropy"] = json{{"e_c", env.e_c}};
        const auto report = t2h::entropy_report(
            t2h::CLE{cle.shape, env.source.lo, env.source.hi}, doc.lts,
            doc.envelope.collapse, doc.envelope.grid_n);
        out["entropy"] = json{{"e_f", report.e_f},
                              {"e_h", report.e_h},
                              {"beta", report.beta},
                              {"e_c", report.e_c}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_decide(const std::string& survey_path, const std::string& lts_flag,
               const std::string& out_path, const std::string& format) {
    const auto doc = t2h::load_lts(lts_path_or_throw(lts_flag));
    const t2h::Survey survey = t2h::load_survey(survey_path, doc.lts);
    t2h::PipelineConfig cfg;
    cfg.envelope = doc.envelope;
    const t2h::RunResult result = t2h::run(survey, doc.lts, cfg);
    t2h::EmitFormat f = t2h::EmitFormat::Json;
    if (format == "table") f = t2h::EmitFormat::Table;
    else if (format == "geometry") f = t2h::EmitFormat::Geometry;
    write_or_print(t2h::emit(result, f), out_path);
    return 0;
}

int run_sweep(const std::string& lts_flag, int which) {
    const auto doc = t2h::load_lts(lts_path_or_throw(lts_flag));
    const auto mode = which == 1 ? t2h::SweepCase::GrowingSet : t2h::SweepCase::SlidingSingleton;
    std::cout << "k,e_f,e_h,beta,e_c\n";
    for (const auto& row :
         t2h::entropy_sweep(doc.lts, mode, doc.envelope.collapse, doc.envelope.grid_n)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%.6f\n", row.k, row.e_f, row.e_h,
                      row.beta, row.e_c);
        std::cout << buf;
    }
    return 0;
}

int run_baseline(const std::string& method, const std::string& survey_path,
                 const std::string& lts_flag) {
    const auto doc = t2h::load_lts(lts_path_or_throw(lts_flag));
    const t2h::Survey survey = t2h::load_survey(survey_path, doc.lts);
    const auto coll = collective_matrix(survey, doc.lts, doc.envelope);
    const std::size_t n = survey.criteria_ids.size();
    const std::size_t m = survey.alternative_ids.size();

    json out;
    out["schema_version"] = 1;
    out["method"] = method;
    out["alternatives"] = survey.alternative_ids;

    std::vector<double> values(m, 0.0);
    if (method == "topsis") {
        std::vector<t2h::NineParamIT2> wnp;
        for (const auto& spec : survey.criteria_weights)
            wnp.push_back(weight_nine_param(spec, doc.lts, doc.envelope));
        std::vector<std::vector<t2h::NineParamIT2>> weighted(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t c = 0; c < n; ++c)
                weighted[a].push_back(t2h::topsis_weighted(coll[a][c], wnp[c]));
        std::vector<t2h::NineParamIT2> pos, neg;
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<t2h::NineParamIT2> column;
            for (std::size_t a = 0; a < m; ++a) column.push_back(weighted[a][c]);
            auto [pi, ni] = t2h::topsis_ideals(column);
            pos.push_back(pi);
            neg.push_back(ni);
        }
        for (std::size_t a = 0; a < m; ++a) {
            std::vector<double> li_pos, li_neg;
            for (std::size_t c = 0; c < n; ++c) {
                li_pos.push_back(t2h::likelihood_index(pos[c], weighted[a][c]));
                li_neg.push_back(t2h::likelihood_index(weighted[a][c], neg[c]));
            }
            values[a] = t2h::closeness(li_pos, li_neg);
        }
        out["closeness"] = values;
    } else {
        for (std::size_t a = 0; a < m; ++a) {
            t2h::NineParamIT2 total;
            bool first = true;
            for (std::size_t c = 0; c < n; ++c) {
                t2h::NineParamIT2 part;
                if (const double* crisp = std::get_if<double>(&survey.criteria_weights[c]))
                    part = t2h::wlq_scale(coll[a][c], *crisp);
                else
                    part = t2h::topsis_weighted(
                        coll[a][c], weight_nine_param(survey.criteria_weights[c], doc.lts,
                                                      doc.envelope));
                total = first ? part : t2h::wlq_add(total, part);
                first = false;
            }
            values[a] = t2h::wlq_rank_value(total);
        }
        out["rank_values"] = values;
    }
    out["ranking"] = ranking_json(survey.alternative_ids, values);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linguistic group decisions over interval type-2 term scales"};
    app.require_subcommand(1);

    std::string lts_flag, phrase, survey_path, out_path;
    std::string format = "json", method;
    bool geometry = false;
    int sweep_case = 1;

    auto* parse_cmd = app.add_subcommand("parse", "parse a comparative phrase");
    parse_cmd->add_option("phrase", phrase, "the phrase")->required();
    parse_cmd->add_option("--lts", lts_flag, "term set document (default: $T2H_LTS)");

    auto* env_cmd = app.add_subcommand("envelope", "represent a phrase as a type-2 set");
    env_cmd->add_option("phrase", phrase, "the phrase")->required();
    env_cmd->add_option("--lts", lts_flag, "term set document (default: $T2H_LTS)");
    env_cmd->add_flag("--geometry", geometry, "emit sampled tracks as CSV");

    auto* decide_cmd = app.add_subcommand("decide", "run a survey end to end");
    decide_cmd->add_option("--survey", survey_path, "survey document")->required();
    decide_cmd->add_option("--lts", lts_flag, "term set document (default: $T2H_LTS)");
    decide_cmd->add_option("--out", out_path, "write output here instead of stdout");
    decide_cmd->add_option("--format", format, "json | table | geometry")
        ->check(CLI::IsMember({"json", "table", "geometry"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "entropy response curves");
    sweep_cmd->add_option("--lts", lts_flag, "term set document (default: $T2H_LTS)");
    sweep_cmd->add_option("--case", sweep_case, "1 = growing set, 2 = sliding singleton")
        ->required()
        ->check(CLI::IsMember({1, 2}));

    auto* base_cmd = app.add_subcommand("baseline", "published comparison methods");
    base_cmd->add_option("--method", method, "topsis | wlq")
        ->required()
        ->check(CLI::IsMember({"topsis", "wlq"}));
    base_cmd->add_option("--survey", survey_path, "survey document")->required();
    base_cmd->add_option("--lts", lts_flag, "term set document (default: $T2H_LTS)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed()) return run_parse(phrase, lts_flag);
        if (env_cmd->parsed()) return run_envelope(phrase, lts_flag, geometry);
        if (decide_cmd->parsed()) return run_decide(survey_path, lts_flag, out_path, format);
        if (sweep_cmd->parsed()) return run_sweep(lts_flag, sweep_case);
        if (base_cmd->parsed()) return run_baseline(method, survey_path, lts_flag);
    } catch (const t2h::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const t2h::NumericError& err) {
        std::cerr << "numeric error: " << err.what() << "\n";
        return 3;
    }
    return 0;
}
