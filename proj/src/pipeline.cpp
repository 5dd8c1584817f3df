#include "t2hflts/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "t2hflts/errors.hpp"

namespace t2h {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ValidationError(what + ": not valid JSON");
    return doc;
}

void require_version(const json& doc, const std::string& what) {
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        throw ValidationError(what + ": missing schema_version");
    const int v = doc["schema_version"].get<int>();
    if (v != 1)
        throw ValidationError(what + ": unsupported schema_version " + std::to_string(v));
}

double number_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw ValidationError(where + ": missing numeric field '" + key + "'");
    return obj[key].get<double>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw ValidationError(where + ": missing string field '" + key + "'");
    return obj[key].get<std::string>();
}

std::array<double, 4> quad_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != 4)
        throw ValidationError(where + ": field '" + key + "' must be a 4-number array");
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!obj[key][i].is_number())
            throw ValidationError(where + ": field '" + key + "' must be a 4-number array");
        out[i] = obj[key][i].get<double>();
    }
    return out;
}

std::string dirname_of(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

}  // namespace

LtsDocument parse_lts(const std::string& json_text) {
    const json doc = parse_json(json_text, "term set document");
    require_version(doc, "term set document");

    LtsDocument out;
    out.name = doc.value("name", std::string("unnamed"));
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].size() < 2)
        throw ValidationError("term set document: needs a 'terms' array of at least 2 terms");

    for (const auto& t : doc["terms"]) {
        const std::string where =
            "term '" + t.value("label", std::string("<unlabeled>")) + "'";
        LinguisticTerm term;
        term.label = string_field(t, "label", where);
        term.long_label = t.value("long_label", std::string());
        const auto u = quad_field(t, "umf", where);
        const auto l = quad_field(t, "lmf", where);
        const double lh = number_field(t, "lmf_height", where);
        try {
            term.band = IT2TrFN(Trapezoid(u[0], u[1], u[2], u[3], 1.0),
                                Trapezoid(l[0], l[1], l[2], l[3], lh));
        } catch (const ValidationError& err) {
            throw ValidationError(where + ": " + err.what());
        }
        out.lts.terms.push_back(std::move(term));
    }
    out.lts.validate();

    if (doc.contains("envelope")) {
        const json& env = doc["envelope"];
        if (env.contains("alpha")) out.envelope.alpha = env["alpha"].get<double>();
        if (env.contains("shoulder_alpha"))
            out.envelope.shoulder_alpha = env["shoulder_alpha"].get<double>();
        if (env.contains("grid_n")) out.envelope.grid_n = env["grid_n"].get<std::size_t>();
        if (env.contains("shoulder_policy")) {
            const std::string p = env["shoulder_policy"].get<std::string>();
            if (p == "clamp")
                out.envelope.shoulder_policy = ShoulderPolicy::Clamp;
            else if (p == "plain")
                out.envelope.shoulder_policy = ShoulderPolicy::Plain;
            else
                throw ValidationError("envelope.shoulder_policy must be 'clamp' or 'plain'");
        }
        if (out.envelope.alpha < 0.0 || out.envelope.alpha > 1.0 ||
            out.envelope.shoulder_alpha < 0.0 || out.envelope.shoulder_alpha > 1.0)
            throw ValidationError("envelope parameters must lie in [0,1]");
    }
    return out;
}

LtsDocument load_lts(const std::string& path) { return parse_lts(read_file(path)); }

Survey parse_survey(const std::string& json_text, const LinguisticTermSet& lts,
                    const std::string& base_dir) {
    const json doc = parse_json(json_text, "survey document");
    require_version(doc, "survey document");

    Survey s;
    if (!doc.contains("dmrs") || !doc["dmrs"].is_array() || doc["dmrs"].empty())
        throw ValidationError("survey: needs a nonempty 'dmrs' array");
    for (const auto& d : doc["dmrs"]) {
        const std::string id = string_field(d, "id", "dmrs entry");
        s.dmr_ids.push_back(id);
        s.dmr_weights.push_back(number_field(d, "weight", "DMR '" + id + "'"));
    }
    const double wsum = std::accumulate(s.dmr_weights.begin(), s.dmr_weights.end(), 0.0);
    if (std::fabs(wsum - 1.0) > 1e-9)
        throw ValidationError("survey: DMR weights sum to " + std::to_string(wsum) +
                              ", expected 1");

    if (!doc.contains("criteria") || !doc["criteria"].is_array() || doc["criteria"].empty())
        throw ValidationError("survey: needs a nonempty 'criteria' array");
    for (const auto& c : doc["criteria"]) {
        const std::string id = string_field(c, "id", "criteria entry");
        s.criteria_ids.push_back(id);
        if (!c.contains("weight"))
            throw ValidationError("criterion '" + id + "': missing weight");
        if (c["weight"].is_number()) {
            const double w = c["weight"].get<double>();
            if (w < 0.0 || w > 1.0)
                throw ValidationError("criterion '" + id + "': crisp weight outside [0,1]");
            s.criteria_weights.emplace_back(w);
        } else if (c["weight"].is_string()) {
            const std::string text = c["weight"].get<std::string>();
            try {
                parse_cle(text, lts);
            } catch (const ValidationError& err) {
                throw ValidationError("criterion '" + id + "' weight: " +
                                      std::string(err.what()));
            }
            s.criteria_weights.emplace_back(text);
        } else {
            throw ValidationError("criterion '" + id +
                                  "': weight must be a number or a phrase");
        }
    }

    if (!doc.contains("alternatives") || !doc["alternatives"].is_array() ||
        doc["alternatives"].size() < 2)
        throw ValidationError("survey: needs an 'alternatives' array of at least 2 ids");
    for (const auto& a : doc["alternatives"]) {
        if (!a.is_string()) throw ValidationError("survey: alternative ids must be strings");
        s.alternative_ids.push_back(a.get<std::string>());
    }

    const bool inline_responses = doc.contains("responses");
    const bool csv_responses = doc.contains("responses_csv");
    if (inline_responses == csv_responses)
        throw ValidationError(
            "survey: provide exactly one of 'responses' or 'responses_csv'");

    if (inline_responses) {
        const json& resp = doc["responses"];
        for (const auto& dmr : s.dmr_ids) {
            if (!resp.contains(dmr))
                throw ValidationError("survey responses: missing DMR '" + dmr + "'");
            std::vector<std::vector<std::string>> block;
            for (const auto& crit : s.criteria_ids) {
                if (!resp[dmr].contains(crit))
                    throw ValidationError("survey responses: DMR '" + dmr +
                                          "' missing criterion '" + crit + "'");
                const json& row = resp[dmr][crit];
                if (!row.is_array() || row.size() != s.alternative_ids.size())
                    throw ValidationError("survey responses: DMR '" + dmr + "', criterion '" +
                                          crit + "': expected " +
                                          std::to_string(s.alternative_ids.size()) +
                                          " entries");
                std::vector<std::string> cells;
                for (const auto& cell : row) {
                    if (!cell.is_string())
                        throw ValidationError("survey responses: DMR '" + dmr +
                                              "', criterion '" + crit +
                                              "': entries must be phrases");
                    cells.push_back(cell.get<std::string>());
                }
                block.push_back(std::move(cells));
            }
            s.responses.push_back(std::move(block));
        }
    } else {
        const std::string rel = doc["responses_csv"].get<std::string>();
        load_responses_csv(base_dir + "/" + rel, s);
    }

    // every phrase must parse; report the full cell coordinate on failure
    for (std::size_t d = 0; d < s.dmr_ids.size(); ++d)
        for (std::size_t c = 0; c < s.criteria_ids.size(); ++c)
            for (std::size_t a = 0; a < s.alternative_ids.size(); ++a) {
                try {
                    parse_cle(s.responses[d][c][a], lts);
                } catch (const ValidationError& err) {
                    throw ValidationError("DMR '" + s.dmr_ids[d] + "', criterion '" +
                                          s.criteria_ids[c] + "', alternative '" +
                                          s.alternative_ids[a] + "': " + err.what());
                }
            }
    return s;
}

Survey load_survey(const std::string& path, const LinguisticTermSet& lts) {
    return parse_survey(read_file(path), lts, dirname_of(path));
}

void parse_responses_csv(const std::string& csv_text, Survey& survey) {
    std::istringstream is(csv_text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) throw ValidationError("responses table: empty file");

    const auto& header = rows.front();
    if (header.size() != survey.alternative_ids.size() + 1)
        throw ValidationError("responses table: header must list the " +
                              std::to_string(survey.alternative_ids.size()) +
                              " alternatives after a label cell");
    for (std::size_t a = 0; a < survey.alternative_ids.size(); ++a)
        if (header[a + 1] != survey.alternative_ids[a])
            throw ValidationError("responses table: header column " + std::to_string(a + 2) +
                                  " is '" + header[a + 1] + "', expected '" +
                                  survey.alternative_ids[a] + "'");

    const std::size_t p = survey.dmr_ids.size();
    const std::size_t n = survey.criteria_ids.size();
    if (rows.size() - 1 != p * n)
        throw ValidationError("responses table: expected " + std::to_string(p * n) +
                              " data rows (one block of " + std::to_string(n) +
                              " criterion rows per DMR), found " +
                              std::to_string(rows.size() - 1));

    survey.responses.assign(p, {});
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::size_t d = (r - 1) / n;
        const std::size_t c = (r - 1) % n;
        const auto& row = rows[r];
        if (row.size() != survey.alternative_ids.size() + 1)
            throw ValidationError("responses table row " + std::to_string(r + 1) +
                                  ": wrong cell count");
        if (row[0] != survey.criteria_ids[c])
            throw ValidationError("responses table row " + std::to_string(r + 1) + ": label '" +
                                  row[0] + "' does not match criterion '" +
                                  survey.criteria_ids[c] + "' of DMR '" + survey.dmr_ids[d] +
                                  "'");
        if (survey.responses[d].size() != c)
            throw ValidationError("responses table: blocks out of order near row " +
                                  std::to_string(r + 1));
        survey.responses[d].emplace_back(row.begin() + 1, row.end());
    }
}

void load_responses_csv(const std::string& path, Survey& survey) {
    parse_responses_csv(read_file(path), survey);
}

RunResult run(const Survey& survey, const LinguisticTermSet& lts,
              const PipelineConfig& cfg) {
    RunResult out;
    out.dmr_ids = survey.dmr_ids;
    out.criteria_ids = survey.criteria_ids;
    out.alternative_ids = survey.alternative_ids;

    // criteria weights
    CriteriaWeights ws;
    for (std::size_t c = 0; c < survey.criteria_weights.size(); ++c) {
        const auto& spec = survey.criteria_weights[c];
        if (const double* crisp = std::get_if<double>(&spec)) {
            ws.push_back(IT2Tracks::crisp(*crisp));
        } else {
            const CLE cle = parse_cle(std::get<std::string>(spec), lts);
            ws.push_back(IT2Tracks::from(represent_response(cle, lts, cfg.envelope)));
        }
    }

    // responses -> representations, counting envelope bypasses
    const std::size_t p = survey.dmr_ids.size();
    const std::size_t n = survey.criteria_ids.size();
    const std::size_t m = survey.alternative_ids.size();
    RepTensor reps(p, std::vector<std::vector<Representation>>(m));
    for (std::size_t d = 0; d < p; ++d) {
        if (survey.responses.size() != p || survey.responses[d].size() != n)
            throw ValidationError("survey responses incomplete for DMR '" +
                                  survey.dmr_ids[d] + "'");
        for (std::size_t c = 0; c < n; ++c) {
            if (survey.responses[d][c].size() != m)
                throw ValidationError("survey responses incomplete for DMR '" +
                                      survey.dmr_ids[d] + "', criterion '" +
                                      survey.criteria_ids[c] + "'");
            for (std::size_t a = 0; a < m; ++a) {
                try {
                    const CLE cle = parse_cle(survey.responses[d][c][a], lts);
                    Representation rep = represent_response(cle, lts, cfg.envelope);
                    if (is_bypass(rep))
                        ++out.bypass_count;
                    else
                        ++out.envelope_count;
                    reps[d][a].push_back(std::move(rep));
                } catch (const ValidationError& err) {
                    throw ValidationError("DMR '" + survey.dmr_ids[d] + "', criterion '" +
                                          survey.criteria_ids[c] + "', alternative '" +
                                          survey.alternative_ids[a] + "': " + err.what());
                }
            }
        }
    }

    out.aggregates = aggregate_all(reps, ws, cfg.ladder_levels, cfg.envelope.grid_n);

    for (std::size_t d = 0; d < p; ++d) {
        const CentroidRanking cr = centroid_rank(out.aggregates[d]);
        std::vector<double> by_alt(m, 0.0);
        for (std::size_t k = 0; k < cr.order.size(); ++k)
            by_alt[std::size_t(cr.order[k])] = cr.centers[k];
        out.centroids.push_back(std::move(by_alt));
        out.rank_matrix.rows.push_back(cr.order);
        out.rank_ties.push_back(cr.tied);
    }

    out.scores = score(out.rank_matrix, survey.dmr_weights, int(m));
    out.final = final_ranking(out.scores);
    return out;
}

namespace {

json result_to_json(const RunResult& r) {
    json doc;
    doc["schema_version"] = 1;
    doc["dmrs"] = r.dmr_ids;
    doc["criteria"] = r.criteria_ids;
    doc["alternatives"] = r.alternative_ids;
    doc["centroids"] = r.centroids;
    json rank_rows = json::array();
    for (std::size_t d = 0; d < r.rank_matrix.rows.size(); ++d) {
        json row = json::array();
        for (int alt : r.rank_matrix.rows[d])
            row.push_back(r.alternative_ids[std::size_t(alt)]);
        rank_rows.push_back(std::move(row));
    }
    doc["rank_matrix"] = std::move(rank_rows);
    doc["rank_ties"] = r.rank_ties;
    json scores = json::array();
    for (const auto& e : r.scores.entries) {
        json entry;
        entry["alternative"] = r.alternative_ids[std::size_t(e.alt)];
        entry["score"] = e.score;
        json contribs = json::array();
        for (const auto& [rank, c] : e.contributions)
            contribs.push_back(json{{"rank", rank}, {"mean_weight", c}});
        entry["contributions"] = std::move(contribs);
        scores.push_back(std::move(entry));
    }
    doc["scores"] = std::move(scores);
    json final_rows = json::array();
    for (std::size_t k = 0; k < r.final.order.size(); ++k) {
        final_rows.push_back(
            json{{"alternative", r.alternative_ids[std::size_t(r.final.order[k])]},
                 {"score", r.final.scores[k]},
                 {"tied_with_previous", bool(r.final.tied[k])}});
    }
    doc["final_ranking"] = std::move(final_rows);
    doc["bypass_count"] = r.bypass_count;
    doc["envelope_count"] = r.envelope_count;
    return doc;
}

}  // namespace

std::string emit(const RunResult& result, EmitFormat format) {
    if (format == EmitFormat::Json) return result_to_json(result).dump(2) + "\n";

    if (format == EmitFormat::Table) {
        std::ostringstream os;
        os << "rank  alternative  score\n";
        for (std::size_t k = 0; k < result.final.order.size(); ++k) {
            os << (k + 1) << (result.final.tied[k] ? "=" : " ") << "    "
               << result.alternative_ids[std::size_t(result.final.order[k])] << "    ";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", result.final.scores[k]);
            os << buf << "\n";
        }
        return os.str();
    }

    // geometry: one line per grid sample of every aggregated FOU
    std::ostringstream os;
    os << "dmr,alternative,x,lower,upper\n";
    for (std::size_t d = 0; d < result.aggregates.size(); ++d)
        for (std::size_t a = 0; a < result.aggregates[d].size(); ++a) {
            const SampledFOU& f = result.aggregates[d][a];
            for (std::size_t i = 0; i < f.size(); ++i) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "%s,%s,%.6f,%.6f,%.6f\n",
                              result.dmr_ids[d].c_str(),
                              result.alternative_ids[a].c_str(), f.grid[i], f.lower[i],
                              f.upper[i]);
                os << buf;
            }
        }
    return os.str();
}

RunResult parse_result(const std::string& json_text) {
    const json doc = parse_json(json_text, "result document");
    require_version(doc, "result document");
    RunResult r;
    r.dmr_ids = doc["dmrs"].get<std::vector<std::string>>();
    r.criteria_ids = doc["criteria"].get<std::vector<std::string>>();
    r.alternative_ids = doc["alternatives"].get<std::vector<std::string>>();
    r.centroids = doc["centroids"].get<std::vector<std::vector<double>>>();

    const auto alt_index = [&](const std::string& id) {
        for (std::size_t a = 0; a < r.alternative_ids.size(); ++a)
            if (r.alternative_ids[a] == id) return int(a);
        throw ValidationError("result document: unknown alternative '" + id + "'");
    };
    for (const auto& row : doc["rank_matrix"]) {
        std::vector<int> alts;
        for (const auto& id : row) alts.push_back(alt_index(id.get<std::string>()));
        r.rank_matrix.rows.push_back(std::move(alts));
    }
    r.rank_ties = doc["rank_ties"].get<std::vector<std::vector<bool>>>();
    for (const auto& e : doc["scores"]) {
        ScoreEntry entry;
        entry.alt = alt_index(e["alternative"].get<std::string>());
        entry.score = e["score"].get<double>();
        for (const auto& c : e["contributions"])
            entry.contributions.emplace_back(c["rank"].get<int>(),
                                             c["mean_weight"].get<double>());
        r.scores.entries.push_back(std::move(entry));
    }
    for (const auto& f : doc["final_ranking"]) {
        r.final.order.push_back(alt_index(f["alternative"].get<std::string>()));
        r.final.scores.push_back(f["score"].get<double>());
        r.final.tied.push_back(f["tied_with_previous"].get<bool>());
    }
    r.bypass_count = doc["bypass_count"].get<int>();
    r.envelope_count = doc["envelope_count"].get<int>();
    return r;
}

std::string geometry_csv(const SampledFOU& fou, const std::string& tag) {
    std::ostringstream os;
    os << (tag.empty() ? "x,lower,upper\n" : "tag,x,lower,upper\n");
    for (std::size_t i = 0; i < fou.size(); ++i) {
        char buf[96];
        if (tag.empty())
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f\n", fou.grid[i], fou.lower[i],
                          fou.upper[i]);
        else
            std::snprintf(buf, sizeof buf, "%s,%.6f,%.6f,%.6f\n", tag.c_str(), fou.grid[i],
                          fou.lower[i], fou.upper[i]);
        os << buf;
    }
    return os.str();
}

}  // namespace t2h
