#include "agora/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace agora {

namespace {

using nlohmann::json;

Eigen::MatrixXd parse_matrix(const json& doc, const std::string& field, Eigen::Index n) {
    if (!doc.contains(field)) {
        throw SolverError(ErrorCode::parse_error, "economy file is missing field \"" + field + "\"");
    }
    const json& rows = doc.at(field);
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
        throw SolverError(ErrorCode::dimension_mismatch,
                          "field \"" + field + "\" must be an n x n array of rows");
    }
    Eigen::MatrixXd matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw SolverError(ErrorCode::dimension_mismatch,
                              "field \"" + field + "\" must be an n x n array of rows");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const json& cell = row.at(static_cast<size_t>(j));
            if (!cell.is_number()) {
                throw SolverError(ErrorCode::parse_error,
                                  "field \"" + field + "\" contains a non-numeric entry");
            }
            matrix(i, j) = cell.get<double>();
        }
    }
    return matrix;
}

json matrix_to_json(const Eigen::MatrixXd& matrix) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            row.push_back(matrix(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const Eigen::VectorXd& vector) {
    json values = json::array();
    for (Eigen::Index i = 0; i < vector.size(); ++i) {
        values.push_back(vector(i));
    }
    return values;
}

}  // namespace

Economy economy_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw SolverError(ErrorCode::parse_error, "economy document must be a JSON object");
    }
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
        throw SolverError(ErrorCode::parse_error, "economy file needs an integer field \"n\"");
    }
    const auto n = doc.at("n").get<Eigen::Index>();
    if (n < 1) {
        throw SolverError(ErrorCode::dimension_mismatch, "agent count must be positive");
    }
    Eigen::MatrixXd spending = parse_matrix(doc, "spending", n);
    Eigen::MatrixXd utility = parse_matrix(doc, "utility", n);
    if (!doc.contains("initial_currency")) {
        return Economy(std::move(spending), std::move(utility));
    }
    const json& currency = doc.at("initial_currency");
    if (!currency.is_array() || static_cast<Eigen::Index>(currency.size()) != n) {
        throw SolverError(ErrorCode::dimension_mismatch,
                          "initial_currency must be a length-n array");
    }
    Eigen::VectorXd x0(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& cell = currency.at(static_cast<size_t>(i));
        if (!cell.is_number()) {
            throw SolverError(ErrorCode::parse_error, "initial_currency contains a non-numeric entry");
        }
        x0(i) = cell.get<double>();
    }
    return Economy(std::move(spending), std::move(utility), std::move(x0));
}

json economy_to_json(const Economy& economy) {
    json doc;
    doc["n"] = economy.size();
    doc["spending"] = matrix_to_json(economy.spending());
    doc["utility"] = matrix_to_json(economy.utility());
    doc["initial_currency"] = vector_to_json(economy.initial_currency());
    return doc;
}

Economy load_economy(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw SolverError(ErrorCode::parse_error, "cannot open economy file " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SolverError(ErrorCode::parse_error,
                          "cannot parse " + path.string() + ": " + e.what());
    }
    return economy_from_json(doc);
}

void save_economy(const Economy& economy, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw SolverError(ErrorCode::parse_error, "cannot write economy file " + path.string());
    }
    out << economy_to_json(economy).dump(2) << "\n";
}

std::string trace_to_csv(const SimulationTrace& trace) {
    std::ostringstream out;
    out.precision(17);
    const Eigen::Index n = trace.cesaro_average.size();
    out << "episode";
    for (Eigen::Index j = 0; j < n; ++j) {
        out << ",x_" << (j + 1);
    }
    out << "\n";
    for (const auto& [episode, x] : trace.trajectory) {
        out << episode;
        for (Eigen::Index j = 0; j < n; ++j) {
            out << "," << x(j);
        }
        out << "\n";
    }
    return out.str();
}

json to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"constraint", v.constraint},
                              {"index", v.index},
                              {"observed", v.observed}});
    }
    return json{{"ok", report.ok}, {"violations", std::move(violations)}};
}

json to_json(const CurrencyDistribution& distribution) {
    return json{{"values", vector_to_json(distribution.values())}};
}

json to_json(const UtilityProfile& profile) {
    return json{{"per_agent", vector_to_json(profile.per_agent)}};
}

json to_json(const BestResponseResult& result) {
    return json{{"agent", result.agent + 1},
                {"column", vector_to_json(result.column)},
                {"stationary", vector_to_json(result.stationary.values())},
                {"utility", result.utility},
                {"method", method_name(result.method)}};
}

json to_json(const EquilibriumCatalog& catalog) {
    json entries = json::array();
    for (const auto& entry : catalog.entries) {
        json item{{"scenario", scenario_name(entry.scenario)},
                  {"condition", entry.condition},
                  {"conditions_met", true}};
        if (entry.is_interval) {
            const bool family_a = entry.scenario == TwoAgentScenario::unilateral_full_A;
            item["strategies"] = {{family_a ? "p" : "q", 1.0},
                                  {"interval_lo", entry.interval_lo},
                                  {"interval_hi", entry.interval_hi},
                                  {"interval_of", family_a ? "q" : "p"}};
        } else {
            item["strategies"] = {{"p", entry.point.p}, {"q", entry.point.q}};
        }
        if (!entry.flag.empty()) {
            item["flag"] = entry.flag;
        }
        entries.push_back(std::move(item));
    }
    return json{{"game", {{"a", catalog.game.a},
                          {"b", catalog.game.b},
                          {"c", catalog.game.c},
                          {"d", catalog.game.d}}},
                {"entries", std::move(entries)}};
}

json to_json(const EquilibriumReport& report) {
    json rows = json::array();
    for (const auto& row : report.per_agent) {
        rows.push_back({{"agent", row.agent < 0 ? json("coalition") : json(row.agent + 1)},
                        {"current_utility", row.current_utility},
                        {"best_deviation_column", vector_to_json(row.best_deviation_column)},
                        {"deviation_utility", row.deviation_utility},
                        {"gap", row.gap}});
    }
    return json{{"is_equilibrium", report.is_equilibrium},
                {"tolerance", report.tolerance},
                {"per_agent", std::move(rows)}};
}

}  // namespace agora
