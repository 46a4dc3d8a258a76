#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "coneham/axiom_checks.hpp"
#include "coneham/problem_file.hpp"
#include "coneham/solver.hpp"

namespace coneham {

using Json = nlohmann::ordered_json;

/// 12 significant digits; used for every number in human reports.
std::string fmt(double x);

Json to_json(const ProblemFile& pf);
Json to_json(const PsiIntegral& psi);
Json to_json(const IndexVerdict& v);
Json to_json(const HypothesisResult& h);
Json to_json(const HypothesisReport& r);
Json to_json(const Certificate& c);
Json to_json(const Solution& s);
Json to_json(const LocalizationReport& l);
Json to_json(const CrossValidation& cv);
Json to_json(const AxiomReport& r);

void print_hypotheses(std::ostream& out, const HypothesisReport& r);
void print_certificate(std::ostream& out, const Certificate& c);
void print_solution(std::ostream& out, const Solution& s, const LocalizationReport& loc,
                    const std::optional<CrossValidation>& cv);
void print_axiom_report(std::ostream& out, const std::string& label, const AxiomReport& r);

}  // namespace coneham
