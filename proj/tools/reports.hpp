#pragma once

#include <ostream>

#include "json.hpp"

#include "nilcert/nilcert.hpp"

namespace nilcert::cli {

nlohmann::json to_json(const SpectrumReport& s);
nlohmann::json to_json(const SymmetryReport& s);
nlohmann::json to_json(const NilpotencyReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const VolterraReport& r);

void print_report(std::ostream& out, const AnalysisReport& r);
void print_report(std::ostream& out, const NilpotencyReport& r);
void print_report(std::ostream& out, const Certificate& c);
void print_report(std::ostream& out, const VolterraReport& r);

}  // namespace nilcert::cli
