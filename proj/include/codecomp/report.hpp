#pragma once

#include "codecomp/action.hpp"
#include "codecomp/scenarios.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codecomp
{

using Json = nlohmann::ordered_json;

// Witness notation: permutations in cycle notation, dihedral elements as
// "eta^i phi(a/b)", points of B as "1/k" or "0".
std::string render_witness_element( const Element& g );
std::string render_witness_point( const Space& space, const Point& x );
// One line; long sets are elided after a fixed number of entries.
std::string render_witness( const Space& space, const Witness& w );
// The witness for Holds/Fails, the reason for Undecided.
std::string render_verdict_evidence( const Space& space, const Verdict& v );

Json to_json( const Space& space, const Verdict& v );

struct CheckRecord
{
    std::string name;   // "multi", "orbit", ...
    std::string target; // candidate or family label
    Verdict verdict = Verdict::undecided( "not run" );
    std::string witness;
    Json extra = Json::object(); // check-specific values (orbit points, part verdicts)
    std::optional<double> elapsed_ms;
};

struct RunReport
{
    std::vector<CheckRecord> records;
    Space space = BSpace{};

    // pass iff every verdict is decided.
    [[nodiscard]] bool all_decided() const;
};

CheckRecord make_record( std::string name, std::string target, const Space& space, Verdict v );

std::string render_text( const RunReport& report );
Json to_json( const RunReport& report );

std::string render_text( const std::vector<ScenarioReport>& reports );
Json to_json( const std::vector<ScenarioReport>& reports );

} // namespace codecomp
