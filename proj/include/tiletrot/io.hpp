#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiletrot/gatecount.hpp"
#include "tiletrot/lattice.hpp"
#include "tiletrot/oracle.hpp"
#include "tiletrot/qpe.hpp"
#include "tiletrot/qubitization.hpp"
#include "tiletrot/tables.hpp"
#include "tiletrot/tiling.hpp"
#include "tiletrot/trotterbounds.hpp"

namespace tiletrot {

using Json = nlohmann::ordered_json;

Json to_json(const LatticeGraph& g);
Json to_json(const SectionCover& c);
Json to_json(const ValidationReport& r);
Json to_json(const TrotterErrorBreakdown& b);
Json to_json(const StepCost& s);
Json to_json(const WalkCosts& w);
Json to_json(const QpeEstimate& q);
Json to_json(const VerificationReport& r);
Json to_json(const std::vector<Table2Row>& rows);
Json to_json(const std::vector<SweepRow>& rows);

LatticeGraph lattice_from_json(const Json& j);
// Tile site lists are not checked here; run validate_cover on the result.
SectionCover cover_from_json(const Json& j);

// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<Table2Row>& rows);
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_csv(std::ostream& os, const VerificationReport& r);

}  // namespace tiletrot
