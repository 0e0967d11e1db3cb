#pragma once

#include "symharm/catalog.hpp"
#include "symharm/suite.hpp"

#include <json.hpp>

#include <string>

namespace symharm {

using Json = nlohmann::json;

// Stable document envelope shared by every command. Keys are emitted in
// sorted order, so serialization round-trips byte for byte.
Json make_document(const std::string& command, Json inputs, Json results);

Json to_json(const Budget& b);
Json to_json(const std::vector<Scalar>& coords);
Json to_json(const std::vector<i64>& coords);
Json to_json(const UniPoly& p);
Json to_json(const SturmProof& p);
Json to_json(const FlexibilityCertificate& c);
Json to_json(const ValueSetReport& r);
Json to_json(const GenericityReport& r);
Json to_json(const CheckResult& c);
Json to_json(const EntryReport& r);
Json to_json(const VerificationReport& r);

const char* column_status_name(ColumnStatus s);

// Text renderings for the terminal.
std::string render_entry_line(const EntryReport& r);
std::string render_catalog_table(const VerificationReport& r);

std::vector<Scalar> parse_coords(const std::string& csv);
Budget parse_budget(const std::string& csv);  // "grid,support,samples"

}  // namespace symharm
