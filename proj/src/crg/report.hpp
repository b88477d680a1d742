#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "crg/perfiso.hpp"

namespace crg {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json json_of(const Cyc& v);
Json json_of(const Partition& p);
Json json_of(const MultiPartition& mp);

std::string label_string(const MultiPartition& mp);
std::string csv_field(const std::string& s);

// Character tables are streamed as single-line JSON with keys in sorted
// order (large tables would be wasteful to hold as a DOM); everything else
// is pretty-printed through the JSON library, which also sorts keys.
void write_g_table_json(std::ostream& os, const GCharacterTable& t);
void write_n_table_json(std::ostream& os, const NCharacterTable& t, int p);
void write_g_table_csv(std::ostream& os, const GCharacterTable& t);
void write_n_table_csv(std::ostream& os, const NCharacterTable& t);

Json g_blocks_json(int de, int r, int p, const std::vector<GBlock>& blocks);
Json n_blocks_json(int d, int e, int r, int p, const std::vector<NBlock>& blocks);
void write_g_blocks_csv(std::ostream& os, const std::vector<GBlock>& blocks);
void write_n_blocks_csv(std::ostream& os, const std::vector<NBlock>& blocks);

Json report_json(const VerificationReport& rep);
void write_report_csv(std::ostream& os, const VerificationReport& rep);

}  // namespace crg
