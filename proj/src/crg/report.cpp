#include "crg/report.hpp"

#include <ostream>
#include <sstream>

namespace crg {

Json json_of(const Cyc& v) {
  Json j;
  j["conductor"] = v.conductor();
  j["coords"] = v.coord_strings();
  return j;
}

Json json_of(const Partition& p) { return Json(p); }

Json json_of(const MultiPartition& mp) {
  Json j = Json::array();
  for (const auto& p : mp) j.push_back(json_of(p));
  return j;
}

std::string label_string(const MultiPartition& mp) {
  return json_of(mp).dump();
}

std::string csv_field(const std::string& s) {
  bool needs_quote = false;
  for (char c : s)
    if (c == ',' || c == '"' || c == '\n') needs_quote = true;
  if (!needs_quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

namespace {

void write_cyc_json(std::ostream& os, const Cyc& v) {
  os << "{\"conductor\":" << v.conductor() << ",\"coords\":[";
  const auto coords = v.coord_strings();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << "\"" << coords[i] << "\"";
  }
  os << "]}";
}

void write_values_json(std::ostream& os,
                       const std::vector<std::vector<Cyc>>& values) {
  os << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < values[i].size(); ++j) {
      if (j) os << ",";
      write_cyc_json(os, values[i][j]);
    }
    os << "]";
  }
  os << "]";
}

}  // namespace

void write_g_table_json(std::ostream& os, const GCharacterTable& t) {
  os << "{\"classes\":[";
  for (std::size_t j = 0; j < t.classes.size(); ++j) {
    if (j) os << ",";
    os << "{\"centralizer_order\":\"" << t.centralizer_orders[j].str()
       << "\",\"eta\":" << json_of(t.classes[j]).dump() << "}";
  }
  os << "],\"conductor\":" << t.conductor;
  os << ",\"group\":{\"de\":" << t.de << ",\"r\":" << t.r << "}";
  os << ",\"irreps\":[";
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    if (i) os << ",";
    os << json_of(t.irreps[i]).dump();
  }
  os << "],\"schema_version\":" << kSchemaVersion;
  os << ",\"values\":";
  write_values_json(os, t.values);
  os << "}\n";
}

void write_n_table_json(std::ostream& os, const NCharacterTable& t, int p) {
  os << "{\"classes\":[";
  for (std::size_t j = 0; j < t.classes.size(); ++j) {
    if (j) os << ",";
    os << "{\"centralizer_order\":\"" << t.centralizer_orders[j].str()
       << "\",\"eta\":" << json_of(t.classes[j].eta).dump()
       << ",\"j\":" << t.classes[j].j;
    if (p > 0)
      os << ",\"p_regular\":"
         << (class_p_singular(t.classes[j].eta, p) ? "false" : "true");
    os << ",\"split\":" << t.classes[j].split << "}";
  }
  os << "],\"conductor\":" << t.conductor;
  os << ",\"group\":{\"de\":" << t.d * t.e << ",\"e\":" << t.e
     << ",\"r\":" << t.r << "}";
  os << ",\"labels\":[";
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (i) os << ",";
    os << "{\"k\":" << t.labels[i].second
       << ",\"label\":" << json_of(t.labels[i].first).dump() << "}";
  }
  os << "],\"schema_version\":" << kSchemaVersion;
  os << ",\"values\":";
  write_values_json(os, t.values);
  os << "}\n";
}

void write_g_table_csv(std::ostream& os, const GCharacterTable& t) {
  os << "irrep";
  for (std::size_t j = 0; j < t.classes.size(); ++j)
    os << "," << csv_field(label_string(t.classes[j]));
  os << "\n";
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    os << csv_field(label_string(t.irreps[i]));
    for (std::size_t j = 0; j < t.classes.size(); ++j)
      os << "," << csv_field(t.values[i][j].str());
    os << "\n";
  }
}

void write_n_table_csv(std::ostream& os, const NCharacterTable& t) {
  os << "label,k";
  for (std::size_t j = 0; j < t.classes.size(); ++j)
    os << ","
       << csv_field(label_string(t.classes[j].eta) +
                    "|j=" + std::to_string(t.classes[j].j));
  os << "\n";
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    os << csv_field(label_string(t.labels[i].first)) << ","
       << t.labels[i].second;
    for (std::size_t j = 0; j < t.classes.size(); ++j)
      os << "," << csv_field(t.values[i][j].str());
    os << "\n";
  }
}

Json g_blocks_json(int de, int r, int p, const std::vector<GBlock>& blocks) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = {{"de", de}, {"r", r}};
  j["p"] = p;
  Json arr = Json::array();
  for (const auto& b : blocks) {
    Json jb;
    jb["core"] = json_of(b.core);
    jb["weight"] = b.weight;
    jb["defect_zero"] = b.defect_zero;
    Json mem = Json::array();
    for (const auto& la : b.members) mem.push_back(json_of(la));
    jb["members"] = mem;
    arr.push_back(jb);
  }
  j["blocks"] = arr;
  return j;
}

Json n_blocks_json(int d, int e, int r, int p,
                   const std::vector<NBlock>& blocks) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = {{"de", d * e}, {"e", e}, {"r", r}};
  j["p"] = p;
  Json arr = Json::array();
  for (const auto& b : blocks) {
    Json jb;
    jb["core"] = json_of(b.core);
    jb["weight"] = b.weight;
    jb["defect_zero"] = b.defect_zero;
    Json mem = Json::array();
    for (const auto& [la, k] : b.members)
      mem.push_back({{"k", k}, {"label", json_of(la)}});
    jb["members"] = mem;
    jb["covered_by"] = b.covered_by;
    arr.push_back(jb);
  }
  j["blocks"] = arr;
  return j;
}

void write_g_blocks_csv(std::ostream& os, const std::vector<GBlock>& blocks) {
  os << "index,core,weight,defect_zero,members\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string members;
    for (const auto& la : blocks[i].members) {
      if (!members.empty()) members += " ";
      members += label_string(la);
    }
    os << i << "," << csv_field(label_string(blocks[i].core)) << ","
       << csv_field(Json(blocks[i].weight).dump()) << ","
       << (blocks[i].defect_zero ? "true" : "false") << ","
       << csv_field(members) << "\n";
  }
}

void write_n_blocks_csv(std::ostream& os, const std::vector<NBlock>& blocks) {
  os << "index,core,weight,defect_zero,members,covered_by\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string members;
    for (const auto& [la, k] : blocks[i].members) {
      if (!members.empty()) members += " ";
      members += label_string(la) + "|k=" + std::to_string(k);
    }
    os << i << "," << csv_field(label_string(blocks[i].core)) << ","
       << csv_field(Json(blocks[i].weight).dump()) << ","
       << (blocks[i].defect_zero ? "true" : "false") << ","
       << csv_field(members) << "," << csv_field(Json(blocks[i].covered_by).dump())
       << "\n";
  }
}

namespace {

Json witnesses_json(const std::vector<CellRef>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws)
    arr.push_back({{"source_class", w.row},
                   {"target_class", w.col},
                   {"reason", w.reason}});
  return arr;
}

Json classes_json(const PairingSide& s) {
  Json arr = Json::array();
  for (std::size_t j = 0; j < s.classes.size(); ++j)
    arr.push_back({{"eta", json_of(s.classes[j].eta)},
                   {"j", s.classes[j].j},
                   {"split", s.classes[j].split},
                   {"centralizer_order", s.centralizers[j].str()}});
  return arr;
}

}  // namespace

Json report_json(const VerificationReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = {{"de", rep.iso.d * rep.iso.e},
                {"e", rep.iso.e},
                {"r", rep.iso.r},
                {"r2", rep.iso.r2}};
  j["p"] = rep.iso.p;
  Json iso;
  iso["defect_zero"] = rep.iso.defect_zero;
  iso["core"] = json_of(rep.iso.gamma);
  iso["core_target"] = json_of(rep.iso.gammap);
  iso["weight"] = rep.iso.weight;
  Json entries = Json::array();
  for (const auto& en : rep.iso.entries)
    entries.push_back({{"source", {{"k", en.k}, {"label", json_of(en.src)}}},
                       {"sign", en.sign},
                       {"target", {{"k", en.kk}, {"label", json_of(en.dst)}}}});
  iso["entries"] = entries;
  j["isometry"] = iso;
  j["condition1"] = {{"status", rep.condition1},
                     {"witnesses", witnesses_json(rep.witnesses_condition1)}};
  j["condition2"] = {{"status", rep.condition2},
                     {"witnesses", witnesses_json(rep.witnesses_condition2)}};
  j["slice_check"] = {{"status", rep.slice},
                      {"witnesses", witnesses_json(rep.witnesses_slice)}};
  j["overall"] = rep.overall;
  Json ihat;
  ihat["source_classes"] = classes_json(rep.src_side);
  ihat["target_classes"] = classes_json(rep.dst_side);
  Json rows = Json::array();
  for (const auto& row : rep.ihat) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(json_of(v));
    rows.push_back(r);
  }
  ihat["values"] = rows;
  j["ihat"] = ihat;
  return j;
}

void write_report_csv(std::ostream& os, const VerificationReport& rep) {
  os << "field,value\n";
  os << "overall," << rep.overall << "\n";
  os << "condition1," << rep.condition1 << "\n";
  os << "condition2," << rep.condition2 << "\n";
  os << "slice_check," << rep.slice << "\n";
  os << "entries," << rep.iso.entries.size() << "\n";
  for (const auto& en : rep.iso.entries) {
    os << "entry,"
       << csv_field(label_string(en.src) + "|k=" + std::to_string(en.k) +
                    " -> " + (en.sign == 1 ? "+" : "-") + label_string(en.dst) +
                    "|k=" + std::to_string(en.kk))
       << "\n";
  }
}

}  // namespace crg
