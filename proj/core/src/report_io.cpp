#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mso/error.hpp"
#include "mso/search.hpp"

namespace mso {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;

}  // namespace

std::string report_to_json(const SearchReport& r) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["mode"] = std::string(to_string(r.mode));
  out["order"] = r.order;
  out["graphs_scanned"] = r.graphs_scanned;
  out["counterexample_count"] = r.counterexample_count;
  out["decreasing_pairs"] = r.decreasing_pairs;
  out["max_decrease"] = r.max_decrease.str();
  out["max_decrease_witness"] = r.max_decrease_witness;
  out["conjecture2_holds"] = r.conjecture2_holds;
  out["witnesses"] = r.witnesses;
  out["conjecture2_violations"] = r.conjecture2_violations;
  out["elapsed_ms"] = r.elapsed_ms;
  out["version"] = r.tool_version;
  return out.dump(2) + "\n";
}

SearchReport report_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw ParseError(0, "unsupported report schema version");
    }
    SearchReport r;
    r.mode = parse_search_mode(doc.at("mode").get<std::string>());
    r.order = doc.at("order").get<std::size_t>();
    r.graphs_scanned = doc.at("graphs_scanned").get<std::size_t>();
    r.counterexample_count = doc.at("counterexample_count").get<std::size_t>();
    r.decreasing_pairs = doc.at("decreasing_pairs").get<std::size_t>();
    r.max_decrease = Rational::parse(doc.at("max_decrease").get<std::string>());
    r.max_decrease_witness = doc.at("max_decrease_witness").get<std::string>();
    r.conjecture2_holds = doc.at("conjecture2_holds").get<bool>();
    r.witnesses = doc.at("witnesses").get<std::vector<std::string>>();
    r.conjecture2_violations = doc.at("conjecture2_violations").get<std::vector<std::string>>();
    r.elapsed_ms = doc.at("elapsed_ms").get<long long>();
    r.tool_version = doc.at("version").get<std::string>();
    return r;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed report JSON");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("report JSON: ") + e.what());
  }
}

std::string witness_file_path(const std::string& report_path) {
  return std::filesystem::path(report_path).replace_extension(".g6").string();
}

void persist_report(const SearchReport& report, const std::string& path) {
  const auto write = [](const std::string& file, const std::string& body) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + file + "' for writing");
    out << body;
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + file + "'");
  };
  write(path, report_to_json(report));
  std::string lines;
  for (const auto& w : report.witnesses) lines += w + "\n";
  write(witness_file_path(path), lines);
}

SearchReport load_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return report_from_json(buf.str());
  } catch (const ParseError& e) {
    throw Error(ErrorKind::Io, "'" + path + "': " + e.what());
  }
}

}  // namespace mso
