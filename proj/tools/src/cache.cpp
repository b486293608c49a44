#include "cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polyring/polytope.hpp"
#include "polyring/transforms.hpp"

namespace polyring::cli {

namespace {

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

}  // namespace

CacheStats save_cache(const std::string& path) {
  nlohmann::json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["polytopes"] = nlohmann::json::array();
  CacheStats st;
  for (auto& p : polytope::registry_snapshot()) {
    nlohmann::json e;
    e["key"] = to_hex(p.key());
    e["lattice"] = nlohmann::json::parse(poset::to_json(p.lattice()));
    if (auto name = polytope::name_of(p)) e["name"] = *name;
    j["polytopes"].push_back(std::move(e));
    ++st.polytopes;
  }
  j["bb"] = nlohmann::json::object();
  for (int n : transforms::cached_bb_dims()) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& row : transforms::bb_basis(n).matrix) {
      nlohmann::json r = nlohmann::json::array();
      for (auto& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    j["bb"][std::to_string(n)] = std::move(rows);
    ++st.bb_tables;
  }

  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << j.dump(1) << "\n";
    if (!out.flush()) throw CacheError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheError("cannot replace " + path);
  }
  return st;
}

CacheStats load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(path + ": not JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != kCacheSchemaVersion)
    throw CacheError(path + ": unsupported schema version");
  CacheStats st;
  try {
    for (auto& e : j.at("polytopes")) {
      auto p = polytope::make_polytope(poset::poset_from_json(e.at("lattice").dump()), true);
      if (to_hex(p.key()) != e.at("key").get<std::string>()) throw CacheError(path + ": stored key does not match lattice");
      if (e.contains("name")) polytope::set_name(p, e["name"].get<std::string>());
      ++st.polytopes;
    }
    for (auto& [n, rows] : j.at("bb").items()) {
      transforms::IntMatrix m;
      for (auto& row : rows) {
        m.emplace_back();
        for (auto& x : row) m.back().emplace_back(Int(x.get<std::string>()));
      }
      transforms::install_bb_basis(std::stoi(n), m);
      ++st.bb_tables;
    }
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(path + ": malformed cache: " + e.what());
  } catch (const DomainError& e) {
    throw CacheError(path + ": " + e.what());
  }
  return st;
}

}  // namespace polyring::cli
