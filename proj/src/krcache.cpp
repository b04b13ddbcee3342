#include "qaff/krcache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qaff/error.hpp"
#include "qaff/tsystem.hpp"

namespace qaff {

std::string kr_cache_key(const LieType& t, const KRIndex& idx) {
  return t.to_string() + "/" + std::to_string(idx.i) + "/" + std::to_string(idx.k) + "/" + std::to_string(idx.r);
}

std::pair<LieType, KRIndex> parse_kr_cache_key(const std::string& key) {
  std::stringstream ss(key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '/')) parts.push_back(part);
  if (parts.size() != 4) throw Error(ErrorCode::ParseError, "bad cache key '" + key + "'");
  try {
    return {parse_lie_type(parts[0]), KRIndex{std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3])}};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad cache key '" + key + "'");
  }
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json kr_cache_to_json(const KRTable& table) {
  json entries = json::object();
  for (const auto& [k, p] : table) entries[k] = p.to_json();
  return json{{"schema", kKRCacheSchema}, {"entries", entries}, {"checksum", fnv1a64_hex(entries.dump())}};
}

KRTable kr_cache_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != kKRCacheSchema)
    throw Error(ErrorCode::CorruptCache, std::string("schema is not ") + kKRCacheSchema);
  if (!j.contains("entries") || !j.at("entries").is_object() || !j.contains("checksum"))
    throw Error(ErrorCode::CorruptCache, "missing entries or checksum");
  const json& entries = j.at("entries");
  const std::string expect = j.at("checksum").is_string() ? j.at("checksum").get<std::string>() : "";
  const std::string got = fnv1a64_hex(entries.dump());
  if (expect != got) throw Error(ErrorCode::CorruptCache, "checksum mismatch: stored " + expect + ", computed " + got);
  KRTable table;
  for (const auto& [k, v] : entries.items()) {
    try {
      parse_kr_cache_key(k);
      table.emplace(k, poly_from_json(v));
    } catch (const Error& e) {
      throw Error(ErrorCode::CorruptCache, "entry '" + k + "': " + e.what());
    }
  }
  return table;
}

void save_kr_cache(const std::string& path, const KRTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << kr_cache_to_json(table).dump(1) << "\n";
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

KRTable load_kr_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CorruptCache, path + ": " + e.what());
  }
  return kr_cache_from_json(j);
}

std::size_t preload_solver(TSystemSolver& solver, const KRTable& table) {
  std::size_t n = 0;
  for (const auto& [k, p] : table) {
    const auto [type, idx] = parse_kr_cache_key(k);
    if (!(type == solver.cartan().label())) continue;
    solver.preload(idx, p);
    ++n;
  }
  return n;
}

void export_solver(const TSystemSolver& solver, KRTable& table) {
  for (const auto& [idx, p] : solver.table()) table.insert_or_assign(kr_cache_key(solver.cartan().label(), idx), p);
}

}  // namespace qaff
