#pragma once

#include <map>
#include <string>

#include "qaff/cartan.hpp"
#include "qaff/kr_index.hpp"
#include "qaff/laurent.hpp"

namespace qaff {

class TSystemSolver;

// Persistent table of KR q-characters keyed "type/i/k/r", e.g. "B2/1/2/-3".
using KRTable = std::map<std::string, LaurentPoly>;

inline constexpr const char* kKRCacheSchema = "qaff-kr-cache/1";

std::string kr_cache_key(const LieType& t, const KRIndex& idx);
// Throws ParseError.
std::pair<LieType, KRIndex> parse_kr_cache_key(const std::string& key);

// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

json kr_cache_to_json(const KRTable& table);
// Throws CorruptCache on schema or checksum mismatch.
KRTable kr_cache_from_json(const json& j);

// Canonical JSON (sorted keys) plus trailing newline. Throws IoError.
void save_kr_cache(const std::string& path, const KRTable& table);
// Throws IoError, CorruptCache.
KRTable load_kr_cache(const std::string& path);

// Table entries of the solver's type are loaded into its memo.
std::size_t preload_solver(TSystemSolver& solver, const KRTable& table);
// Every memoized value of the solver, merged into `table`.
void export_solver(const TSystemSolver& solver, KRTable& table);

}  // namespace qaff
