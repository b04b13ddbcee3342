#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "qaff/krcache.hpp"
#include "qaff/tsystem.hpp"

using namespace qaff;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qaff_test_" + name)).string();
}

}  // namespace

TEST_SUITE("krcache") {
  TEST_CASE("keys") {
    CHECK(kr_cache_key(parse_lie_type("B2"), {1, 2, -3}) == "B2/1/2/-3");
    const auto [t, idx] = parse_kr_cache_key("G2/2/4/-7");
    CHECK(t.to_string() == "G2");
    CHECK(idx == KRIndex{2, 4, -7});
    CHECK_ERROR_CODE(parse_kr_cache_key("B2/1/2"), ErrorCode::ParseError);
  }

  TEST_CASE("fnv1a") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  }

  TEST_CASE("A1 table round trip") {
    const CartanData a1 = cartan_from_label("A1");
    TSystemSolver s(a1, FundamentalProvider::builtin(a1));
    for (int k = 1; k <= 5; ++k) s.kr_qchar(1, k, 0);
    KRTable table;
    export_solver(s, table);
    CHECK(table.size() >= 5);
    const std::string path = temp_path("a1.json");
    save_kr_cache(path, table);
    const KRTable back = load_kr_cache(path);
    CHECK(back == table);

    std::ifstream in(path);
    const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    save_kr_cache(path, back);
    std::ifstream in2(path);
    const std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(first == second);

    TSystemSolver warm(a1, FundamentalProvider::builtin(a1));
    CHECK(preload_solver(warm, back) == table.size());
    CHECK(warm.kr_qchar(1, 5, 0) == s.kr_qchar(1, 5, 0));
    std::remove(path.c_str());
  }

  TEST_CASE("empty table") {
    const std::string path = temp_path("empty.json");
    save_kr_cache(path, {});
    CHECK(load_kr_cache(path).empty());
    const json j = json::parse(std::ifstream(path));
    CHECK(j["schema"] == kKRCacheSchema);
    CHECK(j["entries"].empty());
    std::remove(path.c_str());
  }

  TEST_CASE("corruption is detected") {
    KRTable table{{"A1/1/1/0", P("Y[1,0] + Y[1,2]^-1")}};
    json j = kr_cache_to_json(table);
    j["entries"]["A1/1/1/0"][0]["coeff"] = "2";
    CHECK_ERROR_CODE(kr_cache_from_json(j), ErrorCode::CorruptCache);
    json k = kr_cache_to_json(table);
    k["schema"] = "other/1";
    CHECK_ERROR_CODE(kr_cache_from_json(k), ErrorCode::CorruptCache);

    const std::string path = temp_path("edit.json");
    save_kr_cache(path, table);
    std::string text;
    {
      std::ifstream in(path);
      text.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }
    const auto pos = text.find("Y[1,2]");
    REQUIRE(pos != std::string::npos);
    text[pos + 4] = '4';
    std::ofstream(path) << text;
    CHECK_ERROR_CODE(load_kr_cache(path), ErrorCode::CorruptCache);
    std::ofstream(path) << "{ not json";
    CHECK_ERROR_CODE(load_kr_cache(path), ErrorCode::CorruptCache);
    std::remove(path.c_str());
    CHECK_ERROR_CODE(load_kr_cache(path), ErrorCode::IoError);
  }
}
