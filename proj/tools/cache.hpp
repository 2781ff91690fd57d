#pragma once

// On-disk copy of the memo tables (Gaussian binomials and e_{2i}).
//
//   pfes-cache 1
//   g <m> <r> <base> : <c0> <c1> ...
//   e <i> : <c0> <c1> ...
//   crc32 <hex of every preceding byte>

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pfes/memo.hpp"

namespace pfes::cli {

inline constexpr const char* kCacheHeader = "pfes-cache 1";
inline constexpr const char* kCacheFile = "pfes-memo-v1.cache";

inline std::string crc_hex(const std::string& body) {
  const uLong c = crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(body.data()),
                        static_cast<uInt>(body.size()));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(c));
  return buf;
}

inline std::string cache_body() {
  std::ostringstream os;
  os << kCacheHeader << "\n";
  auto coeffs = [&](const QPoly& p) {
    os << " :";
    for (const auto& c : p.coeffs()) os << ' ' << c.get_str();
    os << "\n";
  };
  for (const auto& [k, v] : memo_tables().gauss.snapshot()) {
    os << "g " << k[0] << ' ' << k[1] << ' ' << k[2];
    coeffs(v);
  }
  for (const auto& [k, v] : memo_tables().nondeg_skew.snapshot()) {
    os << "e " << k;
    coeffs(v);
  }
  return os.str();
}

/// Loads the cache if present and intact. Returns false, after a warning,
/// when the file exists but cannot be trusted; nothing is loaded then.
inline bool load_cache(const std::filesystem::path& dir) {
  const auto path = dir / kCacheFile;
  std::ifstream in(path, std::ios::binary);
  if (!in) return true;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto warn = [&](const std::string& why) {
    std::cerr << "warning: ignoring cache " << path.string() << ": " << why << "; recomputing\n";
    return false;
  };
  const auto tail = text.rfind("crc32 ");
  if (tail == std::string::npos || (tail > 0 && text[tail - 1] != '\n')) return warn("missing checksum");
  const std::string body = text.substr(0, tail);
  std::string stored = text.substr(tail + 6);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != crc_hex(body)) return warn("checksum mismatch");
  if (body.rfind(std::string(kCacheHeader) + "\n", 0) != 0) return warn("unknown version");

  std::vector<std::pair<GaussKey, QPoly>> gauss;
  std::vector<std::pair<long, QPoly>> skew;
  std::istringstream lines(body);
  std::string line;
  std::getline(lines, line);
  try {
    while (std::getline(lines, line)) {
      std::istringstream ls(line);
      std::string tag, colon, c;
      ls >> tag;
      GaussKey gk{};
      long ek = 0;
      if (tag == "g") ls >> gk[0] >> gk[1] >> gk[2];
      else if (tag == "e") ls >> ek;
      else return warn("bad record");
      ls >> colon;
      if (!ls || colon != ":") return warn("bad record");
      std::vector<QPoly::Coeff> cs;
      while (ls >> c) cs.emplace_back(c);
      if (tag == "g") gauss.emplace_back(gk, QPoly(std::move(cs)));
      else skew.emplace_back(ek, QPoly(std::move(cs)));
    }
  } catch (const std::exception&) {
    return warn("bad coefficient");
  }
  for (const auto& [k, v] : gauss) {
    if (k[1] < 0 || k[1] > k[0] || k[2] < 1) return warn("bad key");
  }
  for (const auto& [k, v] : skew) {
    if (k < 1) return warn("bad key");
  }
  for (const auto& [k, v] : gauss) memo_tables().gauss.insert(k, v);
  for (const auto& [k, v] : skew) memo_tables().nondeg_skew.insert(k, v);
  return true;
}

inline void save_cache(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string body = cache_body();
  const auto tmp = dir / (std::string(kCacheFile) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "warning: cannot write cache in " << dir.string() << "\n";
      return;
    }
    out << body << "crc32 " << crc_hex(body) << "\n";
  }
  std::filesystem::rename(tmp, dir / kCacheFile, ec);
  if (ec) std::cerr << "warning: cannot write cache in " << dir.string() << "\n";
}

}  // namespace pfes::cli
