#include "cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace origami::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string ResultCache::key(const RunRecord& r) const {
  return sha256_hex(r.input_hash + '\n' + r.command + '\n' + r.parameters.dump() + '\n' + r.tool_version);
}

std::optional<RunRecord> ResultCache::lookup(const RunRecord& q) const {
  std::ifstream in(dir_ / (key(q) + ".json"));
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("input_hash", "") != q.input_hash || j.value("command", "") != q.command ||
      j.value("parameters", Json()) != q.parameters || j.value("tool_version", "") != q.tool_version ||
      !j.contains("result"))
    return std::nullopt;
  RunRecord r = q;
  r.result = j["result"];
  r.exit_code = j.value("exit_code", 0);
  r.timestamp = j.value("timestamp", "");
  return r;
}

void ResultCache::store(const RunRecord& r) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir_);
  Json j{{"input_hash", r.input_hash},   {"command", r.command},         {"parameters", r.parameters},
         {"result", r.result},           {"exit_code", r.exit_code},     {"tool_version", r.tool_version},
         {"timestamp", r.timestamp}};
  const std::string name = key(r);
  auto tmp = dir_ / (name + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp);
    out << j.dump(2) << '\n';
    if (!out) {
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::filesystem::rename(tmp, dir_ / (name + ".json"));
}

}  // namespace origami::cli
