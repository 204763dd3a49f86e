#pragma once

// Content-addressed result cache: one JSON run record per
// sha256(input digest, command, parameters, tool version).

#include <filesystem>
#include <optional>
#include <string>

#include "origami/io.hpp"

namespace origami::cli {

std::string sha256_hex(const std::string& data);

struct RunRecord {
  std::string input_hash;
  std::string command;
  Json parameters;
  Json result;
  int exit_code = 0;
  std::string tool_version;
  std::string timestamp;
};

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string key(const RunRecord& r) const;
  /// hit only if hash, command, parameters and version all agree
  std::optional<RunRecord> lookup(const RunRecord& query) const;
  /// write-temp-then-rename
  void store(const RunRecord& record) const;
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace origami::cli
