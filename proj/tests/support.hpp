#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "cello/corpus.hpp"

namespace cello::test {

inline std::filesystem::path fixture(const std::string& rel) { return std::filesystem::path(CELLO_FIXTURES) / rel; }

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("cello-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

  void write(const std::string& rel, const std::string& content) const {
    std::filesystem::create_directories((path_ / rel).parent_path());
    write_file(path_ / rel, content);
  }

 private:
  std::filesystem::path path_;
};

}  // namespace cello::test
