#include "gmap/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include "gmap/error.hpp"
#include "gmap/report.hpp"

namespace gmap {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class FileLock {
public:
  explicit FileLock(int fd) : fd_(fd) { ::flock(fd_, LOCK_EX); }
  ~FileLock() { ::flock(fd_, LOCK_UN); }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

private:
  int fd_;
};

} // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<std::filesystem::path> ResultCache::path_from_environment() {
  const char* env = std::getenv("GMAP_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::optional<RankReport> ResultCache::lookup(const MonodromyDatum& d, const std::vector<Rational>& t,
                                              const std::string& policy) const {
  std::lock_guard lock(mutex_);
  skipped_ = 0;
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      if (j.at("record") != "rank") continue;
      RankReport r = rank_report_from_json(j);
      if (r.datum == d && r.branch_points == t && r.policy == policy) return r;
    } catch (const std::exception& e) {
      ++skipped_;
      std::cerr << "warning: " << path_.string() << ":" << line_no << ": skipping corrupt cache line ("
                << e.what() << ")\n";
    }
  }
  return std::nullopt;
}

void ResultCache::append(const RankReport& report) {
  Json j = to_json(report);
  j["timestamp"] = utc_timestamp();
  const std::string line = j.dump() + "\n";

  std::lock_guard lock(mutex_);
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::InvalidArgument, "cli-report", "cannot open cache file " + path_.string());
  }
  {
    FileLock file_lock(fd);
    std::size_t written = 0;
    while (written < line.size()) {
      const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
      if (n <= 0) break;
      written += static_cast<std::size_t>(n);
    }
  }
  ::close(fd);
}

} // namespace gmap
