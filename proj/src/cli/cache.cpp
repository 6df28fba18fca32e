#include <atomic>
#include <cctype>
#include <ctime>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "schubert/cli.hpp"

namespace schubert::cli {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string unique_suffix() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  return std::to_string(::getpid()) + "." + std::to_string(counter++) + "." +
         std::to_string(rd());
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::string ResultCache::canonical_key(const std::string& command,
                                       const std::map<std::string, std::string>& parameters) {
  std::string key = command;
  for (const auto& [name, value] : parameters) key += "|" + name + "=" + value;
  return key;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '=' || c == '-' ||
                      c == '.' || c == ',';
    name += keep ? c : '_';
  }
  return directory_ / (name + ".json");
}

std::optional<Json> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Json entry = Json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("key", "") != key || entry.value("engine_version", "") != engine_version()) {
    return std::nullopt;
  }
  if (!entry.contains("payload") || !entry["payload"].is_object()) return std::nullopt;
  return entry["payload"];
}

void ResultCache::store(const std::string& key, const Json& payload) const {
  Json entry;
  entry["key"] = key;
  entry["engine_version"] = engine_version();
  entry["created"] = utc_timestamp();
  entry["payload"] = payload;

  const auto target = path_for(key);
  auto temp = target;
  temp += ".tmp." + unique_suffix();
  {
    std::ofstream out(temp, std::ios::trunc);
    out << entry.dump(2) << '\n';
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(temp, ec);
      return;
    }
  }
  std::filesystem::rename(temp, target);
}

}  // namespace schubert::cli
