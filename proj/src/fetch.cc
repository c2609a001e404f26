#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "presse/errors.h"
#include "presse/ingest.h"
#include "presse/unicode.h"

namespace presse {

namespace fs = std::filesystem;

std::optional<UrlParts> ParseUrl(std::string_view url) {
  UrlParts parts;
  size_t sep = url.find("://");
  if (sep == std::string_view::npos) return std::nullopt;
  std::string scheme(url.substr(0, sep));
  for (char &c : scheme) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (scheme != "http" && scheme != "https") return std::nullopt;
  parts.scheme = scheme;
  std::string_view rest = url.substr(sep + 3);
  size_t end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, end);
  if (authority.empty() || authority.find('@') != std::string_view::npos ||
      authority.find_first_of(" \t") != std::string_view::npos) {
    return std::nullopt;
  }
  size_t colon = authority.rfind(':');
  parts.port = scheme == "https" ? 443 : 80;
  if (colon != std::string_view::npos) {
    std::string_view port = authority.substr(colon + 1);
    if (port.empty() || port.size() > 5 ||
        !std::all_of(port.begin(), port.end(), ::isdigit)) {
      return std::nullopt;
    }
    parts.port = std::stoi(std::string(port));
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) return std::nullopt;
  parts.host = std::string(authority);
  std::string path = end == std::string_view::npos ? "/" : std::string(rest.substr(end));
  if (size_t hash = path.find('#'); hash != std::string::npos) path.resize(hash);
  if (path.empty() || path[0] != '/') path.insert(0, "/");
  parts.path = path;
  return parts;
}

std::vector<std::string> ReadSeedList(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open seed list");
  std::vector<std::string> urls;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    urls.emplace_back(view);
  }
  return urls;
}

std::vector<std::string> ListCorpus(const std::string &dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto &entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".html" || ext == ".htm") {
      files.push_back(fs::relative(entry.path(), dir).generic_string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

FetchResult ReadLocalDocument(const std::string &dir, const std::string &relative) {
  FetchResult result;
  result.url = "file:" + relative;
  const fs::path path = fs::path(dir) / relative;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    result.error = "cannot read " + path.string();
    return result;
  }
  result.body.assign(std::istreambuf_iterator<char>(in), {});
  result.status = 200;
  return result;
}

std::vector<FetchResult> FetchUrls(const std::vector<std::string> &urls,
                                   int delay_ms, int jobs) {
  std::vector<FetchResult> results(urls.size());
  // Hosts in first-seen order, each with its urls in input order.
  std::vector<std::string> hosts;
  std::map<std::string, std::vector<size_t>> by_host;
  for (size_t i = 0; i < urls.size(); ++i) {
    results[i].url = urls[i];
    auto parts = ParseUrl(urls[i]);
    if (!parts) {
      results[i].error = "malformed url";
      continue;
    }
    const std::string key =
        parts->scheme + "://" + parts->host + ":" + std::to_string(parts->port);
    auto [it, inserted] = by_host.try_emplace(key);
    if (inserted) hosts.push_back(key);
    it->second.push_back(i);
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t h = next++; h < hosts.size(); h = next++) {
      httplib::Client client(hosts[h]);
      client.set_follow_location(true);
      client.set_connection_timeout(10);
      client.set_read_timeout(30);
      bool first = true;
      for (size_t i : by_host[hosts[h]]) {
        if (!first && delay_ms > 0) {
          std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
        }
        first = false;
        FetchResult &r = results[i];
        auto response = client.Get(ParseUrl(urls[i])->path);
        if (!response) {
          r.error = "fetch failed: " + httplib::to_string(response.error());
          continue;
        }
        r.status = response->status;
        if (r.status < 200 || r.status >= 300) {
          r.error = "HTTP " + std::to_string(r.status);
          continue;
        }
        r.body = std::move(response->body);
      }
    }
  };
  const size_t threads =
      std::min<size_t>(hosts.size(), static_cast<size_t>(std::max(1, jobs)));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  return results;
}

}  // namespace presse
