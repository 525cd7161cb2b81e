#include "gencat/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

namespace gencat::oeis {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PaperPrinted: return "paper-printed";
    case Provenance::OeisFetched: return "oeis-fetched";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "paper-printed") return Provenance::PaperPrinted;
  if (s == "oeis-fetched") return Provenance::OeisFetched;
  if (s == "derived") return Provenance::Derived;
  throw ParseError("unknown provenance '" + std::string(s) + "'");
}

namespace {

struct Embedded {
  long offset;
  std::vector<const char*> terms;
};

const std::map<std::string, Embedded, std::less<>>& embedded() {
  static const std::map<std::string, Embedded, std::less<>> table = {
      {"A000108", {0, {"1", "1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796"}}},
      {"A063020", {0, {"1", "1", "3", "9", "32", "119", "466", "1881", "7788", "32868", "140907", "611871"}}},
      {"A121988", {0, {"1", "2", "6", "21", "80", "322", "1348", "5814", "25674", "115566"}}},
      {"mono-example",
       {0, {"1", "2", "8", "35", "170", "866", "4580", "24852", "137560", "773278"}}},
      {"A097188",
       {0,
        {"1", "3", "15", "90", "594", "4158", "30294", "227205", "1741905", "13586859", "107459703"}}},
      // free cumulants of (2, -1), indexed from n = 1
      {"kappa-2-minus-1", {1, {"2", "3", "4", "5"}}},
  };
  return table;
}

}  // namespace

std::vector<std::string> fixture_ids() {
  std::vector<std::string> out;
  for (const auto& [id, _] : embedded()) out.push_back(id);
  return out;
}

SequenceFixture load_fixture(std::string_view id) {
  const auto it = embedded().find(id);
  if (it == embedded().end()) throw DomainError("no embedded fixture '" + std::string(id) + "'");
  SequenceFixture f{std::string(id), it->second.offset, {}, Provenance::PaperPrinted};
  for (const char* t : it->second.terms) f.terms.emplace_back(t);
  return f;
}

std::string bfile_name(std::string_view id) {
  const bool ok = id.size() == 7 && id[0] == 'A' &&
                  std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c); });
  if (!ok) throw ParseError("not an OEIS A-number: '" + std::string(id) + "'");
  return "b" + std::string(id.substr(1)) + ".txt";
}

SequenceFixture parse_bfile(std::string_view text, std::string_view id) {
  SequenceFixture f{std::string(id), 0, {}, Provenance::OeisFetched};
  std::istringstream in{std::string(text)};
  std::string line;
  long expected = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string idx, value, rest;
    fields >> idx >> value;
    if (value.empty() || (fields >> rest)) throw BFileParseError("b-file line " + std::to_string(lineno) + ": expected 'n value'");
    long n = 0;
    BigInt v;
    try {
      std::size_t used = 0;
      n = std::stol(idx, &used);
      if (used != idx.size()) throw std::invalid_argument(idx);
      if (v.set_str(value, 10) != 0) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw BFileParseError("b-file line " + std::to_string(lineno) + ": not an integer pair");
    }
    if (f.terms.empty()) {
      f.offset = n;
    } else if (n != expected) {
      throw BFileParseError("b-file line " + std::to_string(lineno) + ": index " + std::to_string(n) +
                            " does not follow " + std::to_string(expected - 1));
    }
    expected = n + 1;
    f.terms.push_back(std::move(v));
  }
  if (f.terms.empty()) throw BFileParseError("b-file for " + std::string(id) + " has no terms");
  return f;
}

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void atomic_write(const fs::path& target, const std::string& body) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rng());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << body;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

fs::path sidecar_path(const fs::path& bfile) {
  fs::path p = bfile;
  p.replace_extension(".json");
  return p;
}

void store(const SequenceFixture& f, const fs::path& dir, const std::string& raw, std::string_view url) {
  fs::create_directories(dir);
  const fs::path bfile = dir / bfile_name(f.id);
  atomic_write(bfile, raw);
  json side;
  side["id"] = f.id;
  side["provenance"] = to_string(f.provenance);
  side["source"] = std::string(url);
  side["stored_at"] = utc_now();
  side["offset"] = f.offset;
  side["terms"] = f.terms.size();
  atomic_write(sidecar_path(bfile), side.dump(2) + "\n");
}

}  // namespace

std::optional<SequenceFixture> read_cache(std::string_view id, const fs::path& cache_dir) {
  const fs::path bfile = cache_dir / bfile_name(id);
  std::ifstream in(bfile, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  SequenceFixture f = parse_bfile(body.str(), id);
  std::ifstream side(sidecar_path(bfile));
  if (side) {
    try {
      const json j = json::parse(side);
      if (j.contains("provenance")) f.provenance = provenance_from_string(j["provenance"].get<std::string>());
    } catch (const json::exception& e) {
      throw BFileParseError("bad cache sidecar for " + std::string(id) + ": " + e.what());
    }
  }
  return f;
}

void write_cache(const SequenceFixture& f, const fs::path& cache_dir, std::string_view source_url) {
  std::ostringstream raw;
  raw << "# " << f.id << " (" << to_string(f.provenance) << ")\n";
  for (std::size_t i = 0; i < f.terms.size(); ++i) raw << f.offset + static_cast<long>(i) << ' ' << f.terms[i] << '\n';
  store(f, cache_dir, raw.str(), source_url);
}

SequenceFixture fetch_oeis(std::string_view id, const FetchConfig& config) {
  const std::string name = bfile_name(id);
  if (auto cached = read_cache(id, config.cache_dir)) return *cached;
  if (config.offline) throw OfflineCacheMiss("offline and no cached b-file for " + std::string(id));

  const std::string path = "/" + std::string(id) + "/" + name;
  httplib::Client client(config.base_url);
  client.set_connection_timeout(config.timeout);
  client.set_read_timeout(config.timeout);
  client.set_follow_location(true);
  const auto res = client.Get(path);
  if (!res) {
    throw NetworkError("fetching " + config.base_url + path + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw NetworkError("fetching " + config.base_url + path + " returned HTTP " + std::to_string(res->status));
  }
  SequenceFixture f = parse_bfile(res->body, id);  // nothing is cached unless it parses
  f.provenance = Provenance::OeisFetched;
  store(f, config.cache_dir, res->body, config.base_url + path);
  return f;
}

CompareReport compare(std::span<const Rational> engine, const SequenceFixture& fixture) {
  const auto e_len = static_cast<long>(engine.size());
  const auto f_len = static_cast<long>(fixture.terms.size());
  const std::size_t required = std::min<std::size_t>(kMinOverlap, static_cast<std::size_t>(std::min(e_len, f_len)));

  std::optional<CompareReport> best_match;
  CompareReport best_miss;
  long best_prefix = -1;
  for (int shift : {0, -1, 1, -2, 2}) {
    CompareReport r;
    r.shift = shift;
    long agreeing = 0;
    for (long n = std::max(0L, -static_cast<long>(shift)); n < e_len && n + shift < f_len; ++n) {
      const Rational& t = engine[static_cast<std::size_t>(n)];
      if (!t.is_integer()) throw DomainError("engine term " + std::to_string(n) + " = " + t.to_string() + " is not an integer");
      ++r.overlap;
      if (!r.first_mismatch && t.numerator() != fixture.terms[static_cast<std::size_t>(n + shift)]) {
        r.first_mismatch = static_cast<std::size_t>(n);
      }
      if (!r.first_mismatch) ++agreeing;
    }
    r.match = !r.first_mismatch && r.overlap >= required && r.overlap > 0;
    if (r.match && (!best_match || r.overlap > best_match->overlap)) best_match = r;
    if (agreeing > best_prefix) {
      best_prefix = agreeing;
      best_miss = r;
    }
  }
  return best_match ? *best_match : best_miss;
}

}  // namespace gencat::oeis
