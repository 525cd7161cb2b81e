#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencat/errors.hpp"
#include "gencat/rational.hpp"

namespace gencat::oeis {

enum class Provenance { PaperPrinted, OeisFetched, Derived };

std::string to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct SequenceFixture {
  std::string id;
  long offset = 0;
  std::vector<BigInt> terms;
  Provenance provenance = Provenance::PaperPrinted;
};

/// Ids of the embedded fixtures.
std::vector<std::string> fixture_ids();

/// Embedded fixture by id ("A000108", "mono-example", ...).
/// Throws DomainError for an unknown id.
SequenceFixture load_fixture(std::string_view id);

// --- b-file client ---------------------------------------------------------

/// Transport or HTTP failure while fetching.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Offline mode (or no network) and nothing cached for the id.
class OfflineCacheMiss : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

/// The b-file body (fetched or cached) is not "n value" lines with
/// consecutive indices.
class BFileParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct FetchConfig {
  std::filesystem::path cache_dir = ".oeis-cache";
  std::chrono::seconds timeout{20};
  bool offline = false;
  std::string base_url = "https://oeis.org";
};

/// "A001002" -> "b001002.txt". Throws ParseError for malformed ids.
std::string bfile_name(std::string_view id);

SequenceFixture parse_bfile(std::string_view text, std::string_view id);

/// Cached copy if present (provenance from the JSON sidecar), else GET
/// <base_url>/Annnnnn/bnnnnnn.txt, validate, and store atomically.
SequenceFixture fetch_oeis(std::string_view id, const FetchConfig& config);

/// The cached fixture, or std::nullopt when the cache holds nothing for id.
std::optional<SequenceFixture> read_cache(std::string_view id, const std::filesystem::path& cache_dir);

/// Writes the b-file text and sidecar (temp file + rename for both).
void write_cache(const SequenceFixture& f, const std::filesystem::path& cache_dir, std::string_view source_url = "");

// --- comparison ------------------------------------------------------------

struct CompareReport {
  bool match = false;
  int shift = 0;                                 // engine index n pairs with fixture term n + shift
  std::size_t overlap = 0;                       // compared terms at that shift
  std::optional<std::size_t> first_mismatch;     // engine index
};

inline constexpr int kMaxShift = 2;
inline constexpr std::size_t kMinOverlap = 8;

/// Tries shifts -2..2. A shift matches when every overlapping term agrees and
/// at least min(8, available) terms overlap. Throws DomainError if a compared
/// engine term is not an integer.
CompareReport compare(std::span<const Rational> engine, const SequenceFixture& fixture);

}  // namespace gencat::oeis
