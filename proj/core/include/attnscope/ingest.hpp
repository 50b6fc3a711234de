#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attnscope/counts.hpp"

namespace attnscope {

class PublicSuffixList;

/// Links to `domain` whose path starts with "/<prefix>" (on a segment
/// boundary) are tallied under "<domain>/<prefix>" instead of the bare
/// domain. Used to recover services that live under a path.
struct PathPrefixRule {
  std::string domain;
  std::string prefix;
};

struct IngestOptions {
  std::string time_field = "created_utc";
  std::string body_field = "body";
  bool keep_host = false;
  /// Count a URL repeated verbatim inside one post once.
  bool dedupe_per_post = false;
  std::vector<PathPrefixRule> retained_paths;
  /// nullptr selects the bundled ICANN snapshot.
  const PublicSuffixList* suffixes = nullptr;
};

/// links_extracted = sum of n_links over months + urls_rejected.
struct IngestStats {
  std::uint64_t posts_read = 0;
  std::uint64_t links_extracted = 0;
  std::uint64_t urls_rejected = 0;
  std::uint64_t posts_skipped_malformed = 0;

  IngestStats& operator+=(const IngestStats& other) noexcept;
  friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

struct IngestResult {
  std::vector<MonthlyDomainCounts> months;  // ascending
  IngestStats stats;
};

/// Single-threaded accumulator behind ingest_stream; exposed so callers can
/// feed records from sources other than an istream.
class IngestAccumulator {
 public:
  explicit IngestAccumulator(IngestOptions options);

  /// One NDJSON record. Blank lines are ignored; anything unparseable is
  /// counted as malformed.
  void add_line(std::string_view line);
  void add_post(std::int64_t created_at, std::string_view body);

  const IngestStats& stats() const noexcept { return stats_; }
  IngestResult finish() &&;

 private:
  std::string link_key(std::string_view url) const;

  IngestOptions options_;
  std::map<Month, MonthlyDomainCounts> months_;
  IngestStats stats_;
};

/// Reads newline-delimited JSON posts and tallies links per month and domain.
/// Malformed records are skipped and counted, never fatal.
IngestResult ingest_stream(std::istream& in, const IngestOptions& options = {});

/// An input file opened for line reading, with gzip or bzip2 detected from
/// the leading magic bytes and decompressed on the fly.
class InputFile {
 public:
  explicit InputFile(const std::filesystem::path& path);  // throws Errc::Io
  ~InputFile();
  InputFile(InputFile&&) noexcept;
  InputFile& operator=(InputFile&&) noexcept;

  std::istream& stream();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One worker per file, each producing private partial buckets that are
/// merged afterwards. Output does not depend on the worker count.
IngestResult ingest_files(std::span<const std::filesystem::path> paths,
                          const IngestOptions& options = {}, unsigned workers = 1);

IngestResult merge_results(IngestResult a, IngestResult b);

}  // namespace attnscope
