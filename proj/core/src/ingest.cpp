#include "attnscope/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <thread>

#include <boost/iostreams/filter/bzip2.hpp>
#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>

#include "attnscope/error.hpp"
#include "attnscope/url.hpp"
#include "json.hpp"

namespace attnscope {

namespace {

using nlohmann::json;

bool read_timestamp(const json& value, std::int64_t& out) {
  if (value.is_number_integer()) {
    out = value.get<std::int64_t>();
    return out >= 0;
  }
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d) || d < 0 || d > 9.2e18) return false;
    out = static_cast<std::int64_t>(std::floor(d));
    return true;
  }
  if (value.is_string()) {
    // Some dumps quote the epoch ("1136073600").
    const auto& s = value.get_ref<const std::string&>();
    if (s.empty() || s.size() > 18) return false;
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      v = v * 10 + (c - '0');
    }
    out = v;
    return true;
  }
  return false;
}

bool path_has_prefix(std::string_view path, std::string_view prefix) {
  if (path.size() < prefix.size() + 1 || path[0] != '/') return false;
  if (path.substr(1, prefix.size()) != prefix) return false;
  return path.size() == prefix.size() + 1 || path[prefix.size() + 1] == '/';
}

}  // namespace

IngestStats& IngestStats::operator+=(const IngestStats& other) noexcept {
  posts_read += other.posts_read;
  links_extracted += other.links_extracted;
  urls_rejected += other.urls_rejected;
  posts_skipped_malformed += other.posts_skipped_malformed;
  return *this;
}

IngestAccumulator::IngestAccumulator(IngestOptions options) : options_(std::move(options)) {}

void IngestAccumulator::add_line(std::string_view line) {
  if (line.find_first_not_of(" \t\r\n") == std::string_view::npos) return;
  const json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!record.is_object()) {
    ++stats_.posts_skipped_malformed;
    return;
  }
  const auto ts = record.find(options_.time_field);
  const auto body = record.find(options_.body_field);
  std::int64_t created_at = 0;
  if (ts == record.end() || !read_timestamp(*ts, created_at) || body == record.end() ||
      !(body->is_string() || body->is_null())) {
    ++stats_.posts_skipped_malformed;
    return;
  }
  add_post(created_at, body->is_string() ? std::string_view(body->get_ref<const std::string&>())
                                         : std::string_view{});
}

std::string IngestAccumulator::link_key(std::string_view url) const {
  const UrlParts parts = split_url(url);
  std::string domain =
      normalize_host(parts.host, NormalizeOptions{options_.keep_host, options_.suffixes});
  for (const PathPrefixRule& rule : options_.retained_paths) {
    if (rule.domain == domain && path_has_prefix(parts.path, rule.prefix)) {
      domain += '/';
      domain += rule.prefix;
      break;
    }
  }
  return domain;
}

void IngestAccumulator::add_post(std::int64_t created_at, std::string_view body) {
  const Month month = bucket_month(created_at);
  auto [it, inserted] = months_.try_emplace(month);
  MonthlyDomainCounts& bucket = it->second;
  if (inserted) bucket.month = month;
  ++bucket.n_posts;
  ++stats_.posts_read;

  std::vector<std::string_view> urls = extract_urls(body);
  if (options_.dedupe_per_post) {
    std::vector<std::string_view> seen;
    std::erase_if(urls, [&](std::string_view u) {
      if (std::find(seen.begin(), seen.end(), u) != seen.end()) return true;
      seen.push_back(u);
      return false;
    });
  }
  for (std::string_view url : urls) {
    ++stats_.links_extracted;
    try {
      bucket.add(link_key(url));
    } catch (const Error& e) {
      if (e.code() != Errc::MalformedUrl) throw;
      ++stats_.urls_rejected;
    }
  }
}

IngestResult IngestAccumulator::finish() && {
  IngestResult result;
  result.stats = stats_;
  result.months.reserve(months_.size());
  for (auto& [_, bucket] : months_) result.months.push_back(std::move(bucket));
  months_.clear();
  return result;
}

IngestResult ingest_stream(std::istream& in, const IngestOptions& options) {
  IngestAccumulator acc(options);
  std::string line;
  while (std::getline(in, line)) acc.add_line(line);
  if (in.bad()) throw Error(Errc::Io, "read failure");
  return std::move(acc).finish();
}

struct InputFile::Impl {
  std::ifstream file;
  boost::iostreams::filtering_istream filtered;
  bool compressed = false;
};

InputFile::InputFile(const std::filesystem::path& path) : impl_(std::make_unique<Impl>()) {
  impl_->file.open(path, std::ios::binary);
  if (!impl_->file) throw Error(Errc::Io, "cannot open " + path.string());
  char magic[3] = {0, 0, 0};
  impl_->file.read(magic, 3);
  const std::streamsize got = impl_->file.gcount();
  impl_->file.clear();
  impl_->file.seekg(0);
  if (got >= 2 && static_cast<unsigned char>(magic[0]) == 0x1f &&
      static_cast<unsigned char>(magic[1]) == 0x8b) {
    impl_->filtered.push(boost::iostreams::gzip_decompressor());
    impl_->compressed = true;
  } else if (got == 3 && magic[0] == 'B' && magic[1] == 'Z' && magic[2] == 'h') {
    impl_->filtered.push(boost::iostreams::bzip2_decompressor());
    impl_->compressed = true;
  }
  if (impl_->compressed) {
    impl_->filtered.push(impl_->file);
    impl_->filtered.exceptions(std::ios::badbit);
  }
}

InputFile::~InputFile() = default;
InputFile::InputFile(InputFile&&) noexcept = default;
InputFile& InputFile::operator=(InputFile&&) noexcept = default;

std::istream& InputFile::stream() {
  return impl_->compressed ? static_cast<std::istream&>(impl_->filtered)
                           : static_cast<std::istream&>(impl_->file);
}

IngestResult merge_results(IngestResult a, IngestResult b) {
  IngestResult out;
  out.stats = a.stats;
  out.stats += b.stats;
  out.months = merge_monthly(std::move(a.months), std::move(b.months));
  return out;
}

IngestResult ingest_files(std::span<const std::filesystem::path> paths,
                          const IngestOptions& options, unsigned workers) {
  std::vector<IngestResult> partials(paths.size());
  std::vector<std::exception_ptr> errors(paths.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < paths.size(); i = next++) {
      try {
        InputFile input(paths[i]);
        partials[i] = ingest_stream(input.stream(), options);
      } catch (const std::ios_base::failure& e) {
        errors[i] = std::make_exception_ptr(
            Error(Errc::Io, paths[i].string() + ": decompression failed: " + e.what()));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(paths.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  IngestResult total;
  for (auto& part : partials) total = merge_results(std::move(total), std::move(part));
  return total;
}

}  // namespace attnscope
