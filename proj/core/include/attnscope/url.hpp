#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace attnscope {

class PublicSuffixList;

/// Every http:// or https:// token in free text, in order of appearance,
/// duplicates kept. A token runs to the next whitespace; trailing sentence
/// punctuation and unbalanced closing brackets or quotes are trimmed.
/// Returned views point into `text`.
std::vector<std::string_view> extract_urls(std::string_view text);

struct UrlParts {
  std::string_view host;  // raw, as written (may include brackets for IPv6)
  std::string_view path;  // from the first '/' up to '?' or '#', may be empty
};

/// Splits an absolute http(s) URL; throws Errc::MalformedUrl when no host
/// can be located.
UrlParts split_url(std::string_view url);

/// Lowercases, drops a trailing root dot, and punycode-encodes non-ASCII
/// labels. IPv4 and bracketed IPv6 literals come back unchanged apart from
/// case. Throws Errc::MalformedUrl on invalid characters or empty labels.
std::string canonical_host(std::string_view raw_host);

bool is_ip_literal(std::string_view host) noexcept;

/// RFC 3492 encoding of one label (without the "xn--" prefix).
std::string punycode_encode(std::u32string_view label);

struct NormalizeOptions {
  /// Keep the canonical host instead of reducing it to eTLD+1.
  bool keep_host = false;
  /// Defaults to the bundled ICANN snapshot.
  const PublicSuffixList* suffixes = nullptr;
};

/// Registrable domain (eTLD+1) of an http(s) URL, after credentials, port
/// and a leading "www." label are discarded.
std::string normalize_domain(std::string_view url, const NormalizeOptions& options = {});

/// Same reduction applied to an already-extracted host.
std::string normalize_host(std::string_view raw_host, const NormalizeOptions& options = {});

}  // namespace attnscope
