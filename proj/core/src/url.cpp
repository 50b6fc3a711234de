#include "attnscope/url.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "attnscope/error.hpp"
#include "attnscope/public_suffix.hpp"

namespace attnscope {

namespace {

constexpr bool is_space(unsigned char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

constexpr char ascii_lower(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool iequals_prefix(std::string_view text, std::string_view prefix) noexcept {
  if (text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (ascii_lower(text[i]) != prefix[i]) return false;
  }
  return true;
}

/// Length of the scheme prefix ("http://" or "https://") at the start of
/// `text`, or 0.
std::size_t scheme_length(std::string_view text) noexcept {
  if (iequals_prefix(text, "http://")) return 7;
  if (iequals_prefix(text, "https://")) return 8;
  return 0;
}

std::string_view trim_url_tail(std::string_view url) {
  constexpr std::array<std::pair<char, char>, 4> kPairs{
      {{'(', ')'}, {'[', ']'}, {'{', '}'}, {'<', '>'}}};
  while (!url.empty()) {
    const char last = url.back();
    if (last == '.' || last == ',' || last == ';' || last == ':' || last == '!' || last == '?') {
      url.remove_suffix(1);
      continue;
    }
    if (last == '"' || last == '\'') {
      if (std::count(url.begin(), url.end(), last) % 2 == 1) {
        url.remove_suffix(1);
        continue;
      }
      break;
    }
    bool trimmed = false;
    for (auto [open, close] : kPairs) {
      if (last == close &&
          std::count(url.begin(), url.end(), close) > std::count(url.begin(), url.end(), open)) {
        url.remove_suffix(1);
        trimmed = true;
        break;
      }
    }
    if (!trimmed) break;
  }
  return url;
}

// Decodes UTF-8; returns false on malformed sequences.
bool decode_utf8(std::string_view in, std::u32string& out) {
  out.clear();
  for (std::size_t i = 0; i < in.size();) {
    const auto b0 = static_cast<unsigned char>(in[i]);
    char32_t cp;
    std::size_t len;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      return false;
    }
    if (i + len > in.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(in[i + k]);
      if ((b & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    out.push_back(cp);
    i += len;
  }
  return true;
}

// Case folding for the scripts that commonly appear in hostnames. Full
// UTS #46 mapping is not attempted.
char32_t fold_case(char32_t c) noexcept {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c >= 0x100 && c <= 0x137 && c % 2 == 0) return c + 1;
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

bool valid_ascii_host_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
}

bool is_ipv4(std::string_view host) noexcept {
  int parts = 0;
  std::size_t i = 0;
  while (i <= host.size()) {
    std::size_t j = i;
    unsigned value = 0;
    while (j < host.size() && host[j] >= '0' && host[j] <= '9') {
      value = value * 10 + static_cast<unsigned>(host[j] - '0');
      if (value > 255 || j - i >= 3) return false;
      ++j;
    }
    if (j == i) return false;
    ++parts;
    if (j == host.size()) break;
    if (host[j] != '.') return false;
    i = j + 1;
  }
  return parts == 4;
}

std::string canonical_label(std::string_view label, std::u32string& scratch) {
  if (label.empty() || label.size() > 255) {
    throw Error(Errc::MalformedUrl, "empty or oversized host label");
  }
  const bool ascii = std::all_of(label.begin(), label.end(),
                                 [](char c) { return static_cast<unsigned char>(c) < 0x80; });
  std::string out;
  if (ascii) {
    out.reserve(label.size());
    for (char c : label) {
      c = ascii_lower(c);
      if (!valid_ascii_host_char(c)) {
        throw Error(Errc::MalformedUrl, "invalid host character");
      }
      out.push_back(c);
    }
  } else {
    if (!decode_utf8(label, scratch)) throw Error(Errc::MalformedUrl, "invalid UTF-8 in host");
    for (char32_t& c : scratch) {
      c = fold_case(c);
      if (c < 0x80 && !valid_ascii_host_char(static_cast<char>(c))) {
        throw Error(Errc::MalformedUrl, "invalid host character");
      }
    }
    out = "xn--" + punycode_encode(scratch);
  }
  if (out.size() > 63) throw Error(Errc::MalformedUrl, "host label longer than 63 octets");
  return out;
}

}  // namespace

std::vector<std::string_view> extract_urls(std::string_view text) {
  std::vector<std::string_view> urls;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t h = text.find_first_of("hH", pos);
    if (h == std::string_view::npos) break;
    if (scheme_length(text.substr(h)) == 0) {
      pos = h + 1;
      continue;
    }
    std::size_t end = h;
    while (end < text.size() && !is_space(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view url = trim_url_tail(text.substr(h, end - h));
    urls.push_back(url);
    pos = end;
  }
  return urls;
}

UrlParts split_url(std::string_view url) {
  const std::size_t scheme = scheme_length(url);
  if (scheme == 0) throw Error(Errc::MalformedUrl, "not an http(s) URL");
  std::string_view rest = url.substr(scheme);
  const std::size_t auth_end = std::min(rest.find_first_of("/?#\\"), rest.size());
  std::string_view authority = rest.substr(0, auth_end);
  std::string_view tail = rest.substr(auth_end);

  if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  std::string_view host;
  std::string_view port;
  if (authority.starts_with('[')) {
    const auto close = authority.find(']');
    if (close == std::string_view::npos) throw Error(Errc::MalformedUrl, "unterminated IPv6 literal");
    host = authority.substr(0, close + 1);
    const std::string_view after = authority.substr(close + 1);
    if (!after.empty()) {
      if (after.front() != ':') throw Error(Errc::MalformedUrl, "junk after IPv6 literal");
      port = after.substr(1);
    }
  } else {
    const auto colon = authority.find(':');
    host = authority.substr(0, colon);
    if (colon != std::string_view::npos) port = authority.substr(colon + 1);
  }
  if (!std::all_of(port.begin(), port.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(Errc::MalformedUrl, "non-numeric port");
  }
  if (host.empty()) throw Error(Errc::MalformedUrl, "missing host");

  std::string_view path;
  if (tail.starts_with('/') || tail.starts_with('\\')) {
    path = tail.substr(0, std::min(tail.find_first_of("?#"), tail.size()));
  }
  return {host, path};
}

bool is_ip_literal(std::string_view host) noexcept {
  return (host.starts_with('[') && host.ends_with(']')) || is_ipv4(host);
}

std::string canonical_host(std::string_view raw_host) {
  if (raw_host.starts_with('[')) {
    if (!raw_host.ends_with(']') || raw_host.size() < 4) {
      throw Error(Errc::MalformedUrl, "bad IPv6 literal");
    }
    std::string out;
    for (char c : raw_host) {
      c = ascii_lower(c);
      if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || c == ':' || c == '.' ||
            c == '[' || c == ']')) {
        throw Error(Errc::MalformedUrl, "bad IPv6 literal");
      }
      out.push_back(c);
    }
    return out;
  }
  if (raw_host.ends_with('.')) raw_host.remove_suffix(1);
  if (raw_host.empty() || raw_host.size() > 253 * 4) {
    throw Error(Errc::MalformedUrl, "empty or oversized host");
  }
  if (is_ipv4(raw_host)) return std::string(raw_host);

  std::string out;
  out.reserve(raw_host.size());
  std::u32string scratch;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = raw_host.find('.', start);
    const std::string_view label =
        raw_host.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (!out.empty()) out.push_back('.');
    out += canonical_label(label, scratch);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (out.size() > 253) throw Error(Errc::MalformedUrl, "host longer than 253 octets");
  return out;
}

std::string punycode_encode(std::u32string_view input) {
  constexpr std::uint32_t kBase = 36, kTMin = 1, kTMax = 26, kSkew = 38, kDamp = 700;
  auto adapt = [](std::uint32_t delta, std::uint32_t points, bool first) {
    delta = first ? delta / kDamp : delta / 2;
    delta += delta / points;
    std::uint32_t k = 0;
    while (delta > ((kBase - kTMin) * kTMax) / 2) {
      delta /= kBase - kTMin;
      k += kBase;
    }
    return k + (kBase - kTMin + 1) * delta / (delta + kSkew);
  };
  auto digit = [](std::uint32_t d) { return static_cast<char>(d < 26 ? 'a' + d : '0' + d - 26); };

  std::string out;
  for (char32_t c : input) {
    if (c < 0x80) out.push_back(static_cast<char>(c));
  }
  const std::uint32_t basic = static_cast<std::uint32_t>(out.size());
  std::uint32_t handled = basic;
  if (basic > 0) out.push_back('-');

  std::uint32_t n = 0x80, delta = 0, bias = 72;
  while (handled < input.size()) {
    std::uint32_t m = 0x10FFFF + 1;
    for (char32_t c : input) {
      if (c >= n && c < m) m = c;
    }
    delta += (m - n) * (handled + 1);
    n = m;
    for (char32_t c : input) {
      if (c < n) ++delta;
      if (c == n) {
        std::uint32_t q = delta;
        for (std::uint32_t k = kBase;; k += kBase) {
          const std::uint32_t t = k <= bias ? kTMin : (k >= bias + kTMax ? kTMax : k - bias);
          if (q < t) break;
          out.push_back(digit(t + (q - t) % (kBase - t)));
          q = (q - t) / (kBase - t);
        }
        out.push_back(digit(q));
        bias = adapt(delta, handled + 1, handled == basic);
        delta = 0;
        ++handled;
      }
    }
    ++delta;
    ++n;
  }
  return out;
}

std::string normalize_host(std::string_view raw_host, const NormalizeOptions& options) {
  std::string host = canonical_host(raw_host);
  if (options.keep_host || is_ip_literal(host)) return host;

  const PublicSuffixList& psl = options.suffixes ? *options.suffixes : PublicSuffixList::bundled();
  std::string_view view = host;
  // "www.<suffix>" keeps its www label: dropping it would leave a bare suffix.
  if (view.starts_with("www.") && !psl.is_public_suffix(view.substr(4))) view.remove_prefix(4);
  if (const auto reg = psl.registrable_domain(view)) return std::string(*reg);
  return std::string(view);
}

std::string normalize_domain(std::string_view url, const NormalizeOptions& options) {
  return normalize_host(split_url(url).host, options);
}

}  // namespace attnscope
