#include "attnscope/public_suffix.hpp"

#include <fstream>
#include <sstream>

#include "attnscope/error.hpp"
#include "attnscope/url.hpp"

namespace attnscope {

namespace data {
extern const std::string_view kPublicSuffixList;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

PublicSuffixList PublicSuffixList::parse(std::string_view text, Sections sections) {
  PublicSuffixList list;
  bool in_private = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;

    if (line.starts_with("//")) {
      if (line.find("===BEGIN PRIVATE DOMAINS===") != std::string_view::npos) in_private = true;
      if (line.find("===END PRIVATE DOMAINS===") != std::string_view::npos) in_private = false;
      if (const auto v = line.find("VERSION:"); v != std::string_view::npos && list.version_.empty()) {
        list.version_ = std::string(trim(line.substr(v + 8)));
      }
      continue;
    }
    if (line.empty() || (in_private && sections == Sections::IcannOnly)) continue;
    // Rules end at the first whitespace.
    if (const auto ws = line.find_first_of(" \t"); ws != std::string_view::npos) {
      line = line.substr(0, ws);
    }

    if (line.starts_with('!')) {
      list.exceptions_.insert(canonical_host(line.substr(1)));
    } else if (line.starts_with("*.")) {
      list.wildcards_.insert(canonical_host(line.substr(2)));
    } else {
      list.rules_.insert(canonical_host(line));
    }
  }
  if (list.rules_.empty()) {
    throw Error(Errc::ParseError, "public suffix list contains no rules");
  }
  return list;
}

PublicSuffixList PublicSuffixList::load_file(const std::filesystem::path& path,
                                             Sections sections) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), sections);
}

const PublicSuffixList& PublicSuffixList::bundled(Sections sections) {
  if (sections == Sections::IcannOnly) {
    static const PublicSuffixList icann = parse(data::kPublicSuffixList, Sections::IcannOnly);
    return icann;
  }
  static const PublicSuffixList all = parse(data::kPublicSuffixList, Sections::IcannAndPrivate);
  return all;
}

std::string_view PublicSuffixList::public_suffix(std::string_view host) const {
  // Candidate suffixes are visited longest first, so the first hit is the
  // longest matching rule; an exception at the same length wins over the
  // wildcard that it carves out.
  std::size_t start = 0;
  while (true) {
    const std::string_view candidate = host.substr(start);
    const std::size_t dot = candidate.find('.');
    const std::string key(candidate);
    if (exceptions_.contains(key)) {
      return dot == std::string_view::npos ? candidate : candidate.substr(dot + 1);
    }
    if (rules_.contains(key)) return candidate;
    if (dot == std::string_view::npos) return candidate;  // implicit "*" rule
    if (wildcards_.contains(std::string(candidate.substr(dot + 1)))) return candidate;
    start += dot + 1;
  }
}

std::optional<std::string_view> PublicSuffixList::registrable_domain(std::string_view host) const {
  const std::string_view suffix = public_suffix(host);
  if (suffix.size() >= host.size()) return std::nullopt;
  // host = prefix "." suffix; take the last label of the prefix.
  const std::string_view prefix = host.substr(0, host.size() - suffix.size() - 1);
  const std::size_t dot = prefix.rfind('.');
  return dot == std::string_view::npos ? host : host.substr(dot + 1);
}

}  // namespace attnscope
