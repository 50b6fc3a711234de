#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace attnscope {

/// Rule set from a public_suffix_list.dat file, with the usual normal,
/// wildcard ("*.") and exception ("!") rules. Non-ASCII rules are stored in
/// punycode so lookups take canonical ASCII hosts.
class PublicSuffixList {
 public:
  enum class Sections { IcannOnly, IcannAndPrivate };

  static PublicSuffixList parse(std::string_view text, Sections sections = Sections::IcannOnly);
  static PublicSuffixList load_file(const std::filesystem::path& path,
                                    Sections sections = Sections::IcannOnly);
  /// The snapshot compiled into the library.
  static const PublicSuffixList& bundled(Sections sections = Sections::IcannOnly);

  /// "VERSION:" line of the source file, empty if absent.
  const std::string& version() const noexcept { return version_; }
  std::size_t rule_count() const noexcept {
    return rules_.size() + wildcards_.size() + exceptions_.size();
  }

  /// Public suffix of a canonical host. Unlisted TLDs fall back to the
  /// implicit "*" rule, i.e. the last label.
  std::string_view public_suffix(std::string_view host) const;
  bool is_public_suffix(std::string_view host) const { return public_suffix(host) == host; }
  /// Public suffix plus one label; nullopt when the host is itself a suffix.
  std::optional<std::string_view> registrable_domain(std::string_view host) const;

 private:
  std::unordered_set<std::string> rules_;
  std::unordered_set<std::string> wildcards_;   // "*.foo" stored as "foo"
  std::unordered_set<std::string> exceptions_;  // "!a.foo" stored as "a.foo"
  std::string version_;
};

}  // namespace attnscope
