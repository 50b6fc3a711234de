#include "attnscope/public_suffix.hpp"

#include "oracle_data.hpp"
#include "test_support.hpp"

using attnscope::PublicSuffixList;

TEST(PublicSuffixList, BundledSnapshotLoads) {
  const auto& icann = PublicSuffixList::bundled();
  const auto& all = PublicSuffixList::bundled(PublicSuffixList::Sections::IcannAndPrivate);
  EXPECT_FALSE(icann.version().empty());
  EXPECT_GT(icann.rule_count(), 5000u);
  EXPECT_GT(all.rule_count(), icann.rule_count());
}

TEST(PublicSuffixList, MatchesReferenceImplementation) {
  for (const auto& c : oracle::kPslCases) {
    const auto& psl = PublicSuffixList::bundled(c.icann_only ? PublicSuffixList::Sections::IcannOnly
                                                             : PublicSuffixList::Sections::IcannAndPrivate);
    SCOPED_TRACE(std::string(c.host) + (c.icann_only ? " icann" : " all"));
    EXPECT_EQ(psl.public_suffix(c.host), c.suffix);
    const auto reg = psl.registrable_domain(c.host);
    if (c.registrable) {
      ASSERT_TRUE(reg.has_value());
      EXPECT_EQ(*reg, c.registrable);
    } else {
      EXPECT_FALSE(reg.has_value()) << *reg;
    }
  }
}

TEST(PublicSuffixList, WildcardParentFollowsPrevailingRule) {
  // "*.kawasaki.jp" needs one more label, so the bare parent falls back to
  // "jp". Some libraries treat the parent itself as a suffix instead.
  const auto& psl = PublicSuffixList::bundled();
  EXPECT_EQ(psl.public_suffix("kawasaki.jp"), "jp");
  EXPECT_EQ(psl.registrable_domain("kawasaki.jp"), "kawasaki.jp");
}

TEST(PublicSuffixList, ParsesRuleKinds) {
  const auto psl = PublicSuffixList::parse(
      "// VERSION: test\n"
      "// ===BEGIN ICANN DOMAINS===\n"
      "com\n*.foo\n!bar.foo\n"
      "// ===END ICANN DOMAINS===\n"
      "// ===BEGIN PRIVATE DOMAINS===\n"
      "blog.com\n"
      "// ===END PRIVATE DOMAINS===\n");
  EXPECT_EQ(psl.version(), "test");
  EXPECT_EQ(psl.public_suffix("a.b.com"), "com");
  EXPECT_EQ(psl.public_suffix("x.blog.com"), "com");
  EXPECT_EQ(psl.public_suffix("a.b.foo"), "b.foo");
  EXPECT_EQ(psl.public_suffix("a.bar.foo"), "foo");
  EXPECT_EQ(*psl.registrable_domain("a.bar.foo"), "bar.foo");
  EXPECT_EQ(psl.public_suffix("x.unknown"), "unknown");

  const auto with_private = PublicSuffixList::parse(
      "// ===BEGIN PRIVATE DOMAINS===\nblog.com\n// ===END PRIVATE DOMAINS===\ncom\n",
      PublicSuffixList::Sections::IcannAndPrivate);
  EXPECT_EQ(*with_private.registrable_domain("x.y.blog.com"), "y.blog.com");
}

TEST(PublicSuffixList, LoadFileMissingIsIoError) {
  EXPECT_ERRC(PublicSuffixList::load_file("/nonexistent/psl.dat"), attnscope::Errc::Io);
}

TEST(PublicSuffixListProperty, RegistrableDomainExtendsSuffixByOneLabel) {
  const auto& psl = PublicSuffixList::bundled();
  const char* labels[] = {"a", "www", "uk", "co", "jp", "kawasaki", "city", "ck", "com", "au", "github", "io"};
  testing_support::for_all(500, 3, [&](std::mt19937_64& rng, std::size_t) {
    std::string host;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) host += std::string(i ? "." : "") + labels[rng() % std::size(labels)];
    const std::string_view suffix = psl.public_suffix(host);
    ASSERT_TRUE(host.ends_with(suffix)) << host;
    const auto reg = psl.registrable_domain(host);
    if (suffix == host) {
      EXPECT_FALSE(reg.has_value()) << host;
    } else {
      ASSERT_TRUE(reg.has_value()) << host;
      EXPECT_TRUE(reg->ends_with(suffix));
      EXPECT_EQ(reg->size(), reg->find('.') + 1 + suffix.size()) << host;
    }
  });
}
