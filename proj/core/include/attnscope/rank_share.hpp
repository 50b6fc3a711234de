#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace attnscope {

struct RankEntry {
  std::string domain;
  double pagerank = 0.0;
};

struct RankSnapshot {
  std::string period;
  std::vector<RankEntry> entries;
  double total_mass = 0.0;
  /// The observed total lies in [0.99, 1.01].
  bool normalized = false;
};

/// CSV with header `domain,pagerank`. Throws Errc::ParseError for malformed
/// rows or negative ranks and Errc::DuplicateDomain.
RankSnapshot load_rank_snapshot(std::istream& in, std::string period);
/// The period label is the file name without its extension.
RankSnapshot load_rank_snapshot(const std::filesystem::path& file);

/// Sum of the n largest pageranks divided by the observed total. Throws
/// Errc::EmptySnapshot when there is no mass and Errc::InvalidArgument for
/// n = 0.
double top_n_rank_mass(const RankSnapshot& snapshot, std::size_t n);

/// `period,n,mass`, snapshots in the given order, n ascending.
void write_rankshare_csv(std::ostream& out, std::span<const RankSnapshot> snapshots,
                         std::span<const std::size_t> ns);
/// `period,entries,total_mass,normalized,divisor`: how each snapshot's
/// shares were normalized.
void write_rankshare_meta_csv(std::ostream& out, std::span<const RankSnapshot> snapshots);

}  // namespace attnscope
