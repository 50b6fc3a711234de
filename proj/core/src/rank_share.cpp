#include "attnscope/rank_share.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "attnscope/csv.hpp"
#include "attnscope/error.hpp"

namespace attnscope {

RankSnapshot load_rank_snapshot(std::istream& in, std::string period) {
  RankSnapshot snap{std::move(period), {}, 0.0, false};
  std::string line;
  if (!std::getline(in, line) || csv::chomp(line) != "domain,pagerank") {
    throw Error(Errc::ParseError, "rank snapshot must start with the header domain,pagerank");
  }
  std::unordered_set<std::string> seen;
  std::size_t line_no = 1;
  long double total = 0.0L;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = csv::chomp(line);
    if (row.empty()) continue;
    const auto fields = csv::split(row);
    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != 2 || fields[0].empty()) throw Error(Errc::ParseError, where + ": expected domain,pagerank");
    double rank = 0;
    try {
      const std::string text(fields[1]);
      std::size_t used = 0;
      rank = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, where + ": bad pagerank");
    }
    if (!(rank >= 0.0) || !std::isfinite(rank)) throw Error(Errc::ParseError, where + ": negative pagerank");
    std::string domain(fields[0]);
    if (!seen.insert(domain).second) throw Error(Errc::DuplicateDomain, where + ": duplicate domain " + domain);
    total += rank;
    snap.entries.push_back({std::move(domain), rank});
  }
  snap.total_mass = static_cast<double>(total);
  snap.normalized = snap.total_mass >= 0.99 && snap.total_mass <= 1.01;
  return snap;
}

RankSnapshot load_rank_snapshot(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::Io, "cannot open " + file.string());
  return load_rank_snapshot(in, file.stem().string());
}

double top_n_rank_mass(const RankSnapshot& snapshot, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least one");
  if (snapshot.entries.empty() || !(snapshot.total_mass > 0.0)) {
    throw Error(Errc::EmptySnapshot, "snapshot " + snapshot.period + " has no rank mass");
  }
  if (n >= snapshot.entries.size()) return 1.0;
  std::vector<double> ranks;
  ranks.reserve(snapshot.entries.size());
  for (const auto& e : snapshot.entries) ranks.push_back(e.pagerank);
  std::nth_element(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n), ranks.end(),
                   std::greater<>());
  // Summing in a fixed order keeps the result independent of input order.
  std::sort(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n), std::greater<>());
  long double top = 0.0L, all = 0.0L;
  for (std::size_t i = 0; i < n; ++i) top += ranks[i];
  std::sort(ranks.begin() + static_cast<std::ptrdiff_t>(n), ranks.end(), std::greater<>());
  all = top;
  for (std::size_t i = n; i < ranks.size(); ++i) all += ranks[i];
  return std::min(1.0, static_cast<double>(top / all));
}

void write_rankshare_csv(std::ostream& out, std::span<const RankSnapshot> snapshots,
                         std::span<const std::size_t> ns) {
  out << "period,n,mass\n";
  for (const auto& s : snapshots) {
    for (std::size_t n : ns) out << s.period << ',' << n << ',' << csv::format_double(top_n_rank_mass(s, n)) << '\n';
  }
}

void write_rankshare_meta_csv(std::ostream& out, std::span<const RankSnapshot> snapshots) {
  out << "period,entries,total_mass,normalized,divisor\n";
  for (const auto& s : snapshots) {
    out << s.period << ',' << s.entries.size() << ',' << csv::format_double(s.total_mass) << ','
        << (s.normalized ? 1 : 0) << ",observed_total\n";
  }
}

}  // namespace attnscope
