#include "spin7/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace spin7 {

std::string to_string(const Gen& g) {
  static const char* names = "UKH";
  return std::string(1, names[static_cast<int>(g.kind)]) + std::to_string(g.index);
}

Gen gen_from_string(const std::string& s) {
  if (s.size() < 2) throw error("bad generator token: " + s);
  GenKind k;
  switch (s[0]) {
    case 'U': k = GenKind::U; break;
    case 'K': k = GenKind::K; break;
    case 'H': k = GenKind::H; break;
    default: throw error("bad generator token: " + s);
  }
  int idx = std::atoi(s.c_str() + 1);
  if (idx <= 0) throw error("bad generator index: " + s);
  return Gen{k, idx};
}

TraceWord TraceWord::canonicalize(int n, std::vector<Gen> letters) {
  for (const Gen& g : letters) {
    if (g.index < 1 || g.index > n - 1)
      throw index_out_of_range("generator " + to_string(g) + " out of range for n=" +
                               std::to_string(n));
  }
  TraceWord w(n);
  w.letters_.reserve(letters.size());
  // Repeatedly pull out the least letter whose earlier letters all commute
  // with it; this is the lexicographically least representative.
  std::vector<Gen> work = std::move(letters);
  while (!work.empty()) {
    std::size_t best = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j)
        if (!commutes(work[j], work[i])) movable = false;
      if (!movable) continue;
      if (best == work.size() || work[i] < work[best]) best = i;
    }
    w.letters_.push_back(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return w;
}

TraceWord TraceWord::with_context(int n) const {
  for (const Gen& g : letters_) {
    if (g.index > n - 1)
      throw index_out_of_range("word does not fit in context n=" + std::to_string(n));
  }
  TraceWord w(n);
  w.letters_ = letters_;
  return w;
}

std::size_t TraceWord::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(n_));
  for (const Gen& g : letters_) {
    mix(static_cast<std::size_t>(g.index) * 4u + static_cast<std::size_t>(g.kind));
  }
  return h;
}

TraceWord concat(const TraceWord& a, const TraceWord& b) {
  if (a.context() != b.context())
    throw mismatched_context("concat across different strand counts");
  std::vector<Gen> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return TraceWord::canonicalize(a.context(), std::move(letters));
}

namespace {

// Length-then-reverse-lexicographic comparison of the kind sequences at one
// strand index (these subwords are representative independent because equal
// indices never commute).
WordOrder compare_level(const std::vector<GenKind>& x, const std::vector<GenKind>& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? WordOrder::LESS : WordOrder::GREATER;
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] != y[k]) return x[k] < y[k] ? WordOrder::LESS : WordOrder::GREATER;
  }
  return WordOrder::EQUAL;
}

}  // namespace

WordOrder reduction_compare(const TraceWord& a, const TraceWord& b) {
  if (a.context() != b.context())
    throw mismatched_context("reduction_compare across different strand counts");
  if (a == b) return WordOrder::EQUAL;
  if (a.size() != b.size()) return a.size() < b.size() ? WordOrder::LESS : WordOrder::GREATER;
  for (int idx = a.context() - 1; idx >= 1; --idx) {
    std::vector<GenKind> ua, ub;
    for (const Gen& g : a.letters())
      if (g.index == idx) ua.push_back(g.kind);
    for (const Gen& g : b.letters())
      if (g.index == idx) ub.push_back(g.kind);
    WordOrder c = compare_level(ua, ub);
    if (c != WordOrder::EQUAL) return c;
  }
  return WordOrder::INCOMPARABLE;
}

namespace {

// Shared state for the factor DFS. Letters of w are assigned to x, to an
// occurrence of p, or to y, scanning left to right. A letter can join the
// occurrence only if it is an available first letter of what remains of p
// and commutes with everything already forced into y; it can join x only if
// it commutes with everything already in the occurrence or in y.
struct FactorDfs {
  const std::vector<Gen>& w;
  const std::vector<Gen>& p;
  int n;
  bool collect_all;

  std::vector<bool> p_used;
  std::vector<Gen> x_part, y_part, matched;
  std::size_t matched_count = 0;
  std::vector<std::pair<TraceWord, TraceWord>> results;

  FactorDfs(const TraceWord& word, const TraceWord& pattern, bool all)
      : w(word.letters()), p(pattern.letters()), n(word.context()), collect_all(all) {
    p_used.assign(p.size(), false);
  }

  bool commutes_with_all(const Gen& c, const std::vector<Gen>& v) const {
    for (const Gen& g : v)
      if (!commutes(c, g)) return false;
    return true;
  }

  // Positions of p that can occur first among what remains.
  bool available(std::size_t j) const {
    if (p_used[j]) return false;
    for (std::size_t k = 0; k < j; ++k)
      if (!p_used[k] && !commutes(p[k], p[j])) return false;
    return true;
  }

  bool run(std::size_t i) {
    if (i == w.size()) {
      if (matched_count != p.size()) return false;
      results.emplace_back(TraceWord::canonicalize(n, x_part),
                           TraceWord::canonicalize(n, y_part));
      return true;
    }
    const Gen& c = w[i];
    bool done = false;
    // Try to extend the occurrence.
    if (matched_count < p.size() && commutes_with_all(c, y_part)) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] != c || !available(j)) continue;
        p_used[j] = true;
        matched.push_back(c);
        ++matched_count;
        done = run(i + 1) || done;
        --matched_count;
        matched.pop_back();
        p_used[j] = false;
        break;  // equal letters: any available occurrence leaves the same remainder
      }
      if (done && !collect_all) return true;
    }
    // Letters before the occurrence. In first-match mode everything after a
    // completed occurrence is sent to y, which keeps the found x leftmost.
    if ((collect_all || matched_count < p.size()) && commutes_with_all(c, matched) &&
        commutes_with_all(c, y_part)) {
      x_part.push_back(c);
      done = run(i + 1) || done;
      x_part.pop_back();
      if (done && !collect_all) return true;
    }
    // Letters after the occurrence.
    y_part.push_back(c);
    done = run(i + 1) || done;
    y_part.pop_back();
    return done;
  }
};

}  // namespace

std::vector<std::pair<TraceWord, TraceWord>> factor_occurrences(const TraceWord& w,
                                                                const TraceWord& p) {
  if (w.context() != p.context())
    throw mismatched_context("factor search across different strand counts");
  FactorDfs dfs(w, p, true);
  dfs.run(0);
  std::sort(dfs.results.begin(), dfs.results.end());
  dfs.results.erase(std::unique(dfs.results.begin(), dfs.results.end()), dfs.results.end());
  return dfs.results;
}

std::optional<std::pair<TraceWord, TraceWord>> factor_search(const TraceWord& w,
                                                             const TraceWord& p) {
  if (w.context() != p.context())
    throw mismatched_context("factor search across different strand counts");
  if (p.size() > w.size()) return std::nullopt;
  FactorDfs dfs(w, p, false);
  if (dfs.run(0)) return dfs.results.front();
  return std::nullopt;
}

std::string to_string(const TraceWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += to_string(w.letters()[i]);
  }
  return s;
}

}  // namespace spin7
