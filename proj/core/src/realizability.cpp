#include "cubmon/realizability.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "cubmon/errors.hpp"
#include "cubmon/search_cache.hpp"

namespace cubmon {

std::string to_string(Verdict v) { return v == Verdict::Exact ? "Exact" : "Exceeds"; }

std::vector<std::size_t> insertion_sequence(const CurvePattern& p, const SearchConfig& config) {
  std::vector<std::size_t> seq;
  if (!config.custom_order.empty()) {
    std::vector<char> used(p.size(), 0);
    for (const auto& l : config.custom_order) {
      const auto i = p.find(l);
      if (!i) continue;  // labels of other components
      if (used[*i]) throw InvalidInput("curve " + l + " repeated in insertion order");
      used[*i] = 1;
      seq.push_back(*i);
    }
    if (seq.size() != p.size()) throw InvalidInput("insertion order does not list every curve");
    return seq;
  }
  seq.resize(p.size());
  std::iota(seq.begin(), seq.end(), 0);
  if (config.order == InsertionOrder::DegreeDescending)
    std::stable_sort(seq.begin(), seq.end(), [&](auto a, auto b) { return p.degree(a) > p.degree(b); });
  return seq;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// One connected component, with crossings renumbered in creation order.
struct Problem {
  CurvePattern pattern;
  std::size_t n = 0;
  std::size_t V = 0;
  int budget = 0;
  int lower_bound = 0;
  std::vector<std::size_t> order;
  std::vector<std::size_t> lo, hi;           // per crossing id
  std::vector<std::size_t> pattern_pos;      // crossing id -> index in pattern.crossings()
  std::vector<std::vector<int>> new_cross;   // per step
  std::vector<std::size_t> created_after;    // crossings existing after step t
  std::vector<char> canonical;               // orientation reduction applies
  std::vector<int> fixed_bit;                // per crossing id, -1 if free
  std::vector<std::vector<int>> order_rank;  // per curve, per crossing id, -1 if unconstrained
  std::vector<char> has_fixed_order;
  bool mirror = false;

  std::size_t other(int c, std::size_t x) const { return lo[c] == x ? hi[c] : lo[c]; }
  std::size_t role(int c, std::size_t x) const { return lo[c] == x ? 0 : 1; }
};

Problem make_problem(const CurvePattern& p, int budget, const SearchConfig& config) {
  Problem pb;
  pb.pattern = p;
  pb.n = p.size();
  pb.budget = budget;
  pb.lower_bound = f2_genus_lower_bound(p);
  pb.order = insertion_sequence(p, config);
  std::vector<std::size_t> pos(pb.n);
  for (std::size_t t = 0; t < pb.n; ++t) pos[pb.order[t]] = t;

  const auto cr = p.crossings();
  pb.new_cross.resize(pb.n);
  pb.created_after.resize(pb.n);
  for (std::size_t t = 0; t < pb.n; ++t) {
    const std::size_t x = pb.order[t];
    std::vector<std::size_t> partners;
    for (std::size_t y = 0; y < pb.n; ++y)
      if (p.intersection(x, y) != 0 && pos[y] < t) partners.push_back(y);
    std::sort(partners.begin(), partners.end(), [&](auto a, auto b) { return pos[a] < pos[b]; });
    for (auto y : partners) {
      const int id = static_cast<int>(pb.lo.size());
      pb.lo.push_back(std::min(x, y));
      pb.hi.push_back(std::max(x, y));
      const auto key = std::make_pair(std::min(x, y), std::max(x, y));
      pb.pattern_pos.push_back(static_cast<std::size_t>(std::find(cr.begin(), cr.end(), key) - cr.begin()));
      pb.new_cross[t].push_back(id);
    }
    pb.created_after[t] = pb.lo.size();
  }
  pb.V = pb.lo.size();
  auto crossing_id = [&](std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < pb.V; ++c)
      if (pb.lo[c] == std::min(x, y) && pb.hi[c] == std::max(x, y)) return static_cast<int>(c);
    throw InvalidInput("curves " + p.label(x) + " and " + p.label(y) + " do not intersect");
  };

  pb.fixed_bit.assign(pb.V, -1);
  std::vector<char> touches_fixed_bit(pb.n, 0);
  for (const auto& [pair, bit] : config.fixed_bits) {
    const auto x = p.find(pair.first);
    const auto y = p.find(pair.second);
    if (!x && !y) continue;
    if (!x || !y) throw InvalidInput("fixed bit " + pair.first + "-" + pair.second + " spans two components");
    if (bit != 0 && bit != 1) throw InvalidInput("fixed bits must be 0 or 1");
    const int c = crossing_id(*x, *y);
    pb.fixed_bit[c] = (*x < *y) ? bit : 1 - bit;
    touches_fixed_bit[*x] = touches_fixed_bit[*y] = 1;
  }

  pb.order_rank.assign(pb.n, std::vector<int>(pb.V, -1));
  pb.has_fixed_order.assign(pb.n, 0);
  for (const auto& [curve, partners] : config.fixed_cyclic_orders) {
    const auto x = p.find(curve);
    if (!x) continue;
    for (std::size_t r = 0; r < partners.size(); ++r) {
      const int c = crossing_id(*x, p.index(partners[r]));
      if (pb.order_rank[*x][c] >= 0) throw InvalidInput("partner " + partners[r] + " repeated in fixed order of " + curve);
      pb.order_rank[*x][c] = static_cast<int>(r);
    }
    pb.has_fixed_order[*x] = partners.size() >= 3;
  }

  const bool any_fixed_bit = std::any_of(pb.fixed_bit.begin(), pb.fixed_bit.end(), [](int b) { return b >= 0; });
  pb.canonical.assign(pb.n, 0);
  for (std::size_t x = 0; x < pb.n; ++x)
    pb.canonical[x] = config.orientation_reduction && p.degree(x) >= 3 && !pb.has_fixed_order[x] && !touches_fixed_bit[x];
  pb.mirror = config.mirror_reduction && !any_fixed_bit;
  return pb;
}

struct State {
  std::vector<std::vector<int>> seq;
  std::vector<std::uint8_t> bits;
  std::size_t depth = 0;
  int partial = 0;
};

// Genus of the ribbon graph spanned by the crossings created so far.
class Evaluator {
 public:
  explicit Evaluator(const Problem& pb) : pb_(pb), arc_(4 * pb.V), rot_(4 * pb.V), seen_(4 * pb.V), parent_(pb.V), faces_(pb.V), verts_(pb.V) {}

  int genus(const State& s, std::size_t created) {
    for (std::size_t c = 0; c < created; ++c) parent_[c] = c;
    for (std::size_t x = 0; x < pb_.n; ++x) {
      const auto& order = s.seq[x];
      const std::size_t m = order.size();
      for (std::size_t t = 0; t < m; ++t) {
        const int c0 = order[t];
        const int c1 = order[t + 1 == m ? 0 : t + 1];
        const std::size_t out = 4 * c0 + 2 * pb_.role(c0, x) + 1;
        const std::size_t in = 4 * c1 + 2 * pb_.role(c1, x);
        arc_[out] = in;
        arc_[in] = out;
        unite(c0, c1);
      }
    }
    for (std::size_t c = 0; c < created; ++c) {
      const std::size_t b = 4 * c;
      if (s.bits[c]) {
        rot_[b + 1] = b + 2; rot_[b + 2] = b; rot_[b] = b + 3; rot_[b + 3] = b + 1;
      } else {
        rot_[b + 1] = b + 3; rot_[b + 3] = b; rot_[b] = b + 2; rot_[b + 2] = b + 1;
      }
      faces_[c] = 0;
      verts_[c] = 0;
    }
    std::fill(seen_.begin(), seen_.begin() + static_cast<std::ptrdiff_t>(4 * created), 0);
    for (std::size_t h = 0; h < 4 * created; ++h) {
      if (seen_[h]) continue;
      ++faces_[find(h / 4)];
      for (std::size_t x = h; !seen_[x]; x = rot_[arc_[x]]) seen_[x] = 1;
    }
    int twice = 0;
    for (std::size_t c = 0; c < created; ++c) ++verts_[find(c)];
    for (std::size_t c = 0; c < created; ++c)
      if (verts_[c] > 0) twice += 2 + verts_[c] - faces_[c];
    return twice / 2;
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  const Problem& pb_;
  std::vector<std::size_t> arc_, rot_;
  std::vector<char> seen_;
  std::vector<std::size_t> parent_;
  std::vector<int> faces_, verts_;
};

// Lexicographic minimum of (genus, task) over all solutions found so far.
struct Shared {
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t node_limit = 0;
  std::optional<Clock::time_point> deadline;

  static std::uint64_t pack(int g, std::size_t task) { return (static_cast<std::uint64_t>(g) << 32) | task; }
  void offer(int g, std::size_t task) {
    const std::uint64_t v = pack(g, task);
    std::uint64_t cur = best.load();
    while (v < cur && !best.compare_exchange_weak(cur, v)) {
    }
  }
};

struct TaskResult {
  bool complete = false;
  bool skipped = false;
  bool cached = false;
  std::optional<int> best;
  int cutoff = 0;
  std::uint64_t nodes = 0;
  std::optional<RibbonStructure> witness;
};

class Dfs {
 public:
  enum class Mode { Count, Collect, Task };

  Dfs(const Problem& pb, Shared& shared) : pb_(pb), shared_(shared), ev_(pb) {
    st_.seq.assign(pb.n, {});
    st_.bits.assign(pb.V, 0);
  }

  // Frontier states after `depth` insertions whose partial genus fits the budget.
  std::size_t count_frontier(std::size_t depth, std::size_t cap) {
    mode_ = Mode::Count;
    frontier_depth_ = depth;
    cap_ = cap;
    counted_ = 0;
    halted_ = false;
    step(0);
    return counted_;
  }
  std::vector<State> collect_frontier(std::size_t depth) {
    mode_ = Mode::Collect;
    frontier_depth_ = depth;
    collected_.clear();
    halted_ = false;
    step(0);
    return std::move(collected_);
  }

  TaskResult run_task(const State& start, std::size_t index) {
    mode_ = Mode::Task;
    index_ = index;
    own_best_.reset();
    witness_.reset();
    aborted_ = false;
    halted_ = false;
    st_ = start;
    if (start.partial <= cutoff()) {
      if (start.depth == pb_.n) solution(start.partial);
      else step(start.depth);
    }
    flush_nodes();
    TaskResult r;
    r.complete = !halted_ || finished_at_lower_bound_;
    r.skipped = aborted_ && !finished_at_lower_bound_;
    if (r.skipped) r.complete = false;
    r.best = own_best_;
    r.witness = witness_;
    r.cutoff = cutoff();
    r.nodes = task_nodes_;
    return r;
  }

  std::uint64_t local_nodes() const { return total_nodes_; }

 private:
  int cutoff() const {
    if (mode_ != Mode::Task) return pb_.budget;
    const std::uint64_t b = shared_.best.load(std::memory_order_relaxed);
    if (b == kNone) return pb_.budget;
    const int g = static_cast<int>(b >> 32);
    const std::size_t gi = b & 0xffffffffu;
    return std::min(pb_.budget, gi <= index_ ? g - 1 : g);
  }

  void step(std::size_t t) {
    const std::size_t x = pb_.order[t];
    const auto& N = pb_.new_cross[t];
    auto& sx = st_.seq[x];
    if (N.empty()) {
      finish(t);
      return;
    }
    std::vector<int> perm(N.begin(), N.end());
    do {
      if (pb_.canonical[x] && perm.size() >= 3 &&
          std::find(perm.begin(), perm.end(), N[1]) > std::find(perm.begin(), perm.end(), N[2]))
        continue;
      sx = perm;
      if (!order_ok(x)) continue;
      place(t, 0);
      if (halted_) break;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    sx.clear();
  }

  void place(std::size_t t, std::size_t i) {
    const auto& N = pb_.new_cross[t];
    if (i == N.size()) {
      assign_bits(t, 0);
      return;
    }
    const int c = N[i];
    const std::size_t p = pb_.other(c, pb_.order[t]);
    auto& sp = st_.seq[p];
    const std::size_t m = sp.size();
    if (m == 0) {
      sp.push_back(c);
      place(t, i + 1);
      sp.pop_back();
      return;
    }
    // A canonical curve's first three crossings run in creation order.
    const std::size_t first = (pb_.canonical[p] && m == 2) ? 1 : 0;
    for (std::size_t j = first; j < m && !halted_; ++j) {
      sp.insert(sp.begin() + static_cast<std::ptrdiff_t>(j + 1), c);
      if (order_ok(p)) place(t, i + 1);
      sp.erase(sp.begin() + static_cast<std::ptrdiff_t>(j + 1));
    }
  }

  void assign_bits(std::size_t t, std::size_t i) {
    const auto& N = pb_.new_cross[t];
    if (i == N.size()) {
      finish(t);
      return;
    }
    const int c = N[i];
    int from = 0, to = 1;
    if (pb_.fixed_bit[c] >= 0) from = to = pb_.fixed_bit[c];
    else if (pb_.mirror && c == 0) to = 0;
    for (int b = from; b <= to && !halted_; ++b) {
      st_.bits[c] = static_cast<std::uint8_t>(b);
      assign_bits(t, i + 1);
    }
  }

  // Partner crossings of a constrained curve must occur as a cyclic sub-order.
  bool order_ok(std::size_t x) const {
    if (!pb_.has_fixed_order[x]) return true;
    const auto& rank = pb_.order_rank[x];
    int ranks[64];
    std::size_t m = 0;
    for (int c : st_.seq[x])
      if (rank[c] >= 0) ranks[m++] = rank[c];
    int descents = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (ranks[i] > ranks[(i + 1) % m]) ++descents;
    return descents <= 1;
  }

  void finish(std::size_t t) {
    if (halted_) return;
    count_node();
    const std::size_t depth = t + 1;
    const int g = ev_.genus(st_, pb_.created_after[t]);
    if (mode_ == Mode::Count || mode_ == Mode::Collect) {
      if (g > pb_.budget) return;
      if (depth == frontier_depth_) {
        if (mode_ == Mode::Count) {
          if (++counted_ > cap_) halted_ = true;
        } else {
          State s = st_;
          s.depth = depth;
          s.partial = g;
          collected_.push_back(std::move(s));
        }
        return;
      }
      step(depth);
      return;
    }
    if (g > cutoff()) return;
    if (depth == pb_.n) {
      solution(g);
      return;
    }
    step(depth);
  }

  void solution(int g) {
    if (own_best_ && g >= *own_best_) return;
    own_best_ = g;
    witness_ = to_structure();
    shared_.offer(g, index_);
    if (g <= pb_.lower_bound) {
      finished_at_lower_bound_ = true;
      halted_ = true;
    }
  }

  RibbonStructure to_structure() const {
    RibbonStructure r;
    r.visit_order.resize(pb_.n);
    for (std::size_t x = 0; x < pb_.n; ++x)
      for (int c : st_.seq[x]) r.visit_order[x].push_back(pb_.other(c, x));
    r.crossing_bits.assign(pb_.V, 0);
    for (std::size_t c = 0; c < pb_.V; ++c) r.crossing_bits[pb_.pattern_pos[c]] = st_.bits[c];
    r.canonicalize();
    return r;
  }

  void count_node() {
    ++total_nodes_;
    ++task_nodes_;
    if (++pending_ < 1024) return;
    flush_nodes();
    if (shared_.stop.load(std::memory_order_relaxed)) halted_ = true;
    if (shared_.node_limit != 0 && shared_.nodes.load() > shared_.node_limit) {
      shared_.stop = true;
      halted_ = true;
    }
    if (shared_.deadline && Clock::now() > *shared_.deadline) {
      shared_.stop = true;
      halted_ = true;
    }
    if (mode_ == Mode::Task && !halted_) {
      const std::uint64_t b = shared_.best.load(std::memory_order_relaxed);
      if (b != kNone && static_cast<int>(b >> 32) <= pb_.lower_bound && (b & 0xffffffffu) < index_) {
        aborted_ = true;
        halted_ = true;
      }
    }
  }

  void flush_nodes() {
    shared_.nodes += pending_;
    pending_ = 0;
  }

 public:
  void reset_task_counters() {
    task_nodes_ = 0;
    finished_at_lower_bound_ = false;
  }

 private:
  const Problem& pb_;
  Shared& shared_;
  Evaluator ev_;
  State st_;
  Mode mode_ = Mode::Task;
  std::size_t frontier_depth_ = 0;
  std::size_t cap_ = 0;
  std::size_t counted_ = 0;
  std::vector<State> collected_;
  std::size_t index_ = 0;
  std::optional<int> own_best_;
  std::optional<RibbonStructure> witness_;
  bool halted_ = false;
  bool aborted_ = false;
  bool finished_at_lower_bound_ = false;
  std::uint64_t total_nodes_ = 0;
  std::uint64_t task_nodes_ = 0;
  std::uint64_t pending_ = 0;
};

std::string cache_key(const Problem& pb, const SearchConfig& config) {
  std::ostringstream s;
  s << "v" << kSearchCacheVersion << ";curves";
  for (const auto& l : pb.pattern.curves()) s << ' ' << l;
  s << ";matrix";
  for (const auto& row : pb.pattern.matrix())
    for (int v : row) s << v;
  s << ";budget " << pb.budget << ";order";
  for (auto x : pb.order) s << ' ' << x;
  s << ";canonical";
  for (char c : pb.canonical) s << int(c);
  s << ";mirror " << pb.mirror << ";bits";
  for (int b : pb.fixed_bit) s << ' ' << b;
  s << ";orders";
  for (const auto& row : pb.order_rank)
    for (int r : row) s << ' ' << r;
  s << ";tasks " << config.target_tasks;
  return fnv1a_hex(s.str());
}

struct ComponentOutcome {
  std::optional<int> genus;  // empty: exceeds budget
  std::optional<RibbonStructure> witness;
  std::uint64_t nodes = 0;
  std::size_t tasks = 0;
  std::size_t tasks_from_cache = 0;
};

ComponentOutcome solve_component(const CurvePattern& p, int budget, const SearchConfig& config,
                                 const std::optional<std::filesystem::path>& cache_path) {
  ComponentOutcome out;
  const Problem pb = make_problem(p, budget, config);
  if (budget < pb.lower_bound) return out;

  Shared shared;
  shared.node_limit = config.node_limit;
  if (config.time_limit) shared.deadline = Clock::now() + *config.time_limit;

  // Task split depends only on the pattern and target, never on threads.
  Dfs planner(pb, shared);
  const std::size_t target = std::max<std::size_t>(1, config.target_tasks);
  const std::size_t cap = 64 * target;
  std::size_t depth = 1;
  for (; depth < pb.n; ++depth) {
    const std::size_t c = planner.count_frontier(depth, cap);
    if (c > cap) {
      depth = std::max<std::size_t>(1, depth - 1);
      break;
    }
    if (c >= target) break;
  }
  if (depth > pb.n) depth = pb.n;
  std::vector<State> tasks = planner.collect_frontier(depth);
  if (shared.stop) throw Inconclusive("search stopped while splitting into tasks");
  out.nodes += planner.local_nodes();
  out.tasks = tasks.size();

  std::vector<TaskResult> results(tasks.size());
  std::optional<SearchCache> cache;
  if (cache_path) {
    cache.emplace(*cache_path, cache_key(pb, config), config.resume);
    for (const auto& [i, e] : cache->entries()) {
      if (i >= results.size()) continue;
      auto& r = results[i];
      r.complete = true;
      r.cached = true;
      r.best = e.best;
      r.cutoff = e.cutoff;
      r.witness = e.witness;
      if (e.best) shared.offer(*e.best, i);
      ++out.tasks_from_cache;
    }
  }

  auto run_pending = [&](const std::vector<std::size_t>& todo) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Dfs dfs(pb, shared);
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= todo.size()) break;
        const std::size_t i = todo[k];
        dfs.reset_task_counters();
        TaskResult r = dfs.run_task(tasks[i], i);
        if (r.complete && cache) cache->record(i, CachedTask{r.best, r.cutoff, r.nodes, r.witness});
        results[i] = std::move(r);
      }
    };
    const unsigned nt = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(std::max<std::size_t>(1, todo.size()))));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nt; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  };

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < results.size(); ++i)
    if (!results[i].complete) todo.push_back(i);
  run_pending(todo);

  for (int pass = 0;; ++pass) {
    std::optional<int> best;
    std::size_t best_task = results.size();
    for (std::size_t i = 0; i < results.size(); ++i)
      if (results[i].best && (!best || *results[i].best < *best)) {
        best = results[i].best;
        best_task = i;
      }
    // A finished task certifies that its minimum is its best or exceeds its cutoff.
    std::vector<std::size_t> rerun;
    bool undecided = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      if (i == best_task) continue;
      const int need = !best ? budget : (i < best_task ? *best : *best - 1);
      if (r.complete) {
        if (r.cutoff < need) (r.cached ? rerun.push_back(i) : void(undecided = true));
      } else if (!(r.skipped && best && *best <= pb.lower_bound && i > best_task)) {
        undecided = true;
      }
    }
    if (best && !results[best_task].complete) undecided = true;
    if (!rerun.empty() && pass == 0 && !shared.stop) {
      for (auto i : rerun) results[i] = TaskResult{};
      run_pending(rerun);
      continue;
    }
    for (const auto& r : results) out.nodes += r.cached ? 0 : r.nodes;
    if (undecided || !rerun.empty()) {
      std::ostringstream msg;
      msg << "search stopped before certification after " << shared.nodes.load() << " nodes";
      if (best) msg << "; best genus found so far " << *best;
      throw Inconclusive(msg.str());
    }
    if (best) {
      out.genus = best;
      out.witness = results[best_task].witness;
    }
    return out;
  }
}

RibbonStructure assemble(const CurvePattern& p, const std::vector<std::vector<std::size_t>>& comps,
                         const std::vector<RibbonStructure>& parts) {
  RibbonStructure r;
  r.visit_order.resize(p.size());
  r.crossing_bits.assign(p.crossing_count(), 0);
  const auto cr = p.crossings();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& keep = comps[k];
    const CurvePattern sub = p.restrict_to(keep);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (auto y : parts[k].visit_order[a]) r.visit_order[keep[a]].push_back(keep[y]);
    const auto sub_cr = sub.crossings();
    for (std::size_t c = 0; c < sub_cr.size(); ++c) {
      const auto key = std::make_pair(keep[sub_cr[c].first], keep[sub_cr[c].second]);
      const auto pos = static_cast<std::size_t>(std::find(cr.begin(), cr.end(), key) - cr.begin());
      r.crossing_bits[pos] = parts[k].crossing_bits[c];
    }
  }
  r.canonicalize();
  return r;
}

}  // namespace

MinGenusResult min_genus(const CurvePattern& p, int budget, const SearchConfig& config) {
  const auto start = Clock::now();
  if (budget < 0) throw InvalidInput("genus budget must be non-negative");
  require_valid(p);
  for (const auto& [curve, partners] : config.fixed_cyclic_orders) {
    p.index(curve);
    for (const auto& l : partners) p.index(l);
  }
  for (const auto& [pair, bit] : config.fixed_bits) {
    p.index(pair.first);
    p.index(pair.second);
  }

  MinGenusResult res;
  res.budget = budget;
  res.lower_bound = f2_genus_lower_bound(p);
  const auto comps = p.components();
  std::vector<int> lbs;
  int lb_sum = 0;
  for (const auto& keep : comps) {
    lbs.push_back(f2_genus_lower_bound(p.restrict_to(keep)));
    lb_sum += lbs.back();
  }
  res.lower_bound = std::max(res.lower_bound, lb_sum);

  std::vector<RibbonStructure> parts;
  int total = 0;
  bool exceeds = budget < lb_sum;
  for (std::size_t k = 0; k < comps.size() && !exceeds; ++k) {
    const int slack = budget - (lb_sum - lbs[k]);
    std::optional<std::filesystem::path> path = config.cache_path;
    if (path && comps.size() > 1) path = std::filesystem::path(path->string() + "." + std::to_string(k));
    const ComponentOutcome o = solve_component(p.restrict_to(comps[k]), slack, config, path);
    res.nodes_explored += o.nodes;
    res.tasks += o.tasks;
    res.tasks_from_cache += o.tasks_from_cache;
    if (!o.genus) {
      exceeds = true;
      break;
    }
    total += *o.genus;
    parts.push_back(*o.witness);
  }
  if (!exceeds && total > budget) exceeds = true;

  res.exhausted = true;
  if (exceeds) {
    res.verdict = Verdict::Exceeds;
    res.genus = budget;
  } else {
    res.verdict = Verdict::Exact;
    res.genus = total;
    res.witness = assemble(p, comps, parts);
  }
  res.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

RealizabilityResult is_realizable(const CurvePattern& p, int genus, const SearchConfig& config) {
  RealizabilityResult r;
  r.search = min_genus(p, genus, config);
  r.realizable = r.search.verdict == Verdict::Exact;
  r.witness = r.search.witness;
  return r;
}

}  // namespace cubmon
