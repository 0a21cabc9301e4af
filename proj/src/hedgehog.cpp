#include "dcpath/hedgehog.hpp"

#include <algorithm>
#include <set>

#include "dcpath/matching.hpp"

namespace dcpath {

ChainSeq make_seq(const std::string& chain_colors) {
  ChainSeq seq;
  seq.colors.reserve(chain_colors.size());
  seq.pos.reserve(chain_colors.size());
  for (std::size_t i = 0; i < chain_colors.size(); ++i) {
    seq.colors.push_back(color_from_char(chain_colors[i]));
    seq.pos.push_back(static_cast<std::int64_t>(i) * kPosScale);
  }
  return seq;
}

void finalize_cover(const ChainSeq& seq, BodyCover& cover) {
  const int n = seq.size();
  const Color major = cover.major;
  cover.d00 = cover.d01 = cover.d10 = cover.d11 = 0;
  int prev_hi = -1;
  std::vector<bool> covered(n, false);
  for (const Body& b : cover.bodies) {
    require(b.lo >= 0 && b.hi < n && b.lo <= b.hi, "body interval out of range");
    require(b.lo > prev_hi, "bodies must be disjoint and left to right");
    prev_hi = b.hi;
    require(b.head == (seq.colors[b.lo] != major),
            "head flag inconsistent with endpoint color");
    require(b.tail == (seq.colors[b.hi] != major),
            "tail flag inconsistent with endpoint color");
    for (int i = b.lo + 1; i < b.hi; ++i)
      require(seq.colors[i] == major, "body inner point is minor");
    const int majors = (b.hi - b.lo + 1) - (b.head ? 1 : 0) - (b.tail ? 1 : 0);
    require(majors >= 1 || b.lo == b.hi,
            "multi-point body must contain a major point");
    for (int i = b.lo; i <= b.hi; ++i) covered[i] = true;
    if (b.head && b.tail)
      ++cover.d11;
    else if (b.head)
      ++cover.d10;
    else if (b.tail)
      ++cover.d01;
    else
      ++cover.d00;
  }
  for (int i = 0; i < n; ++i)
    require(covered[i] || seq.colors[i] != major,
            "major point not covered by any body");
}

bool cover_is_feasible(const BodyCover& cover, int chain_surplus) {
  return chain_surplus == cover.d00 - cover.d11;
}

bool cover_is_feasible(const BodyCover& cover, const ChainStats& stats) {
  const int surplus =
      cover.chain == 1 ? stats.b1 - stats.w1 : stats.w2 - stats.b2;
  return cover_is_feasible(cover, surplus);
}

std::vector<Hedgehog> realize_hedgehogs(const ChainSeq& seq,
                                        const BodyCover& cover_in) {
  BodyCover cover = cover_in;
  finalize_cover(seq, cover);
  const int n = seq.size();
  const Color major = cover.major;
  const int nb = static_cast<int>(cover.bodies.size());

  std::vector<int> body_of(n, -1);
  for (int bi = 0; bi < nb; ++bi)
    for (int i = cover.bodies[bi].lo; i <= cover.bodies[bi].hi; ++i)
      body_of[i] = bi;

  // F: minors belonging to no body. M: one midpoint per adjacent-major
  // pair inside a body; payload encodes (body, gap).
  std::vector<MatchToken> tokens;
  std::vector<std::vector<int>> gap_spine(nb);
  for (int bi = 0; bi < nb; ++bi) {
    const Body& b = cover.bodies[bi];
    const int first_major = b.lo + (b.head ? 1 : 0);
    const int last_major = b.hi - (b.tail ? 1 : 0);
    const int majors = last_major - first_major + 1;
    if (b.lo == b.hi && b.head) continue;  // single minor, no gaps
    gap_spine[bi].assign(std::max(0, majors - 1), -1);
  }

  // One scan emits both token kinds in increasing position order: an F
  // token at each uncovered minor, an M token at the midpoint of every
  // adjacent-major pair of a body (pos[i] < mid < pos[i+1]).
  int f_count = 0, m_count = 0;
  for (int i = 0; i < n; ++i) {
    if (body_of[i] == -1) {
      tokens.push_back({seq.pos[i], true, i});
      ++f_count;
      continue;
    }
    const int b_idx = body_of[i];
    const Body& b = cover.bodies[b_idx];
    const int first_major = b.lo + (b.head ? 1 : 0);
    const int last_major = b.hi - (b.tail ? 1 : 0);
    if (i >= first_major && i < last_major) {
      const std::int64_t mid = (seq.pos[i] + seq.pos[i + 1]) / 2;
      tokens.push_back({mid, false, b_idx * n + (i - first_major)});
      ++m_count;
    }
  }
  if (f_count != m_count)
    throw PreconditionError(
        "infeasible cover: surplus differs from d00 - d11 (|F| != |M|)");

  const auto pairs = match_closest_adjacent(tokens);
  for (const auto& [f, gap_key] : pairs) {
    const int bi = gap_key / n;
    const int gap = gap_key % n;
    ensure(gap_spine[bi][gap] == -1, "gap matched twice");
    gap_spine[bi][gap] = f;
  }

  std::vector<Hedgehog> hogs;
  hogs.reserve(nb);
  for (int bi = 0; bi < nb; ++bi) {
    const Body& b = cover.bodies[bi];
    Hedgehog h;
    h.body = b;
    if (b.lo == b.hi) {
      h.path = {b.lo};
      hogs.push_back(std::move(h));
      continue;
    }
    const int first_major = b.lo + (b.head ? 1 : 0);
    const int last_major = b.hi - (b.tail ? 1 : 0);
    if (b.head) h.path.push_back(b.lo);
    for (int m = first_major; m <= last_major; ++m) {
      h.path.push_back(m);
      if (m < last_major) {
        const int spine = gap_spine[bi][m - first_major];
        ensure(spine >= 0, "gap without a spine");
        h.spines.emplace_back(spine, m - first_major);
        h.path.push_back(spine);
      }
    }
    if (b.tail) h.path.push_back(b.hi);
    for (std::size_t i = 0; i + 1 < h.path.size(); ++i)
      ensure(seq.colors[h.path[i]] != seq.colors[h.path[i + 1]],
             "hedgehog path does not alternate");
    // Count identity: #minor = (#major - 1) + head + tail.
    const int majors = last_major - first_major + 1;
    const int minors = static_cast<int>(h.path.size()) - majors;
    ensure(minors == majors - 1 + (b.head ? 1 : 0) + (b.tail ? 1 : 0),
           "hedgehog count identity violated");
    (void)major;
    hogs.push_back(std::move(h));
  }
  return hogs;
}

std::vector<Hedgehog> realize_hedgehogs(const std::string& chain_colors,
                                        const BodyCover& cover) {
  return realize_hedgehogs(make_seq(chain_colors), cover);
}

namespace {

// Joining state for cover_for_k_hedgehogs. Bodies are linked in chain
// order; retired 11-singles leave their minor point uncovered.
struct JoinState {
  const ChainSeq& seq;
  Color major;
  std::vector<Body> body;   // by id
  std::vector<bool> alive;
  std::vector<int> prev, next;
  int live = 0, d00 = 0, d11 = 0;

  std::set<int> pair00;        // id i: i and next[i] are adjacent 00-bodies
  std::set<int> sing_free;     // 11-singles with no adjacent 00-body
  std::set<int> sing_next_00;  // 11-singles adjacent to some 00-body
  std::set<int> attachable;    // 11-singles attachable as a head or tail

  explicit JoinState(const ChainSeq& s, Color maj) : seq(s), major(maj) {}

  bool is00(int i) const { return !body[i].head && !body[i].tail; }
  bool is_sing11(int i) const {
    return body[i].lo == body[i].hi && body[i].head && body[i].tail;
  }
  bool adjacent(int i, int j) const {  // j directly follows i on the chain
    return body[i].hi + 1 == body[j].lo;
  }

  void refresh_pair(int i) {
    if (i < 0) return;
    const int j = next[i];
    const bool good = alive[i] && j >= 0 && alive[j] && is00(i) && is00(j) &&
                      !is_sing11(i) && !is_sing11(j) && adjacent(i, j);
    if (good)
      pair00.insert(i);
    else
      pair00.erase(i);
  }

  void refresh_single(int i) {
    if (i < 0) return;
    sing_free.erase(i);
    sing_next_00.erase(i);
    attachable.erase(i);
    if (!alive[i] || !is_sing11(i)) return;
    const int p = prev[i], q = next[i];
    const bool left_00 = p >= 0 && alive[p] && adjacent(p, i) && is00(p) && !is_sing11(p);
    const bool right_00 = q >= 0 && alive[q] && adjacent(i, q) && is00(q) && !is_sing11(q);
    if (left_00 || right_00)
      sing_next_00.insert(i);
    else
      sing_free.insert(i);
    const bool left_attach =
        p >= 0 && alive[p] && adjacent(p, i) && !body[p].tail && !is_sing11(p);
    const bool right_attach =
        q >= 0 && alive[q] && adjacent(i, q) && !body[q].head && !is_sing11(q);
    if (left_attach || right_attach) attachable.insert(i);
  }

  void refresh_around(int i) {
    if (i < 0) return;
    refresh_pair(i);
    if (prev[i] >= 0) refresh_pair(prev[i]);
    refresh_single(i);
    refresh_single(prev[i]);
    refresh_single(next[i]);
  }

  void unlink(int i) {
    const int p = prev[i], q = next[i];
    if (p >= 0) next[p] = q;
    if (q >= 0) prev[q] = p;
    alive[i] = false;
    --live;
    pair00.erase(i);
    sing_free.erase(i);
    sing_next_00.erase(i);
    attachable.erase(i);
    if (p >= 0) refresh_around(p);
    if (q >= 0) refresh_around(q);
  }
};

}  // namespace

BodyCover cover_for_k_hedgehogs(const ChainSeq& seq, Color major, int k) {
  const int n = seq.size();
  require(n >= 1, "empty chain");
  require(k >= 1 && k <= n, "k must satisfy 1 <= k <= |C|");
  int majors = 0;
  for (Color c : seq.colors) majors += c == major ? 1 : 0;
  const int minors = n - majors;
  const int surplus = majors - minors;
  require(surplus >= 0, "designated major color is less frequent than minor");
  int runs = 0;
  for (int i = 0; i < n; ++i)
    if (seq.colors[i] == major && (i == 0 || seq.colors[i - 1] != major)) ++runs;
  require(runs <= k, "hypothesis violated: runs > k");
  require(surplus <= k, "hypothesis violated: surplus > k");

  JoinState st(seq, major);
  st.body.resize(n);
  st.alive.assign(n, true);
  st.prev.resize(n);
  st.next.resize(n);
  for (int i = 0; i < n; ++i) {
    const bool minor = seq.colors[i] != major;
    st.body[i] = Body{i, i, minor, minor};
    st.prev[i] = i - 1;
    st.next[i] = i + 1 < n ? i + 1 : -1;
  }
  st.live = n;
  st.d00 = majors;
  st.d11 = minors;
  for (int i = 0; i < n; ++i) {
    st.refresh_pair(i);
    st.refresh_single(i);
  }

  // Phase 1: merge neighboring 00-bodies, retiring one 11-single per
  // merge; prefer retiring singles not adjacent to any 00-body so that
  // heads and tails remain available later.
  while (st.live > k + 1 && st.d00 > runs) {
    ensure(!st.pair00.empty(), "no adjacent 00 pair despite d00 > runs");
    ensure(st.d11 > 0, "no 11-single available to retire");
    const int i = *st.pair00.begin();
    const int j = st.next[i];
    int w = -1;
    if (!st.sing_free.empty())
      w = *st.sing_free.begin();
    else
      w = *st.sing_next_00.begin();
    st.unlink(w);
    --st.d11;
    // Merge j into i.
    st.body[i].hi = st.body[j].hi;
    st.unlink(j);
    --st.d00;
    st.refresh_around(i);
  }

  // Phase 2: attach 11-singles as heads or tails until exactly k bodies
  // remain. Every attach preserves d00 - d11.
  while (st.live > k) {
    ensure(!st.attachable.empty(), "no attachable 11-single left");
    const int s = *st.attachable.begin();
    const int p = st.prev[s], q = st.next[s];
    const bool left_ok = p >= 0 && st.alive[p] && st.adjacent(p, s) &&
                         !st.body[p].tail && !st.is_sing11(p);
    if (left_ok) {
      if (st.is00(p)) --st.d00; else ++st.d11;
      st.body[p].tail = true;
      st.body[p].hi = st.body[s].hi;
      st.unlink(s);
      --st.d11;
      st.refresh_around(p);
    } else {
      ensure(q >= 0 && st.alive[q] && st.adjacent(s, q) && !st.body[q].head &&
                 !st.is_sing11(q),
             "attachable single lost its slot");
      if (st.is00(q)) --st.d00; else ++st.d11;
      st.body[q].head = true;
      st.body[q].lo = st.body[s].lo;
      st.unlink(s);
      --st.d11;
      st.refresh_around(q);
      if (st.prev[q] >= 0) st.refresh_around(st.prev[q]);
    }
  }

  BodyCover cover;
  cover.major = major;
  for (int i = 0; i < n; ++i)
    if (st.alive[i]) cover.bodies.push_back(st.body[i]);
  std::sort(cover.bodies.begin(), cover.bodies.end(),
            [](const Body& a, const Body& b) { return a.lo < b.lo; });
  finalize_cover(seq, cover);
  ensure(static_cast<int>(cover.bodies.size()) == k,
         "joining procedure did not reach exactly k bodies");
  ensure(cover_is_feasible(cover, surplus),
         "joining procedure lost the d00 - d11 invariant");
  return cover;
}

std::vector<Hedgehog> cover_with_k_hedgehogs(const ChainSeq& seq, Color major,
                                             int k) {
  const BodyCover cover = cover_for_k_hedgehogs(seq, major, k);
  auto hogs = realize_hedgehogs(seq, cover);
  ensure(static_cast<int>(hogs.size()) == k, "expected exactly k hedgehogs");
  return hogs;
}

std::vector<Hedgehog> cover_with_k_hedgehogs(const std::string& chain_colors,
                                             Color major, int k) {
  return cover_with_k_hedgehogs(make_seq(chain_colors), major, k);
}

std::vector<std::pair<int, int>> hedgehog_edges(
    const std::vector<Hedgehog>& hogs) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& h : hogs)
    for (std::size_t i = 0; i + 1 < h.path.size(); ++i)
      edges.emplace_back(h.path[i], h.path[i + 1]);
  return edges;
}

}  // namespace dcpath
