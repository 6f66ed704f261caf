#include "monoidlab/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace monoidlab {

Presentation make_presentation(Alphabet generators,
                               std::vector<std::pair<Word, Word>> relations) {
  const std::uint32_t n = generators.size();
  for (const auto& [u, v] : relations) {
    if (u.alphabet_size != n || v.alphabet_size != n)
      throw std::invalid_argument("presentation: relation word alphabet mismatch");
    for (auto l : u.letters)
      if (l >= n) throw std::invalid_argument("presentation: relation letter out of range");
    for (auto l : v.letters)
      if (l >= n) throw std::invalid_argument("presentation: relation letter out of range");
  }
  return Presentation{std::move(generators), std::move(relations)};
}

namespace {

constexpr LetterId kGenA = 0, kGenB = 1, kGenC = 2;

void append_run(std::vector<LetterId>& out, LetterId letter, std::uint64_t count) {
  out.insert(out.end(), count, letter);
}

}  // namespace

Word guba_s_word(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("guba_s_word: index must be >= 2");
  if (n > 20) throw std::invalid_argument("guba_s_word: index too large (word length 2^n)");
  std::vector<LetterId> w;
  w.reserve((std::uint64_t{1} << n) + 2 * n + 2);
  w.push_back(kGenC);
  append_run(w, kGenA, n);
  append_run(w, kGenB, std::uint64_t{1} << n);
  append_run(w, kGenA, n);
  w.push_back(kGenC);
  return Word{std::move(w), 3};
}

Word guba_t_word(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("guba_t_word: index must be >= 2");
  std::vector<LetterId> w;
  w.reserve(3 * std::size_t{n} + 2);
  w.push_back(kGenA);
  append_run(w, kGenC, n);
  append_run(w, kGenB, n);
  append_run(w, kGenC, n);
  w.push_back(kGenA);
  return Word{std::move(w), 3};
}

Presentation guba_example(std::uint32_t N) {
  if (N < 2) throw std::invalid_argument("guba_example: N must be >= 2");
  Alphabet gens{{"a", "b", "c"}};
  std::vector<std::pair<Word, Word>> rels;
  for (std::uint32_t n = 2; n <= N; ++n) rels.emplace_back(guba_s_word(n), guba_t_word(n));
  return make_presentation(std::move(gens), std::move(rels));
}

namespace {

std::vector<std::size_t> occurrences_in(const std::vector<LetterId>& haystack,
                                        const std::vector<LetterId>& needle) {
  std::vector<std::size_t> positions;
  if (needle.empty()) {
    for (std::size_t i = 0; i + 0 <= haystack.size(); ++i) positions.push_back(i);
    return positions;
  }
  if (needle.size() > haystack.size()) return positions;
  auto it = haystack.begin();
  while (true) {
    it = std::search(it, haystack.end(), needle.begin(), needle.end());
    if (it == haystack.end()) break;
    positions.push_back(static_cast<std::size_t>(it - haystack.begin()));
    ++it;
  }
  return positions;
}

Word splice(const Word& w, std::size_t at, std::size_t remove_len,
            const std::vector<LetterId>& insert) {
  Word r;
  r.alphabet_size = w.alphabet_size;
  r.letters.reserve(w.letters.size() - remove_len + insert.size());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + at);
  r.letters.insert(r.letters.end(), insert.begin(), insert.end());
  r.letters.insert(r.letters.end(), w.letters.begin() + at + remove_len, w.letters.end());
  return r;
}

}  // namespace

std::vector<Word> rewrite_neighbors(const Word& w, const Presentation& pres) {
  if (w.alphabet_size != pres.num_generators())
    throw std::invalid_argument("rewrite_neighbors: word alphabet mismatch");
  std::set<Word> out;
  for (const auto& [u, v] : pres.relations) {
    for (auto pos : occurrences_in(w.letters, u.letters))
      out.insert(splice(w, pos, u.letters.size(), v.letters));
    for (auto pos : occurrences_in(w.letters, v.letters))
      out.insert(splice(w, pos, v.letters.size(), u.letters));
  }
  return {out.begin(), out.end()};
}

bool SaturationResult::contains(const Word& w) const {
  return std::binary_search(class_members.begin(), class_members.end(), w,
                            [](const Word& a, const Word& b) { return a < b; });
}

SaturationResult congruence_class(const Word& w, const Presentation& pres,
                                  std::uint32_t cap) {
  if (cap < 1) throw std::invalid_argument("congruence_class: cap must be >= 1");
  std::set<Word> seen{w};
  std::vector<Word> queue{w};
  bool complete = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto& nb : rewrite_neighbors(queue[i], pres)) {
      if (seen.count(nb)) continue;
      if (seen.size() >= cap) {
        complete = false;
        break;
      }
      seen.insert(nb);
      queue.push_back(std::move(nb));
    }
    if (!complete) break;
  }
  SaturationResult r;
  r.class_members.assign(seen.begin(), seen.end());
  r.complete = complete;
  return r;
}

Tristate equivalent(const Word& u, const Word& v, const Presentation& pres,
                    std::uint32_t cap) {
  const SaturationResult sat = congruence_class(u, pres, cap);
  if (sat.contains(v)) return Tristate::yes;
  return sat.complete ? Tristate::no : Tristate::unknown;
}

Tristate is_minimal_atomic_factorization(const Word& w, const Presentation& pres,
                                         std::uint32_t cap) {
  for (const auto& [u, v] : pres.relations)
    if (u.length() < 2 || v.length() < 2)
      throw std::invalid_argument(
          "is_minimal_atomic_factorization: a relation side has length < 2, so the "
          "generators need not be atoms");
  const SaturationResult sat = congruence_class(w, pres, cap);
  if (!sat.complete) return Tristate::unknown;
  std::vector<ValuationVector> vals;
  vals.reserve(sat.class_members.size());
  for (const auto& m : sat.class_members) vals.push_back(valuation(m));
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (i != j && strictly_dominated_by(vals[i], vals[j])) return Tristate::no;
  return Tristate::yes;
}

// ---------------------------------------------------------------------------
// Pieces via a suffix automaton over the concatenated defining words
// ---------------------------------------------------------------------------

struct PieceIndex::Impl {
  struct State {
    std::uint32_t len = 0;
    std::int32_t link = -1;
    std::map<std::uint32_t, std::int32_t> next;
    std::uint64_t occ = 0;
  };

  std::vector<State> states;
  std::int32_t last = 0;

  explicit Impl(const Presentation& pres) {
    states.emplace_back();  // initial state

    // Deduplicate defining words by content: two occurrences of u give
    // distinct contexts exactly when they sit at distinct (word, position)
    // slots of the deduplicated list.
    std::set<std::vector<LetterId>> defining;
    for (const auto& [u, v] : pres.relations) {
      defining.insert(u.letters);
      defining.insert(v.letters);
    }

    // Separate words by unique sentinel symbols so factors never span two
    // defining words. Sentinels start past the generator ids.
    std::uint32_t sentinel = pres.num_generators();
    bool first = true;
    for (const auto& wrd : defining) {
      if (!first) extend(sentinel++);
      first = false;
      for (auto l : wrd) extend(l);
    }
    propagate_counts();
  }

  void extend(std::uint32_t c) {
    const auto cur = static_cast<std::int32_t>(states.size());
    states.emplace_back();
    states[cur].len = states[last].len + 1;
    states[cur].occ = 1;
    std::int32_t p = last;
    while (p != -1 && !states[p].next.count(c)) {
      states[p].next[c] = cur;
      p = states[p].link;
    }
    if (p == -1) {
      states[cur].link = 0;
    } else {
      const std::int32_t q = states[p].next[c];
      if (states[p].len + 1 == states[q].len) {
        states[cur].link = q;
      } else {
        const auto clone = static_cast<std::int32_t>(states.size());
        states.push_back(states[q]);
        states[clone].len = states[p].len + 1;
        states[clone].occ = 0;
        while (p != -1 && states[p].next[c] == q) {
          states[p].next[c] = clone;
          p = states[p].link;
        }
        states[q].link = clone;
        states[cur].link = clone;
      }
    }
    last = cur;
  }

  void propagate_counts() {
    std::vector<std::int32_t> order(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) order[i] = static_cast<std::int32_t>(i);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
      return states[a].len > states[b].len;
    });
    for (auto v : order)
      if (states[v].link >= 0) states[states[v].link].occ += states[v].occ;
  }

  std::uint64_t count(const std::vector<LetterId>& u) const {
    std::int32_t s = 0;
    for (auto c : u) {
      const auto it = states[s].next.find(c);
      if (it == states[s].next.end()) return 0;
      s = it->second;
    }
    return states[s].occ;
  }
};

PieceIndex::PieceIndex(const Presentation& pres) : impl_(std::make_unique<Impl>(pres)) {}
PieceIndex::~PieceIndex() = default;
PieceIndex::PieceIndex(PieceIndex&&) noexcept = default;
PieceIndex& PieceIndex::operator=(PieceIndex&&) noexcept = default;

std::uint64_t PieceIndex::occurrences(const Word& u) const {
  if (u.empty())
    throw std::invalid_argument("occurrences: the empty word is not a factor");
  return impl_->count(u.letters);
}

bool PieceIndex::is_piece(const Word& u) const {
  if (u.empty()) throw std::invalid_argument("is_piece: the empty word is not considered");
  return occurrences(u) >= 2;
}

std::vector<std::uint32_t> PieceIndex::piece_run_lengths(const Word& w) const {
  // Pieceness is factor-closed, so for each start the piece prefixes form an
  // initial run; walk the automaton until the count drops below 2.
  const auto n = w.length();
  std::vector<std::uint32_t> run(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::int32_t s = 0;
    std::uint32_t L = 0;
    while (i + L < n) {
      const auto it = impl_->states[s].next.find(w.letters[i + L]);
      if (it == impl_->states[s].next.end()) break;
      s = it->second;
      if (impl_->states[s].occ < 2) break;
      ++L;
    }
    run[i] = L;
  }
  return run;
}

bool is_piece(const Word& u, const Presentation& pres) {
  return PieceIndex(pres).is_piece(u);
}

namespace {

std::optional<std::uint32_t> min_pieces_with(const PieceIndex& index, const Word& w) {
  const auto run = index.piece_run_lengths(w);
  const std::uint32_t n = w.length();
  constexpr std::uint32_t kInf = 0xffffffffu;
  std::vector<std::uint32_t> dp(n + 1, kInf);
  dp[0] = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (dp[i] == kInf) continue;
    for (std::uint32_t L = 1; L <= run[i]; ++L)
      dp[i + L] = std::min(dp[i + L], dp[i] + 1);
  }
  if (dp[n] == kInf) return std::nullopt;
  return dp[n];
}

}  // namespace

std::optional<std::uint32_t> min_piece_decomposition(const Word& w,
                                                     const Presentation& pres) {
  return min_pieces_with(PieceIndex(pres), w);
}

std::pair<MultiGraph, MultiGraph> adian_graphs(const Presentation& pres) {
  MultiGraph left, right;
  left.num_vertices = right.num_vertices = pres.num_generators();
  for (const auto& [u, v] : pres.relations) {
    if (u.empty() || v.empty())
      throw std::invalid_argument("adian_graphs: relation with an empty side");
    left.edges.emplace_back(u.letters.front(), v.letters.front());
    right.edges.emplace_back(u.letters.back(), v.letters.back());
  }
  return {left, right};
}

std::optional<std::uint32_t> girth(const MultiGraph& g) {
  for (const auto& [a, b] : g.edges)
    if (a == b) return 1;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> multiplicity;
  for (const auto& [a, b] : g.edges) {
    auto key = std::minmax(a, b);
    if (++multiplicity[{key.first, key.second}] >= 2) return 2;
  }

  // Simple graph remains; BFS from every vertex, tracking the arriving edge.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(g.num_vertices);
  for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::uint32_t best = 0xffffffffu;
  for (std::uint32_t start = 0; start < g.num_vertices; ++start) {
    std::vector<std::uint32_t> dist(g.num_vertices, 0xffffffffu);
    std::vector<std::uint32_t> via_edge(g.num_vertices, 0xffffffffu);
    std::vector<std::uint32_t> bfs{start};
    dist[start] = 0;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      const std::uint32_t u = bfs[qi];
      for (const auto& [v, e] : adj[u]) {
        if (e == via_edge[u]) continue;
        if (dist[v] == 0xffffffffu) {
          dist[v] = dist[u] + 1;
          via_edge[v] = e;
          bfs.push_back(v);
        } else {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == 0xffffffffu) return std::nullopt;
  return best;
}

bool is_class_Kpq(const Presentation& pres, std::uint32_t p, std::uint32_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("is_class_Kpq: p and q must be >= 1");
  const PieceIndex index(pres);
  std::set<std::vector<LetterId>> defining;
  for (const auto& [u, v] : pres.relations) {
    defining.insert(u.letters);
    defining.insert(v.letters);
  }
  for (const auto& letters : defining) {
    const auto k = min_pieces_with(index, Word{letters, pres.num_generators()});
    if (k.has_value() && *k < p) return false;
  }
  const auto [left, right] = adian_graphs(pres);
  const auto gl = girth(left), gr = girth(right);
  if (gl.has_value() && *gl < q) return false;
  if (gr.has_value() && *gr < q) return false;
  return true;
}

}  // namespace monoidlab
