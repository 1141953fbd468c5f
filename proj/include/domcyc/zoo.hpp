#pragma once

// Constructors for the named small graphs, the extremal families, and the
// forbidden pairs. Vertex orders are fixed and documented per constructor so
// that every output is reproducible byte for byte.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcyc/fixture_data.hpp"
#include "domcyc/graph.hpp"
#include "domcyc/iso.hpp"

namespace domcyc {

// --- basic shapes ---------------------------------------------------------

inline Graph complete_graph(std::size_t n) {
  Graph::Builder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("P_n needs n >= 1");
  Graph::Builder b(n);
  for (std::size_t v = 1; v < n; ++v) b.add_edge(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  return path_graph(n).with_edge(0, static_cast<Vertex>(n - 1));
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_bipartite(std::size_t a, std::size_t b) { return join(empty_graph(a), empty_graph(b)); }

// --- named forbidden subgraphs --------------------------------------------

enum class NamedId { kClaw, kClawStar, kClawStarStar, kPath, kZ, kB, kN, kW, kWStar, kK4Minus, kComplete, kCycle };

/// A named graph with its leg/length parameters (unused ones ignored).
struct NamedGraph {
  NamedId id;
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;
};

namespace zoo_detail {

// Triangle 0,1,2 with pendant paths of the given vertex counts at 0, 1, 2,
// numbered consecutively leg by leg moving away from the triangle.
inline Graph triangle_with_legs(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t legs[3] = {a, b, c};
  Graph::Builder g(3 + a + b + c);
  g.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
  Vertex next = 3;
  for (Vertex corner = 0; corner < 3; ++corner) {
    Vertex prev = corner;
    for (std::size_t i = 0; i < legs[corner]; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return std::move(g).build();
}

// Centre 0 with legs of the given vertex counts, numbered leg by leg.
inline Graph spider(std::initializer_list<std::size_t> legs) {
  std::size_t n = 1;
  for (auto l : legs) n += l;
  Graph::Builder g(n);
  Vertex next = 1;
  for (auto l : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return std::move(g).build();
}

}  // namespace zoo_detail

/// Vertex orders:
///  - K_{1,3}, K*_{1,3}, K**_{1,3}: centre 0, legs numbered outward one leg at a time.
///  - Z_n, B_{m,n}, N_{l,m,n}: triangle 0,1,2; legs hang from 0, then 1, then 2,
///    and a leg of "n" counts n vertices beyond the triangle.
///  - W = K_1 + 3K_2 and W* = K_1 + (K_1 ∪ 2K_2): hub 0 first.
///  - K_4^-: K_4 without the edge 2-3.
inline Graph make_named(const NamedGraph& spec) {
  using zoo_detail::spider;
  using zoo_detail::triangle_with_legs;
  switch (spec.id) {
    case NamedId::kClaw:
      return spider({1, 1, 1});
    case NamedId::kClawStar:
      return spider({2, 2, 2});
    case NamedId::kClawStarStar:
      return spider({2, 2, 1});
    case NamedId::kPath:
      if (spec.n < 1) throw std::invalid_argument("P_n needs n >= 1");
      return path_graph(spec.n);
    case NamedId::kZ:
      if (spec.n < 1) throw std::invalid_argument("Z_n needs n >= 1");
      return triangle_with_legs(spec.n, 0, 0);
    case NamedId::kB:
      return triangle_with_legs(spec.m, spec.n, 0);
    case NamedId::kN:
      return triangle_with_legs(spec.l, spec.m, spec.n);
    case NamedId::kW:
      return join(complete_graph(1), copies(complete_graph(2), 3));
    case NamedId::kWStar:
      return join(complete_graph(1), disjoint_union(complete_graph(1), copies(complete_graph(2), 2)));
    case NamedId::kK4Minus:
      return complete_graph(4).without_edge(2, 3);
    case NamedId::kComplete:
      if (spec.n < 1) throw std::invalid_argument("K_n needs n >= 1");
      return complete_graph(spec.n);
    case NamedId::kCycle:
      return cycle_graph(spec.n);
  }
  throw std::invalid_argument("unknown named graph");
}

inline Graph claw() { return make_named({NamedId::kClaw}); }
inline Graph z_graph(std::size_t n) { return make_named({NamedId::kZ, 0, 0, n}); }
inline Graph b_graph(std::size_t m, std::size_t n) { return make_named({NamedId::kB, 0, m, n}); }
inline Graph n_graph(std::size_t l, std::size_t m, std::size_t n) { return make_named({NamedId::kN, l, m, n}); }
inline Graph w_graph() { return make_named({NamedId::kW}); }
inline Graph w_star() { return make_named({NamedId::kWStar}); }
inline Graph k4_minus() { return make_named({NamedId::kK4Minus}); }
inline Graph claw_star() { return make_named({NamedId::kClawStar}); }
inline Graph claw_star_star() { return make_named({NamedId::kClawStarStar}); }

// --- extremal families ----------------------------------------------------

enum class FamilyId { kA, kAPrime, kADoublePrime, kA1, kA2, kA3, kA4, kA5, kFsst };

struct FamilySpec {
  FamilyId id;
  std::size_t s = 0;
  std::size_t s_prime = 0;  // F_{s,s',t} only
  std::size_t t = 0;        // F_{s,s',t} only
};

inline std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::kA: return "A";
    case FamilyId::kAPrime: return "Ap";
    case FamilyId::kADoublePrime: return "App";
    case FamilyId::kA1: return "A1";
    case FamilyId::kA2: return "A2";
    case FamilyId::kA3: return "A3";
    case FamilyId::kA4: return "A4";
    case FamilyId::kA5: return "A5";
    case FamilyId::kFsst: return "Fsst";
  }
  return "?";
}

inline std::string describe(const FamilySpec& f) {
  std::string out = family_name(f.id) + "(s=" + std::to_string(f.s);
  if (f.id == FamilyId::kFsst) out += ",s'=" + std::to_string(f.s_prime) + ",t=" + std::to_string(f.t);
  return out + ")";
}

/// Smallest admissible s for each family.
inline std::size_t family_min_s(FamilyId id) {
  switch (id) {
    case FamilyId::kA: return 2;
    case FamilyId::kAPrime: return 3;
    case FamilyId::kADoublePrime: return 2;
    case FamilyId::kA1: return 2;
    case FamilyId::kA2: return 4;
    case FamilyId::kA3: return 4;
    case FamilyId::kA4: return 2;
    case FamilyId::kA5: return 3;
    case FamilyId::kFsst: return 3;
  }
  return 0;
}

inline void validate(const FamilySpec& f) {
  if (f.s < family_min_s(f.id))
    throw std::invalid_argument(describe(f) + ": s must be at least " + std::to_string(family_min_s(f.id)));
  if (f.id == FamilyId::kFsst) {
    if (f.s_prime < f.s) throw std::invalid_argument(describe(f) + ": need s' >= s");
    if (f.t < 1 || 2 * f.t + 1 > f.s) throw std::invalid_argument(describe(f) + ": need 1 <= t <= (s-1)/2");
  }
}

/// Closed-form |V| for a family member.
inline std::size_t family_order(const FamilySpec& f) {
  const std::size_t s = f.s;
  switch (f.id) {
    case FamilyId::kA: return 3 * s + 2;
    case FamilyId::kAPrime: return 2 * s + 2;
    case FamilyId::kADoublePrime: return s + 6;
    case FamilyId::kA1: return 3 * s + 6;
    case FamilyId::kA2:
    case FamilyId::kA3: return 3 * s;
    case FamilyId::kA4: return s + 6;
    case FamilyId::kA5: return 2 * s + 2;
    case FamilyId::kFsst: return s + f.s_prime + 2 * f.t + 1;
  }
  return 0;
}

/// Closed-form |E| for a family member.
inline std::size_t family_size(const FamilySpec& f) {
  const std::size_t s = f.s;
  const std::size_t ks = s * (s - 1) / 2;
  switch (f.id) {
    case FamilyId::kA: return 3 * (s + 1);
    case FamilyId::kAPrime: return 5 * s;
    case FamilyId::kADoublePrime: return ks + 2 * s + 11;
    case FamilyId::kA1: return 6 + 3 * (s + 1);
    case FamilyId::kA2: return 3 * ks + 6;
    case FamilyId::kA3: return 3 * ks + 3;
    case FamilyId::kA4: return ks + 2 * s + 8;
    case FamilyId::kA5: return 3 * s + 1;
    case FamilyId::kFsst: return ks + f.s_prime * (f.s_prime - 1) / 2 + 3 * (2 * f.t + 1);
  }
  return 0;
}

/// Vertex orders (s as in the family definition):
///  - A_s: branch vertices 0 and 1; path i (i = 0,1,2) has internal vertices
///    2+i*s .. 1+(i+1)*s running from 0 towards 1.
///  - A'_s = 2K_1 + sK_2: hubs 0,1; pairs (2,3), (4,5), ...
///  - A''_s = K_2 + (2K_2 ∪ K_s): hub edge 0-1; pairs (2,3), (4,5); clique 6..s+5.
///  - A^(1)_s: triangles 0,1,2 and 3,4,5; path i joins i to 3+i through
///    internal vertices 6+i*s .. 5+(i+1)*s.
///  - A^(2)_s, A^(3)_s: clique G_i on i*s .. i*s+s-1 with u_i = i*s, v_i = i*s+1.
///  - A^(4)_s: x = 0, y = 1, the K_2 part 2,3, the K_s part 4..s+3, and the
///    two subdivision vertices s+4 (next to x) and s+5 (next to y).
///  - A^(5)_s: x_1 = 0, x_2 = 1, y_{1,j} = 1+j, y_{2,j} = s+1+j.
///  - F_{s,s',t}: K_s on 0..s-1, K_{s'} on s..s+s'-1; connector triangle i
///    (i < 2t+1) is {i, s+i, s+s'+i}.
inline Graph make_family(const FamilySpec& f) {
  validate(f);
  const std::size_t s = f.s;
  const auto V = [](std::size_t x) { return static_cast<Vertex>(x); };
  switch (f.id) {
    case FamilyId::kA: {
      Graph::Builder g(3 * s + 2);
      for (std::size_t i = 0; i < 3; ++i) {
        Vertex prev = 0;
        for (std::size_t j = 0; j < s; ++j) {
          const Vertex cur = V(2 + i * s + j);
          g.add_edge(prev, cur);
          prev = cur;
        }
        g.add_edge(prev, 1);
      }
      return std::move(g).build();
    }
    case FamilyId::kAPrime:
      return join(empty_graph(2), copies(complete_graph(2), s));
    case FamilyId::kADoublePrime:
      return join(complete_graph(2), disjoint_union(copies(complete_graph(2), 2), complete_graph(s)));
    case FamilyId::kA1: {
      Graph::Builder g(3 * s + 6);
      g.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2).add_edge(3, 4).add_edge(4, 5).add_edge(3, 5);
      for (std::size_t i = 0; i < 3; ++i) {
        Vertex prev = V(i);
        for (std::size_t j = 0; j < s; ++j) {
          const Vertex cur = V(6 + i * s + j);
          g.add_edge(prev, cur);
          prev = cur;
        }
        g.add_edge(prev, V(3 + i));
      }
      return std::move(g).build();
    }
    case FamilyId::kA2:
    case FamilyId::kA3: {
      Graph::Builder g(3 * s);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t a = 0; a < s; ++a)
          for (std::size_t b = a + 1; b < s; ++b) g.add_edge(V(i * s + a), V(i * s + b));
        const std::size_t next = (i + 1) % 3;
        g.add_edge(V(i * s), V(next * s));
        g.add_edge(V(i * s + 1), V(next * s + 1));
      }
      if (f.id == FamilyId::kA3)
        for (std::size_t i = 0; i < 3; ++i) g.remove_edge(V(i * s), V(i * s + 1));
      return std::move(g).build();
    }
    case FamilyId::kA4: {
      const Graph base =
          join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(s)));
      Graph::Builder g(Graph::from_edges(s + 6, base.edges()));
      g.remove_edge(0, 1);
      g.add_edge(0, V(s + 4)).add_edge(V(s + 4), V(s + 5)).add_edge(V(s + 5), 1);
      return std::move(g).build();
    }
    case FamilyId::kA5: {
      Graph::Builder g(2 * s + 2);
      g.add_edge(0, 1);
      for (std::size_t j = 1; j <= s; ++j) {
        g.add_edge(V(1 + j), V(s + 1 + j));
        g.add_edge(0, V(1 + j));
        g.add_edge(1, V(s + 1 + j));
      }
      return std::move(g).build();
    }
    case FamilyId::kFsst: {
      const std::size_t sp = f.s_prime;
      Graph::Builder g(s + sp + 2 * f.t + 1);
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b) g.add_edge(V(a), V(b));
      for (std::size_t a = 0; a < sp; ++a)
        for (std::size_t b = a + 1; b < sp; ++b) g.add_edge(V(s + a), V(s + b));
      for (std::size_t i = 0; i < 2 * f.t + 1; ++i) {
        const Vertex left = V(i), right = V(s + i), mid = V(s + sp + i);
        g.add_edge(left, right).add_edge(left, mid).add_edge(right, mid);
      }
      return std::move(g).build();
    }
  }
  throw std::invalid_argument("unknown family");
}

/// Every admissible F_{s,s',t} with s' <= s_max.
inline std::vector<FamilySpec> fsst_specs(std::size_t s_max) {
  std::vector<FamilySpec> out;
  for (std::size_t s = 3; s <= s_max; ++s)
    for (std::size_t sp = s; sp <= s_max; ++sp)
      for (std::size_t t = 1; 2 * t + 1 <= s; ++t) out.push_back({FamilyId::kFsst, s, sp, t});
  return out;
}

/// Every admissible member of the non-dominating A-families with s <= s_max.
inline std::vector<FamilySpec> a_family_specs(std::size_t s_max) {
  std::vector<FamilySpec> out;
  for (FamilyId id : {FamilyId::kA, FamilyId::kAPrime, FamilyId::kADoublePrime, FamilyId::kA1, FamilyId::kA2,
                      FamilyId::kA3, FamilyId::kA4, FamilyId::kA5})
    for (std::size_t s = family_min_s(id); s <= s_max; ++s) out.push_back({id, s});
  return out;
}

// --- sporadic fixtures ------------------------------------------------------

struct NamedFixture {
  std::string name;
  Graph graph;
};

/// Parses the versioned sporadic-graph fixture format.
inline std::vector<NamedFixture> parse_fixture(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<NamedFixture> out;
  bool have_version = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": " + why);
  };
  std::optional<NamedFixture> open;
  std::optional<Graph::Builder> builder;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "version") {
      int v = 0;
      if (!(words >> v) || v != 1) fail("unsupported fixture version");
      have_version = true;
    } else if (head == "graph") {
      if (!have_version) fail("missing version line");
      if (open) fail("nested graph block");
      std::string name;
      std::size_t order = 0;
      if (!(words >> name >> order)) fail("expected 'graph <name> <order>'");
      open = NamedFixture{name, Graph()};
      builder.emplace(order);
    } else if (head == "edges") {
      if (!open) fail("edges outside a graph block");
      std::string pair;
      while (words >> pair) {
        const auto dash = pair.find('-');
        if (dash == std::string::npos) fail("bad edge token '" + pair + "'");
        try {
          builder->add_edge(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
        } catch (const std::invalid_argument&) {
          fail("bad edge token '" + pair + "'");
        } catch (const std::out_of_range&) {
          fail("bad edge token '" + pair + "'");
        }
      }
    } else if (head == "end") {
      if (!open) fail("'end' without a graph block");
      open->graph = std::move(*builder).build();
      out.push_back(std::move(*open));
      open.reset();
      builder.reset();
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (open) fail("unterminated graph block");
  return out;
}

/// F_i (1 <= i <= 4) from the embedded fixture.
inline Graph make_F_sporadic(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("F_i needs 1 <= i <= 4");
  static const std::vector<NamedFixture> fixtures = parse_fixture(kSporadicFixture);
  const std::string want = "F" + std::to_string(i);
  for (const auto& f : fixtures)
    if (f.name == want) return f.graph;
  throw std::logic_error("embedded fixture lacks " + want);
}

// --- forbidden pairs --------------------------------------------------------

struct NamedForbiddenSet {
  std::string name;
  ForbiddenSet set;
};

/// H1..H7 and H5'. Names: H1 .. H7, H5P.
inline std::vector<NamedForbiddenSet> pair_list() {
  return {
      {"H1", ForbiddenSet({claw(), z_graph(4)}, {"K13", "Z4"})},
      {"H2", ForbiddenSet({claw(), b_graph(1, 2)}, {"K13", "B12"})},
      {"H3", ForbiddenSet({claw(), n_graph(1, 1, 1)}, {"K13", "N111"})},
      {"H4", ForbiddenSet({path_graph(4), w_graph()}, {"P4", "W"})},
      {"H5", ForbiddenSet({claw_star(), z_graph(1)}, {"K13s", "Z1"})},
      {"H6", ForbiddenSet({path_graph(5), w_star()}, {"P5", "Ws"})},
      {"H7", ForbiddenSet({path_graph(5), k4_minus()}, {"P5", "K4m"})},
      {"H5P", ForbiddenSet({claw_star_star(), z_graph(1)}, {"K13ss", "Z1"})},
  };
}

inline ForbiddenSet forbidden_pair(std::string_view name) {
  for (auto& p : pair_list())
    if (p.name == name) return p.set;
  throw std::invalid_argument("unknown forbidden set '" + std::string(name) + "'");
}

}  // namespace domcyc
