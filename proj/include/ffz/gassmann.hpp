#pragma once

// Finite permutation groups by full enumeration: conjugacy classes, subgroup
// search, Gassmann equivalence and coset types.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace ffz {

/// Bijection of {0..n-1}. Text uses 1-based cycle notation, "(1 2 3)(4 5)";
/// the identity prints as "()". Products apply the right factor first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : im_(std::move(images)) {
    std::vector<bool> seen(im_.size(), false);
    for (int x : im_) {
      if (x < 0 || x >= static_cast<int>(im_.size()) || seen[static_cast<std::size_t>(x)])
        throw DomainError("gassmann", "images do not form a permutation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  /// Parses cycle notation on n points; n = 0 takes the largest point seen.
  static Permutation parse(const std::string& text, int n = 0) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    int top = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') throw ParseError("gassmann", "bad cycle notation \"" + text + "\"");
      ++i;
      std::vector<int> cyc;
      for (;;) {
        skip();
        if (i >= text.size()) throw ParseError("gassmann", "unterminated cycle in \"" + text + "\"");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("gassmann", "bad cycle notation \"" + text + "\"");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          if (v > 1000000) throw ParseError("gassmann", "point out of range in \"" + text + "\"");
          ++i;
        }
        if (v < 1) throw ParseError("gassmann", "points are numbered from 1");
        cyc.push_back(v - 1);
        top = std::max(top, v);
      }
      cycles.push_back(std::move(cyc));
      skip();
    }
    if (n == 0) n = top;
    if (top > n) throw DomainError("gassmann", "point " + std::to_string(top) + " exceeds degree " + std::to_string(n));
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cyc : cycles) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (used[static_cast<std::size_t>(cyc[k])])
          throw ParseError("gassmann", "cycles are not disjoint in \"" + text + "\"");
        used[static_cast<std::size_t>(cyc[k])] = true;
        im[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(im_.size()); }
  int operator()(int x) const { return im_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return im_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DomainError("gassmann", "permutations of different degrees");
    std::vector<int> im(b.im_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = a.im_[static_cast<std::size_t>(b.im_[x])];
    Permutation r;
    r.im_ = std::move(im);
    return r;
  }
  Permutation inverse() const {
    Permutation r;
    r.im_.resize(im_.size());
    for (std::size_t x = 0; x < im_.size(); ++x) r.im_[static_cast<std::size_t>(im_[x])] = static_cast<int>(x);
    return r;
  }

  /// Cycle lengths in descending order, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> out;
    std::vector<bool> seen(im_.size(), false);
    for (std::size_t x = 0; x < im_.size(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(im_[y])) {
        seen[y] = true;
        ++len;
      }
      out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }
  int order() const {
    int r = 1;
    for (int len : cycle_type()) r = std::lcm(r, len);
    return r;
  }
  int fixed_points() const {
    int r = 0;
    for (std::size_t x = 0; x < im_.size(); ++x) r += im_[x] == static_cast<int>(x);
    return r;
  }

  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(im_.size(), false);
    for (std::size_t x = 0; x < im_.size(); ++x) {
      if (seen[x] || im_[x] == static_cast<int>(x)) continue;
      out += "(";
      for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(im_[y])) {
        seen[y] = true;
        if (y != x) out += " ";
        out += std::to_string(y + 1);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> im_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

inline constexpr std::size_t kDefaultGroupBound = 25000;

/// Fully enumerated permutation group. Element 0 is the identity; the order
/// is the breadth-first order of the closure.
class PermGroup {
 public:
  int degree() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Permutation& element(std::size_t i) const { return elems_.at(i); }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * elems_.size() + b];
    return index_.at(elems_[a] * elems_[b]);
  }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  bool is_abelian() const {
    for (const auto& a : gens_)
      for (const auto& b : gens_)
        if (!(a * b == b * a)) return false;
    return true;
  }

  friend std::shared_ptr<const PermGroup> group_closure(int n, const std::vector<Permutation>& gens, std::size_t bound);

 private:
  int n_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // only for small groups
};

using GroupPtr = std::shared_ptr<const PermGroup>;

inline GroupPtr group_closure(int n, const std::vector<Permutation>& gens, std::size_t bound = kDefaultGroupBound) {
  if (n < 1) throw DomainError("gassmann", "degree must be >= 1");
  for (const auto& g : gens)
    if (g.degree() != n) throw DomainError("gassmann", "generator " + g.to_string() + " does not act on " + std::to_string(n) + " points");
  auto grp = std::make_shared<PermGroup>();
  grp->n_ = n;
  grp->gens_ = gens;
  grp->elems_.push_back(Permutation::identity(n));
  grp->index_.emplace(grp->elems_[0], 0);
  for (std::size_t i = 0; i < grp->elems_.size(); ++i) {
    for (const auto& g : gens) {
      auto next = g * grp->elems_[i];
      if (grp->index_.contains(next)) continue;
      if (grp->elems_.size() >= bound)
        throw DomainError("gassmann", "group closure exceeds bound " + std::to_string(bound));
      grp->index_.emplace(next, grp->elems_.size());
      grp->elems_.push_back(std::move(next));
    }
  }
  const std::size_t ord = grp->elems_.size();
  grp->inverse_.resize(ord);
  for (std::size_t i = 0; i < ord; ++i) grp->inverse_[i] = grp->index_.at(grp->elems_[i].inverse());
  if (ord <= 4096) {
    grp->table_.resize(ord * ord);
    for (std::size_t a = 0; a < ord; ++a)
      for (std::size_t b = 0; b < ord; ++b)
        grp->table_[a * ord + b] = static_cast<std::uint32_t>(grp->index_.at(grp->elems_[a] * grp->elems_[b]));
  }
  return grp;
}

/// A subgroup, stored as sorted element indices into its parent.
struct Subgroup {
  GroupPtr parent;
  std::vector<std::size_t> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(std::size_t idx) const { return std::binary_search(elements.begin(), elements.end(), idx); }
  std::string generators_text() const {
    // smallest generating set found greedily, for display
    std::vector<std::size_t> gens;
    std::set<std::size_t> span{0};
    for (std::size_t e : elements) {
      if (span.contains(e)) continue;
      gens.push_back(e);
      std::deque<std::size_t> todo(span.begin(), span.end());
      while (!todo.empty()) {
        const auto x = todo.front();
        todo.pop_front();
        for (std::size_t g : gens) {
          const auto y = parent->mul(g, x);
          if (span.insert(y).second) todo.push_back(y);
        }
      }
    }
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + parent->element(gens[i]).to_string();
    return out + ">";
  }
};

namespace detail {

/// Closure of the given indices inside G; nullopt once it exceeds limit.
inline std::optional<std::vector<std::size_t>> close_indices(const PermGroup& g, const std::vector<std::size_t>& gens,
                                                              std::size_t limit) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t x : gens) {
      const auto y = g.mul(x, out[i]);
      if (in[y]) continue;
      if (out.size() >= limit) return std::nullopt;
      in[y] = true;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> conjugate_set(const PermGroup& g, const std::vector<std::size_t>& h, std::size_t by) {
  std::vector<std::size_t> out;
  out.reserve(h.size());
  const auto gi = g.inv(by);
  for (std::size_t x : h) out.push_back(g.mul(g.mul(by, x), gi));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> idx;
  for (const auto& p : gens) {
    const auto i = g->index_of(p);
    if (!i) throw DomainError("gassmann", p.to_string() + " is not an element of the group");
    idx.push_back(*i);
  }
  return {g, *detail::close_indices(*g, idx, g->order())};
}

inline Subgroup whole_group(const GroupPtr& g) {
  std::vector<std::size_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return {g, all};
}

/// Conjugacy classes as sorted index lists, ordered by smallest element (the
/// identity class first).
inline std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> gen_idx;
  for (const auto& p : g.generators()) gen_idx.push_back(*g.index_of(p));
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (cls[start] >= 0) continue;
    std::vector<std::size_t> orbit{start};
    cls[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s : gen_idx) {
        const auto y = g.mul(g.mul(s, orbit[i]), g.inv(s));
        if (cls[y] >= 0) continue;
        cls[y] = static_cast<int>(out.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

struct GassmannRow {
  std::string representative;
  std::size_t class_size = 0;
  std::size_t meet_h1 = 0;
  std::size_t meet_h2 = 0;
};

struct GassmannReport {
  std::vector<GassmannRow> rows;
  std::size_t order_h1 = 0;
  std::size_t order_h2 = 0;
  bool equivalent = false;

  /// Aligned table ending in "GASSMANN: yes|no".
  std::string to_string() const {
    std::size_t w = 14;
    for (const auto& r : rows) w = std::max(w, r.representative.size());
    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n > s.size() ? n - s.size() : 0, ' '); };
    out << pad("representative", w) << "  " << pad("size", 6) << "  " << pad("in H1", 6) << "  in H2\n";
    for (const auto& r : rows)
      out << pad(r.representative, w) << "  " << pad(std::to_string(r.class_size), 6) << "  " << pad(std::to_string(r.meet_h1), 6)
          << "  " << r.meet_h2 << "\n";
    out << "|H1| = " << order_h1 << ", |H2| = " << order_h2 << "\n";
    out << "GASSMANN: " << (equivalent ? "yes" : "no") << "\n";
    return out.str();
  }
};

namespace detail {
inline void check_subgroup(const GroupPtr& g, const Subgroup& h) {
  if (h.parent != g) throw DomainError("gassmann", "subgroup does not belong to the group");
  if (h.elements.empty() || h.elements.front() != 0) throw DomainError("gassmann", "subgroup must contain the identity");
  for (std::size_t a : h.elements)
    for (std::size_t b : h.elements)
      if (!h.contains(g->mul(a, b))) throw DomainError("gassmann", "element set is not closed under multiplication");
}
}  // namespace detail

inline GassmannReport gassmann_check(const GroupPtr& g, const Subgroup& h1, const Subgroup& h2) {
  detail::check_subgroup(g, h1);
  detail::check_subgroup(g, h2);
  GassmannReport rep;
  rep.order_h1 = h1.order();
  rep.order_h2 = h2.order();
  bool all_equal = h1.order() == h2.order();
  for (const auto& cls : conjugacy_classes(*g)) {
    GassmannRow row{g->element(cls.front()).to_string(), cls.size(), 0, 0};
    for (std::size_t x : cls) {
      row.meet_h1 += h1.contains(x);
      row.meet_h2 += h2.contains(x);
    }
    all_equal = all_equal && row.meet_h1 == row.meet_h2;
    rep.rows.push_back(std::move(row));
  }
  rep.equivalent = all_equal;
  return rep;
}

inline bool are_conjugate(const GroupPtr& g, const Subgroup& h1, const Subgroup& h2) {
  detail::check_subgroup(g, h1);
  detail::check_subgroup(g, h2);
  if (h1.order() != h2.order()) return false;
  for (std::size_t x = 0; x < g->order(); ++x)
    if (detail::conjugate_set(*g, h1.elements, x) == h2.elements) return true;
  return false;
}

/// Sorted |H tau C| / |H| over the H-C double cosets of G.
inline std::vector<int> coset_types(const GroupPtr& g, const Subgroup& h, const Subgroup& c) {
  detail::check_subgroup(g, h);
  detail::check_subgroup(g, c);
  const bool cyclic =
      std::any_of(c.elements.begin(), c.elements.end(), [&](std::size_t x) { return static_cast<std::size_t>(g->element(x).order()) == c.order(); });
  if (!cyclic) throw DomainError("gassmann", "coset types need a cyclic subgroup C");
  std::vector<bool> seen(g->order(), false);
  std::vector<int> out;
  for (std::size_t tau = 0; tau < g->order(); ++tau) {
    if (seen[tau]) continue;
    std::size_t size = 0;
    for (std::size_t a : h.elements) {
      const auto at = g->mul(a, tau);
      for (std::size_t b : c.elements) {
        const auto y = g->mul(at, b);
        if (!seen[y]) {
          seen[y] = true;
          ++size;
        }
      }
    }
    out.push_back(static_cast<int>(size / h.order()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of fixed points of x on the cosets G/H, |{gH : x g H = g H}|.
inline std::size_t coset_fixed_points(const GroupPtr& g, const Subgroup& h, std::size_t x) {
  std::size_t fixed = 0;
  for (std::size_t y = 0; y < g->order(); ++y)
    if (h.contains(g->mul(g->inv(y), g->mul(x, y)))) ++fixed;
  return fixed / h.order();
}

/// One representative per conjugacy class of subgroups of order k among the
/// subgroups generated by at most two elements.
inline std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, std::size_t k) {
  if (k == 0 || g->order() % k != 0)
    throw DomainError("gassmann", std::to_string(k) + " does not divide the group order " + std::to_string(g->order()));
  std::set<std::vector<std::size_t>> found;
  const auto classes = conjugacy_classes(*g);
  if (k == 1) found.insert({0});
  // Up to conjugacy the first generator can be taken from a class representative.
  for (const auto& cls : classes) {
    const std::size_t x = cls.front();
    if (k % static_cast<std::size_t>(g->element(x).order()) != 0) continue;
    for (std::size_t y = 0; y < g->order(); ++y) {
      if (k % static_cast<std::size_t>(g->element(y).order()) != 0) continue;
      const auto h = detail::close_indices(*g, {x, y}, k);
      if (h && h->size() == k) found.insert(*h);
    }
  }
  std::vector<Subgroup> reps;
  std::set<std::vector<std::size_t>> covered;
  for (const auto& h : found) {
    if (covered.contains(h)) continue;
    for (std::size_t z = 0; z < g->order(); ++z) covered.insert(detail::conjugate_set(*g, h, z));
    reps.push_back({g, h});
  }
  return reps;
}

inline GroupPtr symmetric_group(int n) {
  if (n < 1) throw DomainError("gassmann", "degree must be >= 1");
  if (n == 1) return group_closure(1, {});
  std::vector<int> cyc(static_cast<std::size_t>(n));
  std::iota(cyc.begin(), cyc.end(), 1);
  cyc.back() = 0;
  return group_closure(n, {Permutation::parse("(1 2)", n), Permutation(cyc)});
}

/// PSL(2,7) acting on the projective line over F_7, points 0..6 and infinity
/// (numbered 1..7 and 8 in cycle notation), generated by x -> x+1 and
/// x -> -1/x.
inline GroupPtr psl27() {
  constexpr int inf = 7;
  std::vector<int> shift(8), invert(8);
  for (int x = 0; x < 7; ++x) shift[static_cast<std::size_t>(x)] = (x + 1) % 7;
  shift[inf] = inf;
  invert[0] = inf;
  invert[inf] = 0;
  for (int x = 1; x < 7; ++x) {
    int xi = 1;
    while (xi * x % 7 != 1) ++xi;
    invert[static_cast<std::size_t>(x)] = (7 - xi) % 7;
  }
  return group_closure(8, {Permutation(shift), Permutation(invert)});
}

/// Z/2 x Z/2 = <(1 2), (3 4)> on four points.
inline GroupPtr klein4() { return group_closure(4, {Permutation::parse("(1 2)", 4), Permutation::parse("(3 4)", 4)}); }

struct KomatsuResult {
  int ell = 0;
  GroupPtr h1;  // (Z/ell)^3
  GroupPtr h2;  // Heisenberg group mod ell
  std::map<std::vector<int>, std::size_t> stats1;  // cycle type -> count
  std::map<std::vector<int>, std::size_t> stats2;
  bool gassmann = false;
  bool h1_abelian = false;
  bool h2_abelian = false;
};

/// (Z/l)^3 and the Heisenberg group (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
/// embedded in S_{l^3} by left translation. Two subgroups of S_n are Gassmann
/// equivalent iff they have the same number of elements of each cycle type.
inline KomatsuResult cayley_komatsu(int ell) {
  if (ell != 3) throw DomainError("gassmann", "cayley_komatsu supports l = 3 only");
  const int n = ell * ell * ell;
  auto encode = [&](int a, int b, int c) { return (a * ell + b) * ell + c; };
  auto translation = [&](int a, int b, int c, bool heisenberg) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int x = 0; x < ell; ++x)
      for (int y = 0; y < ell; ++y)
        for (int z = 0; z < ell; ++z)
          im[static_cast<std::size_t>(encode(x, y, z))] =
              encode((a + x) % ell, (b + y) % ell, (c + z + (heisenberg ? a * y : 0)) % ell);
    return Permutation(std::move(im));
  };
  KomatsuResult r;
  r.ell = ell;
  r.h1 = group_closure(n, {translation(1, 0, 0, false), translation(0, 1, 0, false), translation(0, 0, 1, false)});
  r.h2 = group_closure(n, {translation(1, 0, 0, true), translation(0, 1, 0, true), translation(0, 0, 1, true)});
  for (const auto& e : r.h1->elements()) ++r.stats1[e.cycle_type()];
  for (const auto& e : r.h2->elements()) ++r.stats2[e.cycle_type()];
  r.gassmann = r.stats1 == r.stats2;
  r.h1_abelian = r.h1->is_abelian();
  r.h2_abelian = r.h2->is_abelian();
  return r;
}

/// Generators, one cycle-notation permutation per line; an optional line
/// "degree=N" fixes the number of points; '#' starts a comment.
inline std::pair<int, std::vector<Permutation>> parse_generators(const std::string& text) {
  int n = 0;
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line.rfind("degree", 0) == 0) {
      const auto eq = line.find('=');
      try {
        n = std::stoi(line.substr(eq == std::string::npos ? 6 : eq + 1));
      } catch (const std::exception&) {
        throw ParseError("gassmann", "bad degree line \"" + line + "\"");
      }
      continue;
    }
    lines.push_back(line);
  }
  if (n == 0)
    for (const auto& l : lines) n = std::max(n, Permutation::parse(l).degree());
  if (n < 1) throw ParseError("gassmann", "no generators and no degree given");
  std::vector<Permutation> gens;
  for (const auto& l : lines) gens.push_back(Permutation::parse(l, n));
  return {n, gens};
}

}  // namespace ffz
