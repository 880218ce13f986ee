#include "subcode/binary.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace subcode {

namespace {

void check_binary(const GaloisField& f, int n) {
  if (f.order() != 2) throw std::invalid_argument("binary structures require q = 2");
  if (n < 1 || n > kMaxBinaryDim) throw std::invalid_argument("binary structures require n <= 6");
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0x100000001b3ULL;
}

}  // namespace

PointMask point_mask(const Subspace& s) {
  const int n = s.ambient();
  check_binary(s.field(), n);
  const int k = s.dim();
  std::array<unsigned, kMaxBinaryDim> rows{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if (s.cm()(i, j)) rows[i] |= 1u << (n - 1 - j);
  PointMask m = 0;
  for (unsigned c = 1; c < (1u << k); ++c) {
    unsigned x = 0;
    for (int i = 0; i < k; ++i)
      if (c >> i & 1u) x ^= rows[i];
    m |= PointMask{1} << x;
  }
  return m;
}

Subspace point_subspace(int n, unsigned p) {
  const GaloisField& f = GaloisField::get(2);
  Matrix m(f, 1, n);
  for (int j = 0; j < n; ++j) m(0, j) = static_cast<Fq>(p >> (n - 1 - j) & 1u);
  return Subspace::span(m);
}

Subspace subspace_from_mask(int n, PointMask mask) {
  const GaloisField& f = GaloisField::get(2);
  mask &= ~PointMask{1};
  Matrix m(f, 0, n);
  PointMask span = 1;  // the zero vector
  for (unsigned p = 1; p < (1u << n); ++p) {
    if (!(mask >> p & 1u) || (span >> p & 1u)) continue;
    PointMask grown = span;
    for (unsigned x = 0; x < (1u << n); ++x)
      if (span >> x & 1u) grown |= PointMask{1} << (x ^ p);
    span = grown;
    std::vector<Fq> row(n);
    for (int j = 0; j < n; ++j) row[j] = static_cast<Fq>(p >> (n - 1 - j) & 1u);
    m.append_row(row);
  }
  Subspace s = Subspace::span(m);
  if (point_mask(s) != mask) throw std::invalid_argument("point set is not a subspace");
  return s;
}

BinaryStructure to_binary(const SubspaceCode& c) {
  check_binary(c.field(), c.ambient());
  BinaryStructure s;
  s.n = c.ambient();
  for (const auto& e : c.members()) s.blocks.push_back(point_mask(e));
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

PointMask BinaryMap::apply(PointMask m) const {
  PointMask out = 0;
  while (m) {
    const int p = __builtin_ctzll(m);
    m &= m - 1;
    out |= PointMask{1} << apply(static_cast<unsigned>(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Incidence {
  int n = 0;
  unsigned points = 0;                  // 2^n
  std::array<PointMask, 64> together{};  // points sharing a block with p
  std::array<std::vector<int>, 64> blocks_at{};
};

Incidence incidence(const BinaryStructure& s) {
  Incidence in;
  in.n = s.n;
  in.points = 1u << s.n;
  for (int b = 0; b < static_cast<int>(s.blocks.size()); ++b) {
    PointMask m = s.blocks[b];
    while (m) {
      const int p = __builtin_ctzll(m);
      m &= m - 1;
      in.together[p] |= s.blocks[b];
      in.blocks_at[p].push_back(b);
    }
  }
  for (unsigned p = 1; p < in.points; ++p) in.together[p] &= ~(PointMask{1} << p);
  return in;
}

}  // namespace

Refinement refine(const BinaryStructure& s) {
  const Incidence in = incidence(s);
  Refinement r;
  // Round 0: block degree.
  for (unsigned p = 1; p < in.points; ++p) r.color[p] = static_cast<int>(in.blocks_at[p].size());
  std::uint64_t fp = mix(static_cast<std::uint64_t>(s.n), s.blocks.size());
  int classes = 0;
  {
    std::vector<int> cs;
    for (unsigned p = 1; p < in.points; ++p) cs.push_back(r.color[p]);
    std::sort(cs.begin(), cs.end());
    for (int c : cs) fp = mix(fp, static_cast<std::uint64_t>(c));
    classes = static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
    // Relabel to 0..classes-1 in increasing order of degree.
    std::vector<int> distinct(cs.begin(), cs.begin() + classes);
    for (unsigned p = 1; p < in.points; ++p)
      r.color[p] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), r.color[p]) - distinct.begin());
  }

  std::vector<std::vector<int>> sig(in.points);
  std::vector<std::vector<int>> bsig(s.blocks.size());
  while (true) {
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      bsig[b].clear();
      PointMask m = s.blocks[b];
      while (m) {
        const int p = __builtin_ctzll(m);
        m &= m - 1;
        bsig[b].push_back(r.color[p]);
      }
      std::sort(bsig[b].begin(), bsig[b].end());
    }
    // Block colours, canonically numbered.
    std::vector<std::vector<int>> bdistinct(bsig);
    std::sort(bdistinct.begin(), bdistinct.end());
    bdistinct.erase(std::unique(bdistinct.begin(), bdistinct.end()), bdistinct.end());
    std::vector<int> bcolor(s.blocks.size());
    for (std::size_t b = 0; b < s.blocks.size(); ++b)
      bcolor[b] = static_cast<int>(std::lower_bound(bdistinct.begin(), bdistinct.end(), bsig[b]) - bdistinct.begin());

    for (unsigned p = 1; p < in.points; ++p) {
      auto& v = sig[p];
      v.clear();
      v.push_back(r.color[p]);
      std::vector<int> bc;
      for (int b : in.blocks_at[p]) bc.push_back(bcolor[b]);
      std::sort(bc.begin(), bc.end());
      v.push_back(-1);
      v.insert(v.end(), bc.begin(), bc.end());
      // Lines {p, x, p^x}: (shared block?, sorted colours of the other two).
      std::vector<std::array<int, 3>> lines;
      for (unsigned x = 1; x < in.points; ++x) {
        const unsigned y = x ^ p;
        if (x == p || x > y) continue;
        const int together = static_cast<int>(in.together[p] >> x & 1u);
        lines.push_back({together, std::min(r.color[x], r.color[y]), std::max(r.color[x], r.color[y])});
      }
      std::sort(lines.begin(), lines.end());
      v.push_back(-2);
      for (const auto& l : lines) v.insert(v.end(), l.begin(), l.end());
    }
    std::vector<std::vector<int>> distinct(sig.begin() + 1, sig.end());
    std::sort(distinct.begin(), distinct.end());
    std::vector<std::uint64_t> counts;
    {
      std::vector<std::vector<int>> all(sig.begin() + 1, sig.end());
      std::sort(all.begin(), all.end());
      for (const auto& v : all) {
        std::uint64_t h = 0;
        for (int x : v) h = mix(h, static_cast<std::uint64_t>(x + 7));
        fp = mix(fp, h);
      }
    }
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (unsigned p = 1; p < in.points; ++p)
      r.color[p] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[p]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  r.classes = classes;
  r.fingerprint = fp;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class Matcher {
 public:
  Matcher(const BinaryStructure& a, const BinaryStructure& b, std::uint64_t budget, bool first_only)
      : a_(a), b_(b), ia_(incidence(a)), ib_(incidence(b)), budget_(budget), first_only_(first_only) {}

  std::vector<BinaryMap> run() {
    if (a_.n != b_.n || a_.blocks.size() != b_.blocks.size()) return {};
    ra_ = refine(a_);
    rb_ = refine(b_);
    if (ra_.fingerprint != rb_.fingerprint) return {};
    plan();
    img_.fill(0);
    search(0, 1, 1);
    return found_;
  }

 private:
  void plan() {
    const int n = a_.n;
    const unsigned points = 1u << n;
    std::vector<int> class_size(64, 0);
    for (unsigned p = 1; p < points; ++p) ++class_size[ra_.color[p]];
    PointMask span = 1;
    std::vector<unsigned> chosen;
    for (int i = 0; i < n; ++i) {
      unsigned best = 0;
      std::tuple<int, int, unsigned> best_key{1 << 30, 1, 0};
      for (unsigned p = 1; p < points; ++p) {
        if (span >> p & 1u) continue;
        int linked = 0;
        for (unsigned c : chosen)
          if (ia_.together[c] >> p & 1u) linked = 1;
        const std::tuple<int, int, unsigned> key{class_size[ra_.color[p]], -linked, p};
        if (key < best_key) {
          best_key = key;
          best = p;
        }
      }
      chosen.push_back(best);
      PointMask grown = span;
      std::vector<unsigned> fresh;
      for (unsigned x = 0; x < points; ++x)
        if (span >> x & 1u) {
          grown |= PointMask{1} << (x ^ best);
          fresh.push_back(x ^ best);
        }
      new_points_.push_back(fresh);
      std::vector<int> blocks_now;
      for (int b = 0; b < static_cast<int>(a_.blocks.size()); ++b) {
        const PointMask m = a_.blocks[b];
        if ((m & ~grown) == 0 && (m & ~span) != 0) blocks_now.push_back(b);
      }
      level_blocks_.push_back(blocks_now);
      span = grown;
    }
    base_ = chosen;
  }

  // img_ holds images of points in the current span (0 maps to 0).
  void search(int level, PointMask span, PointMask img_span) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
    const int n = a_.n;
    if (level == n) {
      BinaryMap g;
      g.n = n;
      for (int i = 0; i < n; ++i) g.image[i] = img_[1u << i];
      found_.push_back(g);
      return;
    }
    const unsigned bp = base_[level];
    const int want = ra_.color[bp];
    const unsigned points = 1u << n;
    for (unsigned y = 1; y < points; ++y) {
      if (rb_.color[y] != want || (img_span >> y & 1u)) continue;
      // Extend linearly: x ^ bp -> img(x) ^ y for x in the old span.
      bool ok = true;
      PointMask new_span = span, new_img_span = img_span;
      for (unsigned u : new_points_[level]) {
        const unsigned x = u ^ bp;
        const unsigned iu = img_[x] ^ y;
        img_[u] = iu;
        if (ra_.color[u] != rb_.color[iu]) {
          ok = false;
          break;
        }
        new_span |= PointMask{1} << u;
        new_img_span |= PointMask{1} << iu;
      }
      if (ok) ok = pairs_consistent(level, new_span);
      if (ok) ok = blocks_consistent(level);
      if (ok) search(level + 1, new_span, new_img_span);
      if (first_only_ && !found_.empty()) return;
    }
  }

  bool pairs_consistent(int level, PointMask span) const {
    for (unsigned u : new_points_[level]) {
      const PointMask ta = ia_.together[u] & span;
      const PointMask tb = ib_.together[img_[u]];
      PointMask rest = span & ~(PointMask{1} << u) & ~PointMask{1};
      while (rest) {
        const int w = __builtin_ctzll(rest);
        rest &= rest - 1;
        const bool in_a = ta >> w & 1u;
        const bool in_b = tb >> img_[w] & 1u;
        if (in_a != in_b) return false;
      }
    }
    return true;
  }

  bool blocks_consistent(int level) const {
    for (int b : level_blocks_[level]) {
      PointMask m = a_.blocks[b];
      PointMask image = 0;
      while (m) {
        const int p = __builtin_ctzll(m);
        m &= m - 1;
        image |= PointMask{1} << img_[p];
      }
      if (!std::binary_search(b_.blocks.begin(), b_.blocks.end(), image)) return false;
    }
    return true;
  }

  const BinaryStructure& a_;
  const BinaryStructure& b_;
  Incidence ia_;
  Incidence ib_;
  Refinement ra_;
  Refinement rb_;
  std::uint64_t budget_;
  bool first_only_;
  std::uint64_t nodes_ = 0;
  std::vector<unsigned> base_;
  std::vector<std::vector<unsigned>> new_points_;
  std::vector<std::vector<int>> level_blocks_;
  std::array<unsigned, 64> img_{};
  std::vector<BinaryMap> found_;
};

}  // namespace

std::vector<BinaryMap> automorphisms(const BinaryStructure& s, std::uint64_t budget) {
  return Matcher(s, s, budget, false).run();
}

std::optional<BinaryMap> find_isomorphism(const BinaryStructure& a, const BinaryStructure& b,
                                          std::uint64_t budget) {
  auto found = Matcher(a, b, budget, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<unsigned>> point_orbits(const std::vector<BinaryMap>& group, PointMask points) {
  std::array<unsigned, 64> parent{};
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<unsigned(unsigned)> find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group) {
    PointMask m = points;
    while (m) {
      const unsigned p = static_cast<unsigned>(__builtin_ctzll(m));
      m &= m - 1;
      const unsigned a = find(p), b = find(g.apply(p));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<unsigned>> orbits;
  std::array<int, 64> slot{};
  slot.fill(-1);
  for (unsigned p = 0; p < 64; ++p) {
    if (!(points >> p & 1u)) continue;
    const unsigned r = find(p);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(p);
  }
  return orbits;
}

}  // namespace subcode
